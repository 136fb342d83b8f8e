#pragma once

#include "voa/modes.hpp"

namespace voa {

/// Named generators of V_L^+ and friends.
/// W = conformal vector, Hq/Jq the weight-4 generators of M(1)^+,
/// E = e^{alpha} + theta(e^{alpha}), Hh = the odd element h(-1)vac,
/// HE0 = H_0 E and HE1 = H_1 E kept as elements in their own right.
enum class Gen { W, H, J, E, Hh, HE0, HE1 };

const char* gen_name(Gen g);
bool is_pivot(Gen g);  // E-type letters: E, HE0, HE1

/// Cache of the named elements of V_L over one p-mode.
class Elements {
  public:
    explicit Elements(PMode p);

    const ModuleSpec& spec() const { return spec_; }
    const Vector& vac() const { return vac_; }
    const Vector& get(Gen g) const;

    /// J built the second way: -9H + 4 w_{-1}^2 vac - 3 w_{-3} vac.
    Vector j_from_omega() const;

  private:
    ModuleSpec spec_;
    Vector vac_, omega_, h_, H_, J_, E_, HE0_, HE1_;
};

}  // namespace voa
