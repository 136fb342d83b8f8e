#pragma once

#include <compare>
#include <map>
#include <memory>
#include <string>
#include <vector>

#include "voa/scalar.hpp"

namespace voa {

/// How the formal parameter p = <alpha,alpha> is handled:
/// symbolically (coefficients in Q(s)) or at a fixed nonzero rational value.
struct PMode {
    bool symbolic = true;
    Rat value;        // meaningful when !symbolic
    bool square = false;  // value = root^2 for rational root
    Rat root;

    static PMode sym() { return {true, Rat(0), false, Rat(0)}; }
    static PMode numeric(const Rat& p0);
    bool operator==(const PMode& o) const {
        return symbolic == o.symbolic && (symbolic || value == o.value);
    }
};

/// Ambient module descriptor: an untwisted coset V_{q0*alpha + L}
/// (q0 = 0 gives V_L itself) or the twisted Fock space M(1)(theta).
struct ModuleSpec {
    enum class Kind { Untwisted, Twisted };
    Kind kind = Kind::Untwisted;
    Rat coset;  // coset representative q0, normalized to [0,1)
    PMode p;

    static ModuleSpec lattice(PMode p_mode) { return {Kind::Untwisted, Rat(0), p_mode}; }
    static ModuleSpec coset_module(const Rat& q0, PMode p_mode);
    static ModuleSpec twisted() { return {Kind::Twisted, Rat(0), PMode::sym()}; }

    bool operator==(const ModuleSpec& o) const {
        return kind == o.kind && coset == o.coset && p == o.p;
    }
};

/// One Fock basis monomial. Untwisted: h(-n1)...h(-nk) e^{q*alpha} with the
/// partition stored descending; twisted: modes are half odd integers kept as
/// their odd numerators, over vac_tw (no lattice label).
struct BasisKey {
    bool twisted = false;
    Rat q;                      // lattice label (untwisted only)
    std::vector<long> parts;    // descending; untwisted: n >= 1, twisted: odd numerators of n/2

    long degree_numerator() const;  // sum of parts as written (twisted: in halves)
    std::strong_ordering operator<=>(const BasisKey& o) const;
    bool operator==(const BasisKey& o) const { return (*this <=> o) == 0; }

    std::string to_string() const;   // e.g. "h(-3)h(-1)|q=1>", "h(-1/2)|tw>"
    std::string to_json() const;     // {"partition":[...],"q":"1","sector":"untwisted"}
};

BasisKey untwisted_key(std::vector<long> parts, const Rat& q);
BasisKey twisted_key(std::vector<long> odd_numerators);

/// Finite linear combination of basis keys with exact coefficients.
/// Immutable in spirit: all operations return new values.
class Vector {
  public:
    Vector() = default;
    explicit Vector(ModuleSpec spec) : spec_(std::move(spec)) {}

    const ModuleSpec& spec() const { return spec_; }
    const std::map<BasisKey, Scalar>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    size_t size() const { return terms_.size(); }

    /// Adds c * key, normalizing the coefficient per the module's p-mode
    /// and dropping exact zeros.
    void add(const BasisKey& key, const Scalar& c);

    Vector operator+(const Vector& o) const;
    Vector operator-(const Vector& o) const;
    Vector operator*(const Scalar& c) const;
    Vector& operator+=(const Vector& o) { return *this = *this + o; }
    bool operator==(const Vector& o) const { return terms_ == o.terms_; }

    std::string to_string() const;

  private:
    ModuleSpec spec_;
    std::map<BasisKey, Scalar> terms_;
};

/// Unit basis state. For untwisted specs `label` is the lattice label q
/// (must lie in coset + Z, with integral labels only under symbolic p);
/// for twisted specs parts are the odd numerators and label must be 0.
Vector make_state(const ModuleSpec& spec, std::vector<long> parts, const Rat& label = Rat(0));

/// The involution theta: (-1)^{#parts} on the Heisenberg word, q -> -q on the label.
Vector theta(const Vector& v);

/// L(0)-weight of a key: untwisted sum(parts) + q^2 p / 2 (exact, possibly symbolic).
/// Twisted keys report the combinatorial degree plus the declared 1/16 shift;
/// the shift itself is validated downstream by the twisted-module eigenvalue check.
Scalar weight(const BasisKey& key, const ModuleSpec& spec);

struct TwistedWeight {
    Rat combinatorial_degree;
    Rat declared_shift;  // 1/16
};
TwistedWeight twisted_weight_parts(const BasisKey& key);

/// (v + sign*theta(v))/2.
Vector project_theta(const Vector& v, int sign);

}  // namespace voa
