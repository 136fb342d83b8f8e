#include "voa/elements.hpp"

namespace voa {

const char* gen_name(Gen g) {
    switch (g) {
        case Gen::W: return "w";
        case Gen::H: return "H";
        case Gen::J: return "J";
        case Gen::E: return "E";
        case Gen::Hh: return "h";
        case Gen::HE0: return "HE0";
        case Gen::HE1: return "HE1";
    }
    return "?";
}

bool is_pivot(Gen g) { return g == Gen::E || g == Gen::HE0 || g == Gen::HE1; }

Elements::Elements(PMode p) : spec_(ModuleSpec::lattice(p)) {
    vac_ = make_state(spec_, {});

    omega_ = Vector(spec_);
    omega_.add(untwisted_key({1, 1}, Rat(0)), Scalar(Rat(1, 2)));

    h_ = make_state(spec_, {1});

    H_ = Vector(spec_);
    H_.add(untwisted_key({3, 1}, Rat(0)), Scalar(Rat(1, 3)));
    H_.add(untwisted_key({2, 2}, Rat(0)), Scalar(Rat(-1, 3)));

    J_ = Vector(spec_);
    J_.add(untwisted_key({1, 1, 1, 1}, Rat(0)), Scalar(1));
    J_.add(untwisted_key({3, 1}, Rat(0)), Scalar(-2));
    J_.add(untwisted_key({2, 2}, Rat(0)), Scalar(Rat(3, 2)));

    E_ = make_state(spec_, {}, Rat(1)) + make_state(spec_, {}, Rat(-1));

    HE0_ = vertex_mode(H_, 0, E_);
    HE1_ = vertex_mode(H_, 1, E_);
}

const Vector& Elements::get(Gen g) const {
    switch (g) {
        case Gen::W: return omega_;
        case Gen::H: return H_;
        case Gen::J: return J_;
        case Gen::E: return E_;
        case Gen::Hh: return h_;
        case Gen::HE0: return HE0_;
        case Gen::HE1: return HE1_;
    }
    throw DomainError("unknown generator");
}

Vector Elements::j_from_omega() const {
    Vector w1w = vertex_mode(omega_, -1, omega_);
    Vector w3 = vertex_mode(omega_, -3, vac_);
    return H_ * Scalar(-9) + w1w * Scalar(4) - w3 * Scalar(3);
}

}  // namespace voa
