#include "voa/fock.hpp"

#include <algorithm>
#include <sstream>

namespace voa {

PMode PMode::numeric(const Rat& p0) {
    if (p0 == 0) throw DomainError("p must be nonzero");
    PMode m{false, p0, false, Rat(0)};
    m.square = rational_sqrt(p0, m.root);
    return m;
}

ModuleSpec ModuleSpec::coset_module(const Rat& q0, PMode p_mode) {
    Rat rep = q0;
    // normalize the representative to [0,1)
    mpz_class fl;
    mpz_fdiv_q(fl.get_mpz_t(), rep.get_num().get_mpz_t(), rep.get_den().get_mpz_t());
    rep -= Rat(fl);
    if (p_mode.symbolic) {
        if (rep != 0)
            throw DomainError("symbolic p admits only integral lattice labels (V_L itself)");
    } else {
        Rat t = rep * p_mode.value;
        if (t.get_den() != 1)
            throw DomainError("coset label " + q0.get_str() + " not in the dual lattice for p=" +
                              p_mode.value.get_str());
    }
    return {Kind::Untwisted, rep, p_mode};
}

long BasisKey::degree_numerator() const {
    long s = 0;
    for (long n : parts) s += n;
    return s;
}

std::strong_ordering BasisKey::operator<=>(const BasisKey& o) const {
    if (twisted != o.twisted) return twisted <=> o.twisted;
    if (q != o.q) return q < o.q ? std::strong_ordering::less : std::strong_ordering::greater;
    if (parts != o.parts)
        return parts < o.parts ? std::strong_ordering::less : std::strong_ordering::greater;
    return std::strong_ordering::equal;
}

std::string BasisKey::to_string() const {
    std::ostringstream os;
    for (long n : parts) {
        if (twisted)
            os << "h(-" << n << "/2)";
        else
            os << "h(-" << n << ")";
    }
    if (twisted)
        os << "|tw>";
    else
        os << "|q=" << q.get_str() << ">";
    return os.str();
}

std::string BasisKey::to_json() const {
    std::ostringstream os;
    os << "{\"partition\":[";
    for (size_t i = 0; i < parts.size(); ++i) {
        if (i) os << ",";
        if (twisted)
            os << "\"" << parts[i] << "/2\"";
        else
            os << parts[i];
    }
    os << "],";
    if (!twisted) os << "\"q\":\"" << q.get_str() << "\",";
    os << "\"sector\":\"" << (twisted ? "twisted" : "untwisted") << "\"}";
    return os.str();
}

BasisKey untwisted_key(std::vector<long> parts, const Rat& q) {
    std::sort(parts.begin(), parts.end(), std::greater<long>());
    for (long n : parts)
        if (n < 1) throw DomainError("untwisted partition entries must be >= 1");
    return BasisKey{false, q, std::move(parts)};
}

BasisKey twisted_key(std::vector<long> odd_numerators) {
    std::sort(odd_numerators.begin(), odd_numerators.end(), std::greater<long>());
    for (long n : odd_numerators)
        if (n < 1 || n % 2 == 0) throw DomainError("twisted modes must be positive half odd integers");
    return BasisKey{true, Rat(0), std::move(odd_numerators)};
}

namespace {

// Canonical representative modulo the p-mode; cheap when already reduced.
Scalar canonical_coeff(const Scalar& c, const PMode& p) {
    if (p.symbolic) return c;
    int limit = p.square ? 0 : 1;
    if (c.den().degree() == 0 && c.num().degree() <= limit) return c;
    return c.reduce_at(p.value);
}

}  // namespace

void Vector::add(const BasisKey& key, const Scalar& c) {
    if (c.is_zero()) return;
    Scalar cc = canonical_coeff(c, spec_.p);
    if (cc.is_zero()) return;
    auto it = terms_.find(key);
    if (it == terms_.end()) {
        terms_.emplace(key, std::move(cc));
        return;
    }
    Scalar sum = it->second + cc;  // sums of reduced values stay reduced
    if (sum.is_zero())
        terms_.erase(it);
    else
        it->second = std::move(sum);
}

Vector Vector::operator+(const Vector& o) const {
    Vector r = *this;
    if (r.terms_.empty()) r.spec_ = o.spec_;
    for (auto& [k, c] : o.terms_) r.add(k, c);
    return r;
}

Vector Vector::operator-(const Vector& o) const {
    Vector r = *this;
    if (r.terms_.empty()) r.spec_ = o.spec_;
    for (auto& [k, c] : o.terms_) r.add(k, -c);
    return r;
}

Vector Vector::operator*(const Scalar& c) const {
    Vector r(spec_);
    if (c.is_zero()) return r;
    for (auto& [k, t] : terms_) r.add(k, t * c);
    return r;
}

std::string Vector::to_string() const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (auto& [k, c] : terms_) {
        if (!first) os << " + ";
        first = false;
        std::string cs = c.to_string();
        if (cs == "1")
            os << k.to_string();
        else
            os << "(" << cs << ") " << k.to_string();
    }
    return os.str();
}

Vector make_state(const ModuleSpec& spec, std::vector<long> parts, const Rat& label) {
    Vector v(spec);
    if (spec.kind == ModuleSpec::Kind::Twisted) {
        if (label != 0) throw DomainError("twisted sector carries no lattice label");
        v.add(twisted_key(std::move(parts)), Scalar(1));
        return v;
    }
    Rat offset = label - spec.coset;
    if (offset.get_den() != 1)
        throw DomainError("label " + label.get_str() + " not in coset " + spec.coset.get_str() +
                          " + Z");
    if (spec.p.symbolic && label.get_den() != 1)
        throw DomainError("symbolic p admits only integral lattice labels");
    v.add(untwisted_key(std::move(parts), label), Scalar(1));
    return v;
}

Vector theta(const Vector& v) {
    Vector r(v.spec());
    for (auto& [k, c] : v.terms()) {
        BasisKey nk = k;
        if (!nk.twisted) nk.q = -nk.q;
        Scalar sign((k.parts.size() % 2 == 0) ? 1 : -1);
        r.add(nk, c * sign);
    }
    return r;
}

Scalar weight(const BasisKey& key, const ModuleSpec& spec) {
    if (key.twisted) {
        TwistedWeight tw = twisted_weight_parts(key);
        return Scalar(tw.combinatorial_degree + tw.declared_shift);
    }
    Scalar w(Rat(key.degree_numerator()));
    Scalar q2(key.q * key.q / 2);
    Scalar pval = spec.p.symbolic ? Scalar::p() : Scalar(spec.p.value);
    return w + q2 * pval;
}

TwistedWeight twisted_weight_parts(const BasisKey& key) {
    if (!key.twisted) throw DomainError("not a twisted key");
    return {Rat(key.degree_numerator(), 2), Rat(1, 16)};
}

Vector project_theta(const Vector& v, int sign) {
    Scalar half(Rat(1, 2));
    Vector t = theta(v) * Scalar(Rat(sign));
    return (v + t) * half;
}

}  // namespace voa
