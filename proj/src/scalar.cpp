#include "voa/scalar.hpp"

#include <sstream>

namespace voa {

Rat parse_rat(const std::string& text) {
    if (text.empty()) throw std::invalid_argument("empty rational literal");
    try {
        Rat r(text);
        r.canonicalize();
        return r;
    } catch (const std::invalid_argument&) {
        throw std::invalid_argument("bad rational literal: " + text);
    }
}

std::string to_string(const Rat& r) { return r.get_str(); }

Poly Poly::s_power(int k, const Rat& c) {
    Poly p;
    p.set(k, c);
    return p;
}

Rat Poly::coeff(int k) const {
    auto it = terms_.find(k);
    return it == terms_.end() ? Rat(0) : it->second;
}

void Poly::set(int exp, const Rat& c) {
    if (c == 0)
        terms_.erase(exp);
    else
        terms_[exp] = c;
}

Poly Poly::operator-() const {
    Poly r;
    for (auto& [e, c] : terms_) r.terms_[e] = -c;
    return r;
}

Poly Poly::operator+(const Poly& o) const {
    Poly r = *this;
    for (auto& [e, c] : o.terms_) r.set(e, r.coeff(e) + c);
    return r;
}

Poly Poly::operator-(const Poly& o) const { return *this + (-o); }

Poly Poly::operator*(const Poly& o) const {
    Poly r;
    for (auto& [e1, c1] : terms_)
        for (auto& [e2, c2] : o.terms_) r.set(e1 + e2, r.coeff(e1 + e2) + c1 * c2);
    return r;
}

void Poly::divmod(const Poly& a, const Poly& b, Poly& q, Poly& r) {
    if (b.is_zero()) throw DomainError("polynomial division by zero");
    q = Poly();
    r = a;
    while (!r.is_zero() && r.degree() >= b.degree()) {
        int e = r.degree() - b.degree();
        Rat c = r.leading_coeff() / b.leading_coeff();
        Poly t = Poly::s_power(e, c);
        q = q + t;
        r = r - t * b;
    }
}

Poly Poly::gcd(Poly a, Poly b) {
    while (!b.is_zero()) {
        Poly q, r;
        divmod(a, b, q, r);
        a = b;
        b = r;
    }
    if (a.is_zero()) return a;
    Rat lead = a.leading_coeff();
    Poly monic;
    for (auto& [e, c] : a.terms()) monic.set(e, c / lead);
    return monic;
}

void Poly::split_even_odd(Poly& even_in_p, Poly& odd_in_p) const {
    even_in_p = Poly();
    odd_in_p = Poly();
    for (auto& [e, c] : terms_) {
        if (e % 2 == 0)
            even_in_p.set(e / 2, c);
        else
            odd_in_p.set((e - 1) / 2, c);
    }
}

Poly Poly::reduce_s2(const Rat& p0) const {
    Poly r;
    for (auto& [e, c] : terms_) {
        Rat pw(1);
        for (int i = 0; i < e / 2; ++i) pw *= p0;
        int rem = e % 2;
        r.set(rem, r.coeff(rem) + c * pw);
    }
    return r;
}

Rat Poly::eval(const Rat& x) const {
    Rat acc(0);
    for (auto& [e, c] : terms_) {
        Rat pw(1);
        for (int i = 0; i < e; ++i) pw *= x;
        acc += c * pw;
    }
    return acc;
}

std::string Poly::to_string() const {
    if (is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    // highest degree first
    for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
        Rat c = it->second;
        if (!first) {
            os << (c < 0 ? " - " : " + ");
            if (c < 0) c = -c;
        } else if (c < 0) {
            os << "-";
            c = -c;
        }
        first = false;
        int e = it->first;
        if (e == 0) {
            os << c.get_str();
        } else {
            if (c != 1) os << c.get_str() << "*";
            os << "s";
            if (e != 1) os << "^" << e;
        }
    }
    return os.str();
}

Scalar::Scalar(Poly num, Poly den) : num_(std::move(num)), den_(std::move(den)) {
    if (den_.is_zero()) throw DomainError("scalar with zero denominator");
    normalize();
}

void Scalar::normalize() {
    if (num_.is_zero()) {
        den_ = Poly(Rat(1));
        return;
    }
    Poly g = Poly::gcd(num_, den_);
    if (g.degree() > 0) {
        Poly q, r;
        Poly::divmod(num_, g, q, r);
        num_ = q;
        Poly::divmod(den_, g, q, r);
        den_ = q;
    }
    Rat lead = den_.leading_coeff();
    if (lead != 1) {
        Poly n2, d2;
        for (auto& [e, c] : num_.terms()) n2.set(e, c / lead);
        for (auto& [e, c] : den_.terms()) d2.set(e, c / lead);
        num_ = n2;
        den_ = d2;
    }
}

Rat Scalar::as_rational() const {
    if (!is_rational()) throw DomainError("scalar is not a plain rational: " + to_string());
    return num_.coeff(0);
}

Scalar Scalar::times(const Rat& r) const {
    if (r == 0) return Scalar();
    Scalar out = *this;
    Poly n;
    for (auto& [e, c] : num_.terms()) n.set(e, c * r);
    out.num_ = n;
    return out;
}

Scalar Scalar::operator-() const {
    Scalar r = *this;
    r.num_ = -r.num_;
    return r;
}

Scalar Scalar::operator+(const Scalar& o) const {
    return Scalar(num_ * o.den_ + o.num_ * den_, den_ * o.den_);
}

Scalar Scalar::operator-(const Scalar& o) const { return *this + (-o); }

Scalar Scalar::operator*(const Scalar& o) const {
    return Scalar(num_ * o.num_, den_ * o.den_);
}

Scalar Scalar::operator/(const Scalar& o) const {
    if (o.is_zero()) throw DomainError("scalar division by zero");
    return Scalar(num_ * o.den_, den_ * o.num_);
}

bool rational_sqrt(const Rat& p0, Rat& root) {
    if (p0 < 0) return false;
    mpz_class n = p0.get_num(), d = p0.get_den();
    mpz_class rn, rd;
    mpz_sqrt(rn.get_mpz_t(), n.get_mpz_t());
    mpz_sqrt(rd.get_mpz_t(), d.get_mpz_t());
    if (rn * rn == n && rd * rd == d) {
        root = Rat(rn, rd);
        root.canonicalize();
        return true;
    }
    return false;
}

Scalar::Specialized Scalar::substitute(const Rat& p0) const {
    Rat r;
    if (rational_sqrt(p0, r)) {
        Rat d = den_.eval(r);
        if (d == 0) throw DomainError("pole at p=" + p0.get_str());
        return {num_.eval(r) / d, Rat(0)};
    }
    // value = (n0 + s*n1)/(d0 + s*d1) with s^2 = p0; rationalize by the conjugate.
    Poly nred = num_.reduce_s2(p0), dred = den_.reduce_s2(p0);
    Rat n0 = nred.coeff(0), n1 = nred.coeff(1);
    Rat d0 = dred.coeff(0), d1 = dred.coeff(1);
    Rat norm = d0 * d0 - p0 * d1 * d1;
    if (norm == 0) throw DomainError("pole at p=" + p0.get_str());
    return {(n0 * d0 - p0 * n1 * d1) / norm, (n1 * d0 - n0 * d1) / norm};
}

Scalar Scalar::reduce_at(const Rat& p0) const {
    Specialized v = substitute(p0);
    Poly n(v.rational);
    n.set(1, v.root);
    return Scalar(n, Poly(Rat(1)));
}

std::string Scalar::to_string() const {
    if (den_.degree() == 0 && den_.coeff(0) == 1) return num_.to_string();
    std::string n = num_.to_string();
    if (num_.terms().size() > 1) n = "(" + n + ")";
    return n + "/(" + den_.to_string() + ")";
}

}  // namespace voa
