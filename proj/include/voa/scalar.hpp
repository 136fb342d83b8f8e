#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "voa/rational.hpp"

namespace voa {

/// Sparse univariate polynomial in the formal symbol s over Q.
/// The lattice norm is p = s^2; generic-p coefficients are even in s.
class Poly {
  public:
    Poly() = default;
    Poly(const Rat& c) { set(0, c); }          // NOLINT: implicit by design
    Poly(long c) { set(0, Rat(c)); }           // NOLINT
    static Poly s_power(int k, const Rat& c = Rat(1));

    bool is_zero() const { return terms_.empty(); }
    int degree() const { return terms_.empty() ? -1 : terms_.rbegin()->first; }
    Rat coeff(int k) const;
    Rat leading_coeff() const { return terms_.empty() ? Rat(0) : terms_.rbegin()->second; }
    const std::map<int, Rat>& terms() const { return terms_; }

    void set(int exp, const Rat& c);

    Poly operator-() const;
    Poly operator+(const Poly& o) const;
    Poly operator-(const Poly& o) const;
    Poly operator*(const Poly& o) const;
    Poly& operator+=(const Poly& o) { return *this = *this + o; }
    bool operator==(const Poly& o) const { return terms_ == o.terms_; }

    /// Quotient and remainder of exact division over Q[s].
    static void divmod(const Poly& a, const Poly& b, Poly& q, Poly& r);
    /// Monic gcd.
    static Poly gcd(Poly a, Poly b);

    /// Splits into even and odd parts: *this = even(s^2) + s*odd(s^2),
    /// returned as polynomials in p (exponents halved).
    void split_even_odd(Poly& even_in_p, Poly& odd_in_p) const;

    /// Substitutes s^2 -> p0, leaving a polynomial of degree <= 1 in s.
    Poly reduce_s2(const Rat& p0) const;
    /// Full substitution s -> r.
    Rat eval(const Rat& r) const;

    std::string to_string() const;

  private:
    std::map<int, Rat> terms_;  // exponent -> nonzero coefficient
};

/// Exact coefficient: a reduced rational function in s over Q.
/// Canonical form: denominator monic and coprime to the numerator; zero is 0/1.
class Scalar {
  public:
    Scalar() : num_(), den_(Rat(1)) {}
    Scalar(const Rat& c) : num_(c), den_(Rat(1)) {}  // NOLINT
    Scalar(long c) : num_(Rat(c)), den_(Rat(1)) {}   // NOLINT
    Scalar(Poly num, Poly den);

    static Scalar s() { return Scalar(Poly::s_power(1), Poly(Rat(1))); }
    static Scalar p() { return Scalar(Poly::s_power(2), Poly(Rat(1))); }
    static Scalar s_power(int k) { return Scalar(Poly::s_power(k), Poly(Rat(1))); }

    bool is_zero() const { return num_.is_zero(); }
    bool is_rational() const { return num_.degree() <= 0 && den_.degree() == 0; }
    /// Value as a plain rational; requires is_rational().
    Rat as_rational() const;

    const Poly& num() const { return num_; }
    const Poly& den() const { return den_; }

    /// Cheap scaling by a plain rational; canonical form is preserved.
    Scalar times(const Rat& r) const;

    Scalar operator-() const;
    Scalar operator+(const Scalar& o) const;
    Scalar operator-(const Scalar& o) const;
    Scalar operator*(const Scalar& o) const;
    /// Exact division; throws DomainError on division by zero.
    Scalar operator/(const Scalar& o) const;
    Scalar& operator+=(const Scalar& o) { return *this = *this + o; }
    Scalar& operator*=(const Scalar& o) { return *this = *this * o; }
    bool operator==(const Scalar& o) const { return num_ == o.num_ && den_ == o.den_; }

    /// Exact specialization at p = p0 (s^2 = p0). The result lives in Q(sqrt(p0)):
    /// value = rational + root * sqrt(p0). When p0 is a perfect rational square r^2,
    /// s evaluates to r and root is always 0. Throws DomainError on a pole.
    struct Specialized {
        Rat rational;
        Rat root;
    };
    Specialized substitute(const Rat& p0) const;

    /// Canonical representative modulo s^2 = p0: rationalizes the denominator so the
    /// result is a polynomial of degree <= 1 in s (degree 0 for square p0) over 1.
    /// Throws DomainError if the denominator vanishes at p0.
    Scalar reduce_at(const Rat& p0) const;

    /// Rendering "num/den" with polynomials as "c_k*s^k + ...". Parsed back by the CLI.
    std::string to_string() const;

  private:
    void normalize();
    Poly num_, den_;
};

/// True when p0 = r^2 for rational r; if so stores r (>= 0) in root.
bool rational_sqrt(const Rat& p0, Rat& root);

}  // namespace voa
