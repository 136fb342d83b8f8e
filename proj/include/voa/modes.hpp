#pragma once

#include <optional>

#include "voa/fock.hpp"

namespace voa {

/// Generalized binomial coefficient: top over k with integral k >= 0 (0 for k < 0).
Rat binom(const Rat& top, long k);
Rat binom(long top, long k);

/// Heisenberg mode action h(n). Untwisted vectors take integral n (h(0) multiplies
/// by q*s on the label-q sector); twisted vectors take half odd n passed as a
/// rational with denominator 2. Throws DomainError on a parity mismatch.
Vector heis_mode(const Rat& n, const Vector& v);

/// Mode of the lattice exponential operator: the coefficient of x^{-n-1} in
/// Y(e^{q*alpha}, x) v. Under symbolic p the pairing exponent must vanish
/// (q = 0 or all labels of v zero); under numeric p it must be integral.
Vector exp_mode(const Rat& q, long n, const Vector& v);

/// General mode action a_n v for a in V_L, v in any untwisted module over the
/// same p-mode. Computed by structural recursion through the normal-ordered
/// iterate construction; exact and finitely terminating.
Vector vertex_mode(const Vector& a, long n, const Vector& v);

/// Upper bound on modes: a_n v = 0 whenever n > top_mode_bound(a, v).
/// Empty when a or v is zero.
std::optional<long> top_mode_bound(const Vector& a, const Vector& v);

/// (a_i b_j - b_j a_i) v - sum_k binom(i,k) (a_k b)_{i+j-k} v; identically zero.
Vector commutator_residual(const Vector& a, const Vector& b, long i, long j, const Vector& v);

/// Largest n with a_n v != 0, found structurally; empty result encodes -infinity
/// (only when a or v vanishes).
std::optional<long> epsilon(const Vector& a, const Vector& v);

}  // namespace voa
