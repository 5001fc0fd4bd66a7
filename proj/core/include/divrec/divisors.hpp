#pragma once

// Divisor sums and indicator functions.
//
// Single values use trial division up to sqrt(n). Whole prefixes 1..N come
// from the *_table functions, which run a harmonic divisor sieve in
// O(N log N) and return plain int64 tables (index 0 holds 0).

#include "divrec/series.hpp"

#include <cstdint>
#include <vector>

namespace divrec {

/// Extended divisor sum on rationals: sigma(q) for q a positive integer,
/// 1 for q == 0, and 0 for every other rational (negative or non-integral).
Integer sigma_ext(const Rational& q);

/// Sum of the divisors d of n with d = r (mod m). Requires n >= 1, m >= 1 and
/// a canonical residue 0 <= r < m (std::invalid_argument otherwise).
Integer sigma_rm(std::uint64_t n, std::uint64_t r, std::uint64_t m);

Integer sigma(std::uint64_t n);

// Odd / even divisor sums. Both are 0 at n == 0.
Integer sigma_odd(std::uint64_t n);
Integer sigma_even(std::uint64_t n);

int square_indicator(std::uint64_t n);

/// T(n) = n(n+1)/2. Throws std::overflow_error if it does not fit.
std::uint64_t triangular(std::uint64_t n);
int triangular_indicator(std::uint64_t n);

std::uint64_t isqrt(std::uint64_t n);

using DivisorTable = std::vector<std::int64_t>;

/// t[k] = sigma(k) for 1 <= k <= N, t[0] = 0.
DivisorTable sigma_table(std::size_t order);

/// t[k] = sigma_{r,m}(k) for 1 <= k <= N, t[0] = 0.
DivisorTable sigma_rm_table(std::size_t order, std::uint64_t r, std::uint64_t m);

}  // namespace divrec
