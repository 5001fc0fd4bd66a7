#pragma once

// Executable divisor-sum identities. Each check compares both sides exactly
// for every n in its range and, where a product spec exists, also demands
// that the closed form or combinatorial oracle, the expansion and the
// recurrence all produce the same coefficients.
//
// A failed identity is data: checks return a report with the first failing n
// and both side values. Only bad arguments (unknown id, N below the range a
// check needs, inadmissible parameters) throw std::invalid_argument.

#include "divrec/report.hpp"
#include "divrec/series.hpp"

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

namespace divrec::catalog {

/// n p(n) = sum_{k=1..n} sigma(k) p(n-k), 1 <= n <= N.
IdentityReport partition_recurrence_check(std::size_t order);

/// (-1)^n s(n) n = -(sigma(n) + sigma_odd(n))/2
///                 + sum_{k>=1, k^2 <= n-1} (-1)^{k+1} (sigma(n-k^2) + sigma_odd(n-k^2)).
/// With include_square_term the k^2 = n term is kept as well, using
/// sigma(0) = 1 and sigma_odd(0) = 0; that variant is expected to fail.
IdentityReport jacobi_square_check(std::size_t order, bool include_square_term = false);

struct Sides {
    Rational lhs;
    Rational rhs;
};

/// Both sides of the identity above at a single n >= 1, from single-value
/// divisor sums rather than the sieve tables.
Sides jacobi_square_sides(std::uint64_t n, bool include_square_term = false);

/// t(n) n = sum_{k>=0, T(k) <= n-1} (sigma_odd(n-T(k)) - sigma_even(n-T(k))).
IdentityReport triangular_check(std::size_t order);

/// (n-1) a(n) = 8 sum_{k=1..n-1} a(n-k) (sigma_odd(k) - sigma_even(k)), 2 <= n <= N,
/// plus a_direct == lambert_cubic_prefix == recurrence of the Ramanujan spec.
/// verbatim switches to n a(n) = 8 sum_{k=0..n-1} a(k) (sigma_odd(n-k) - sigma_even(n-k)),
/// which does not hold.
IdentityReport ramanujan_a_check(std::size_t order, bool verbatim = false);

/// n Q(n) = sum_{k=0..n-1} Q(k) (sigma(n-k) - sigma_{0,p}(n-k)) with Q from the
/// multiplicity-bounded partition DP, plus DP == expansion == recurrence of
/// prod (1 - x^{pn}) (1 - x^n)^{-1}.
IdentityReport p_regular_check(std::uint64_t p, std::size_t order);

/// The reciprocal product prod (1 - x^n)(1 - x^{pn})^{-1} and the matching
/// sign-flipped recurrence, compared against the same DP. Expected to fail.
IdentityReport p_regular_printed_check(std::uint64_t p, std::size_t order);

/// n R(n) = sum_{k=0..n-1} R(k) (sigma_{a,5}(n-k) + sigma_{b,5}(n-k)) with
/// {a,b} = {1,4} or {2,3}, R from the sum side, cross-checked against the
/// product side.
IdentityReport rogers_ramanujan_check(int which, std::size_t order);

/// n s(n) = h(n) + 2 sum_{k=1..n-1} s(n-k) h(k),
/// h(k) = sigma(k) - 5 sigma(k/2) + 4 sigma(k/4) with the extended sigma.
IdentityReport square_eta_quotient_check(std::size_t order);

/// True for m in {1, 2, 6, 10} or m a positive multiple of 4.
bool delta_admissible(std::uint64_t m);

/// n delta_m(n) = m sum_{k=1..n} (sigma_odd(k) - sigma_even(k)) delta_m(n-k)
/// with delta_m from the convolution oracle, which must also equal the
/// expansion of prod (1 - x^{2n})^{2m} (1 - x^n)^{-m}.
IdentityReport delta_m_check(std::uint64_t m, std::size_t order);

/// Identity ids accepted by run_identity:
///   partition_recurrence, jacobi_square, jacobi_square_verbatim, triangular,
///   ramanujan_a, ramanujan_a_verbatim, p_regular(p), p_regular_printed(p),
///   rogers_ramanujan_1, rogers_ramanujan_2, square_eta_quotient, delta(m),
///   cross_check(<built-in spec name>)
IdentityReport run_identity(const std::string& id, std::size_t order);

/// Throws std::invalid_argument if id is not a valid selector.
void validate_identity(const std::string& id);

/// Every identity expected to hold ("all").
std::vector<std::string> all_identity_ids();

/// The checks that are expected to fail.
std::vector<std::string> negative_identity_ids();

/// Expands "all", validates every id, runs them on up to `threads` workers
/// and returns the reports sorted by identity id.
std::vector<IdentityReport> run_identities(const std::vector<std::string>& ids, std::size_t order,
                                           unsigned threads = 0);

}  // namespace divrec::catalog
