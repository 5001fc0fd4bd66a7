#pragma once

// Prefixes of the integer sequences the identity catalog talks about, each
// computed by a route that never touches the product recurrence: direct
// divisor sums, partition DPs, sum-side q-series and repeated convolution.

#include "divrec/series.hpp"

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

namespace divrec {

struct SequencePrefix {
    std::string name;
    std::vector<Integer> terms;  // terms[0..N]

    std::size_t order() const noexcept { return terms.empty() ? 0 : terms.size() - 1; }
    const Integer& operator[](std::size_t n) const { return terms.at(n); }
};

/// a(0) = 1, a(n) = sum over odd d | n of (n/d)^3.
Integer a_direct(std::uint64_t n);

/// Coefficients of sum_{n>=1} n^3 x^n / (1 - x^{2n}) via the double sum
/// n^3 x^{n(2j+1)}; index 0 is set to 1 to match a(0).
SequencePrefix lambert_cubic_prefix(std::size_t order);

/// p(n) by the part-by-part DP.
SequencePrefix partition_prefix(std::size_t order);

/// Q^(p)(n): partitions where every part repeats fewer than p times, by the
/// same DP with each part used at most p-1 times. Requires p >= 2.
SequencePrefix q_regular_prefix(std::uint64_t p, std::size_t order);

/// Rogers-Ramanujan coefficients from the sum side:
///   which == 1: 1 + sum_{n>=1} x^{n^2}    / prod_{j=1..n} (1 - x^j)
///   which == 2: 1 + sum_{n>=1} x^{n(n+1)} / prod_{j=1..n} (1 - x^j)
SequencePrefix rr_sum_side(int which, std::size_t order);

/// delta_m(n): ordered representations of n as a sum of m triangular numbers,
/// by m-fold convolution of sum_k x^{T(k)}. Requires m >= 1.
SequencePrefix delta_m_prefix(std::uint64_t m, std::size_t order);

}  // namespace divrec
