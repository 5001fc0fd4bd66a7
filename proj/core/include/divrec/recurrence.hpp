#pragma once

// Two independent ways to get the coefficients of a ProductSpec.
//
// Recurrence: with p(0) = 1 and the divisor-weight kernel
//
//     g(k) = sum_i sum_{d | k, d in A_i} f_i(d),
//
// every coefficient follows from n p(n) = sum_{k=1..n} g(k) p(n-k). This is
// what taking x d/dx log of the product and matching coefficients gives.
//
// Expansion: multiply out (1 - x^n)^e factor by factor with the series
// kernel. Only defined when every exponent is an integer.

#include "divrec/product_spec.hpp"
#include "divrec/report.hpp"
#include "divrec/series.hpp"

#include <cstddef>
#include <string>
#include <vector>

namespace divrec {

struct DivisorWeightTable {
    std::size_t order = 0;
    std::vector<Rational> g;  // g[1..order]; g[0] is unused and zero

    bool is_integral() const;
};

/// g(k) for 1 <= k <= N, exactly. Requires N >= 1. Throws std::out_of_range
/// when a table weight lacks an entry for a set member <= N.
DivisorWeightTable weight_table(const ProductSpec& spec, std::size_t order);

/// Coefficients 0..N from the divisor-sum recurrence, run on the unshifted
/// product up to N - shift and then shifted by spec.shift.
TruncatedSeries coeffs_via_recurrence(const ProductSpec& spec, std::size_t order);

/// Coefficients 0..N as the direct product of binomial_factor(n, e, N) over all
/// set members n <= N, then shifted. Throws std::domain_error("expansion
/// oracle requires integer exponents") if some exponent is not an integer.
TruncatedSeries coeffs_via_expansion(const ProductSpec& spec, std::size_t order);

/// Index of the first coefficient where a and b differ, or -1. Compares up to
/// the smaller order.
long first_mismatch(const TruncatedSeries& a, const TruncatedSeries& b);

/// Recurrence vs expansion. lhs is the recurrence value, rhs the expansion.
IdentityReport cross_check(const ProductSpec& spec, std::size_t order, std::string identity = "cross_check");

}  // namespace divrec
