#pragma once

#include "divrec/product_spec.hpp"

#include <cstdint>
#include <string>
#include <vector>

namespace divrec::specs {

/// prod (1 - x^{2n}) (1 - x^{2n-1})^{-1} = sum x^{T(n)}
ProductSpec gauss();

/// prod (1 - x^{2n}) (1 - x^{2n-1})^2 = 1 + 2 sum (-1)^n x^{n^2}
ProductSpec jacobi();

/// x prod (1 - x^{2n})^8 (1 - x^{2n-1})^{-8} = sum a(n) x^n, n >= 1
ProductSpec ramanujan();

/// which == 1: prod ((1 - x^{5n-1})(1 - x^{5n-4}))^{-1}
/// which == 2: prod ((1 - x^{5n-2})(1 - x^{5n-3}))^{-1}
ProductSpec rogers_ramanujan(int which);

/// prod (1 - x^{pn}) (1 - x^n)^{-1}, the p-regular partition generating function.
ProductSpec p_regular(std::uint64_t p);

/// prod (1 - x^n) (1 - x^{pn})^{-1}: the reciprocal orientation. Kept for the
/// negative test; its coefficients go negative.
ProductSpec p_regular_reciprocal(std::uint64_t p);

/// prod (1 - x^{2n})^{2m} (1 - x^n)^{-m}
ProductSpec delta(std::uint64_t m);

/// prod (1 - x^{2n})^5 / ((1 - x^n)^2 (1 - x^{4n})^2) = 1 + 2 sum x^{n^2}
ProductSpec square_quotient();

/// prod (1 - x^n)^{-1}
ProductSpec partitions();

/// Resolves "gauss", "jacobi", "ramanujan", "rr1", "rr2", "p_regular(p)",
/// "delta(m)", "square_quotient", "partitions". Throws std::invalid_argument
/// for unknown names or bad parameters.
ProductSpec by_name(const std::string& name);

/// Names of the built-ins with the parameters the test suite sweeps.
std::vector<std::string> builtin_names();

}  // namespace divrec::specs
