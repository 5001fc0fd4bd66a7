#pragma once

// Brute-force references used only by the tests. Nothing here calls into the
// library's algorithms.

#include <cstdint>
#include <functional>
#include <vector>

namespace oracle {

using Poly = std::vector<std::int64_t>;

/// Dense schoolbook product truncated to `order`.
inline Poly multiply(const Poly& a, const Poly& b, std::size_t order)
{
    Poly c(order + 1, 0);
    for (std::size_t i = 0; i < a.size() && i <= order; ++i)
        for (std::size_t j = 0; j < b.size() && i + j <= order; ++j)
            c[i + j] += a[i] * b[j];
    return c;
}

/// (1 - x^n)^e for e >= 0 by repeated multiplication, or for e < 0 by
/// repeated multiplication with the geometric series 1 + x^n + x^{2n} + ...
inline Poly binomial_power(std::size_t n, int e, std::size_t order)
{
    Poly base(order + 1, 0);
    base[0] = 1;
    if (e >= 0) {
        if (n <= order)
            base[n] = -1;
    } else {
        for (std::size_t k = n; k <= order; k += n)
            base[k] = 1;
    }
    Poly out(order + 1, 0);
    out[0] = 1;
    for (int i = 0; i < (e < 0 ? -e : e); ++i)
        out = multiply(out, base, order);
    return out;
}

inline std::int64_t divisor_sum(std::int64_t n, const std::function<bool(std::int64_t)>& keep)
{
    std::int64_t total = 0;
    for (std::int64_t d = 1; d <= n; ++d)
        if (n % d == 0 && keep(d))
            total += d;
    return total;
}

/// Counts partitions of n whose parts all satisfy `allowed` and whose
/// multiplicities stay below `max_repeat` (0 = unbounded), by enumerating
/// parts in decreasing order.
inline std::int64_t count_partitions(std::int64_t n, const std::function<bool(std::int64_t)>& allowed,
                                     std::int64_t max_repeat = 0)
{
    std::function<std::int64_t(std::int64_t, std::int64_t)> go = [&](std::int64_t rest,
                                                                     std::int64_t largest) -> std::int64_t {
        if (rest == 0)
            return 1;
        std::int64_t total = 0;
        for (std::int64_t part = std::min(rest, largest); part >= 1; --part) {
            if (!allowed(part))
                continue;
            for (std::int64_t copies = 1; copies * part <= rest; ++copies) {
                if (max_repeat != 0 && copies >= max_repeat)
                    break;
                total += go(rest - copies * part, part - 1);
            }
        }
        return total;
    };
    return go(n, n);
}

/// Ordered m-tuples of triangular numbers summing to n, by nested enumeration.
inline std::int64_t triangular_tuples(int m, std::int64_t n)
{
    if (m == 0)
        return n == 0 ? 1 : 0;
    std::int64_t total = 0;
    for (std::int64_t k = 0; k * (k + 1) / 2 <= n; ++k)
        total += triangular_tuples(m - 1, n - k * (k + 1) / 2);
    return total;
}

}  // namespace oracle
