#include "divrec/sequences.hpp"

#include "divrec/divisors.hpp"

#include <stdexcept>

namespace divrec {

Integer a_direct(std::uint64_t n)
{
    if (n == 0)
        return 1;
    Integer total;
    for (std::uint64_t d = 1; d <= n / d; ++d) {
        if (n % d != 0)
            continue;
        const std::uint64_t co = n / d;
        Integer cube;
        if (d % 2 == 1) {
            mpz_ui_pow_ui(cube.get_mpz_t(), co, 3);
            total += cube;
        }
        if (co != d && co % 2 == 1) {
            mpz_ui_pow_ui(cube.get_mpz_t(), d, 3);
            total += cube;
        }
    }
    return total;
}

SequencePrefix lambert_cubic_prefix(std::size_t order)
{
    SequencePrefix out{"lambert_cubic", std::vector<Integer>(order + 1)};
    out.terms[0] = 1;
    Integer cube;
    for (std::uint64_t n = 1; n <= order; ++n) {
        mpz_ui_pow_ui(cube.get_mpz_t(), n, 3);
        for (std::uint64_t k = n; k <= order; k += 2 * n)
            out.terms[k] += cube;
    }
    return out;
}

SequencePrefix partition_prefix(std::size_t order)
{
    SequencePrefix out{"partition", std::vector<Integer>(order + 1)};
    auto& p = out.terms;
    p[0] = 1;
    for (std::size_t part = 1; part <= order; ++part)
        for (std::size_t n = part; n <= order; ++n)
            p[n] += p[n - part];
    return out;
}

SequencePrefix q_regular_prefix(std::uint64_t p, std::size_t order)
{
    if (p < 2)
        throw std::invalid_argument("q_regular_prefix needs p >= 2");
    SequencePrefix out{"q_regular(" + std::to_string(p) + ")", std::vector<Integer>(order + 1)};
    auto& q = out.terms;
    q[0] = 1;
    std::vector<Integer> before;
    for (std::size_t part = 1; part <= order; ++part) {
        before = q;
        // Add the ways that use this part 1..p-1 times.
        for (std::size_t n = part; n <= order; ++n) {
            std::size_t used = part;
            for (std::uint64_t copies = 1; copies < p && used <= n; ++copies, used += part)
                q[n] += before[n - used];
        }
    }
    return out;
}

SequencePrefix rr_sum_side(int which, std::size_t order)
{
    if (which != 1 && which != 2)
        throw std::invalid_argument("Rogers-Ramanujan selector must be 1 or 2");

    auto total = TruncatedSeries::one(order);
    auto denominator_inverse = TruncatedSeries::one(order);
    for (std::uint64_t n = 1;; ++n) {
        const std::uint64_t exponent = which == 1 ? n * n : n * (n + 1);
        if (exponent > order)
            break;
        denominator_inverse = multiply(denominator_inverse, binomial_factor(n, -1, order));
        total = add(total, shift(denominator_inverse, exponent));
    }

    SequencePrefix out{which == 1 ? "rr1" : "rr2", std::vector<Integer>(order + 1)};
    for (std::size_t n = 0; n <= order; ++n)
        out.terms[n] = total[n].get_num();
    return out;
}

SequencePrefix delta_m_prefix(std::uint64_t m, std::size_t order)
{
    if (m == 0)
        throw std::invalid_argument("delta_m_prefix needs m >= 1");

    TruncatedSeries theta(order);
    for (std::uint64_t k = 0; triangular(k) <= order; ++k)
        theta[triangular(k)] = 1;

    auto power = theta;
    for (std::uint64_t i = 1; i < m; ++i)
        power = multiply(theta, power);

    SequencePrefix out{"delta(" + std::to_string(m) + ")", std::vector<Integer>(order + 1)};
    for (std::size_t n = 0; n <= order; ++n)
        out.terms[n] = power[n].get_num();
    return out;
}

}  // namespace divrec
