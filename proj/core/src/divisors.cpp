#include "divrec/divisors.hpp"

#include <limits>
#include <stdexcept>

namespace divrec {

namespace {

void check_residue(std::uint64_t r, std::uint64_t m)
{
    if (m == 0)
        throw std::invalid_argument("modulus must be positive");
    if (r >= m)
        throw std::invalid_argument("non-canonical residue");
}

// Sum of divisors d of n (n >= 1) with d % m == r.
Integer restricted_divisor_sum(std::uint64_t n, std::uint64_t r, std::uint64_t m)
{
    Integer total;
    for (std::uint64_t d = 1; d <= n / d; ++d) {
        if (n % d != 0)
            continue;
        const std::uint64_t co = n / d;
        if (d % m == r)
            total += Integer(static_cast<unsigned long>(d));
        if (co != d && co % m == r)
            total += Integer(static_cast<unsigned long>(co));
    }
    return total;
}

}  // namespace

std::uint64_t isqrt(std::uint64_t n)
{
    std::uint64_t lo = 0;
    std::uint64_t hi = std::min<std::uint64_t>(n, 0xFFFFFFFFull);
    while (lo < hi) {
        const std::uint64_t mid = lo + (hi - lo + 1) / 2;
        if (mid * mid <= n)
            lo = mid;
        else
            hi = mid - 1;
    }
    return lo;
}

Integer sigma_ext(const Rational& value)
{
    Rational q = value;
    q.canonicalize();
    if (q.get_den() != 1 || sgn(q) < 0)
        return 0;
    if (sgn(q) == 0)
        return 1;
    const Integer& n = q.get_num();
    if (!n.fits_ulong_p())
        throw std::out_of_range("sigma_ext argument too large for trial division");
    return sigma(n.get_ui());
}

Integer sigma_rm(std::uint64_t n, std::uint64_t r, std::uint64_t m)
{
    check_residue(r, m);
    if (n == 0)
        throw std::invalid_argument("sigma_rm is defined for n >= 1");
    return restricted_divisor_sum(n, r, m);
}

Integer sigma(std::uint64_t n)
{
    if (n == 0)
        throw std::invalid_argument("sigma is defined for n >= 1; use sigma_ext for sigma(0) = 1");
    return restricted_divisor_sum(n, 0, 1);
}

Integer sigma_odd(std::uint64_t n) { return n == 0 ? Integer(0) : restricted_divisor_sum(n, 1, 2); }
Integer sigma_even(std::uint64_t n) { return n == 0 ? Integer(0) : restricted_divisor_sum(n, 0, 2); }

int square_indicator(std::uint64_t n)
{
    const std::uint64_t root = isqrt(n);
    return root * root == n ? 1 : 0;
}

std::uint64_t triangular(std::uint64_t n)
{
    const std::uint64_t a = n % 2 == 0 ? n / 2 : n;
    const std::uint64_t b = n % 2 == 0 ? n + 1 : (n + 1) / 2;
    if (b != 0 && a > std::numeric_limits<std::uint64_t>::max() / b)
        throw std::overflow_error("T(n) does not fit in 64 bits");
    return a * b;
}

int triangular_indicator(std::uint64_t n)
{
    // n = T(m) iff 8n + 1 is a perfect square.
    if (n <= (std::numeric_limits<std::uint64_t>::max() - 1) / 8)
        return square_indicator(8 * n + 1);
    Integer target = Integer(static_cast<unsigned long>(n)) * 8 + 1;
    return mpz_perfect_square_p(target.get_mpz_t()) != 0 ? 1 : 0;
}

DivisorTable sigma_table(std::size_t order) { return sigma_rm_table(order, 0, 1); }

DivisorTable sigma_rm_table(std::size_t order, std::uint64_t r, std::uint64_t m)
{
    check_residue(r, m);
    DivisorTable table(order + 1, 0);
    const std::uint64_t first = r == 0 ? m : r;
    for (std::uint64_t d = first; d <= order; d += m)
        for (std::uint64_t k = d; k <= order; k += d)
            table[k] += static_cast<std::int64_t>(d);
    return table;
}

}  // namespace divrec
