#include "divrec/series.hpp"

#include <algorithm>
#include <limits>
#include <regex>
#include <stdexcept>

namespace divrec {

Rational parse_rational(const std::string& text)
{
    static const std::regex pattern(R"(^-?[0-9]+(/[0-9]+)?$)");
    if (!std::regex_match(text, pattern))
        throw std::invalid_argument("malformed rational '" + text + "' (expected \"p/q\" or \"p\")");
    Rational value;
    const auto slash = text.find('/');
    if (slash == std::string::npos) {
        value = Rational(Integer(text, 10));
    } else {
        Integer den(text.substr(slash + 1), 10);
        if (den == 0)
            throw std::invalid_argument("zero denominator in '" + text + "'");
        value = Rational(Integer(text.substr(0, slash), 10), den);
        value.canonicalize();
    }
    return value;
}

std::string to_string(const Rational& value) { return value.get_str(10); }
std::string to_string(const Integer& value) { return value.get_str(10); }

TruncatedSeries::TruncatedSeries(std::size_t order) : coeffs_(order + 1) {}

TruncatedSeries::TruncatedSeries(std::vector<Rational> coeffs) : coeffs_(std::move(coeffs))
{
    if (coeffs_.empty())
        throw std::invalid_argument("a truncated series needs at least the constant coefficient");
    for (auto& c : coeffs_)
        c.canonicalize();
}

TruncatedSeries TruncatedSeries::one(std::size_t order)
{
    TruncatedSeries s(order);
    s.coeffs_[0] = 1;
    return s;
}

TruncatedSeries TruncatedSeries::from_integers(std::initializer_list<long> coeffs)
{
    std::vector<Rational> v;
    v.reserve(coeffs.size());
    for (long c : coeffs)
        v.emplace_back(c);
    return TruncatedSeries(std::move(v));
}

TruncatedSeries TruncatedSeries::from_integers(std::span<const Integer> coeffs)
{
    std::vector<Rational> v;
    v.reserve(coeffs.size());
    for (const auto& c : coeffs)
        v.emplace_back(c);
    return TruncatedSeries(std::move(v));
}

bool TruncatedSeries::is_integral() const
{
    return std::all_of(coeffs_.begin(), coeffs_.end(),
                       [](const Rational& c) { return c.get_den() == 1; });
}

TruncatedSeries TruncatedSeries::with_order(std::size_t order) const
{
    TruncatedSeries out(order);
    std::copy_n(coeffs_.begin(), std::min(order, this->order()) + 1, out.coeffs_.begin());
    return out;
}

bool operator==(const TruncatedSeries& a, const TruncatedSeries& b)
{
    return a.coeffs_ == b.coeffs_;
}

TruncatedSeries add(const TruncatedSeries& a, const TruncatedSeries& b)
{
    const std::size_t order = std::min(a.order(), b.order());
    TruncatedSeries out(order);
    for (std::size_t n = 0; n <= order; ++n)
        out[n] = a[n] + b[n];
    return out;
}

TruncatedSeries subtract(const TruncatedSeries& a, const TruncatedSeries& b)
{
    const std::size_t order = std::min(a.order(), b.order());
    TruncatedSeries out(order);
    for (std::size_t n = 0; n <= order; ++n)
        out[n] = a[n] - b[n];
    return out;
}

namespace {

std::vector<std::size_t> support_of(std::span<const Rational> c, std::size_t order)
{
    std::vector<std::size_t> idx;
    for (std::size_t k = 0; k <= order; ++k)
        if (sgn(c[k]) != 0)
            idx.push_back(k);
    return idx;
}

TruncatedSeries multiply_integral(std::span<const Rational> a, std::span<const Rational> b, std::size_t order)
{
    const auto live_b = support_of(b, order);
    std::vector<Integer> acc(order + 1);
    for (std::size_t i = 0; i <= order; ++i) {
        const mpz_srcptr ai = a[i].get_num_mpz_t();
        if (mpz_sgn(ai) == 0)
            continue;
        for (std::size_t j : live_b) {
            if (i + j > order)
                break;
            mpz_addmul(acc[i + j].get_mpz_t(), ai, b[j].get_num_mpz_t());
        }
    }
    return TruncatedSeries::from_integers(acc);
}

}  // namespace

TruncatedSeries multiply(const TruncatedSeries& a, const TruncatedSeries& b)
{
    const std::size_t order = std::min(a.order(), b.order());
    const auto ac = a.coeffs();
    const auto bc = b.coeffs();
    if (a.is_integral() && b.is_integral())
        return multiply_integral(ac, bc, order);

    const auto live_b = support_of(bc, order);
    std::vector<Rational> out(order + 1);
    for (std::size_t i = 0; i <= order; ++i) {
        if (sgn(ac[i]) == 0)
            continue;
        for (std::size_t j : live_b) {
            if (i + j > order)
                break;
            out[i + j] += ac[i] * bc[j];
        }
    }
    return TruncatedSeries(std::move(out));
}

TruncatedSeries inverse(const TruncatedSeries& a)
{
    if (sgn(a[0]) == 0)
        throw std::domain_error("not invertible as a formal series");

    const std::size_t order = a.order();
    // Nonzero positions of a, so the inner loop only visits live terms.
    std::vector<std::size_t> support;
    for (std::size_t k = 1; k <= order; ++k)
        if (sgn(a[k]) != 0)
            support.push_back(k);

    const bool unit = a.is_integral() && abs(a[0]) == 1;
    if (unit) {
        const int lead = sgn(a[0]);
        std::vector<Integer> b(order + 1);
        b[0] = lead;
        for (std::size_t n = 1; n <= order; ++n) {
            Integer acc;
            for (std::size_t k : support) {
                if (k > n)
                    break;
                mpz_addmul(acc.get_mpz_t(), a[k].get_num_mpz_t(), b[n - k].get_mpz_t());
            }
            b[n] = lead > 0 ? Integer(-acc) : acc;
        }
        return TruncatedSeries::from_integers(b);
    }

    const Rational lead_inv = 1 / a[0];
    TruncatedSeries b(order);
    b[0] = lead_inv;
    for (std::size_t n = 1; n <= order; ++n) {
        Rational acc;
        for (std::size_t k : support) {
            if (k > n)
                break;
            acc += a[k] * b[n - k];
        }
        b[n] = -lead_inv * acc;
    }
    return b;
}

std::vector<SparseTerm> binomial_factor_terms(std::uint64_t n, long e, std::size_t order)
{
    if (n == 0)
        throw std::invalid_argument("binomial_factor needs n >= 1");
    if (e == std::numeric_limits<long>::min())
        throw std::invalid_argument("binomial_factor exponent out of range");

    std::vector<SparseTerm> terms;
    terms.push_back({0, Integer(1)});
    if (e == 0 || n > order)
        return terms;

    const std::size_t count = order / n;
    if (e > 0) {
        // (1 - y)^e = sum_k (-1)^k C(e, k) y^k
        const auto top = static_cast<unsigned long>(e);
        for (std::size_t k = 1; k <= count && k <= top; ++k) {
            Integer c;
            mpz_bin_uiui(c.get_mpz_t(), top, k);
            if (k % 2 == 1)
                c = -c;
            terms.push_back({k * n, std::move(c)});
        }
    } else {
        // (1 - y)^{-m} = sum_k C(k + m - 1, m - 1) y^k
        const auto m = static_cast<unsigned long>(-e);
        for (std::size_t k = 1; k <= count; ++k) {
            Integer c;
            mpz_bin_uiui(c.get_mpz_t(), k + m - 1, m - 1);
            terms.push_back({k * n, std::move(c)});
        }
    }
    return terms;
}

TruncatedSeries binomial_factor(std::uint64_t n, long e, std::size_t order)
{
    std::vector<Integer> c(order + 1);
    for (auto& t : binomial_factor_terms(n, e, order))
        c[t.index] = std::move(t.value);
    return TruncatedSeries::from_integers(c);
}

IntegerProduct::IntegerProduct(std::size_t order) : coeffs_(order + 1) { coeffs_[0] = 1; }

void IntegerProduct::multiply_by(std::span<const SparseTerm> f)
{
    // Descending k: c[k - j] for j > 0 is still the old value when read.
    Integer acc;
    for (std::size_t k = coeffs_.size(); k-- > 0;) {
        acc = 0;
        for (const auto& t : f) {
            if (t.index > k)
                break;
            mpz_addmul(acc.get_mpz_t(), t.value.get_mpz_t(), coeffs_[k - t.index].get_mpz_t());
        }
        mpz_swap(coeffs_[k].get_mpz_t(), acc.get_mpz_t());
    }
}

void IntegerProduct::divide_by(std::span<const SparseTerm> f)
{
    if (f.empty() || f.front().index != 0 || abs(f.front().value) != 1)
        throw std::domain_error("divide_by needs a factor with constant term +-1");
    const bool negate = sgn(f.front().value) < 0;
    // Ascending k: c[k - j] for j > 0 is already the quotient coefficient.
    for (std::size_t k = 0; k < coeffs_.size(); ++k) {
        auto* ck = coeffs_[k].get_mpz_t();
        for (const auto& t : f.subspan(1)) {
            if (t.index > k)
                break;
            mpz_submul(ck, t.value.get_mpz_t(), coeffs_[k - t.index].get_mpz_t());
        }
        if (negate)
            mpz_neg(ck, ck);
    }
}

void IntegerProduct::multiply_binomial(std::uint64_t n, long e)
{
    if (e >= 0) {
        multiply_by(binomial_factor_terms(n, e, order()));
        return;
    }
    // (1 - x^n)^e = 1 / (1 - x^n)^{|e|}; the divisor has |e| + 1 terms where
    // the negative binomial series would have order/n.
    if (e == std::numeric_limits<long>::min())
        throw std::invalid_argument("binomial_factor exponent out of range");
    divide_by(binomial_factor_terms(n, -e, order()));
}

TruncatedSeries shift(const TruncatedSeries& a, std::size_t s)
{
    TruncatedSeries out(a.order());
    for (std::size_t n = s; n <= a.order(); ++n)
        out[n] = a[n - s];
    return out;
}

}  // namespace divrec
