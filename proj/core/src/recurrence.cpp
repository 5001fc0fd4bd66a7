#include "divrec/recurrence.hpp"

#include <algorithm>
#include <stdexcept>

namespace divrec {

namespace {

// Members of set that are <= order, ascending.
std::vector<std::uint64_t> members_up_to(const SetDescriptor& set, std::size_t order)
{
    std::vector<std::uint64_t> out;
    if (const auto* e = std::get_if<SetDescriptor::Explicit>(&set.kind())) {
        for (auto n : e->members)
            if (n <= order)
                out.push_back(n);
        std::sort(out.begin(), out.end());
        return out;
    }
    for (std::uint64_t n = 1; n <= order; ++n)
        if (set.contains(n))
            out.push_back(n);
    return out;
}

Integer as_integer(std::uint64_t n) { return Integer(static_cast<unsigned long>(n)); }

// p[start..] from the recurrence over rationals, given p[0..start-1].
void run_rational(const DivisorWeightTable& table, std::vector<Rational>& p, std::size_t start)
{
    std::vector<std::size_t> live;
    for (std::size_t k = 1; k <= table.order; ++k)
        if (sgn(table.g[k]) != 0)
            live.push_back(k);

    for (std::size_t n = start; n < p.size(); ++n) {
        Rational acc;
        for (std::size_t k : live) {
            if (k > n)
                break;
            acc += table.g[k] * p[n - k];
        }
        p[n] = acc / Rational(as_integer(n));
    }
}

}  // namespace

bool DivisorWeightTable::is_integral() const
{
    return std::all_of(g.begin(), g.end(), [](const Rational& v) { return v.get_den() == 1; });
}

DivisorWeightTable weight_table(const ProductSpec& spec, std::size_t order)
{
    spec.validate();
    if (order == 0)
        throw std::invalid_argument("weight_table needs order >= 1");

    DivisorWeightTable table{order, std::vector<Rational>(order + 1)};
    for (const auto& factor : spec.factors) {
        const auto members = members_up_to(factor.set, order);
        if (const auto* lin = std::get_if<WeightSpec::Linear>(&factor.weight.kind())) {
            // c times the restricted divisor sum.
            std::vector<Integer> divisor_sum(order + 1);
            for (auto d : members)
                for (std::uint64_t k = d; k <= order; k += d)
                    divisor_sum[k] += as_integer(d);
            for (std::size_t k = 1; k <= order; ++k)
                if (divisor_sum[k] != 0)
                    table.g[k] += lin->c * Rational(divisor_sum[k]);
        } else {
            for (auto d : members) {
                const Rational f = factor.weight.at(d);
                for (std::uint64_t k = d; k <= order; k += d)
                    table.g[k] += f;
            }
        }
    }
    return table;
}

TruncatedSeries coeffs_via_recurrence(const ProductSpec& spec, std::size_t order)
{
    spec.validate();
    TruncatedSeries out(order);
    if (spec.shift > order)
        return out;

    const std::size_t unshifted = order - spec.shift;
    std::vector<Rational> p(unshifted + 1);
    p[0] = 1;
    if (unshifted >= 1) {
        const auto table = weight_table(spec, unshifted);
        std::size_t next = 1;
        if (table.is_integral()) {
            // Integer fast path. Stays exact as long as every division by n is
            // exact; otherwise hands over to the rational loop at that n.
            std::vector<std::size_t> live;
            for (std::size_t k = 1; k <= unshifted; ++k)
                if (sgn(table.g[k]) != 0)
                    live.push_back(k);

            std::vector<Integer> q(unshifted + 1);
            q[0] = 1;
            Integer acc;
            for (; next <= unshifted; ++next) {
                acc = 0;
                for (std::size_t k : live) {
                    if (k > next)
                        break;
                    mpz_addmul(acc.get_mpz_t(), table.g[k].get_num_mpz_t(), q[next - k].get_mpz_t());
                }
                if (mpz_divisible_ui_p(acc.get_mpz_t(), next) == 0)
                    break;
                mpz_divexact_ui(q[next].get_mpz_t(), acc.get_mpz_t(), next);
            }
            for (std::size_t n = 0; n < next; ++n)
                p[n] = Rational(q[n]);
        }
        run_rational(table, p, next);
    }

    for (std::size_t n = 0; n <= unshifted; ++n)
        out[n + spec.shift] = p[n];
    return out;
}

TruncatedSeries coeffs_via_expansion(const ProductSpec& spec, std::size_t order)
{
    spec.validate();
    TruncatedSeries out(order);
    if (spec.shift > order)
        return out;

    const std::size_t unshifted = order - spec.shift;
    IntegerProduct product(unshifted);
    for (const auto& factor : spec.factors) {
        for (auto n : members_up_to(factor.set, unshifted)) {
            const Rational e = factor.weight.exponent(n);
            if (e.get_den() != 1)
                throw std::domain_error("expansion oracle requires integer exponents");
            if (sgn(e) == 0)
                continue;
            if (!e.get_num().fits_slong_p())
                throw std::domain_error("factor exponent out of range");
            product.multiply_binomial(n, e.get_num().get_si());
        }
    }

    for (std::size_t n = 0; n <= unshifted; ++n)
        out[n + spec.shift] = Rational(product.coeffs()[n]);
    return out;
}

long first_mismatch(const TruncatedSeries& a, const TruncatedSeries& b)
{
    const std::size_t order = std::min(a.order(), b.order());
    for (std::size_t n = 0; n <= order; ++n)
        if (a[n] != b[n])
            return static_cast<long>(n);
    return -1;
}

IdentityReport cross_check(const ProductSpec& spec, std::size_t order, std::string identity)
{
    const auto expanded = coeffs_via_expansion(spec, order);
    const auto recurred = coeffs_via_recurrence(spec, order);
    IdentityReport report{std::move(identity), order, std::nullopt};
    if (const long n = first_mismatch(recurred, expanded); n >= 0) {
        const auto i = static_cast<std::size_t>(n);
        report.first_failure = Failure{i, to_string(recurred[i]), to_string(expanded[i])};
    }
    return report;
}

}  // namespace divrec
