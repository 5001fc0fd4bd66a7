#include "divrec/catalog.hpp"

#include "divrec/builtin_specs.hpp"
#include "divrec/divisors.hpp"
#include "divrec/recurrence.hpp"
#include "divrec/sequences.hpp"

#include <algorithm>
#include <atomic>
#include <regex>
#include <set>
#include <stdexcept>
#include <thread>

namespace divrec::catalog {

namespace {

std::string str(const Integer& v) { return to_string(v); }
std::string str(const Rational& v) { return to_string(v); }
std::string str(std::int64_t v) { return std::to_string(v); }

// Records the first disagreement. Returns true when lhs != rhs.
template <typename T>
bool differs(IdentityReport& report, std::uint64_t n, const T& lhs, const T& rhs)
{
    if (lhs == rhs)
        return false;
    report.first_failure = Failure{n, str(lhs), str(rhs)};
    return true;
}

// expected[from..N] against series[from..N].
bool series_differs(IdentityReport& report, std::span<const Integer> expected, const TruncatedSeries& series,
                    std::size_t from = 0)
{
    for (std::size_t n = from; n < expected.size(); ++n) {
        if (series[n] != Rational(expected[n])) {
            report.first_failure = Failure{n, str(expected[n]), str(series[n])};
            return true;
        }
    }
    return false;
}

// Oracle == expansion == recurrence for spec, from index `from`.
bool triple_differs(IdentityReport& report, std::span<const Integer> oracle, const ProductSpec& spec,
                    std::size_t order, std::size_t from = 0)
{
    return series_differs(report, oracle, coeffs_via_expansion(spec, order), from) ||
           series_differs(report, oracle, coeffs_via_recurrence(spec, order), from);
}

void require_order(std::size_t order, std::size_t minimum, const std::string& id)
{
    if (order < minimum)
        throw std::invalid_argument(id + " needs N >= " + std::to_string(minimum));
}

Integer big(std::int64_t v) { return Integer(static_cast<long>(v)); }

// acc += c * w
void addmul(Integer& acc, const Integer& c, std::int64_t w)
{
    if (w >= 0)
        mpz_addmul_ui(acc.get_mpz_t(), c.get_mpz_t(), static_cast<unsigned long>(w));
    else
        mpz_submul_ui(acc.get_mpz_t(), c.get_mpz_t(), static_cast<unsigned long>(-w));
}

DivisorTable odd_minus_even(std::size_t order)
{
    auto odd = sigma_rm_table(order, 1, 2);
    const auto even = sigma_rm_table(order, 0, 2);
    for (std::size_t k = 0; k <= order; ++k)
        odd[k] -= even[k];
    return odd;
}

}  // namespace

IdentityReport partition_recurrence_check(std::size_t order)
{
    IdentityReport report{"partition_recurrence", order, std::nullopt};
    require_order(order, 1, report.identity);

    const auto p = partition_prefix(order);
    if (series_differs(report, p.terms, coeffs_via_recurrence(specs::partitions(), order)))
        return report;

    const auto sig = sigma_table(order);
    for (std::size_t n = 1; n <= order; ++n) {
        const Integer lhs = big(static_cast<std::int64_t>(n)) * p[n];
        Integer rhs;
        for (std::size_t k = 1; k <= n; ++k)
            addmul(rhs, p[n - k], sig[k]);
        if (differs(report, n, lhs, rhs))
            break;
    }
    return report;
}

IdentityReport jacobi_square_check(std::size_t order, bool include_square_term)
{
    IdentityReport report{include_square_term ? "jacobi_square_verbatim" : "jacobi_square", order, std::nullopt};
    require_order(order, 1, report.identity);

    const auto sig = sigma_table(order);
    const auto odd = sigma_rm_table(order, 1, 2);
    // sigma(0) + sigma_odd(0), only reached by the k^2 = n term.
    const std::int64_t at_zero = Integer(sigma_ext(0) + sigma_odd(0)).get_si();

    for (std::size_t n = 1; n <= order; ++n) {
        const auto sn = static_cast<std::int64_t>(n);
        const std::int64_t lhs = (n % 2 == 0 ? 1 : -1) * square_indicator(n) * sn;
        // Twice the right-hand side, so the leading half stays integral.
        std::int64_t twice_rhs = -(sig[n] + odd[n]);
        const std::size_t limit = include_square_term ? n : n - 1;
        for (std::size_t k = 1; k * k <= limit; ++k) {
            const std::size_t arg = n - k * k;
            const std::int64_t term = arg == 0 ? at_zero : sig[arg] + odd[arg];
            twice_rhs += 2 * (k % 2 == 1 ? term : -term);
        }
        Rational rhs(twice_rhs, 2);
        rhs.canonicalize();
        if (differs(report, n, Rational(lhs), rhs))
            break;
    }
    return report;
}

Sides jacobi_square_sides(std::uint64_t n, bool include_square_term)
{
    if (n == 0)
        throw std::invalid_argument("jacobi_square_sides needs n >= 1");
    auto both = [](std::uint64_t k) {
        return Rational(sigma_ext(Rational(Integer(static_cast<unsigned long>(k)))) + sigma_odd(k));
    };
    Sides out;
    out.lhs = Rational((n % 2 == 0 ? 1 : -1) * square_indicator(n) * static_cast<long>(n));
    out.rhs = -both(n) / 2;
    const std::uint64_t limit = include_square_term ? n : n - 1;
    for (std::uint64_t k = 1; k * k <= limit; ++k)
        out.rhs += (k % 2 == 1 ? 1 : -1) * both(n - k * k);
    return out;
}

IdentityReport triangular_check(std::size_t order)
{
    IdentityReport report{"triangular", order, std::nullopt};
    require_order(order, 1, report.identity);

    const auto d = odd_minus_even(order);
    for (std::size_t n = 1; n <= order; ++n) {
        const std::int64_t lhs = triangular_indicator(n) * static_cast<std::int64_t>(n);
        std::int64_t rhs = 0;
        for (std::uint64_t k = 0; triangular(k) <= n - 1; ++k)
            rhs += d[n - triangular(k)];
        if (differs(report, n, lhs, rhs))
            break;
    }
    return report;
}

IdentityReport ramanujan_a_check(std::size_t order, bool verbatim)
{
    IdentityReport report{verbatim ? "ramanujan_a_verbatim" : "ramanujan_a", order, std::nullopt};
    require_order(order, 2, report.identity);

    std::vector<Integer> a(order + 1);
    for (std::size_t n = 0; n <= order; ++n)
        a[n] = a_direct(n);

    if (series_differs(report, a, TruncatedSeries::from_integers(lambert_cubic_prefix(order).terms)))
        return report;
    // The shifted product has no constant term, so compare from x^1 on.
    if (series_differs(report, a, coeffs_via_recurrence(specs::ramanujan(), order), 1))
        return report;

    const auto d = odd_minus_even(order);
    for (std::size_t n = 2; n <= order; ++n) {
        Integer lhs;
        Integer rhs;
        if (verbatim) {
            lhs = big(static_cast<std::int64_t>(n)) * a[n];
            for (std::size_t k = 0; k < n; ++k)
                addmul(rhs, a[k], d[n - k]);
        } else {
            lhs = big(static_cast<std::int64_t>(n - 1)) * a[n];
            for (std::size_t k = 1; k < n; ++k)
                addmul(rhs, a[n - k], d[k]);
        }
        rhs *= 8;
        if (differs(report, n, lhs, rhs))
            break;
    }
    return report;
}

IdentityReport p_regular_check(std::uint64_t p, std::size_t order)
{
    IdentityReport report{"p_regular(" + std::to_string(p) + ")", order, std::nullopt};
    if (p < 2)
        throw std::invalid_argument("p_regular needs p >= 2");
    require_order(order, 1, report.identity);

    const auto q = q_regular_prefix(p, order);
    if (triple_differs(report, q.terms, specs::p_regular(p), order))
        return report;

    const auto sig = sigma_table(order);
    const auto multiples = sigma_rm_table(order, 0, p);
    for (std::size_t n = 1; n <= order; ++n) {
        const Integer lhs = big(static_cast<std::int64_t>(n)) * q[n];
        Integer rhs;
        for (std::size_t k = 0; k < n; ++k)
            addmul(rhs, q[k], sig[n - k] - multiples[n - k]);
        if (differs(report, n, lhs, rhs))
            break;
    }
    return report;
}

IdentityReport p_regular_printed_check(std::uint64_t p, std::size_t order)
{
    IdentityReport report{"p_regular_printed(" + std::to_string(p) + ")", order, std::nullopt};
    if (p < 2)
        throw std::invalid_argument("p_regular needs p >= 2");
    require_order(order, 1, report.identity);

    const auto q = q_regular_prefix(p, order);
    if (series_differs(report, q.terms, coeffs_via_expansion(specs::p_regular_reciprocal(p), order)))
        return report;

    const auto sig = sigma_table(order);
    const auto multiples = sigma_rm_table(order, 0, p);
    for (std::size_t n = 1; n <= order; ++n) {
        const Integer lhs = big(static_cast<std::int64_t>(n)) * q[n];
        Integer rhs;
        for (std::size_t k = 0; k < n; ++k)
            addmul(rhs, q[k], multiples[n - k] - sig[n - k]);
        if (differs(report, n, lhs, rhs))
            break;
    }
    return report;
}

IdentityReport rogers_ramanujan_check(int which, std::size_t order)
{
    IdentityReport report{"rogers_ramanujan_" + std::to_string(which), order, std::nullopt};
    const auto spec = specs::rogers_ramanujan(which);
    require_order(order, 1, report.identity);

    const auto r = rr_sum_side(which, order);
    if (triple_differs(report, r.terms, spec, order))
        return report;

    const std::uint64_t lo = which == 1 ? 1 : 2;
    auto g = sigma_rm_table(order, lo, 5);
    const auto hi = sigma_rm_table(order, 5 - lo, 5);
    for (std::size_t k = 0; k <= order; ++k)
        g[k] += hi[k];

    for (std::size_t n = 1; n <= order; ++n) {
        const Integer lhs = big(static_cast<std::int64_t>(n)) * r[n];
        Integer rhs;
        for (std::size_t k = 0; k < n; ++k)
            addmul(rhs, r[k], g[n - k]);
        if (differs(report, n, lhs, rhs))
            break;
    }
    return report;
}

IdentityReport square_eta_quotient_check(std::size_t order)
{
    IdentityReport report{"square_eta_quotient", order, std::nullopt};
    require_order(order, 1, report.identity);

    std::vector<Integer> closed(order + 1);
    closed[0] = 1;
    for (std::size_t n = 1; n <= order; ++n)
        closed[n] = 2 * square_indicator(n);
    if (triple_differs(report, closed, specs::square_quotient(), order))
        return report;

    // h(k) = sigma(k) - 5 sigma(k/2) + 4 sigma(k/4), extended sigma throughout.
    std::vector<Integer> h(order + 1);
    for (std::size_t k = 1; k <= order; ++k) {
        const Integer num = big(static_cast<std::int64_t>(k));
        h[k] = sigma_ext(Rational(num)) - 5 * sigma_ext(Rational(num, 2)) + 4 * sigma_ext(Rational(num, 4));
    }

    for (std::size_t n = 1; n <= order; ++n) {
        const Integer lhs = big(static_cast<std::int64_t>(n * square_indicator(n)));
        Integer rhs = h[n];
        for (std::size_t k = 1; k < n; ++k)
            if (square_indicator(n - k) != 0)
                rhs += 2 * h[k];
        if (differs(report, n, lhs, rhs))
            break;
    }
    return report;
}

bool delta_admissible(std::uint64_t m)
{
    return m == 1 || m == 2 || m == 6 || m == 10 || (m > 0 && m % 4 == 0);
}

IdentityReport delta_m_check(std::uint64_t m, std::size_t order)
{
    IdentityReport report{"delta(" + std::to_string(m) + ")", order, std::nullopt};
    if (!delta_admissible(m))
        throw std::invalid_argument("product formula not established for this m (m=" + std::to_string(m) + ")");
    require_order(order, 1, report.identity);

    const auto delta = delta_m_prefix(m, order);
    if (triple_differs(report, delta.terms, specs::delta(m), order))
        return report;

    const auto d = odd_minus_even(order);
    const Integer scale = big(static_cast<std::int64_t>(m));
    for (std::size_t n = 1; n <= order; ++n) {
        const Integer lhs = big(static_cast<std::int64_t>(n)) * delta[n];
        Integer rhs;
        for (std::size_t k = 1; k <= n; ++k)
            addmul(rhs, delta[n - k], d[k]);
        rhs *= scale;
        if (differs(report, n, lhs, rhs))
            break;
    }
    return report;
}

namespace {

struct Selector {
    std::string head;
    std::string arg;  // empty when the id has no parameter
};

Selector split(const std::string& id)
{
    static const std::regex with_arg(R"(^([a-z_0-9]+)\((.+)\)$)");
    std::smatch m;
    if (std::regex_match(id, m, with_arg))
        return {m[1].str(), m[2].str()};
    return {id, {}};
}

std::uint64_t small_uint(const std::string& text, const std::string& id)
{
    static const std::regex digits(R"(^[0-9]{1,9}$)");
    if (!std::regex_match(text, digits))
        throw std::invalid_argument("bad parameter in identity id '" + id + "'");
    return std::stoull(text);
}

const std::set<std::string>& plain_ids()
{
    static const std::set<std::string> ids{"partition_recurrence", "jacobi_square",      "jacobi_square_verbatim",
                                           "triangular",           "ramanujan_a",        "ramanujan_a_verbatim",
                                           "rogers_ramanujan_1",   "rogers_ramanujan_2", "square_eta_quotient"};
    return ids;
}

}  // namespace

void validate_identity(const std::string& id)
{
    const auto sel = split(id);
    if (sel.arg.empty()) {
        if (!plain_ids().contains(id))
            throw std::invalid_argument("unknown identity '" + id + "'");
        return;
    }
    if (sel.head == "p_regular" || sel.head == "p_regular_printed") {
        if (small_uint(sel.arg, id) < 2)
            throw std::invalid_argument("p_regular needs p >= 2");
        return;
    }
    if (sel.head == "delta") {
        if (!delta_admissible(small_uint(sel.arg, id)))
            throw std::invalid_argument("product formula not established for this m ('" + id + "')");
        return;
    }
    if (sel.head == "cross_check") {
        specs::by_name(sel.arg);
        return;
    }
    throw std::invalid_argument("unknown identity '" + id + "'");
}

IdentityReport run_identity(const std::string& id, std::size_t order)
{
    validate_identity(id);
    const auto sel = split(id);
    if (sel.arg.empty()) {
        if (id == "partition_recurrence")
            return partition_recurrence_check(order);
        if (id == "jacobi_square")
            return jacobi_square_check(order);
        if (id == "jacobi_square_verbatim")
            return jacobi_square_check(order, true);
        if (id == "triangular")
            return triangular_check(order);
        if (id == "ramanujan_a")
            return ramanujan_a_check(order);
        if (id == "ramanujan_a_verbatim")
            return ramanujan_a_check(order, true);
        if (id == "rogers_ramanujan_1")
            return rogers_ramanujan_check(1, order);
        if (id == "rogers_ramanujan_2")
            return rogers_ramanujan_check(2, order);
        return square_eta_quotient_check(order);
    }
    if (sel.head == "cross_check")
        return cross_check(specs::by_name(sel.arg), order, id);
    const auto arg = small_uint(sel.arg, id);
    if (sel.head == "p_regular")
        return p_regular_check(arg, order);
    if (sel.head == "p_regular_printed")
        return p_regular_printed_check(arg, order);
    return delta_m_check(arg, order);
}

std::vector<std::string> all_identity_ids()
{
    std::vector<std::string> ids{"partition_recurrence", "jacobi_square",      "triangular",
                                 "ramanujan_a",          "rogers_ramanujan_1", "rogers_ramanujan_2",
                                 "square_eta_quotient"};
    for (int p : {2, 3, 5, 7})
        ids.push_back("p_regular(" + std::to_string(p) + ")");
    for (int m : {1, 2, 4, 6, 8, 10, 12})
        ids.push_back("delta(" + std::to_string(m) + ")");
    for (const auto& name : specs::builtin_names())
        ids.push_back("cross_check(" + name + ")");
    std::sort(ids.begin(), ids.end());
    return ids;
}

std::vector<std::string> negative_identity_ids()
{
    return {"jacobi_square_verbatim", "p_regular_printed(2)", "ramanujan_a_verbatim"};
}

std::vector<IdentityReport> run_identities(const std::vector<std::string>& ids, std::size_t order,
                                           unsigned threads)
{
    std::vector<std::string> work;
    for (const auto& id : ids) {
        if (id == "all") {
            const auto everything = all_identity_ids();
            work.insert(work.end(), everything.begin(), everything.end());
        } else {
            validate_identity(id);
            work.push_back(id);
        }
    }
    std::sort(work.begin(), work.end());
    work.erase(std::unique(work.begin(), work.end()), work.end());

    std::vector<IdentityReport> reports(work.size());
    if (threads == 0)
        threads = std::max(1u, std::thread::hardware_concurrency());
    threads = std::min<unsigned>(threads, static_cast<unsigned>(std::max<std::size_t>(work.size(), 1)));

    std::atomic<std::size_t> next{0};
    std::exception_ptr error;
    std::atomic<bool> failed{false};
    auto worker = [&] {
        for (std::size_t i = next++; i < work.size(); i = next++) {
            try {
                reports[i] = run_identity(work[i], order);
            } catch (...) {
                if (!failed.exchange(true))
                    error = std::current_exception();
                return;
            }
        }
    };
    std::vector<std::jthread> pool;
    for (unsigned t = 1; t < threads; ++t)
        pool.emplace_back(worker);
    worker();
    pool.clear();
    if (error)
        std::rethrow_exception(error);
    return reports;
}

}  // namespace divrec::catalog
