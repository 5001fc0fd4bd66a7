#pragma once

// Exact truncated formal power series over arbitrary-precision rationals.
//
// A series of order N carries the coefficients of x^0 .. x^N inclusive.
// Binary operations on series of orders N1 and N2 return a series of order
// min(N1, N2). Nothing in here ever rounds.

#include <gmpxx.h>

#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <span>
#include <string>
#include <vector>

namespace divrec {

using Integer = mpz_class;
using Rational = mpq_class;

/// Parses "p/q" or "p" into a canonical rational. Throws std::invalid_argument
/// on malformed text or a zero denominator.
Rational parse_rational(const std::string& text);

/// "p/q" in lowest terms, or plain "p" when the denominator is 1.
std::string to_string(const Rational& value);
std::string to_string(const Integer& value);

class TruncatedSeries {
public:
    /// The zero series of the given order.
    explicit TruncatedSeries(std::size_t order);

    /// Order is coeffs.size() - 1; coeffs must be nonempty.
    explicit TruncatedSeries(std::vector<Rational> coeffs);

    static TruncatedSeries one(std::size_t order);
    static TruncatedSeries from_integers(std::initializer_list<long> coeffs);
    static TruncatedSeries from_integers(std::span<const Integer> coeffs);

    std::size_t order() const noexcept { return coeffs_.size() - 1; }

    const Rational& operator[](std::size_t n) const { return coeffs_.at(n); }
    Rational& operator[](std::size_t n) { return coeffs_.at(n); }

    std::span<const Rational> coeffs() const noexcept { return coeffs_; }

    /// True when every coefficient has denominator 1.
    bool is_integral() const;

    /// Same coefficients cut (or zero-padded) to a new order.
    TruncatedSeries with_order(std::size_t order) const;

    friend bool operator==(const TruncatedSeries& a, const TruncatedSeries& b);

private:
    std::vector<Rational> coeffs_;
};

TruncatedSeries add(const TruncatedSeries& a, const TruncatedSeries& b);
TruncatedSeries subtract(const TruncatedSeries& a, const TruncatedSeries& b);

/// Truncated Cauchy product. Zero coefficients on either side are skipped, so
/// multiplying by a sparse factor such as (1 - x^n)^e costs O(N * N/n).
/// Integral inputs take an mpz-only path; the result is identical to the
/// rational path.
TruncatedSeries multiply(const TruncatedSeries& a, const TruncatedSeries& b);

/// Multiplicative inverse by forward substitution:
///   b0 = 1/a0,  bn = -(1/a0) * sum_{k=1..n} a_k b_{n-k}.
/// Throws std::domain_error("not invertible as a formal series") if a0 == 0.
TruncatedSeries inverse(const TruncatedSeries& a);

/// (1 - x^n)^e to order N. Binomial theorem for e >= 0, negative binomial
/// series sum_k C(k+|e|-1, |e|-1) x^{nk} for e < 0. Requires n >= 1.
TruncatedSeries binomial_factor(std::uint64_t n, long e, std::size_t order);

struct SparseTerm {
    std::size_t index;
    Integer value;
};

/// Nonzero coefficients of (1 - x^n)^e up to the given order, ascending.
std::vector<SparseTerm> binomial_factor_terms(std::uint64_t n, long e, std::size_t order);

/// Dense integer series built up by long chains of sparse factors, updated in
/// place. Starts as the series 1.
class IntegerProduct {
public:
    explicit IntegerProduct(std::size_t order);

    std::size_t order() const noexcept { return coeffs_.size() - 1; }

    /// this *= f, with f given by its nonzero terms.
    void multiply_by(std::span<const SparseTerm> f);

    /// this *= 1/f by forward substitution. f must have constant term +-1.
    void divide_by(std::span<const SparseTerm> f);

    /// this *= (1 - x^n)^e
    void multiply_binomial(std::uint64_t n, long e);

    const std::vector<Integer>& coeffs() const noexcept { return coeffs_; }
    TruncatedSeries to_series() const { return TruncatedSeries::from_integers(coeffs_); }

private:
    std::vector<Integer> coeffs_;
};

/// Multiplies by x^s: coefficients move up s slots, the order is unchanged and
/// the top s coefficients fall off.
TruncatedSeries shift(const TruncatedSeries& a, std::size_t s);

}  // namespace divrec
