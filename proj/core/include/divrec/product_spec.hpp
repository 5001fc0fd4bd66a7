#pragma once

// Declarative description of a formal product
//
//     x^shift * prod_i prod_{n in A_i} (1 - x^n)^{-f_i(n)/n}
//
// with each A_i a SetDescriptor and each f_i a WeightSpec.

#include "divrec/series.hpp"

#include <cstdint>
#include <map>
#include <variant>
#include <vector>

namespace divrec {

struct Residue {
    std::uint64_t r;
    std::uint64_t m;

    friend bool operator==(const Residue&, const Residue&) = default;
};

/// A subset of the positive integers. Construction validates the descriptor
/// and throws std::invalid_argument on bad input.
class SetDescriptor {
public:
    struct All {
        friend bool operator==(const All&, const All&) = default;
    };
    struct ResidueUnion {
        std::vector<Residue> classes;
        friend bool operator==(const ResidueUnion&, const ResidueUnion&) = default;
    };
    struct Multiples {
        std::uint64_t m;
        friend bool operator==(const Multiples&, const Multiples&) = default;
    };
    struct Explicit {
        std::vector<std::uint64_t> members;
        friend bool operator==(const Explicit&, const Explicit&) = default;
    };
    using Kind = std::variant<All, ResidueUnion, Multiples, Explicit>;

    static SetDescriptor all();
    /// Canonical classes 0 <= r < m, no duplicates.
    static SetDescriptor residues(std::vector<Residue> classes);
    /// Positive multiples of m.
    static SetDescriptor multiples(std::uint64_t m);
    /// Positive, duplicate-free members; kept in the given order.
    static SetDescriptor explicit_members(std::vector<std::uint64_t> members);

    bool contains(std::uint64_t n) const;
    const Kind& kind() const noexcept { return kind_; }

    friend bool operator==(const SetDescriptor&, const SetDescriptor&) = default;

private:
    explicit SetDescriptor(Kind kind) : kind_(std::move(kind)) {}
    Kind kind_;
};

/// f(n) = c * n (the factor family (1 - x^n)^{-c}), or an explicit table.
class WeightSpec {
public:
    struct Linear {
        Rational c;
        friend bool operator==(const Linear&, const Linear&) = default;
    };
    struct Table {
        std::map<std::uint64_t, Rational> values;
        friend bool operator==(const Table&, const Table&) = default;
    };
    using Kind = std::variant<Linear, Table>;

    static WeightSpec linear(Rational c);
    static WeightSpec table(std::map<std::uint64_t, Rational> values);

    /// f(n). Throws std::out_of_range when a table has no entry for n.
    Rational at(std::uint64_t n) const;

    /// Exponent of (1 - x^n): -f(n)/n.
    Rational exponent(std::uint64_t n) const;

    const Kind& kind() const noexcept { return kind_; }

    friend bool operator==(const WeightSpec&, const WeightSpec&) = default;

private:
    explicit WeightSpec(Kind kind) : kind_(std::move(kind)) {}
    Kind kind_;
};

struct Factor {
    SetDescriptor set;
    WeightSpec weight;

    friend bool operator==(const Factor&, const Factor&) = default;
};

struct ProductSpec {
    std::uint64_t shift = 0;
    std::vector<Factor> factors;

    /// Throws std::invalid_argument when there are no factors.
    void validate() const;

    friend bool operator==(const ProductSpec&, const ProductSpec&) = default;
};

/// Factor lists concatenated, shifts added.
ProductSpec combine(const ProductSpec& a, const ProductSpec& b);

}  // namespace divrec
