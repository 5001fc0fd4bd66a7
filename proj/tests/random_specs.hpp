#pragma once

// Random ProductSpecs with integer exponents throughout.

#include "divrec/product_spec.hpp"

#include <random>
#include <set>

namespace testgen {

using namespace divrec;

inline SetDescriptor random_set(std::mt19937_64& rng, std::uint64_t max_member)
{
    switch (rng() % 4) {
    case 0:
        return SetDescriptor::all();
    case 1: {
        const std::uint64_t m = 1 + rng() % 6;
        std::vector<Residue> classes;
        for (std::uint64_t r = 0; r < m; ++r)
            if (rng() % 2 == 0)
                classes.push_back({r, m});
        if (classes.empty())
            classes.push_back({rng() % m, m});
        return SetDescriptor::residues(classes);
    }
    case 2:
        return SetDescriptor::multiples(1 + rng() % 6);
    default: {
        std::set<std::uint64_t> picked;
        const int count = static_cast<int>(rng() % 6);
        for (int i = 0; i < count; ++i)
            picked.insert(1 + rng() % max_member);
        return SetDescriptor::explicit_members({picked.begin(), picked.end()});
    }
    }
}

// Integer exponents only, so the expansion is defined.
inline WeightSpec random_weight(std::mt19937_64& rng, const SetDescriptor& set, std::uint64_t max_member, int max_c)
{
    if (rng() % 4 != 0)
        return WeightSpec::linear(Rational(static_cast<long>(rng() % (2 * max_c + 1)) - max_c));
    std::map<std::uint64_t, Rational> values;
    for (std::uint64_t n = 1; n <= max_member; ++n)
        if (set.contains(n))
            values[n] = Rational(static_cast<long>(n) * (static_cast<long>(rng() % (2 * max_c + 1)) - max_c));
    return WeightSpec::table(values);
}

inline ProductSpec random_spec(std::mt19937_64& rng, std::uint64_t order, int max_c, std::uint64_t max_shift)
{
    ProductSpec spec;
    spec.shift = rng() % (max_shift + 1);
    const int count = 1 + static_cast<int>(rng() % 3);
    for (int i = 0; i < count; ++i) {
        auto set = random_set(rng, order);
        auto weight = random_weight(rng, set, order, max_c);
        spec.factors.push_back({set, weight});
    }
    return spec;
}

}  // namespace testgen
