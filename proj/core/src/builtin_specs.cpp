#include "divrec/builtin_specs.hpp"

#include <regex>
#include <stdexcept>

namespace divrec::specs {

namespace {

Factor family(SetDescriptor set, long c) { return {std::move(set), WeightSpec::linear(Rational(c))}; }

SetDescriptor evens() { return SetDescriptor::multiples(2); }
SetDescriptor odds() { return SetDescriptor::residues({{1, 2}}); }

}  // namespace

// linear(c) on a set means the family (1 - x^n)^{-c}.

ProductSpec gauss() { return {0, {family(evens(), -1), family(odds(), 1)}}; }

ProductSpec jacobi() { return {0, {family(evens(), -1), family(odds(), -2)}}; }

ProductSpec ramanujan() { return {1, {family(evens(), -8), family(odds(), 8)}}; }

ProductSpec rogers_ramanujan(int which)
{
    if (which == 1)
        return {0, {family(SetDescriptor::residues({{1, 5}, {4, 5}}), 1)}};
    if (which == 2)
        return {0, {family(SetDescriptor::residues({{2, 5}, {3, 5}}), 1)}};
    throw std::invalid_argument("Rogers-Ramanujan selector must be 1 or 2");
}

ProductSpec p_regular(std::uint64_t p)
{
    if (p < 2)
        throw std::invalid_argument("p_regular needs p >= 2");
    return {0, {family(SetDescriptor::all(), 1), family(SetDescriptor::multiples(p), -1)}};
}

ProductSpec p_regular_reciprocal(std::uint64_t p)
{
    if (p < 2)
        throw std::invalid_argument("p_regular needs p >= 2");
    return {0, {family(SetDescriptor::all(), -1), family(SetDescriptor::multiples(p), 1)}};
}

ProductSpec delta(std::uint64_t m)
{
    if (m == 0)
        throw std::invalid_argument("delta needs m >= 1");
    const auto c = static_cast<long>(m);
    return {0, {family(evens(), -2 * c), family(SetDescriptor::all(), c)}};
}

ProductSpec square_quotient()
{
    return {0,
            {family(evens(), -5), family(SetDescriptor::all(), 2), family(SetDescriptor::multiples(4), 2)}};
}

ProductSpec partitions() { return {0, {family(SetDescriptor::all(), 1)}}; }

ProductSpec by_name(const std::string& name)
{
    static const std::regex parametrised(R"(^(p_regular|delta)\(([0-9]{1,9})\)$)");
    if (name == "gauss")
        return gauss();
    if (name == "jacobi")
        return jacobi();
    if (name == "ramanujan")
        return ramanujan();
    if (name == "rr1")
        return rogers_ramanujan(1);
    if (name == "rr2")
        return rogers_ramanujan(2);
    if (name == "square_quotient")
        return square_quotient();
    if (name == "partitions")
        return partitions();
    std::smatch m;
    if (std::regex_match(name, m, parametrised)) {
        const auto arg = std::stoull(m[2].str());
        return m[1] == "p_regular" ? p_regular(arg) : delta(arg);
    }
    throw std::invalid_argument("unknown built-in spec '" + name + "'");
}

std::vector<std::string> builtin_names()
{
    return {"gauss",        "jacobi",       "ramanujan",    "rr1",      "rr2",      "p_regular(2)",
            "p_regular(3)", "p_regular(5)", "delta(1)",     "delta(2)", "delta(4)", "delta(6)",
            "delta(8)",     "delta(10)",    "square_quotient"};
}

}  // namespace divrec::specs
