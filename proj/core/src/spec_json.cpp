#include "divrec/spec_json.hpp"

#include <algorithm>

namespace divrec {

using nlohmann::json;
using nlohmann::ordered_json;

namespace {

ordered_json set_to_json(const SetDescriptor& set)
{
    ordered_json j;
    std::visit(
        [&j](const auto& k) {
            using K = std::decay_t<decltype(k)>;
            if constexpr (std::is_same_v<K, SetDescriptor::All>) {
                j["kind"] = "all";
            } else if constexpr (std::is_same_v<K, SetDescriptor::ResidueUnion>) {
                j["kind"] = "residueUnion";
                j["classes"] = ordered_json::array();
                for (const auto& c : k.classes)
                    j["classes"].push_back(ordered_json{{"r", c.r}, {"m", c.m}});
            } else if constexpr (std::is_same_v<K, SetDescriptor::Multiples>) {
                j["kind"] = "multiples";
                j["m"] = k.m;
            } else {
                j["kind"] = "explicit";
                j["members"] = k.members;
            }
        },
        set.kind());
    return j;
}

ordered_json weight_to_json(const WeightSpec& weight)
{
    ordered_json j;
    if (const auto* lin = std::get_if<WeightSpec::Linear>(&weight.kind())) {
        j["kind"] = "linear";
        j["c"] = to_string(lin->c);
    } else {
        j["kind"] = "table";
        j["values"] = ordered_json::array();
        for (const auto& [n, f] : std::get<WeightSpec::Table>(weight.kind()).values)
            j["values"].push_back(ordered_json{{"n", n}, {"f", to_string(f)}});
    }
    return j;
}

[[noreturn]] void fail(const std::string& path, const std::string& what)
{
    throw SpecError(path + ": " + what);
}

const json& field(const json& obj, const std::string& path, const char* key)
{
    if (!obj.is_object())
        fail(path, "expected an object");
    const auto it = obj.find(key);
    if (it == obj.end())
        fail(path, std::string("missing field '") + key + "'");
    return *it;
}

std::uint64_t uint_field(const json& obj, const std::string& path, const char* key, bool positive)
{
    const auto& v = field(obj, path, key);
    const std::string where = path + "." + key;
    if (!v.is_number_unsigned() && !(v.is_number_integer() && v.get<std::int64_t>() >= 0))
        fail(where, "expected a nonnegative integer");
    const auto value = v.get<std::uint64_t>();
    if (positive && value == 0)
        fail(where, "expected a positive integer");
    return value;
}

std::uint64_t uint_value(const json& v, const std::string& path)
{
    if (!v.is_number_unsigned() && !(v.is_number_integer() && v.get<std::int64_t>() >= 0))
        fail(path, "expected a nonnegative integer");
    return v.get<std::uint64_t>();
}

Rational rational_field(const json& obj, const std::string& path, const char* key)
{
    const auto& v = field(obj, path, key);
    const std::string where = path + "." + key;
    if (!v.is_string())
        fail(where, "expected a rational string \"p/q\"");
    try {
        return parse_rational(v.get<std::string>());
    } catch (const std::invalid_argument& e) {
        fail(where, e.what());
    }
}

std::string kind_of(const json& obj, const std::string& path)
{
    const auto& k = field(obj, path, "kind");
    if (!k.is_string())
        fail(path + ".kind", "expected a string");
    return k.get<std::string>();
}

SetDescriptor set_from_json(const json& j, const std::string& path)
{
    const auto kind = kind_of(j, path);
    try {
        if (kind == "all")
            return SetDescriptor::all();
        if (kind == "multiples")
            return SetDescriptor::multiples(uint_field(j, path, "m", true));
        if (kind == "residueUnion") {
            const auto& classes = field(j, path, "classes");
            if (!classes.is_array())
                fail(path + ".classes", "expected an array");
            std::vector<Residue> out;
            for (std::size_t i = 0; i < classes.size(); ++i) {
                const std::string where = path + ".classes[" + std::to_string(i) + "]";
                out.push_back({uint_field(classes[i], where, "r", false), uint_field(classes[i], where, "m", true)});
            }
            return SetDescriptor::residues(std::move(out));
        }
        if (kind == "explicit") {
            const auto& members = field(j, path, "members");
            if (!members.is_array())
                fail(path + ".members", "expected an array");
            std::vector<std::uint64_t> out;
            for (std::size_t i = 0; i < members.size(); ++i)
                out.push_back(uint_value(members[i], path + ".members[" + std::to_string(i) + "]"));
            return SetDescriptor::explicit_members(std::move(out));
        }
    } catch (const std::invalid_argument& e) {
        fail(path, e.what());
    }
    fail(path + ".kind", "unknown set kind '" + kind + "'");
}

WeightSpec weight_from_json(const json& j, const std::string& path)
{
    const auto kind = kind_of(j, path);
    if (kind == "linear")
        return WeightSpec::linear(rational_field(j, path, "c"));
    if (kind == "table") {
        const auto& values = field(j, path, "values");
        if (!values.is_array())
            fail(path + ".values", "expected an array");
        std::map<std::uint64_t, Rational> table;
        for (std::size_t i = 0; i < values.size(); ++i) {
            const std::string where = path + ".values[" + std::to_string(i) + "]";
            const auto n = uint_field(values[i], where, "n", true);
            if (!table.emplace(n, rational_field(values[i], where, "f")).second)
                fail(where, "duplicate entry for n=" + std::to_string(n));
        }
        return WeightSpec::table(std::move(table));
    }
    fail(path + ".kind", "unknown weight kind '" + kind + "'");
}

}  // namespace

ordered_json to_json(const ProductSpec& spec)
{
    ordered_json j;
    j["shift"] = spec.shift;
    j["factors"] = ordered_json::array();
    for (const auto& f : spec.factors)
        j["factors"].push_back(ordered_json{{"set", set_to_json(f.set)}, {"weight", weight_to_json(f.weight)}});
    return j;
}

std::string dump_spec(const ProductSpec& spec) { return to_json(spec).dump(2) + "\n"; }

ProductSpec spec_from_json(const json& j)
{
    if (!j.is_object())
        fail("spec", "expected a JSON object");
    ProductSpec spec;
    spec.shift = j.contains("shift") ? uint_field(j, "spec", "shift", false) : 0;
    const auto& factors = field(j, "spec", "factors");
    if (!factors.is_array())
        fail("factors", "expected an array");
    if (factors.empty())
        fail("factors", "product spec needs at least one factor");
    for (std::size_t i = 0; i < factors.size(); ++i) {
        const std::string path = "factors[" + std::to_string(i) + "]";
        spec.factors.push_back(
            {set_from_json(field(factors[i], path, "set"), path + ".set"),
             weight_from_json(field(factors[i], path, "weight"), path + ".weight")});
    }
    return spec;
}

ProductSpec parse_spec(const std::string& text)
{
    json j;
    try {
        j = json::parse(text);
    } catch (const json::parse_error& e) {
        const std::size_t upto = std::min<std::size_t>(e.byte == 0 ? 0 : e.byte - 1, text.size());
        const auto line = 1 + std::count(text.begin(), text.begin() + static_cast<long>(upto), '\n');
        const auto last_nl = text.rfind('\n', upto == 0 ? 0 : upto - 1);
        const auto column = last_nl == std::string::npos || upto == 0 ? upto + 1 : upto - last_nl;
        throw SpecError("line " + std::to_string(line) + ", column " + std::to_string(column) +
                        ": malformed JSON (" + e.what() + ")");
    }
    return spec_from_json(j);
}

}  // namespace divrec
