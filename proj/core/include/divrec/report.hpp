#pragma once

#include <nlohmann/json.hpp>

#include <cstdint>
#include <optional>
#include <string>

namespace divrec {

struct Failure {
    std::uint64_t n;
    std::string lhs;
    std::string rhs;

    friend bool operator==(const Failure&, const Failure&) = default;
};

/// Outcome of checking one identity up to a given order. passed is true
/// exactly when first_failure is empty.
struct IdentityReport {
    std::string identity;
    std::uint64_t order = 0;
    std::optional<Failure> first_failure;

    bool passed() const noexcept { return !first_failure.has_value(); }
};

/// {"identity": id, "N": n, "passed": bool,
///  "first_failure": {"n": ..., "lhs": "...", "rhs": "..."} | null}
nlohmann::ordered_json to_json(const IdentityReport& report);
IdentityReport report_from_json(const nlohmann::json& j);

}  // namespace divrec
