#include "divrec/report.hpp"

namespace divrec {

nlohmann::ordered_json to_json(const IdentityReport& report)
{
    nlohmann::ordered_json j;
    j["identity"] = report.identity;
    j["N"] = report.order;
    j["passed"] = report.passed();
    if (report.first_failure) {
        nlohmann::ordered_json f;
        f["n"] = report.first_failure->n;
        f["lhs"] = report.first_failure->lhs;
        f["rhs"] = report.first_failure->rhs;
        j["first_failure"] = std::move(f);
    } else {
        j["first_failure"] = nullptr;
    }
    return j;
}

IdentityReport report_from_json(const nlohmann::json& j)
{
    IdentityReport report;
    report.identity = j.at("identity").get<std::string>();
    report.order = j.at("N").get<std::uint64_t>();
    const auto& f = j.at("first_failure");
    if (!f.is_null())
        report.first_failure = Failure{f.at("n").get<std::uint64_t>(), f.at("lhs").get<std::string>(),
                                       f.at("rhs").get<std::string>()};
    if (j.at("passed").get<bool>() != report.passed())
        throw std::invalid_argument("report 'passed' disagrees with 'first_failure'");
    return report;
}

}  // namespace divrec
