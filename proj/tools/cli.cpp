#include "cli.hpp"

#include "divrec/builtin_specs.hpp"
#include "divrec/catalog.hpp"
#include "divrec/divisors.hpp"
#include "divrec/recurrence.hpp"
#include "divrec/sequences.hpp"
#include "divrec/spec_json.hpp"

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include <fstream>
#include <regex>
#include <sstream>

namespace divrec::cli {

namespace {

using nlohmann::ordered_json;

struct Row {
    std::uint64_t n;
    std::string value;
};

// A parsed `compute` selector; validated before any computation happens.
struct SequenceRequest {
    std::string kind;
    std::uint64_t first = 0;
    std::uint64_t second = 0;
};

class UsageError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

SequenceRequest parse_sequence(const std::string& name)
{
    static const std::regex pattern(R"(^([A-Za-z_][A-Za-z_0-9]*)(?:\(([0-9]{1,9})(?:,([0-9]{1,9}))?\))?$)");
    std::smatch m;
    if (!std::regex_match(name, m, pattern))
        throw UsageError("unknown sequence '" + name + "'");
    SequenceRequest req{m[1].str()};
    const bool one = m[2].matched && !m[3].matched;
    const bool two = m[3].matched;
    if (one || two)
        req.first = std::stoull(m[2].str());
    if (two)
        req.second = std::stoull(m[3].str());

    if (req.kind == "sigma_rm") {
        if (!two)
            throw UsageError("sigma_rm needs two parameters: sigma_rm(r,m)");
        if (req.second == 0)
            throw UsageError("sigma_rm: modulus must be positive");
        if (req.first >= req.second)
            throw UsageError("sigma_rm: non-canonical residue (need 0 <= r < m)");
        return req;
    }
    if (req.kind == "q_regular" || req.kind == "delta") {
        if (!one)
            throw UsageError(req.kind + " needs one parameter, e.g. " + req.kind + "(3)");
        if (req.kind == "q_regular" && req.first < 2)
            throw UsageError("q_regular needs p >= 2");
        if (req.kind == "delta" && req.first < 1)
            throw UsageError("delta needs m >= 1");
        return req;
    }
    static const std::vector<std::string> plain{"sigma", "sigma_odd", "sigma_even", "s",  "t",
                                                "T",     "a",         "partition",  "rr1", "rr2"};
    if (one || two || std::find(plain.begin(), plain.end(), req.kind) == plain.end())
        throw UsageError("unknown sequence '" + name + "'");
    return req;
}

std::vector<Row> integer_rows(std::span<const Integer> terms, std::uint64_t from = 0)
{
    std::vector<Row> rows;
    for (std::uint64_t n = from; n < terms.size(); ++n)
        rows.push_back({n, to_string(terms[n])});
    return rows;
}

std::vector<Row> table_rows(const DivisorTable& table)
{
    std::vector<Row> rows;
    for (std::uint64_t n = 1; n < table.size(); ++n)
        rows.push_back({n, std::to_string(table[n])});
    return rows;
}

std::vector<Row> compute_rows(const SequenceRequest& req, std::size_t order)
{
    const auto& k = req.kind;
    if (k == "sigma")
        return table_rows(sigma_table(order));
    if (k == "sigma_odd")
        return table_rows(sigma_rm_table(order, 1, 2));
    if (k == "sigma_even")
        return table_rows(sigma_rm_table(order, 0, 2));
    if (k == "sigma_rm")
        return table_rows(sigma_rm_table(order, req.first, req.second));

    std::vector<Row> rows;
    if (k == "s" || k == "t" || k == "T" || k == "a") {
        for (std::uint64_t n = 0; n <= order; ++n) {
            std::string v;
            if (k == "s")
                v = std::to_string(square_indicator(n));
            else if (k == "t")
                v = std::to_string(triangular_indicator(n));
            else if (k == "T")
                v = std::to_string(triangular(n));
            else
                v = to_string(a_direct(n));
            rows.push_back({n, std::move(v)});
        }
        return rows;
    }
    if (k == "partition")
        return integer_rows(partition_prefix(order).terms);
    if (k == "q_regular")
        return integer_rows(q_regular_prefix(req.first, order).terms);
    if (k == "rr1" || k == "rr2")
        return integer_rows(rr_sum_side(k == "rr1" ? 1 : 2, order).terms);
    return integer_rows(delta_m_prefix(req.first, order).terms);
}

void write_rows(std::ostream& os, Format format, ordered_json header, const std::vector<Row>& rows)
{
    if (format == Format::csv) {
        os << "n,value\n";
        for (const auto& r : rows)
            os << r.n << ',' << r.value << '\n';
        return;
    }
    header["rows"] = ordered_json::array();
    for (const auto& r : rows)
        header["rows"].push_back(ordered_json{{"n", r.n}, {"value", r.value}});
    os << header.dump(2) << '\n';
}

std::vector<Row> series_rows(const TruncatedSeries& s)
{
    std::vector<Row> rows;
    for (std::uint64_t n = 0; n <= s.order(); ++n)
        rows.push_back({n, to_string(s[n])});
    return rows;
}

ProductSpec load_spec(const RunConfig& cfg)
{
    if (cfg.spec_path.empty() == cfg.builtin_spec.empty())
        throw UsageError("expand needs exactly one of --spec PATH or --builtin NAME");
    if (!cfg.builtin_spec.empty()) {
        try {
            return specs::by_name(cfg.builtin_spec);
        } catch (const std::invalid_argument& e) {
            throw UsageError(e.what());
        }
    }
    std::ifstream in(cfg.spec_path);
    if (!in)
        throw UsageError("cannot open spec file '" + cfg.spec_path + "'");
    std::stringstream buffer;
    buffer << in.rdbuf();
    try {
        return parse_spec(buffer.str());
    } catch (const SpecError& e) {
        throw UsageError(cfg.spec_path + ": " + e.what());
    }
}

int run_compute(const RunConfig& cfg, std::ostream& os)
{
    const auto req = parse_sequence(cfg.sequence);
    const auto rows = compute_rows(req, cfg.order);
    write_rows(os, cfg.format, ordered_json{{"sequence", cfg.sequence}, {"N", cfg.order}}, rows);
    return exit_ok;
}

int run_expand(const RunConfig& cfg, std::ostream& os, std::ostream& err)
{
    const auto spec = load_spec(cfg);
    TruncatedSeries coeffs(0);
    std::optional<TruncatedSeries> other;
    try {
        switch (cfg.algorithm) {
        case Algorithm::recurrence:
            coeffs = coeffs_via_recurrence(spec, cfg.order);
            break;
        case Algorithm::expansion:
            coeffs = coeffs_via_expansion(spec, cfg.order);
            break;
        case Algorithm::both:
            other = coeffs_via_expansion(spec, cfg.order);
            coeffs = coeffs_via_recurrence(spec, cfg.order);
            break;
        }
    } catch (const std::domain_error& e) {
        throw UsageError(e.what());
    }

    static const char* names[] = {"recurrence", "expansion", "both"};
    ordered_json header{{"N", cfg.order}, {"algorithm", names[static_cast<int>(cfg.algorithm)]}};
    bool agree = true;
    if (other) {
        const long at = first_mismatch(coeffs, *other);
        agree = at < 0;
        header["agree"] = agree;
        if (!agree) {
            const auto i = static_cast<std::size_t>(at);
            header["first_mismatch"] = ordered_json{
                {"n", i}, {"recurrence", to_string(coeffs[i])}, {"expansion", to_string((*other)[i])}};
        } else {
            header["first_mismatch"] = nullptr;
        }
        if (cfg.format == Format::csv)
            err << "agree=" << (agree ? "true" : "false") << '\n';
    }
    write_rows(os, cfg.format, std::move(header), series_rows(coeffs));
    return agree ? exit_ok : exit_identity_failure;
}

int run_verify(const RunConfig& cfg, std::ostream& os, std::ostream& err, bool to_file)
{
    std::vector<IdentityReport> reports;
    try {
        reports = catalog::run_identities(cfg.identities, cfg.order);
    } catch (const std::invalid_argument& e) {
        throw UsageError(e.what());
    }

    bool all_passed = true;
    if (cfg.format == Format::csv) {
        os << "identity,N,passed,n,lhs,rhs\n";
        for (const auto& r : reports) {
            os << '"' << r.identity << "\"," << r.order << ',' << (r.passed() ? "true" : "false") << ',';
            if (r.first_failure)
                os << r.first_failure->n << ',' << r.first_failure->lhs << ',' << r.first_failure->rhs;
            else
                os << ",,";
            os << '\n';
        }
    } else {
        ordered_json array = ordered_json::array();
        for (const auto& r : reports)
            array.push_back(to_json(r));
        os << array.dump(2) << '\n';
    }
    for (const auto& r : reports) {
        all_passed = all_passed && r.passed();
        if (to_file) {
            err << (r.passed() ? "PASS " : "FAIL ") << r.identity;
            if (r.first_failure)
                err << "  n=" << r.first_failure->n << " lhs=" << r.first_failure->lhs
                    << " rhs=" << r.first_failure->rhs;
            err << '\n';
        }
    }
    return all_passed ? exit_ok : exit_identity_failure;
}

int run_catalog(const RunConfig& cfg, std::ostream& os)
{
    const auto ids = catalog::all_identity_ids();
    const auto negative = catalog::negative_identity_ids();
    const auto spec_names = specs::builtin_names();
    const auto seqs = sequence_names();
    if (cfg.format == Format::csv) {
        os << "kind,name\n";
        for (const auto& i : ids)
            os << "identity,\"" << i << "\"\n";
        for (const auto& i : negative)
            os << "negative,\"" << i << "\"\n";
        for (const auto& s : spec_names)
            os << "spec,\"" << s << "\"\n";
        for (const auto& s : seqs)
            os << "sequence,\"" << s << "\"\n";
        return exit_ok;
    }
    ordered_json j{{"identities", ids}, {"negative", negative}, {"specs", spec_names}, {"sequences", seqs}};
    os << j.dump(2) << '\n';
    return exit_ok;
}

}  // namespace

std::vector<std::string> sequence_names()
{
    return {"sigma", "sigma_odd", "sigma_even",   "sigma_rm(r,m)", "s",   "t",
            "T",     "a",         "partition",    "q_regular(p)",  "rr1", "rr2",
            "delta(m)"};
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err)
{
    RunConfig cfg;
    std::string format = "json";
    std::string algo = "recurrence";

    CLI::App app{"Divisor-sum recurrences for infinite products: compute, expand, verify"};
    app.name(args.empty() ? "divrec" : args.front());
    app.require_subcommand(1);
    app.add_option("--order,-N", cfg.order, "Truncation order N")->check(CLI::NonNegativeNumber);
    app.add_option("--format", format, "Output format")->check(CLI::IsMember({"json", "csv"}));
    app.add_option("--out", cfg.out_path, "Write output to PATH instead of stdout");

    auto* compute = app.add_subcommand("compute", "Print a sequence for n = 0..N (or 1..N)")->fallthrough();
    compute->add_option("name", cfg.sequence, "Sequence name")->required();

    auto* expand = app.add_subcommand("expand", "Coefficients of a product spec")->fallthrough();
    expand->add_option("--spec", cfg.spec_path, "ProductSpec JSON file");
    expand->add_option("--builtin", cfg.builtin_spec, "Built-in spec name");
    expand->add_option("--algo", algo, "recurrence | expansion | both")
        ->check(CLI::IsMember({"recurrence", "expansion", "both"}));

    auto* verify = app.add_subcommand("verify", "Run identity checks; exit 0 iff all pass")->fallthrough();
    verify->add_option("ids", cfg.identities, "Identity ids, or 'all'")->required();

    auto* list = app.add_subcommand("catalog", "List identities, built-in specs and sequences")->fallthrough();

    // CLI11 consumes a reversed argument vector without the program name.
    std::vector<std::string> reversed;
    if (args.size() > 1)
        reversed.assign(args.rbegin(), args.rend() - 1);
    try {
        app.parse(reversed);
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return exit_ok;
    } catch (const CLI::ParseError& e) {
        err << app.get_name() << ": " << e.what() << '\n';
        return exit_usage;
    }

    cfg.format = format == "csv" ? Format::csv : Format::json;
    cfg.algorithm = algo == "both" ? Algorithm::both
                    : algo == "expansion" ? Algorithm::expansion
                                          : Algorithm::recurrence;
    if (compute->parsed())
        cfg.command = Command::compute;
    else if (expand->parsed())
        cfg.command = Command::expand;
    else if (verify->parsed())
        cfg.command = Command::verify;
    else if (list->parsed())
        cfg.command = Command::catalog;

    try {
        // Selectors are checked before opening the output or computing anything.
        if (cfg.command == Command::compute)
            parse_sequence(cfg.sequence);
        if (cfg.command == Command::verify) {
            for (const auto& id : cfg.identities)
                if (id != "all")
                    catalog::validate_identity(id);
        }

        std::ofstream file;
        if (!cfg.out_path.empty()) {
            file.open(cfg.out_path);
            if (!file)
                throw UsageError("cannot open output file '" + cfg.out_path + "'");
        }
        std::ostream& os = cfg.out_path.empty() ? out : file;

        switch (cfg.command) {
        case Command::compute:
            return run_compute(cfg, os);
        case Command::expand:
            return run_expand(cfg, os, err);
        case Command::verify:
            return run_verify(cfg, os, err, !cfg.out_path.empty());
        case Command::catalog:
            return run_catalog(cfg, os);
        }
    } catch (const UsageError& e) {
        err << app.get_name() << ": " << e.what() << '\n';
        return exit_usage;
    } catch (const std::invalid_argument& e) {
        err << app.get_name() << ": " << e.what() << '\n';
        return exit_usage;
    }
    return exit_usage;
}

}  // namespace divrec::cli
