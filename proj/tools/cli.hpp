#pragma once

#include <cstddef>
#include <iosfwd>
#include <string>
#include <vector>

namespace divrec::cli {

enum class Command { compute, expand, verify, catalog };
enum class Format { json, csv };
enum class Algorithm { recurrence, expansion, both };

struct RunConfig {
    Command command = Command::catalog;
    std::size_t order = 100;
    Format format = Format::json;
    std::string out_path;  // empty: stdout
    std::string sequence;
    std::vector<std::string> identities;
    std::string spec_path;
    std::string builtin_spec;
    Algorithm algorithm = Algorithm::recurrence;
};

inline constexpr int exit_ok = 0;
inline constexpr int exit_identity_failure = 1;
inline constexpr int exit_usage = 2;

/// Sequence names accepted by `compute`, parameterised ones in template form.
std::vector<std::string> sequence_names();

/// Full command line (args[0] is the program name). Output goes to `out`
/// unless --out is given; diagnostics go to `err`. Returns the exit code.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace divrec::cli
