#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "iet3/invariance.hpp"

namespace iet3::cli {

enum class Command { decide, synthesize, generate, verify, complexity, capset, sweep };
enum class Format { text, json };

/// Exit statuses of run().
constexpr int kExitOk = 0;
constexpr int kExitNegative = 1;  // NotInvariant / Degenerate / failed verification
constexpr int kExitInput = 2;     // unparsable or invalid input
constexpr int kExitInternal = 3;  // a synthesized witness failed its own checks

struct RunConfig {
    Command command = Command::decide;

    std::string field = "1,2,-1";  // A,B,C
    std::string branch = "plus";
    std::optional<std::string> eps, l, c;
    std::optional<std::string> alpha1, alpha2, alpha3, x0;
    std::optional<std::string> eta;  // capset only

    std::int64_t from = 0, to = 100;  // generate
    std::int64_t radius = 10'000;     // fixed-point / complexity radius
    int n_max = 30;
    std::int64_t count = 100;         // capset points
    std::int64_t step_budget = 1'000'000;
    std::int64_t block_window = 1'000;
    int complexity_check = 0;         // synthesize: also check C(n) = 2n+1 up to this n
    unsigned threads = 0;             // sweep; 0 = hardware concurrency

    Format format = Format::text;
    std::string input;                // verify / sweep ("-" = stdin)
    std::string output;               // empty = stdout
};

/// Help requested or bad syntax: what to print and the status to exit with.
struct UsageExit {
    int status;
    std::string text;
};

/// Parses argv (subcommand first); throws UsageExit. The step budget defaults
/// to IET3_STEP_BUDGET when set.
RunConfig parse_args(int argc, const char* const* argv);

/// Runs one command and returns its exit status.
int run(const RunConfig& cfg, std::ostream& out, std::ostream& err);

/// parse_args + run, with parse errors reported on `err` (exit 2).
int main_entry(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

/// Builds the IetSpec named by the config's field and parameter options.
IetSpec spec_from(const RunConfig& cfg);

/// Structured report (stable keys) as a one-line JSON document.
std::string report_json(const IetSpec& spec, const DecisionReport& report);

/// Re-checks a report produced by decide/synthesize; fills `problems`.
bool verify_report(const std::string& json_text, std::int64_t radius, std::vector<std::string>& problems);

}  // namespace iet3::cli
