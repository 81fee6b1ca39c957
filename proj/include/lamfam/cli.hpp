#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "lamfam/props.hpp"

namespace lamfam::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitFailure = 1;  // a property suite failed
inline constexpr int kExitUsage = 2;    // bad flags, unparsable or out-of-family input

/// Environment variable consulted when `sample` gets no --seed.
inline constexpr char const* kSeedEnv = "LAMFAM_SEED";

enum class Subcommand { Enumerate, Count, Sample, Convert, Analyze, Check };

struct Command {
  Subcommand subcommand = Subcommand::Check;
  std::string family = "motzkin";  // motzkin | closable | ucs | lmt | open
  std::string repr = "base";       // base | structured
  std::optional<std::int64_t> size;
  std::optional<std::uint64_t> openness;
  std::optional<std::uint64_t> seed;
  unsigned fuel = 10;
  std::uint64_t filter_max = 1000;
  std::uint64_t samples = 10;
  std::string strategy = "derived";  // derived | filtered | structural | converted
  std::string format = "text";       // text | json
  std::optional<std::string> term;   // otherwise one term per line on stdin
  std::vector<std::string> suites;   // check: empty means all
  std::string output;                // empty means stdout
};

/// Executes an already validated command. Diagnostics go to err.
int run(Command const& command, std::istream& in, std::ostream& out, std::ostream& err);

/// `check` over the given suites instead of the built-in battery.
int run_check(Command command, std::vector<SuiteSpec> const& suites, std::ostream& out, std::ostream& err);

/// Parses argv (argv[0] is the program name) and runs it.
int main(int argc, char const* const* argv, std::istream& in, std::ostream& out, std::ostream& err);

}  // namespace lamfam::cli
