#pragma once

// Executable property suites: each one checks a family of statements
// exhaustively over every term up to a size bound and returns a report with
// the first counterexamples found.

#include <chrono>
#include <cstdint>
#include <functional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "lamfam/count.hpp"

namespace lamfam {

struct Failure {
  std::string property;
  std::string counterexample;  // canonical text, parseable
  std::string context;         // parameters of the case, e.g. "m=2"; may be empty
};

struct SuiteReport {
  static constexpr std::size_t kMaxRecordedFailures = 32;

  std::string name;
  std::vector<std::pair<std::string, std::int64_t>> parameters;
  Count cases = 0;
  Count failure_count = 0;
  std::vector<Failure> failures;  // capped at kMaxRecordedFailures
  bool pass = true;
  std::chrono::milliseconds duration{0};
};

SuiteReport suite_prop1(std::int64_t max_size);
SuiteReport suite_equivalences(std::int64_t max_size);
SuiteReport suite_prop2(std::int64_t max_size);
SuiteReport suite_prop4(std::int64_t max_size, std::uint64_t max_m);
SuiteReport suite_openness(std::int64_t max_size, std::uint64_t max_m);

/// audit_family over closable, closable-counter and ucs up to max_size, and
/// over open terms at every m <= max_m up to max_open_size.
SuiteReport suite_roundtrips(std::int64_t max_size, std::int64_t max_open_size, std::uint64_t max_m);

/// Soundness and determinism of the seeded generators.
SuiteReport suite_generators(std::uint64_t samples, std::uint64_t seed, unsigned fuel);

struct SuiteSpec {
  std::string name;
  std::function<SuiteReport()> run;
};

/// Suites at their default bounds, in a fixed order.
std::vector<SuiteSpec> default_suites();

std::string to_text(SuiteReport const& report);

}  // namespace lamfam
