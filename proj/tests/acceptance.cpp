// Acceptance battery: one PASS/FAIL line per criterion, exit status 0 iff all
// pass. Every check is exact; the time budget of each criterion is part of it.

#include <chrono>
#include <cstdio>
#include <functional>
#include <sstream>
#include <string>
#include <vector>

#include "lamfam/cli.hpp"
#include "lamfam/closable.hpp"
#include "lamfam/family.hpp"
#include "lamfam/gen.hpp"
#include "lamfam/lambda_open.hpp"
#include "lamfam/props.hpp"
#include "lamfam/serialize.hpp"
#include "lamfam/ucs.hpp"
#include "oracles.hpp"

using namespace lamfam;
using Clock = std::chrono::steady_clock;

namespace {

struct Outcome {
  bool ok = true;
  std::string detail;

  void require(bool cond, std::string const& what) {
    if (cond) return;
    if (ok) detail = what;
    ok = false;
  }
};

std::vector<AuditReport> audits;

void run_audits() {
  audits.push_back(audit_family(closable_family(), 12));
  audits.push_back(audit_family(closable_counter_family(), 12));
  audits.push_back(audit_family(ucs_family(), 12));
  for (std::uint64_t m = 0; m <= 2; ++m) audits.push_back(audit_family(open_family().at(m), 8));
}

void suite_passes(Outcome& o, SuiteReport const& report) {
  std::ostringstream os;
  os << report.name << " (" << report.cases << " cases)";
  o.detail = os.str();
  if (!report.pass) o.require(false, to_text(report));
}

Outcome roundtrips() {
  Outcome o;
  Count checked = 0;
  for (auto const& a : audits) {
    o.require(a.default_ok, a.family + ": default is not a member");
    for (auto const& row : a.sizes) {
      o.require(row.roundtrips_ok(), a.family + " n=" + std::to_string(row.n) + ": roundtrip failed");
      checked += row.rec_roundtrips_passed + row.structured_roundtrips_passed;
    }
  }
  if (o.ok) o.detail = std::to_string(checked) + " roundtrips over " + std::to_string(audits.size()) + " families";
  return o;
}

Outcome counts() {
  Outcome o;
  for (auto const& a : audits) {
    for (auto const& row : a.sizes) {
      o.require(row.counts_equal(), a.family + " n=" + std::to_string(row.n) + ": " +
                                        std::to_string(row.base_count) + " vs " +
                                        std::to_string(row.structured_count));
    }
  }
  Count const expected[] = {1, 1, 2, 4, 9, 21, 51, 127};
  for (std::int64_t n = 1; n <= 8; ++n) {
    auto const enumerated = enumerate_motzkin(n).size();
    o.require(enumerated == expected[n - 1] && count_motzkin(n) == expected[n - 1] &&
                  oracle::motzkin_number(static_cast<unsigned>(n - 1)) == expected[n - 1],
              "motzkin total at n=" + std::to_string(n));
  }
  if (o.ok) o.detail = "per-size counts agree; motzkin 1,1,2,4,9,21,51,127";
  return o;
}

Outcome from_suite(SuiteReport const& report) {
  Outcome o;
  suite_passes(o, report);
  return o;
}

Outcome generators() {
  Outcome o;
  suite_passes(o, suite_generators(100000, 42, 10));
  // Reproducibility: the whole report serializes identically on a second run
  // with the same seed.
  auto const a = to_json(suite_generators(2000, 7, 10)).dump();
  auto const b = to_json(suite_generators(2000, 7, 10)).dump();
  o.require(a == b, "generator report differs between identical runs");
  return o;
}

template <typename Print, typename Parse, typename Gen>
void parse_print(Outcome& o, std::string const& family, Gen gen, Print print, Parse parse) {
  Rng rng(2024);
  for (int i = 0; i < 10000; ++i) {
    auto const x = gen(rng);
    auto const text = print(x);
    bool ok = false;
    try {
      ok = print(parse(text)) == text && parse(text) == x;
    } catch (Error const&) {
    }
    o.require(ok, family + ": " + text);
  }
}

int cli_exit(std::vector<std::string> args) {
  args.insert(args.begin(), "lamfam");
  std::vector<char const*> argv;
  for (auto const& a : args) argv.push_back(a.c_str());
  std::istringstream in;
  std::ostringstream out, err;
  return cli::main(static_cast<int>(argv.size()), argv.data(), in, out, err);
}

Outcome serialization() {
  Outcome o;
  auto str = [](auto const& x) { return to_string(x); };
  parse_print(o, "motzkin", [](Rng& r) { return gen_motzkin(10, r); }, str, parse_motzkin);
  parse_print(o, "closable", [](Rng& r) { return gen_closable(10, r); }, str, parse_closable);
  parse_print(o, "closed-above", [](Rng& r) { return gen_closed_above(10, r); }, str, parse_closed_above);
  parse_print(o, "ucs", [](Rng& r) { return gen_ucs(10, r); }, str, parse_ucs);
  parse_print(o, "lmt", [](Rng& r) { return gen_lmt(10, r); }, str, parse_lmt);
  for (std::uint64_t m = 0; m <= 2; ++m) {
    parse_print(o, "open", [m](Rng& r) { return gen_open_term(m, 10, r); }, str, parse_open_term);
  }
  parse_print(o, "lmt json", [](Rng& r) { return gen_lmt(10, r); }, [](Lmt const& t) { return to_json(t).dump(); },
              [](std::string const& s) { return lmt_from_json(nlohmann::json::parse(s)); });

  o.require(cli_exit({"count", "--family", "motzkin", "--size", "5"}) == cli::kExitOk, "count exit");
  o.require(cli_exit({"analyze", "--family", "lmt", "--term", "lam(app(var(1),lam(var(1))))"}) == cli::kExitOk,
            "analyze exit");
  o.require(cli_exit({"convert", "--family", "closable", "--repr", "base", "--term", "a(l(v),v)"}) ==
                cli::kExitUsage,
            "NotClosable exit");
  o.require(cli_exit({"convert", "--family", "closable", "--term", "a(v,x)"}) == cli::kExitUsage, "parse error exit");
  o.require(cli_exit({"count", "--family", "motzkin"}) == cli::kExitUsage, "missing flag exit");
  o.require(cli_exit({"check", "--suite", "prop2", "-n", "6"}) == cli::kExitOk, "passing check exit");
  {
    SuiteReport failing{"failing"};
    failing.pass = false;
    failing.failure_count = 1;
    std::ostringstream out, err;
    o.require(cli::run_check({}, {{"failing", [=] { return failing; }}}, out, err) == cli::kExitFailure,
              "failing check exit");
  }
  if (o.ok) o.detail = "10^4 samples per family; exit codes 0/1/2";
  return o;
}

struct Criterion {
  int number;
  std::string title;
  double budget_seconds;
  std::function<Outcome()> run;
};

}  // namespace

int main() {
  auto const battery_start = Clock::now();
  std::vector<Criterion> const criteria = {
      {1, "roundtrip laws", 30,
       [] {
         run_audits();
         return roundtrips();
       }},
      {2, "count-bijection audit", 20, counts},
      {3, "predicate equivalences and monotonicity", 10, [] { return from_suite(suite_equivalences(12)); }},
      {4, "size111 = size012 + 1", 30, [] { return from_suite(suite_prop1(12)); }},
      {5, "closed labeling exists iff closable", 20, [] { return from_suite(suite_prop2(12)); }},
      {6, "unique labeling iff uniquely closable", 30, [] { return from_suite(suite_prop4(12, 3)); }},
      {7, "minimal openness", 30, [] { return from_suite(suite_openness(8, 2)); }},
      {8, "generator soundness", 30, generators},
      {9, "serialization and CLI exit codes", 30, serialization},
  };

  bool all = true;
  for (auto const& c : criteria) {
    auto const start = Clock::now();
    Outcome o;
    try {
      o = c.run();
    } catch (std::exception const& e) {
      o.ok = false;
      o.detail = std::string("exception: ") + e.what();
    }
    double const seconds = std::chrono::duration<double>(Clock::now() - start).count();
    bool const in_time = seconds < c.budget_seconds;
    bool const pass = o.ok && in_time;
    all = all && pass;
    std::printf("criterion %d %s: %s  [%s; %.2fs of %.0fs%s]\n", c.number, c.title.c_str(), pass ? "PASS" : "FAIL",
                o.detail.c_str(), seconds, c.budget_seconds, in_time ? "" : ", over budget");
  }
  double const total = std::chrono::duration<double>(Clock::now() - battery_start).count();
  bool const battery_in_time = total < 120;
  std::printf("battery: %s  [%.2fs of 120s]\n", all && battery_in_time ? "PASS" : "FAIL", total);
  std::fflush(stdout);
  return all && battery_in_time ? 0 : 1;
}
