#include "lamfam/cli.hpp"

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "doctest.h"
#include "json.hpp"
#include "lamfam/closable.hpp"
#include "lamfam/lambda_open.hpp"
#include "lamfam/ucs.hpp"

using namespace lamfam;

namespace {

struct Result {
  int code;
  std::string out;
  std::string err;
};

Result lamfam_cli(std::vector<std::string> args, std::string const& input = "") {
  args.insert(args.begin(), "lamfam");
  std::vector<char const*> argv;
  for (auto const& a : args) argv.push_back(a.c_str());
  std::istringstream in(input);
  std::ostringstream out, err;
  int const code = cli::main(static_cast<int>(argv.size()), argv.data(), in, out, err);
  return {code, out.str(), err.str()};
}

std::vector<std::string> lines(std::string const& text) {
  std::vector<std::string> out;
  std::istringstream is(text);
  for (std::string line; std::getline(is, line);) out.push_back(line);
  return out;
}

bool contains(std::string const& haystack, std::string const& needle) {
  return haystack.find(needle) != std::string::npos;
}

}  // namespace

TEST_CASE("analyze an open term") {
  auto const r = lamfam_cli({"analyze", "--family", "lmt", "--term", "lam(app(var(1),lam(var(1))))"});
  CHECK(r.code == cli::kExitOk);
  CHECK(contains(r.out, "minimal_openness: 1\n"));
  CHECK(contains(r.out, "skeleton: l(a(v,l(v)))\n"));

  auto const j = nlohmann::json::parse(
      lamfam_cli({"analyze", "--family", "lmt", "--format", "json", "--term", "lam(app(var(1),lam(var(1))))"}).out);
  REQUIRE(j.size() == 1);
  CHECK(j[0]["term"] == "lam(app(var(1),lam(var(1))))");
  CHECK(j[0]["minimal_openness"] == 1);
  CHECK(j[0]["skeleton"] == "l(a(v,l(v)))");
}

TEST_CASE("analyze a skeleton") {
  auto const j = nlohmann::json::parse(
      lamfam_cli({"analyze", "--family", "motzkin", "--format", "json", "--term", "l(a(l(v),v))"}).out);
  CHECK(j[0]["count_labelings"] == 2);
  CHECK(j[0]["is_ucs"] == false);
  CHECK(j[0]["labelings"] == nlohmann::json::array({"lam(app(lam(var(0)),var(0)))", "lam(app(lam(var(1)),var(0)))"}));

  auto const u = nlohmann::json::parse(
      lamfam_cli({"analyze", "--family", "motzkin", "--format", "json", "--term", "l(a(v,v))"}).out);
  CHECK(u[0]["count_labelings"] == 1);
  CHECK(u[0]["is_ucs"] == true);
}

TEST_CASE("count and enumerate") {
  auto const r = lamfam_cli({"count", "--family", "motzkin", "--size", "5"});
  CHECK(r.code == cli::kExitOk);
  CHECK(r.out == "9\n");

  CHECK(lamfam_cli({"count", "--family", "closable", "--size", "5"}).out == "5\n");
  CHECK(lamfam_cli({"count", "--family", "closable", "--repr", "structured", "--size", "5"}).out == "5\n");
  CHECK(lamfam_cli({"count", "--family", "open", "-m", "0", "--size", "4"}).out == "4\n");

  CHECK(lamfam_cli({"enumerate", "--family", "closable", "--repr", "structured", "--size", "4"}).out ==
        "cl(l(l(v)))\ncl(a(v,v))\n");
  CHECK(lamfam_cli({"enumerate", "--family", "open", "-m", "0", "--size", "3"}).out ==
        "lam(lam(var(0)))\nlam(lam(var(1)))\n");
  CHECK(lamfam_cli({"enumerate", "--family", "open", "--repr", "structured", "-m", "0", "--size", "2"}).out ==
        "open(0,lam(var(0)))\n");

  auto const j = nlohmann::json::parse(lamfam_cli({"enumerate", "--family", "ucs", "--size", "4", "--format", "json"}).out);
  CHECK(j == nlohmann::json::parse(R"x([{"term":"l(a(v,v))"}])x"));
}

TEST_CASE("convert") {
  CHECK(lamfam_cli({"convert", "--family", "closable", "--term", "l(a(v,l(v)))"}).out == "cl(a(v,l(v)))\n");
  CHECK(lamfam_cli({"convert", "--family", "closable", "--repr", "structured", "--term", "ca(cl(v),cl(v))"}).out ==
        "a(l(v),l(v))\n");
  CHECK(lamfam_cli({"convert", "--family", "ucs", "--term", "l(a(v,v))"}).out == "L(B(V,V))\n");
  CHECK(lamfam_cli({"convert", "--family", "open", "-m", "1", "--term", "app(var(0),lam(var(1)))"}).out ==
        "open(1,app(var(0),lam(var(1))))\n");
  CHECK(lamfam_cli({"convert", "--family", "open", "--repr", "structured", "-m", "1", "--term",
                    "open(1,app(var(0),lam(var(1))))"})
            .out == "app(var(0),lam(var(1)))\n");

  SUBCASE("terms from stdin") {
    auto const r = lamfam_cli({"convert", "--family", "closable"}, "l(v)\n\na(l(v),l(v))\n");
    CHECK(r.code == cli::kExitOk);
    CHECK(r.out == "cl(v)\nca(cl(v),cl(v))\n");
  }

  SUBCASE("out-of-family input") {
    auto const r = lamfam_cli({"convert", "--family", "closable", "--repr", "base", "--term", "a(l(v),v)"});
    CHECK(r.code == cli::kExitUsage);
    CHECK(contains(r.err, "NotClosable"));
    CHECK(r.out.empty());

    auto const u = lamfam_cli({"convert", "--family", "ucs", "--term", "l(l(v))"});
    CHECK(u.code == cli::kExitUsage);
    CHECK(contains(u.err, "NotUcs"));

    auto const o = lamfam_cli({"convert", "--family", "open", "-m", "0", "--term", "lam(var(1))"});
    CHECK(o.code == cli::kExitUsage);
    CHECK(contains(o.err, "NotOpen"));
  }
}

TEST_CASE("usage errors exit 2") {
  auto const parse = lamfam_cli({"convert", "--family", "closable", "--term", "a(v,x)"});
  CHECK(parse.code == cli::kExitUsage);
  CHECK(contains(parse.err, "  a(v,x)\n      ^\n"));

  CHECK(lamfam_cli({}).code == cli::kExitUsage);
  CHECK(lamfam_cli({"frobnicate"}).code == cli::kExitUsage);
  CHECK(lamfam_cli({"count", "--family", "motzkin"}).code == cli::kExitUsage);
  CHECK(lamfam_cli({"count", "--family", "nope", "--size", "3"}).code == cli::kExitUsage);
  CHECK(lamfam_cli({"count", "--family", "open", "--size", "3"}).code == cli::kExitUsage);
  CHECK(lamfam_cli({"count", "--family", "motzkin", "--size", "3", "-m", "1"}).code == cli::kExitUsage);
  CHECK(lamfam_cli({"count", "--family", "lmt", "--size", "3"}).code == cli::kExitUsage);
  CHECK(lamfam_cli({"count", "--family", "motzkin", "--size", "0"}).code == cli::kExitUsage);
  CHECK(lamfam_cli({"count", "--family", "motzkin", "--size", "500"}).code == cli::kExitUsage);
  CHECK(lamfam_cli({"convert", "--family", "motzkin", "--term", "v"}).code == cli::kExitUsage);
  CHECK(lamfam_cli({"convert", "--family", "closable"}, "").code == cli::kExitUsage);
  CHECK(lamfam_cli({"sample", "--family", "motzkin", "--seed", "1", "--strategy", "filtered"}).code ==
        cli::kExitUsage);
  CHECK(lamfam_cli({"check", "--suite", "nope"}).code == cli::kExitUsage);
  CHECK(lamfam_cli({"count", "--help"}).code == cli::kExitOk);
}

TEST_CASE("sample needs a seed") {
  ::unsetenv(cli::kSeedEnv);
  CHECK(lamfam_cli({"sample", "--family", "motzkin"}).code == cli::kExitUsage);

  ::setenv(cli::kSeedEnv, "17", 1);
  auto const from_env = lamfam_cli({"sample", "--family", "motzkin", "--samples", "50"});
  ::unsetenv(cli::kSeedEnv);
  CHECK(from_env.code == cli::kExitOk);
  CHECK(from_env.out == lamfam_cli({"sample", "--family", "motzkin", "--samples", "50", "--seed", "17"}).out);

  ::setenv(cli::kSeedEnv, "seventeen", 1);
  CHECK(lamfam_cli({"sample", "--family", "motzkin"}).code == cli::kExitUsage);
  ::unsetenv(cli::kSeedEnv);
}

TEST_CASE("seeded output is byte-identical") {
  std::vector<std::vector<std::string>> const commands = {
      {"sample", "--family", "closable", "--strategy", "filtered", "--format", "json"},
      {"sample", "--family", "ucs", "--strategy", "structural", "--repr", "structured"},
      {"sample", "--family", "open", "-m", "2", "--strategy", "converted"},
      {"sample", "--family", "lmt"},
  };
  for (auto cmd : commands) {
    for (auto const& extra : {"--seed", "5", "--samples", "300"}) cmd.push_back(extra);
    auto const a = lamfam_cli(cmd);
    auto const b = lamfam_cli(cmd);
    CHECK(a.code == cli::kExitOk);
    CHECK(a.out == b.out);
    CHECK_FALSE(a.out.empty());
  }
  CHECK(lamfam_cli({"sample", "--family", "lmt", "--seed", "5"}).out !=
        lamfam_cli({"sample", "--family", "lmt", "--seed", "6"}).out);

  auto const filtered = nlohmann::json::parse(
      lamfam_cli({"sample", "--family", "ucs", "--strategy", "filtered", "--seed", "3", "--format", "json",
                  "--filter-max", "0", "--samples", "2"})
          .out);
  REQUIRE(filtered.size() == 2);
  CHECK(filtered[0]["term"] == "l(v)");
  CHECK(filtered[0]["exhausted"] == true);
}

TEST_CASE("check") {
  auto const r = lamfam_cli({"check", "--suite", "prop2", "--suite", "prop4", "-n", "6", "-m", "1"});
  CHECK(r.code == cli::kExitOk);
  auto const out = lines(r.out);
  REQUIRE(out.size() == 2);
  CHECK(out[0].rfind("prop2: PASS", 0) == 0);
  CHECK(out[1].rfind("prop4: PASS", 0) == 0);
  CHECK(contains(r.err, "prop2: "));

  auto const j = lamfam_cli({"check", "--suite", "openness", "-n", "5", "-m", "1", "--format", "json"});
  CHECK(j.out == lamfam_cli({"check", "--suite", "openness", "-n", "5", "-m", "1", "--format", "json"}).out);
  CHECK(nlohmann::json::parse(j.out)[0]["pass"] == true);

  SUBCASE("a failing suite exits 1") {
    std::vector<SuiteSpec> const suites = {
        {"ok", [] { return SuiteReport{"ok"}; }},
        {"broken",
         [] {
           SuiteReport report{"broken"};
           report.cases = 1;
           report.failure_count = 1;
           report.failures.push_back({"always fails", "v", ""});
           report.pass = false;
           return report;
         }},
    };
    std::ostringstream o, e;
    CHECK(cli::run_check({}, suites, o, e) == cli::kExitFailure);
    CHECK(contains(o.str(), "broken: FAIL (1 cases)\n  always fails: v\n"));

    cli::Command only_ok;
    only_ok.suites = {"ok"};
    std::ostringstream o2, e2;
    CHECK(cli::run_check(only_ok, suites, o2, e2) == cli::kExitOk);
  }
}

TEST_CASE("output file") {
  auto const path = std::filesystem::temp_directory_path() / "lamfam_cli_test_out.txt";
  auto const r = lamfam_cli({"count", "--family", "motzkin", "--size", "6", "-o", path.string()});
  CHECK(r.code == cli::kExitOk);
  CHECK(r.out.empty());
  std::ifstream in(path);
  std::string text((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
  CHECK(text == "21\n");
  std::filesystem::remove(path);
}

TEST_CASE("printed samples parse back") {
  auto sample = [](std::vector<std::string> cmd) {
    for (auto const& extra : {"--seed", "2024", "--samples", "10000", "--fuel", "8"}) cmd.push_back(extra);
    auto const r = lamfam_cli(cmd);
    REQUIRE(r.code == cli::kExitOk);
    auto out = lines(r.out);
    REQUIRE(out.size() == 10000);
    return out;
  };
  for (auto const& t : sample({"sample", "--family", "motzkin"})) CHECK(to_string(parse_motzkin(t)) == t);
  for (auto const& t : sample({"sample", "--family", "closable", "--repr", "structured"}))
    CHECK(to_string(parse_closable(t)) == t);
  for (auto const& t : sample({"sample", "--family", "ucs", "--repr", "structured"})) CHECK(to_string(parse_ucs(t)) == t);
  for (auto const& t : sample({"sample", "--family", "lmt"})) CHECK(to_string(parse_lmt(t)) == t);
  for (auto const& t : sample({"sample", "--family", "open", "-m", "1", "--repr", "structured", "--strategy",
                               "structural"}))
    CHECK(to_string(parse_open_term(t)) == t);
}
