#include "lamfam/cli.hpp"

#include <algorithm>
#include <cstdlib>
#include <fstream>
#include <functional>
#include <iostream>
#include <sstream>
#include <stdexcept>

#include "CLI11.hpp"
#include "json.hpp"
#include "lamfam/closable.hpp"
#include "lamfam/error.hpp"
#include "lamfam/gen.hpp"
#include "lamfam/lambda_open.hpp"
#include "lamfam/motzkin.hpp"
#include "lamfam/props.hpp"
#include "lamfam/serialize.hpp"
#include "lamfam/ucs.hpp"

namespace lamfam::cli {

namespace {

using nlohmann::json;

class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Collects result items; text mode prints the term of each item per line,
// json mode prints an array of objects.
class Output {
 public:
  explicit Output(bool as_json) : as_json_(as_json) {}

  void term(std::string text, json extra = json::object()) {
    if (as_json_) {
      json item = {{"term", text}};
      item.update(extra);
      items_.push_back(std::move(item));
    } else {
      text_ << text << '\n';
    }
  }

  void line(std::string const& text) { text_ << text << '\n'; }
  void item(json value) { items_.push_back(std::move(value)); }
  bool json_mode() const { return as_json_; }

  std::string str() const { return as_json_ ? items_.dump(2) + "\n" : text_.str(); }

 private:
  bool as_json_;
  std::ostringstream text_;
  json items_ = json::array();
};

std::uint64_t require_openness(Command const& c) {
  if (!c.openness) throw UsageError("--openness is required for family 'open'");
  return *c.openness;
}

std::int64_t require_size(Command const& c) {
  if (!c.size) throw UsageError("--size is required");
  return *c.size;
}

[[noreturn]] void unbounded_lmt() {
  throw UsageError("lmt terms of a fixed size are unbounded; use --family open with --openness");
}

std::vector<std::string> read_terms(Command const& c, std::istream& in) {
  if (c.term) return {*c.term};
  std::vector<std::string> terms;
  std::string line;
  while (std::getline(in, line)) {
    if (line.find_first_not_of(" \t\r") != std::string::npos) terms.push_back(line);
  }
  if (terms.empty()) throw UsageError("no term given: pass --term or one term per line on stdin");
  return terms;
}

bool structured(Command const& c) { return c.repr == "structured"; }

void do_enumerate(Command const& c, Output& out) {
  auto const n = require_size(c);
  auto const& f = c.family;
  if (f == "motzkin") {
    for (auto const& t : enumerate_motzkin(n)) out.term(to_string(t));
  } else if (f == "closable") {
    if (structured(c)) {
      for (auto const& x : enumerate_closable(n)) out.term(to_string(x));
    } else {
      for (auto const& t : enumerate_motzkin(n)) {
        if (is_closable(t)) out.term(to_string(t));
      }
    }
  } else if (f == "ucs") {
    if (structured(c)) {
      for (auto const& x : enumerate_ucs(n)) out.term(to_string(x));
    } else {
      for (auto const& t : enumerate_motzkin(n)) {
        if (is_ucs(t)) out.term(to_string(t));
      }
    }
  } else if (f == "open") {
    auto const m = require_openness(c);
    for_each_open(m, n, [&](Lmt const& t) {
      out.term(structured(c) ? to_string(lmt_to_open(m, t)) : to_string(t));
    });
  } else {
    unbounded_lmt();
  }
}

void do_count(Command const& c, Output& out) {
  auto const n = require_size(c);
  auto const& f = c.family;
  Count count = 0;
  if (f == "motzkin") {
    count = count_motzkin(n);
  } else if (f == "closable" || f == "ucs") {
    bool const is_c = f == "closable";
    if (structured(c)) {
      count = is_c ? enumerate_closable(n).size() : enumerate_ucs(n).size();
    } else {
      for (auto const& t : enumerate_motzkin(n)) count += (is_c ? is_closable(t) : is_ucs(t)) ? 1 : 0;
    }
  } else if (f == "open") {
    count = count_open(require_openness(c), n);
  } else {
    unbounded_lmt();
  }
  if (out.json_mode()) {
    json item = {{"family", f}, {"repr", c.repr}, {"size", n}, {"count", count}};
    if (c.openness) item["openness"] = *c.openness;
    out.item(std::move(item));
  } else {
    out.line(std::to_string(count));
  }
}

json stats_json(FilterStats const& s) {
  return {{"attempts", s.attempts}, {"discarded", s.discarded}, {"exhausted", s.exhausted}};
}

[[noreturn]] void unsupported_strategy(Command const& c) {
  throw UsageError("strategy '" + c.strategy + "' is not available for family '" + c.family + "'");
}

// Closable and ucs share the sampling logic over different types.
template <typename S>
void sample_skeleton_family(Command const& c, Rng& rng, Output& out, FamilyHandle<Motzkin, S> const& family,
                            SizedGenerator<S> derived, SizedGenerator<Motzkin> structural) {
  auto emit = [&](Motzkin const& t, json extra = json::object()) {
    out.term(structured(c) ? family->show_structured(family->to_structured(t)) : to_string(t), std::move(extra));
  };
  auto const converted = gen_from_structured(family, derived);
  for (std::uint64_t i = 0; i < c.samples; ++i) {
    if (c.strategy == "derived") {
      auto s = derived(c.fuel, rng);
      out.term(structured(c) ? family->show_structured(s) : to_string(family->to_base(s)));
    } else if (c.strategy == "filtered") {
      auto [t, stats] = gen_filtered(family, c.fuel, rng, c.filter_max);
      emit(t, stats_json(stats));
    } else if (c.strategy == "structural") {
      emit(structural(c.fuel, rng));
    } else {
      emit(converted(c.fuel, rng).value());
    }
  }
}

void do_sample(Command const& c, Output& out) {
  std::uint64_t seed = 0;
  if (c.seed) {
    seed = *c.seed;
  } else if (char const* env = std::getenv(kSeedEnv)) {
    try {
      std::size_t used = 0;
      seed = std::stoull(env, &used);
      if (env[used] != '\0') throw std::invalid_argument("trailing characters");
    } catch (std::exception const&) {
      throw UsageError(std::string(kSeedEnv) + " must be a decimal 64-bit integer");
    }
  } else {
    throw UsageError(std::string("--seed is required for sample (or set ") + kSeedEnv + ")");
  }
  Rng rng(seed);
  auto const& f = c.family;

  if (f == "motzkin" || f == "lmt") {
    if (c.strategy != "derived") unsupported_strategy(c);
    for (std::uint64_t i = 0; i < c.samples; ++i) {
      out.term(f == "motzkin" ? to_string(gen_motzkin(c.fuel, rng)) : to_string(gen_lmt(c.fuel, rng)));
    }
  } else if (f == "closable") {
    sample_skeleton_family<Closable>(c, rng, out, closable_family(), gen_closable, gen_closable_struct);
  } else if (f == "ucs") {
    sample_skeleton_family<Ucs>(c, rng, out, ucs_family(), gen_ucs, gen_ucs_struct);
  } else {
    auto const m = require_openness(c);
    auto const family = open_family().at(m);
    auto const structured_gen = SizedGenerator<OpenTerm>(
        [m](unsigned fuel, Rng& r) { return gen_open_term(m, fuel, r); });
    auto const converted = gen_from_structured(family, structured_gen);
    auto emit = [&](Lmt const& t, json extra = json::object()) {
      out.term(structured(c) ? to_string(lmt_to_open(m, t)) : to_string(t), std::move(extra));
    };
    if (c.strategy == "derived") unsupported_strategy(c);
    for (std::uint64_t i = 0; i < c.samples; ++i) {
      if (c.strategy == "filtered") {
        auto [t, stats] = gen_filtered(family, c.fuel, rng, c.filter_max);
        emit(t, stats_json(stats));
      } else if (c.strategy == "structural") {
        emit(gen_open_struct(m, c.fuel, rng));
      } else {
        emit(converted(c.fuel, rng).value());
      }
    }
  }
}

void do_convert(Command const& c, std::istream& in, Output& out) {
  auto const& f = c.family;
  if (f == "motzkin" || f == "lmt") {
    throw UsageError("family '" + f + "' has a single representation; nothing to convert");
  }
  std::uint64_t const m = f == "open" ? require_openness(c) : 0;
  for (auto const& text : read_terms(c, in)) {
    if (f == "closable") {
      out.term(structured(c) ? to_string(closable2motzkin(parse_closable(text)))
                             : to_string(motzkin2closable(parse_motzkin(text))));
    } else if (f == "ucs") {
      out.term(structured(c) ? to_string(ucs2motzkin(parse_ucs(text)))
                             : to_string(motzkin2ucs(parse_motzkin(text))));
    } else {
      if (structured(c)) {
        auto o = parse_open_term(text);
        if (o.root_index() != m) {
          throw UsageError("term has openness " + std::to_string(o.root_index()) + " but --openness is " +
                           std::to_string(m));
        }
        out.term(to_string(open_to_lmt(o)));
      } else {
        out.term(to_string(lmt_to_open(m, parse_lmt(text))));
      }
    }
  }
}

constexpr Count kMaxListedLabelings = 1000;

void analyze_skeleton(Command const& c, Motzkin const& mt, std::string const& shown, Output& out) {
  std::uint64_t const m = c.openness.value_or(0);
  auto const count = count_labelings(m, mt);
  json info = {
      {"skeleton", to_string(mt)},
      {"size111", size111(mt)},
      {"size012", size012(mt)},
      {"is_closable", is_closable(mt)},
      {"is_ucs", is_ucs(mt)},
      {"openness", m},
      {"count_labelings", count},
  };
  json labelings = json::array();
  if (count <= kMaxListedLabelings) {
    for_each_labeling(m, mt, [&](Lmt const& t) { labelings.push_back(to_string(t)); });
    info["labelings"] = labelings;
  }
  if (out.json_mode()) {
    out.term(shown, std::move(info));
    return;
  }
  out.line("term: " + shown);
  out.line("skeleton: " + to_string(mt));
  out.line("size111: " + std::to_string(size111(mt)));
  out.line("size012: " + std::to_string(size012(mt)));
  out.line(std::string("is_closable: ") + (is_closable(mt) ? "true" : "false"));
  out.line(std::string("is_ucs: ") + (is_ucs(mt) ? "true" : "false"));
  out.line("count_labelings(" + std::to_string(m) + "): " + std::to_string(count));
  if (count <= kMaxListedLabelings) {
    out.line("labelings:");
    for (auto const& l : labelings) out.line("  " + l.get<std::string>());
  } else {
    out.line("labelings: omitted (more than " + std::to_string(kMaxListedLabelings) + ")");
  }
}

void analyze_term(Command const& c, Lmt const& t, Output& out) {
  auto const mt = skeleton(t);
  auto const least = minimal_openness(t);
  json info = {
      {"skeleton", to_string(mt)},
      {"minimal_openness", least},
      {"is_closed", is_closed(t)},
      {"size111", size111(t)},
      {"size012", size012(t)},
      {"skeleton_count_labelings", count_labelings(least, mt)},
  };
  if (c.openness) info["is_open"] = is_open(*c.openness, t);
  if (out.json_mode()) {
    out.term(to_string(t), std::move(info));
    return;
  }
  out.line("term: " + to_string(t));
  out.line("skeleton: " + to_string(mt));
  out.line("minimal_openness: " + std::to_string(least));
  out.line(std::string("is_closed: ") + (is_closed(t) ? "true" : "false"));
  if (c.openness) {
    out.line("is_open(" + std::to_string(*c.openness) + "): " + (is_open(*c.openness, t) ? "true" : "false"));
  }
  out.line("size111: " + std::to_string(size111(t)));
  out.line("size012: " + std::to_string(size012(t)));
  out.line("count_labelings(" + std::to_string(least) + ", skeleton): " +
           std::to_string(count_labelings(least, mt)));
}

void do_analyze(Command const& c, std::istream& in, Output& out) {
  auto const& f = c.family;
  if (f == "open") require_openness(c);
  for (auto const& text : read_terms(c, in)) {
    if (f == "lmt" || f == "open") {
      analyze_term(c, parse_lmt(text), out);
    } else if (f == "closable" && structured(c)) {
      analyze_skeleton(c, closable2motzkin(parse_closable(text)), text, out);
    } else if (f == "ucs" && structured(c)) {
      analyze_skeleton(c, ucs2motzkin(parse_ucs(text)), text, out);
    } else {
      analyze_skeleton(c, parse_motzkin(text), text, out);
    }
  }
}

std::vector<SuiteSpec> suites_for(Command const& c) {
  if (!c.size && !c.openness && !c.seed) return default_suites();
  // Explicit bounds replace the defaults of every suite they apply to.
  auto const size = c.size.value_or(12);
  auto const m = c.openness.value_or(2);
  auto const seed = c.seed.value_or(42);
  auto const samples = c.samples;
  auto const fuel = c.fuel;
  return {
      {"roundtrips", [=] { return suite_roundtrips(size, std::min<std::int64_t>(size, 8), m); }},
      {"equivalences", [=] { return suite_equivalences(size); }},
      {"prop1", [=] { return suite_prop1(size); }},
      {"prop2", [=] { return suite_prop2(size); }},
      {"prop4", [=, m4 = c.openness.value_or(3)] { return suite_prop4(size, m4); }},
      {"openness", [=] { return suite_openness(std::min<std::int64_t>(size, 8), m); }},
      {"generators", [=] { return suite_generators(samples, seed, fuel); }},
  };
}

int do_check(Command const& c, std::vector<SuiteSpec> const& suites, Output& out, std::ostream& err) {
  for (auto const& name : c.suites) {
    bool known = false;
    for (auto const& s : suites) known = known || s.name == name;
    if (!known) throw UsageError("unknown suite '" + name + "'");
  }

  bool all_pass = true;
  for (auto const& s : suites) {
    if (!c.suites.empty() && std::find(c.suites.begin(), c.suites.end(), s.name) == c.suites.end()) continue;
    auto report = s.run();
    all_pass = all_pass && report.pass;
    err << s.name << ": " << report.duration.count() << " ms\n";
    if (out.json_mode()) {
      out.item(to_json(report));
    } else {
      std::string text = to_text(report);
      text.pop_back();
      out.line(text);
    }
  }
  return all_pass ? kExitOk : kExitFailure;
}

void show_parse_error(ParseError const& e, Command const& c, std::ostream& err) {
  err << "error: " << e.what() << "\n";
  if (c.term) err << "  " << *c.term << "\n  " << std::string(e.position(), ' ') << "^\n";
}

}  // namespace

namespace {

int execute(Command const& c, std::vector<SuiteSpec> const* suites, std::istream& in, std::ostream& out,
            std::ostream& err) {
  Output result(c.format == "json");
  int code = kExitOk;
  try {
    switch (c.subcommand) {
      case Subcommand::Enumerate:
        do_enumerate(c, result);
        break;
      case Subcommand::Count:
        do_count(c, result);
        break;
      case Subcommand::Sample:
        do_sample(c, result);
        break;
      case Subcommand::Convert:
        do_convert(c, in, result);
        break;
      case Subcommand::Analyze:
        do_analyze(c, in, result);
        break;
      case Subcommand::Check:
        code = do_check(c, suites ? *suites : suites_for(c), result, err);
        break;
    }
  } catch (ParseError const& e) {
    show_parse_error(e, c, err);
    return kExitUsage;
  } catch (UsageError const& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (Error const& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (std::overflow_error const& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  }

  if (c.output.empty()) {
    out << result.str();
  } else {
    std::ofstream file(c.output);
    if (!file || !(file << result.str())) {
      err << "error: cannot write " << c.output << "\n";
      return kExitUsage;
    }
  }
  return code;
}

}  // namespace

int run(Command const& c, std::istream& in, std::ostream& out, std::ostream& err) {
  return execute(c, nullptr, in, out, err);
}

int run_check(Command c, std::vector<SuiteSpec> const& suites, std::ostream& out, std::ostream& err) {
  c.subcommand = Subcommand::Check;
  std::istringstream none;
  return execute(c, &suites, none, out, err);
}

int main(int argc, char const* const* argv, std::istream& in, std::ostream& out, std::ostream& err) {
  CLI::App app{"Enumerate, sample, convert and check lambda-term skeleton families"};
  app.require_subcommand(1);
  Command c;

  std::vector<std::string> const families = {"motzkin", "closable", "ucs", "lmt", "open"};
  auto family_opt = [&](CLI::App* sub) {
    sub->add_option("--family", c.family, "motzkin | closable | ucs | lmt | open")
        ->check(CLI::IsMember(families))
        ->capture_default_str();
    sub->add_option("--repr", c.repr, "base | structured")
        ->check(CLI::IsMember({"base", "structured"}))
        ->capture_default_str();
    sub->add_option("--openness,-m", c.openness, "openness index m (required for family open)");
  };
  auto common_opt = [&](CLI::App* sub) {
    sub->add_option("--format", c.format, "text | json")
        ->check(CLI::IsMember({"text", "json"}))
        ->capture_default_str();
    sub->add_option("--output,-o", c.output, "write to this file instead of stdout");
  };

  auto* enumerate = app.add_subcommand("enumerate", "list every member of a given size");
  auto* count = app.add_subcommand("count", "count the members of a given size");
  for (auto* sub : {enumerate, count}) {
    family_opt(sub);
    sub->add_option("--size,-n", c.size, "size111 of the terms")->required();
    common_opt(sub);
  }

  auto* sample = app.add_subcommand("sample", "draw seeded random terms");
  family_opt(sample);
  sample->add_option("--seed", c.seed, std::string("64-bit seed (default from ") + kSeedEnv + ")");
  sample->add_option("--fuel", c.fuel, "recursion budget")->capture_default_str();
  sample->add_option("--filter-max", c.filter_max, "tries before generate-and-test falls back")
      ->capture_default_str();
  sample->add_option("--samples", c.samples, "number of terms")->capture_default_str();
  sample->add_option("--strategy", c.strategy, "derived | filtered | structural | converted")
      ->check(CLI::IsMember({"derived", "filtered", "structural", "converted"}))
      ->capture_default_str();
  common_opt(sample);

  auto* convert = app.add_subcommand("convert", "convert terms between the two representations");
  auto* analyze = app.add_subcommand("analyze", "print skeleton, openness and labelings of terms");
  for (auto* sub : {convert, analyze}) {
    family_opt(sub);
    sub->add_option("--term,-t", c.term, "term in canonical text (default: one per line on stdin)");
    common_opt(sub);
  }

  auto* check = app.add_subcommand("check", "run property suites");
  check->add_option("--suite", c.suites,
                    "roundtrips | equivalences | prop1 | prop2 | prop4 | openness | generators (default: all)");
  check->add_option("--size,-n", c.size, "maximum size for exhaustive suites");
  check->add_option("--openness,-m", c.openness, "maximum openness");
  check->add_option("--seed", c.seed, "seed for the generator suite");
  check->add_option("--samples", c.samples, "samples per generator")->default_val(100000);
  check->add_option("--fuel", c.fuel, "generator fuel")->capture_default_str();
  common_opt(check);

  try {
    app.parse(argc, argv);
  } catch (CLI::ParseError const& e) {
    std::ostringstream o;
    std::ostringstream e_out;
    int const code = app.exit(e, o, e_out);
    out << o.str();
    err << e_out.str();
    return code == 0 ? kExitOk : kExitUsage;
  }

  if (app.got_subcommand(enumerate)) c.subcommand = Subcommand::Enumerate;
  if (app.got_subcommand(count)) c.subcommand = Subcommand::Count;
  if (app.got_subcommand(sample)) c.subcommand = Subcommand::Sample;
  if (app.got_subcommand(convert)) c.subcommand = Subcommand::Convert;
  if (app.got_subcommand(analyze)) c.subcommand = Subcommand::Analyze;
  if (app.got_subcommand(check)) c.subcommand = Subcommand::Check;

  if (c.openness && c.family != "open" && c.subcommand != Subcommand::Analyze &&
      c.subcommand != Subcommand::Check) {
    err << "error: --openness applies only to family 'open'\n";
    return kExitUsage;
  }
  if (c.openness && *c.openness > (std::uint64_t{1} << 32)) {
    err << "error: --openness is limited to 2^32\n";
    return kExitUsage;
  }
  return run(c, in, out, err);
}

}  // namespace lamfam::cli
