#include "lamfam/props.hpp"

#include <sstream>

#include "lamfam/closable.hpp"
#include "lamfam/family.hpp"
#include "lamfam/gen.hpp"
#include "lamfam/lambda_open.hpp"
#include "lamfam/motzkin.hpp"
#include "lamfam/ucs.hpp"

namespace lamfam {

namespace {

class Recorder {
 public:
  explicit Recorder(std::string name) : start_(std::chrono::steady_clock::now()) {
    report_.name = std::move(name);
  }

  void param(std::string key, std::int64_t value) { report_.parameters.emplace_back(std::move(key), value); }

  template <typename Show>
  void check(bool ok, std::string_view property, Show&& counterexample) {
    check(ok, property, counterexample, [] { return std::string(); });
  }

  template <typename Show, typename Context>
  void check(bool ok, std::string_view property, Show&& counterexample, Context&& context) {
    ++report_.cases;
    if (ok) return;
    ++report_.failure_count;
    report_.pass = false;
    if (report_.failures.size() < SuiteReport::kMaxRecordedFailures) {
      report_.failures.push_back({std::string(property), counterexample(), context()});
    }
  }

  SuiteReport finish() {
    report_.duration =
        std::chrono::duration_cast<std::chrono::milliseconds>(std::chrono::steady_clock::now() - start_);
    return std::move(report_);
  }

 private:
  SuiteReport report_;
  std::chrono::steady_clock::time_point start_;
};

template <typename T>
auto shown(T const& value) {
  return [&value] { return to_string(value); };
}

auto at_m(std::uint64_t m) {
  return [m] { return "m=" + std::to_string(m); };
}

auto at_n(std::uint64_t n) {
  return [n] { return "n=" + std::to_string(n); };
}

void for_each_motzkin_up_to(std::int64_t max_size, std::function<void(Motzkin const&)> const& visit) {
  for (std::int64_t n = 1; n <= max_size; ++n) {
    for (auto const& t : enumerate_motzkin(n)) visit(t);
  }
}

// Unary nodes above each leaf, left to right.
void leaf_binders(Motzkin const& t, std::uint64_t above, std::vector<std::uint64_t>& out) {
  switch (t.kind()) {
    case Motzkin::Kind::Leaf:
      out.push_back(above);
      return;
    case Motzkin::Kind::Unary:
      leaf_binders(t.body(), above + 1, out);
      return;
    case Motzkin::Kind::Binary:
      leaf_binders(t.left(), above, out);
      leaf_binders(t.right(), above, out);
      return;
  }
}

Count leaf_product(std::uint64_t m, Motzkin const& t) {
  std::vector<std::uint64_t> depths;
  leaf_binders(t, 0, depths);
  Count product = 1;
  for (auto d : depths) product = checked_mul(product, m + d);
  return product;
}

}  // namespace

SuiteReport suite_prop1(std::int64_t max_size) {
  Recorder r("prop1");
  r.param("max_size", max_size);

  for_each_motzkin_up_to(max_size, [&](Motzkin const& t) {
    r.check(size111(t) == size012(t) + 1, "size111 = size012 + 1 (motzkin)", shown(t));
  });

  auto const family = closable_family();
  for (std::int64_t n = 2; n <= max_size; ++n) {
    for (auto const& c : enumerate_closable(n)) {
      r.check(size111(c) == size012(c) + 1, "size111 = size012 + 1 (closable)", shown(c));
      // The validated variant reduces to its underlying Motzkin value.
      auto w = structured_to_rec(family, c);
      r.check(size111(w.value()) == size012(w.value()) + 1, "size111 = size012 + 1 (validated closable)",
              shown(c));
    }
    for (auto const& u : enumerate_ucs(n)) {
      r.check(size111(u) == size012(u) + 1, "size111 = size012 + 1 (ucs)", shown(u));
    }
  }

  for (std::uint64_t m = 0; m <= 2; ++m) {
    for (std::int64_t n = 1; n <= max_size; ++n) {
      for_each_open(m, n, [&](Lmt const& t) {
        r.check(size111(t) == size012(t) + 1, "size111 = size012 + 1 (lmt)", shown(t), at_m(m));
        auto o = lmt_to_open(m, t);
        r.check(size111(o) == size012(o) + 1, "size111 = size012 + 1 (open)", shown(o));
      });
    }
  }

  r.check(size111(Motzkin::v()) == 1 && size012(Motzkin::v()) == 0, "witness v", [] { return std::string("v"); });
  auto const cl_v = Closable::lam(Motzkin::v());
  r.check(size111(cl_v) == 2 && size012(cl_v) == 1, "witness cl(v)", shown(cl_v));
  return r.finish();
}

SuiteReport suite_equivalences(std::int64_t max_size) {
  Recorder r("equivalences");
  r.param("max_size", max_size);
  r.param("max_counter", 5);
  r.param("max_m", 5);

  for_each_motzkin_up_to(max_size, [&](Motzkin const& t) {
    r.check(is_closable(t) == is_closable_counter(t), "is_closable = isClosable", shown(t));
    r.check(is_ucs(t) == ucs1(t), "is_ucs = ucs1", shown(t));
    r.check(is_ucs_aux(t, false) == ucs1_aux(t, 0), "is_ucs_aux(t,false) = ucs1_aux(t,0)", shown(t));
    r.check(is_ucs_aux(t, true) == ucs1_aux(t, 1), "is_ucs_aux(t,true) = ucs1_aux(t,1)", shown(t));
    r.check(!is_ucs(t) || is_closable(t), "is_ucs implies is_closable", shown(t));
    r.check(is_closable_counter(Motzkin::l(t)), "isClosable (l t)", shown(t));
    for (std::uint64_t n = 0; n <= 5; ++n) {
      r.check(!is_closable2(t, n) || is_closable2(t, n + 1), "isClosable2 t n -> isClosable2 t (n+1)",
              shown(t), at_n(n));
    }
  });

  // label m mt t -> label (m+1) mt t, over every labeling at m.
  for (std::uint64_t m = 0; m <= 5; ++m) {
    for_each_motzkin_up_to(max_size, [&](Motzkin const& mt) {
      for_each_labeling(m, mt, [&](Lmt const& t) {
        r.check(label_check(m + 1, mt, t), "label m mt t -> label (m+1) mt t", shown(t), at_m(m));
      });
    });
  }

  auto const not_closable = parse_motzkin("a(l(v),v)");
  r.check(!is_closable(not_closable) && !is_closable_counter(not_closable), "witness a(l(v),v) not closable",
          shown(not_closable));
  auto const unique = parse_motzkin("l(a(v,v))");
  r.check(is_ucs(unique) && ucs1(unique), "witness l(a(v,v)) uniquely closable", shown(unique));
  return r.finish();
}

SuiteReport suite_prop2(std::int64_t max_size) {
  Recorder r("prop2");
  r.param("max_size", max_size);

  for_each_motzkin_up_to(max_size, [&](Motzkin const& mt) {
    auto const count = count_labelings(0, mt);
    r.check((count > 0) == is_closable(mt), "closed labeling exists <=> is_closable", shown(mt));
    Count enumerated = 0;
    bool all_closed = true;
    for_each_labeling(0, mt, [&](Lmt const& t) {
      ++enumerated;
      all_closed = all_closed && is_closed(t) && skeleton(t) == mt;
    });
    r.check(enumerated == count && all_closed, "closed labelings enumerate to their count", shown(mt));
  });

  // One direction only: every structured closable skeleton has a closed labeling.
  for (std::int64_t n = 2; n <= max_size; ++n) {
    for (auto const& c : enumerate_closable(n)) {
      Count found = 0;
      for_each_labeling(0, closable2motzkin(c), [&](Lmt const&) { ++found; });
      r.check(found > 0, "closable skeleton has a closed labeling", shown(c));
    }
  }

  auto const paired = parse_motzkin("l(a(v,l(v)))");
  r.check(count_labelings(0, paired) > 0 && is_closable(paired), "witness l(a(v,l(v)))", shown(paired));
  r.check(count_labelings(0, Motzkin::v()) == 0 && !is_closable(Motzkin::v()), "witness v",
          [] { return std::string("v"); });
  return r.finish();
}

SuiteReport suite_prop4(std::int64_t max_size, std::uint64_t max_m) {
  Recorder r("prop4");
  r.param("max_size", max_size);
  r.param("max_m", static_cast<std::int64_t>(max_m));

  for_each_motzkin_up_to(max_size, [&](Motzkin const& mt) {
    auto const closed = count_labelings(0, mt);
    r.check((closed == 1) == is_ucs(mt), "exactly one closed labeling <=> is_ucs", shown(mt));
    r.check((closed == 1) == ucs1(mt), "exactly one closed labeling <=> ucs1", shown(mt));
    for (std::uint64_t m = 0; m <= max_m; ++m) {
      auto const count = count_labelings(m, mt);
      r.check((count == 1) == ucs1_aux(mt, m), "exactly one m-open labeling <=> ucs1_aux(mt, m)",
              shown(mt), at_m(m));
      Count enumerated = 0;
      for_each_labeling(m, mt, [&](Lmt const&) { ++enumerated; });
      r.check(count == enumerated && count == leaf_product(m, mt), "count = enumeration = leaf product",
              shown(mt), at_m(m));
    }
  });

  auto const unique = parse_motzkin("l(a(v,v))");
  r.check(count_labelings(0, unique) == 1 && is_ucs(unique), "witness l(a(v,v))", shown(unique));
  auto const twice = parse_motzkin("l(a(l(v),v))");
  r.check(count_labelings(0, twice) == 2 && !is_ucs(twice), "witness l(a(l(v),v))", shown(twice));
  return r.finish();
}

SuiteReport suite_openness(std::int64_t max_size, std::uint64_t max_m) {
  Recorder r("openness");
  r.param("max_size", max_size);
  r.param("max_m", static_cast<std::int64_t>(max_m));

  for (std::uint64_t m = 0; m <= max_m; ++m) {
    for (std::int64_t n = 1; n <= max_size; ++n) {
      for (auto const& mt : enumerate_motzkin(n)) {
        // Labelings at m + 1 include terms that are not m-open.
        for_each_labeling(m + 1, mt, [&](Lmt const& t) {
          auto const show = shown(t);
          auto const where = at_m(m);
          bool const open = is_open(m, t);
          r.check(label_check(m, skeleton(t), t) == open, "label m (skeleton t) t <=> is_open m t", show, where);
          if (label_check(m, mt, t)) {
            r.check(skeleton(t) == mt, "label m mt t -> skeleton t = mt", show, where);
            for (std::uint64_t m2 = m; m2 <= m + 3; ++m2) {
              r.check(label_check(m2, mt, t), "label monotone in m", show, where);
            }
          }
          auto const least = minimal_openness(t);
          r.check(label_check(least, skeleton(t), t), "label (minimal_openness t) (skeleton t) t", show, where);
          r.check(is_open(least, t), "t is (minimal_openness t)-open", show, where);
          for (std::uint64_t k = 0; k <= least + 3; ++k) {
            r.check(is_open(k, t) == (k >= least), "is_open k t <=> k >= minimal_openness t", show, where);
          }
        });
      }
    }
  }

  auto const example = parse_lmt("lam(app(var(1),lam(var(1))))");
  r.check(minimal_openness(example) == 1 && !is_open(0, example) && is_open(1, example) && is_open(2, example),
          "witness lam(app(var(1),lam(var(1))))", shown(example));
  auto const id = parse_lmt("lam(var(0))");
  r.check(minimal_openness(id) == 0 && label_check(0, parse_motzkin("l(v)"), id), "witness lam(var(0))",
          shown(id));
  return r.finish();
}

namespace {

template <typename Base, typename Structured>
void record_audit(Recorder& r, FamilyHandle<Base, Structured> const& fd, std::size_t max_size) {
  auto report = audit_family(fd, max_size);
  auto const show_default = [&] { return fd->show_base(fd->default_base); };
  r.check(report.default_ok, "default is a member", show_default, [&] { return report.family; });
  for (auto const& row : report.sizes) {
    // Audit rows have no single term; the first recorded problem goes in the context.
    auto const show = [] { return std::string(); };
    auto const where = [&] {
      auto text = report.family + " n=" + std::to_string(row.n);
      if (!report.problems.empty()) text += ": " + report.problems.front();
      return text;
    };
    r.check(row.counts_equal(), "filtered base and structured counts agree", show, where);
    r.check(row.roundtrips_ok(), "both roundtrips hold", show, where);
  }
}

}  // namespace

SuiteReport suite_roundtrips(std::int64_t max_size, std::int64_t max_open_size, std::uint64_t max_m) {
  Recorder r("roundtrips");
  r.param("max_size", max_size);
  r.param("max_open_size", max_open_size);
  r.param("max_m", static_cast<std::int64_t>(max_m));
  record_audit(r, closable_family(), static_cast<std::size_t>(max_size));
  record_audit(r, closable_counter_family(), static_cast<std::size_t>(max_size));
  record_audit(r, ucs_family(), static_cast<std::size_t>(max_size));
  for (std::uint64_t m = 0; m <= max_m; ++m) {
    record_audit(r, open_family().at(m), static_cast<std::size_t>(max_open_size));
  }
  return r.finish();
}

SuiteReport suite_generators(std::uint64_t samples, std::uint64_t seed, unsigned fuel) {
  Recorder r("generators");
  r.param("samples", static_cast<std::int64_t>(samples));
  r.param("seed", static_cast<std::int64_t>(seed));
  r.param("fuel", fuel);

  {
    Rng rng(seed);
    for (std::uint64_t i = 0; i < samples; ++i) {
      auto t = gen_closable_struct(fuel, rng);
      r.check(is_closable(t), "gen_closable_struct yields closable trees", shown(t));
    }
  }
  {
    Rng rng(seed);
    for (std::uint64_t i = 0; i < samples; ++i) {
      auto t = gen_ucs_struct(fuel, rng);
      r.check(is_ucs(t), "gen_ucs_struct yields uniquely closable trees", shown(t));
    }
  }
  for (std::uint64_t m = 0; m <= 2; ++m) {
    Rng rng(seed);
    for (std::uint64_t i = 0; i < samples; ++i) {
      auto t = gen_open_struct(m, fuel, rng);
      r.check(is_open(m, t), "gen_open_struct yields m-open terms", shown(t), at_m(m));
    }
  }
  // A filter-violating result is only acceptable as the default after exhaustion.
  auto filtered = [&](auto const& family, auto const& context) {
    Rng rng(seed);
    for (std::uint64_t i = 0; i < samples; ++i) {
      auto [t, stats] = gen_filtered(family, fuel, rng);
      bool const ok = family->filter(t) || (stats.exhausted && t == family->default_base);
      r.check(ok, "gen_filtered yields members or the default when exhausted", shown(t), context);
    }
  };
  filtered(closable_family(), [] { return std::string("closable"); });
  filtered(ucs_family(), [] { return std::string("ucs"); });
  for (std::uint64_t m = 0; m <= 2; ++m) filtered(open_family().at(m), at_m(m));
  {
    auto const closable = gen_from_structured<Motzkin, Closable>(closable_family(), gen_closable);
    auto const ucs = gen_from_structured<Motzkin, Ucs>(ucs_family(), gen_ucs);
    Rng rng(seed);
    for (std::uint64_t i = 0; i < samples; ++i) {
      auto c = closable(fuel, rng);
      r.check(is_closable(c.value()), "converted closable draws are closable", shown(c.value()));
      auto u = ucs(fuel, rng);
      r.check(is_ucs(u.value()), "converted ucs draws are uniquely closable", shown(u.value()));
    }
  }
  {
    // Same seed, same sequence.
    Rng a(seed);
    Rng b(seed);
    for (std::uint64_t i = 0; i < std::min<std::uint64_t>(samples, 1000); ++i) {
      auto x = gen_closable_struct(fuel, a);
      auto y = gen_closable_struct(fuel, b);
      r.check(x == y, "generation is deterministic per seed", shown(x));
    }
  }
  return r.finish();
}

std::vector<SuiteSpec> default_suites() {
  return {
      {"roundtrips", [] { return suite_roundtrips(12, 8, 2); }},
      {"equivalences", [] { return suite_equivalences(12); }},
      {"prop1", [] { return suite_prop1(12); }},
      {"prop2", [] { return suite_prop2(12); }},
      {"prop4", [] { return suite_prop4(12, 3); }},
      {"openness", [] { return suite_openness(8, 2); }},
      {"generators", [] { return suite_generators(100000, 42, 10); }},
  };
}

std::string to_text(SuiteReport const& report) {
  std::ostringstream os;
  os << report.name << ": " << (report.pass ? "PASS" : "FAIL") << " (" << report.cases << " cases";
  for (auto const& [key, value] : report.parameters) os << ", " << key << "=" << value;
  os << ")\n";
  for (auto const& f : report.failures) {
    os << "  " << f.property << ": " << f.counterexample;
    if (!f.context.empty()) os << " [" << f.context << "]";
    os << "\n";
  }
  if (report.failure_count > report.failures.size()) {
    os << "  ... " << (report.failure_count - report.failures.size()) << " more failures\n";
  }
  return os.str();
}

}  // namespace lamfam
