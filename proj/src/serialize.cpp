#include "lamfam/serialize.hpp"

#include "lamfam/error.hpp"

namespace lamfam {

nlohmann::json to_json(AuditReport const& report) {
  auto sizes = nlohmann::json::array();
  for (auto const& row : report.sizes) {
    sizes.push_back({
        {"n", row.n},
        {"base_count", row.base_count},
        {"structured_count", row.structured_count},
        {"roundtrips_ok", row.roundtrips_ok()},
        {"rec_roundtrips_passed", row.rec_roundtrips_passed},
        {"structured_roundtrips_passed", row.structured_roundtrips_passed},
    });
  }
  return {
      {"family", report.family},
      {"default_ok", report.default_ok},
      {"sizes", std::move(sizes)},
      {"problems", report.problems},
      {"pass", report.pass},
  };
}

nlohmann::json to_json(SuiteReport const& report) {
  auto params = nlohmann::json::object();
  for (auto const& [key, value] : report.parameters) params[key] = value;
  auto failures = nlohmann::json::array();
  for (auto const& f : report.failures) {
    failures.push_back({{"property", f.property}, {"counterexample", f.counterexample}, {"context", f.context}});
  }
  return {
      {"suite", report.name},
      {"parameters", std::move(params)},
      {"cases", report.cases},
      {"failure_count", report.failure_count},
      {"failures", std::move(failures)},
      {"pass", report.pass},
  };
}

nlohmann::json to_json(Lmt const& t) {
  switch (t.kind()) {
    case Lmt::Kind::Var:
      return {{"var", t.index()}};
    case Lmt::Kind::Lam:
      return {{"lam", to_json(t.body())}};
    case Lmt::Kind::App:
      return {{"app", nlohmann::json::array({to_json(t.left()), to_json(t.right())})}};
  }
  return nullptr;
}

Lmt lmt_from_json(nlohmann::json const& j) {
  if (!j.is_object() || j.size() != 1) throw Error("lmt JSON must be an object with one key");
  auto const it = j.begin();
  auto const& key = it.key();
  auto const& value = it.value();
  if (key == "var") {
    if (!value.is_number_unsigned()) throw Error("var index must be a nonnegative integer");
    return Lmt::var(value.get<std::uint64_t>());
  }
  if (key == "lam") return Lmt::lam(lmt_from_json(value));
  if (key == "app") {
    if (!value.is_array() || value.size() != 2) throw Error("app expects a two-element array");
    return Lmt::app(lmt_from_json(value[0]), lmt_from_json(value[1]));
  }
  throw Error("unknown lmt constructor '" + key + "'");
}

}  // namespace lamfam
