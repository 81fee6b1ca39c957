#include "lamfam/closable.hpp"

#include "doctest.h"
#include "lamfam/error.hpp"

using namespace lamfam;

namespace {

Motzkin m(char const* text) { return parse_motzkin(text); }

}  // namespace

TEST_CASE("closable2motzkin") {
  CHECK(closable2motzkin(Closable::lam(m("a(v,l(v))"))) == m("l(a(v,l(v)))"));
  CHECK(closable2motzkin(Closable::lam(m("v"))) == m("l(v)"));
  CHECK(closable2motzkin(Closable::app(Closable::lam(m("v")), Closable::lam(m("l(v)")))) == m("a(l(v),l(l(v)))"));
}

TEST_CASE("motzkin2closable") {
  CHECK(motzkin2closable(m("l(a(v,l(v)))")) == Closable::lam(m("a(v,l(v))")));
  CHECK(motzkin2closable(m("a(l(v),l(v))")) == Closable::app(Closable::lam(m("v")), Closable::lam(m("v"))));

  SUBCASE("non-closable input names the binder-free path") {
    try {
      motzkin2closable(m("a(l(v),v)"));
      FAIL("expected NotClosable");
    } catch (NotClosable const& e) {
      CHECK(e.path() == "root.right");
    }
    CHECK_THROWS_AS(motzkin2closable(m("v")), NotClosable);
    CHECK_THROWS_AS(motzkin2closable(m("a(a(l(v),v),l(v))")), NotClosable);
  }
}

TEST_CASE("sizes agree with the Motzkin image") {
  CHECK(size111(Closable::lam(m("v"))) == 2);
  CHECK(size012(Closable::lam(m("v"))) == 1);
  for (std::int64_t n = 2; n <= 12; ++n) {
    for (auto const& c : enumerate_closable(n)) {
      CHECK(size111(c) == static_cast<std::size_t>(n));
      CHECK(size111(c) == size012(c) + 1);
      CHECK(size111(c) == size111(closable2motzkin(c)));
    }
  }
}

TEST_CASE("enumeration") {
  auto const four = enumerate_closable(4);
  REQUIRE(four.size() == 2);
  CHECK(to_string(four[0]) == "cl(l(l(v)))");
  CHECK(to_string(four[1]) == "cl(a(v,v))");
  CHECK(enumerate_closable(5).size() == 5);
  CHECK_THROWS_AS(enumerate_closable(1), InvalidSize);

  // The structured count equals the filtered Motzkin count.
  for (std::int64_t n = 2; n <= 12; ++n) {
    std::size_t filtered = 0;
    for (auto const& t : enumerate_motzkin(n)) filtered += is_closable(t) ? 1 : 0;
    CHECK(enumerate_closable(n).size() == filtered);
  }
}

TEST_CASE("both converters are mutually inverse") {
  for (std::int64_t n = 1; n <= 12; ++n) {
    for (auto const& t : enumerate_motzkin(n)) {
      if (is_closable(t)) CHECK(closable2motzkin(motzkin2closable(t)) == t);
    }
  }
  for (std::int64_t n = 2; n <= 12; ++n) {
    for (auto const& c : enumerate_closable(n)) {
      auto const t = closable2motzkin(c);
      CHECK(is_closable(t));
      CHECK(motzkin2closable(t) == c);
    }
  }
}

TEST_CASE("text form") {
  auto const c = Closable::app(Closable::lam(m("a(v,v)")), Closable::lam(m("v")));
  CHECK(to_string(c) == "ca(cl(a(v,v)),cl(v))");
  CHECK(parse_closable(" ca( cl(a(v, v)) , cl(v))") == c);
  for (std::int64_t n = 2; n <= 9; ++n) {
    for (auto const& x : enumerate_closable(n)) CHECK(parse_closable(to_string(x)) == x);
  }
  CHECK_THROWS_AS(parse_closable("cl(q)"), ParseError);
  CHECK_THROWS_AS(parse_closable("l(v)"), ParseError);
}
