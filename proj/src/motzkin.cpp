#include "lamfam/motzkin.hpp"

#include <algorithm>
#include <ostream>

#include "lamfam/error.hpp"
#include "readers.hpp"
#include "text_reader.hpp"

namespace lamfam {

Motzkin Motzkin::l(Motzkin body) {
  return Motzkin(std::make_shared<Node const>(Node{Kind::Unary, std::move(body), {}}));
}

Motzkin Motzkin::a(Motzkin left, Motzkin right) {
  return Motzkin(std::make_shared<Node const>(Node{Kind::Binary, std::move(left), std::move(right)}));
}

bool operator==(Motzkin const& x, Motzkin const& y) noexcept {
  if (x.node_ == y.node_) return true;
  if (x.kind() != y.kind()) return false;
  switch (x.kind()) {
    case Motzkin::Kind::Leaf:
      return true;
    case Motzkin::Kind::Unary:
      return x.body() == y.body();
    case Motzkin::Kind::Binary:
      return x.left() == y.left() && x.right() == y.right();
  }
  return false;
}

bool is_closable(Motzkin const& t) {
  switch (t.kind()) {
    case Motzkin::Kind::Leaf:
      return false;
    case Motzkin::Kind::Unary:
      return true;
    case Motzkin::Kind::Binary:
      return is_closable(t.left()) && is_closable(t.right());
  }
  return false;
}

bool is_closable2(Motzkin const& t, std::uint64_t n) {
  switch (t.kind()) {
    case Motzkin::Kind::Leaf:
      return n > 0;
    case Motzkin::Kind::Unary:
      return is_closable2(t.body(), n + 1);
    case Motzkin::Kind::Binary:
      return is_closable2(t.left(), n) && is_closable2(t.right(), n);
  }
  return false;
}

bool is_ucs_aux(Motzkin const& t, bool seen) {
  switch (t.kind()) {
    case Motzkin::Kind::Leaf:
      return seen;
    case Motzkin::Kind::Unary:
      return !seen && is_ucs_aux(t.body(), true);
    case Motzkin::Kind::Binary:
      return is_ucs_aux(t.left(), seen) && is_ucs_aux(t.right(), seen);
  }
  return false;
}

bool ucs1_aux(Motzkin const& t, std::uint64_t n) {
  switch (t.kind()) {
    case Motzkin::Kind::Leaf:
      return n == 1;
    case Motzkin::Kind::Unary:
      return ucs1_aux(t.body(), n + 1);
    case Motzkin::Kind::Binary:
      return ucs1_aux(t.left(), n) && ucs1_aux(t.right(), n);
  }
  return false;
}

std::size_t size111(Motzkin const& t) {
  switch (t.kind()) {
    case Motzkin::Kind::Leaf:
      return 1;
    case Motzkin::Kind::Unary:
      return 1 + size111(t.body());
    case Motzkin::Kind::Binary:
      return 1 + size111(t.left()) + size111(t.right());
  }
  return 0;
}

std::size_t size012(Motzkin const& t) {
  switch (t.kind()) {
    case Motzkin::Kind::Leaf:
      return 0;
    case Motzkin::Kind::Unary:
      return 1 + size012(t.body());
    case Motzkin::Kind::Binary:
      return 2 + size012(t.left()) + size012(t.right());
  }
  return 0;
}

std::size_t depth(Motzkin const& t) {
  switch (t.kind()) {
    case Motzkin::Kind::Leaf:
      return 1;
    case Motzkin::Kind::Unary:
      return 1 + depth(t.body());
    case Motzkin::Kind::Binary:
      return 1 + std::max(depth(t.left()), depth(t.right()));
  }
  return 0;
}

std::vector<Motzkin> enumerate_motzkin(std::int64_t n) {
  if (n < 1) throw InvalidSize("enumerate_motzkin", n, 1);
  auto const top = static_cast<std::size_t>(n);
  // by_size[k] holds every tree of size k; subtrees are shared across entries.
  std::vector<std::vector<Motzkin>> by_size(top + 1);
  by_size[1].push_back(Motzkin::v());
  for (std::size_t k = 2; k <= top; ++k) {
    auto& out = by_size[k];
    for (auto const& body : by_size[k - 1]) out.push_back(Motzkin::l(body));
    for (std::size_t left = 1; left + 2 <= k; ++left) {
      std::size_t right = k - 1 - left;
      for (auto const& x : by_size[left]) {
        for (auto const& y : by_size[right]) out.push_back(Motzkin::a(x, y));
      }
    }
  }
  return std::move(by_size[top]);
}

Count count_motzkin(std::int64_t n) {
  if (n < 1) throw InvalidSize("count_motzkin", n, 1);
  auto const top = static_cast<std::size_t>(n);
  std::vector<Count> c(top + 1, 0);
  c[1] = 1;
  for (std::size_t k = 2; k <= top; ++k) {
    Count total = c[k - 1];
    for (std::size_t left = 1; left + 2 <= k; ++left) {
      total = checked_add(total, checked_mul(c[left], c[k - 1 - left]));
    }
    c[k] = total;
  }
  return c[top];
}

namespace {

void write(std::string& out, Motzkin const& t) {
  switch (t.kind()) {
    case Motzkin::Kind::Leaf:
      out += 'v';
      return;
    case Motzkin::Kind::Unary:
      out += "l(";
      write(out, t.body());
      out += ')';
      return;
    case Motzkin::Kind::Binary:
      out += "a(";
      write(out, t.left());
      out += ',';
      write(out, t.right());
      out += ')';
      return;
  }
}

constexpr std::string_view kGrammar = "one of 'v', 'l(...)', 'a(...,...)'";

}  // namespace

Motzkin detail::read_motzkin(TextReader& r) {
  TextReader::Depth guard(r);
  std::size_t at = r.position();
  auto w = r.word();
  if (w == "v") return Motzkin::v();
  if (w == "l") {
    r.expect('(');
    auto body = read_motzkin(r);
    r.expect(')');
    return Motzkin::l(std::move(body));
  }
  if (w == "a") {
    r.expect('(');
    auto left = read_motzkin(r);
    r.expect(',');
    auto right = read_motzkin(r);
    r.expect(')');
    return Motzkin::a(std::move(left), std::move(right));
  }
  r.unknown(w, at, kGrammar);
}

std::string to_string(Motzkin const& t) {
  std::string out;
  write(out, t);
  return out;
}

Motzkin parse_motzkin(std::string_view text) {
  detail::TextReader r(text);
  auto t = detail::read_motzkin(r);
  r.finish();
  return t;
}

std::ostream& operator<<(std::ostream& os, Motzkin const& t) { return os << to_string(t); }

}  // namespace lamfam
