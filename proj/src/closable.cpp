#include "lamfam/closable.hpp"

#include <ostream>

#include "lamfam/error.hpp"
#include "lamfam/gen.hpp"
#include "readers.hpp"
#include "text_reader.hpp"

namespace lamfam {

Closable Closable::lam(Motzkin body) {
  return Closable(std::make_shared<Node const>(Node{Kind::Lam, std::move(body), {}, {}}));
}

Closable Closable::app(Closable left, Closable right) {
  return Closable(std::make_shared<Node const>(Node{Kind::App, {}, std::move(left), std::move(right)}));
}

bool operator==(Closable const& x, Closable const& y) noexcept {
  if (x.node_ == y.node_) return true;
  if (x.kind() != y.kind()) return false;
  if (x.kind() == Closable::Kind::Lam) return x.body() == y.body();
  return x.left() == y.left() && x.right() == y.right();
}

Motzkin closable2motzkin(Closable const& c) {
  if (c.kind() == Closable::Kind::Lam) return Motzkin::l(c.body());
  return Motzkin::a(closable2motzkin(c.left()), closable2motzkin(c.right()));
}

namespace {

Closable to_closable(Motzkin const& t, Motzkin const& whole, std::string& path) {
  switch (t.kind()) {
    case Motzkin::Kind::Unary:
      return Closable::lam(t.body());
    case Motzkin::Kind::Binary: {
      auto const mark = path.size();
      path += ".left";
      auto left = to_closable(t.left(), whole, path);
      path.resize(mark);
      path += ".right";
      auto right = to_closable(t.right(), whole, path);
      path.resize(mark);
      return Closable::app(std::move(left), std::move(right));
    }
    case Motzkin::Kind::Leaf:
      break;
  }
  throw NotClosable(to_string(whole), path);
}

}  // namespace

Closable motzkin2closable(Motzkin const& t) {
  std::string path = "root";
  return to_closable(t, t, path);
}

std::size_t size111(Closable const& c) {
  if (c.kind() == Closable::Kind::Lam) return 1 + size111(c.body());
  return 1 + size111(c.left()) + size111(c.right());
}

std::size_t size012(Closable const& c) {
  if (c.kind() == Closable::Kind::Lam) return 1 + size012(c.body());
  return 2 + size012(c.left()) + size012(c.right());
}

std::vector<Closable> enumerate_closable(std::int64_t n) {
  if (n < 2) throw InvalidSize("enumerate_closable", n, 2);
  auto const top = static_cast<std::size_t>(n);
  std::vector<std::vector<Closable>> by_size(top + 1);
  for (std::size_t k = 2; k <= top; ++k) {
    auto& out = by_size[k];
    for (auto const& body : enumerate_motzkin(static_cast<std::int64_t>(k) - 1)) {
      out.push_back(Closable::lam(body));
    }
    // Both children of an application have size at least 2.
    for (std::size_t left = 2; left + 3 <= k; ++left) {
      std::size_t right = k - 1 - left;
      for (auto const& x : by_size[left]) {
        for (auto const& y : by_size[right]) out.push_back(Closable::app(x, y));
      }
    }
  }
  return std::move(by_size[top]);
}

namespace {

void write(std::string& out, Closable const& c) {
  if (c.kind() == Closable::Kind::Lam) {
    out += "cl(";
    out += to_string(c.body());
    out += ')';
    return;
  }
  out += "ca(";
  write(out, c.left());
  out += ',';
  write(out, c.right());
  out += ')';
}

Closable read(detail::TextReader& r) {
  detail::TextReader::Depth guard(r);
  std::size_t at = r.position();
  auto w = r.word();
  if (w == "cl") {
    r.expect('(');
    auto body = detail::read_motzkin(r);
    r.expect(')');
    return Closable::lam(std::move(body));
  }
  if (w == "ca") {
    r.expect('(');
    auto left = read(r);
    r.expect(',');
    auto right = read(r);
    r.expect(')');
    return Closable::app(std::move(left), std::move(right));
  }
  r.unknown(w, at, "one of 'cl(...)', 'ca(...,...)'");
}

}  // namespace

std::string to_string(Closable const& c) {
  std::string out;
  write(out, c);
  return out;
}

Closable parse_closable(std::string_view text) {
  detail::TextReader r(text);
  auto c = read(r);
  r.finish();
  return c;
}

std::ostream& operator<<(std::ostream& os, Closable const& c) { return os << to_string(c); }

namespace {

FamilyDescriptor<Motzkin, Closable> closable_descriptor() {
  FamilyDescriptor<Motzkin, Closable> fd;
  fd.name = "closable";
  fd.filter = [](Motzkin const& t) { return is_closable(t); };
  fd.to_structured = [](Motzkin const& t) { return motzkin2closable(t); };
  fd.to_base = [](Closable const& c) { return closable2motzkin(c); };
  fd.default_base = Motzkin::l(Motzkin::v());
  fd.size_base = [](Motzkin const& t) { return size111(t); };
  fd.size_structured = [](Closable const& c) { return size111(c); };
  fd.enumerate_base = [](std::size_t n) { return enumerate_motzkin(static_cast<std::int64_t>(n)); };
  fd.enumerate_structured = [](std::size_t n) {
    return n < 2 ? std::vector<Closable>{} : enumerate_closable(static_cast<std::int64_t>(n));
  };
  fd.show_base = [](Motzkin const& t) { return to_string(t); };
  fd.show_structured = [](Closable const& c) { return to_string(c); };
  fd.generate_base = [](unsigned fuel, Rng& rng) { return gen_motzkin(fuel, rng); };
  return fd;
}

}  // namespace

ClosableFamily closable_family() {
  static ClosableFamily const family = std::make_shared<FamilyDescriptor<Motzkin, Closable> const>(closable_descriptor());
  return family;
}

ClosableFamily closable_counter_family() {
  static ClosableFamily const family = [] {
    auto fd = closable_descriptor();
    fd.name = "closable-counter";
    fd.filter = [](Motzkin const& t) { return is_closable_counter(t); };
    return std::make_shared<FamilyDescriptor<Motzkin, Closable> const>(std::move(fd));
  }();
  return family;
}

}  // namespace lamfam
