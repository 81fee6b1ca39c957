#include "lamfam/ucs.hpp"

#include <ostream>

#include "lamfam/error.hpp"
#include "lamfam/gen.hpp"
#include "text_reader.hpp"

namespace lamfam {

ClosedAbove ClosedAbove::branch(ClosedAbove left, ClosedAbove right) {
  return ClosedAbove(std::make_shared<Node const>(Node{std::move(left), std::move(right)}));
}

bool operator==(ClosedAbove const& x, ClosedAbove const& y) noexcept {
  if (x.node_ == y.node_) return true;
  if (x.kind() != y.kind()) return false;
  return x.left() == y.left() && x.right() == y.right();
}

Ucs Ucs::lam(ClosedAbove body) {
  return Ucs(std::make_shared<Node const>(Node{Kind::Lam, std::move(body), {}, {}}));
}

Ucs Ucs::app(Ucs left, Ucs right) {
  return Ucs(std::make_shared<Node const>(Node{Kind::App, {}, std::move(left), std::move(right)}));
}

bool operator==(Ucs const& x, Ucs const& y) noexcept {
  if (x.node_ == y.node_) return true;
  if (x.kind() != y.kind()) return false;
  if (x.kind() == Ucs::Kind::Lam) return x.body() == y.body();
  return x.left() == y.left() && x.right() == y.right();
}

Motzkin ca2motzkin(ClosedAbove const& c) {
  if (c.kind() == ClosedAbove::Kind::Leaf) return Motzkin::v();
  return Motzkin::a(ca2motzkin(c.left()), ca2motzkin(c.right()));
}

Motzkin ucs2motzkin(Ucs const& u) {
  if (u.kind() == Ucs::Kind::Lam) return Motzkin::l(ca2motzkin(u.body()));
  return Motzkin::a(ucs2motzkin(u.left()), ucs2motzkin(u.right()));
}

namespace {

class UcsConverter {
 public:
  explicit UcsConverter(Motzkin const& whole) : whole_(whole) {}

  Ucs open(Motzkin const& t) {
    switch (t.kind()) {
      case Motzkin::Kind::Leaf:
        throw NotUcs(to_string(whole_), path_, 0);
      case Motzkin::Kind::Unary: {
        auto const mark = push(".body");
        auto body = closed(t.body());
        path_.resize(mark);
        return Ucs::lam(std::move(body));
      }
      case Motzkin::Kind::Binary:
        break;
    }
    auto mark = push(".left");
    auto left = open(t.left());
    path_.resize(mark);
    push(".right");
    auto right = open(t.right());
    path_.resize(mark);
    return Ucs::app(std::move(left), std::move(right));
  }

 private:
  ClosedAbove closed(Motzkin const& t) {
    switch (t.kind()) {
      case Motzkin::Kind::Leaf:
        return ClosedAbove::leaf();
      case Motzkin::Kind::Unary:
        throw NotUcs(to_string(whole_), path_, 2);
      case Motzkin::Kind::Binary:
        break;
    }
    auto mark = push(".left");
    auto left = closed(t.left());
    path_.resize(mark);
    push(".right");
    auto right = closed(t.right());
    path_.resize(mark);
    return ClosedAbove::branch(std::move(left), std::move(right));
  }

  std::size_t push(char const* step) {
    auto mark = path_.size();
    path_ += step;
    return mark;
  }

  Motzkin const& whole_;
  std::string path_ = "root";
};

}  // namespace

Ucs motzkin2ucs(Motzkin const& t) { return UcsConverter(t).open(t); }

std::size_t size111(ClosedAbove const& c) {
  if (c.kind() == ClosedAbove::Kind::Leaf) return 1;
  return 1 + size111(c.left()) + size111(c.right());
}

std::size_t size012(ClosedAbove const& c) {
  if (c.kind() == ClosedAbove::Kind::Leaf) return 0;
  return 2 + size012(c.left()) + size012(c.right());
}

std::size_t size111(Ucs const& u) {
  if (u.kind() == Ucs::Kind::Lam) return 1 + size111(u.body());
  return 1 + size111(u.left()) + size111(u.right());
}

std::size_t size012(Ucs const& u) {
  if (u.kind() == Ucs::Kind::Lam) return 1 + size012(u.body());
  return 2 + size012(u.left()) + size012(u.right());
}

namespace {

std::vector<std::vector<ClosedAbove>> closed_above_table(std::size_t top) {
  std::vector<std::vector<ClosedAbove>> by_size(top + 1);
  if (top >= 1) by_size[1].push_back(ClosedAbove::leaf());
  for (std::size_t k = 3; k <= top; ++k) {
    for (std::size_t left = 1; left + 2 <= k; ++left) {
      for (auto const& x : by_size[left]) {
        for (auto const& y : by_size[k - 1 - left]) by_size[k].push_back(ClosedAbove::branch(x, y));
      }
    }
  }
  return by_size;
}

}  // namespace

std::vector<ClosedAbove> enumerate_closed_above(std::int64_t n) {
  if (n < 1) throw InvalidSize("enumerate_closed_above", n, 1);
  auto table = closed_above_table(static_cast<std::size_t>(n));
  return std::move(table.back());
}

std::vector<Ucs> enumerate_ucs(std::int64_t n) {
  if (n < 2) throw InvalidSize("enumerate_ucs", n, 2);
  auto const top = static_cast<std::size_t>(n);
  auto const bodies = closed_above_table(top - 1);
  std::vector<std::vector<Ucs>> by_size(top + 1);
  for (std::size_t k = 2; k <= top; ++k) {
    auto& out = by_size[k];
    for (auto const& body : bodies[k - 1]) out.push_back(Ucs::lam(body));
    for (std::size_t left = 2; left + 3 <= k; ++left) {
      for (auto const& x : by_size[left]) {
        for (auto const& y : by_size[k - 1 - left]) out.push_back(Ucs::app(x, y));
      }
    }
  }
  return std::move(by_size[top]);
}

namespace {

void write(std::string& out, ClosedAbove const& c) {
  if (c.kind() == ClosedAbove::Kind::Leaf) {
    out += 'V';
    return;
  }
  out += "B(";
  write(out, c.left());
  out += ',';
  write(out, c.right());
  out += ')';
}

void write(std::string& out, Ucs const& u) {
  if (u.kind() == Ucs::Kind::Lam) {
    out += "L(";
    write(out, u.body());
    out += ')';
    return;
  }
  out += "A(";
  write(out, u.left());
  out += ',';
  write(out, u.right());
  out += ')';
}

ClosedAbove read_ca(detail::TextReader& r) {
  detail::TextReader::Depth guard(r);
  std::size_t at = r.position();
  auto w = r.word();
  if (w == "V") return ClosedAbove::leaf();
  if (w == "B") {
    r.expect('(');
    auto left = read_ca(r);
    r.expect(',');
    auto right = read_ca(r);
    r.expect(')');
    return ClosedAbove::branch(std::move(left), std::move(right));
  }
  r.unknown(w, at, "one of 'V', 'B(...,...)'");
}

Ucs read_ucs(detail::TextReader& r) {
  detail::TextReader::Depth guard(r);
  std::size_t at = r.position();
  auto w = r.word();
  if (w == "L") {
    r.expect('(');
    auto body = read_ca(r);
    r.expect(')');
    return Ucs::lam(std::move(body));
  }
  if (w == "A") {
    r.expect('(');
    auto left = read_ucs(r);
    r.expect(',');
    auto right = read_ucs(r);
    r.expect(')');
    return Ucs::app(std::move(left), std::move(right));
  }
  r.unknown(w, at, "one of 'L(...)', 'A(...,...)'");
}

}  // namespace

std::string to_string(ClosedAbove const& c) {
  std::string out;
  write(out, c);
  return out;
}

std::string to_string(Ucs const& u) {
  std::string out;
  write(out, u);
  return out;
}

ClosedAbove parse_closed_above(std::string_view text) {
  detail::TextReader r(text);
  auto c = read_ca(r);
  r.finish();
  return c;
}

Ucs parse_ucs(std::string_view text) {
  detail::TextReader r(text);
  auto u = read_ucs(r);
  r.finish();
  return u;
}

std::ostream& operator<<(std::ostream& os, Ucs const& u) { return os << to_string(u); }

UcsFamily ucs_family() {
  static UcsFamily const family = [] {
    FamilyDescriptor<Motzkin, Ucs> fd;
    fd.name = "ucs";
    fd.filter = [](Motzkin const& t) { return is_ucs(t); };
    fd.to_structured = [](Motzkin const& t) { return motzkin2ucs(t); };
    fd.to_base = [](Ucs const& u) { return ucs2motzkin(u); };
    fd.default_base = Motzkin::l(Motzkin::v());
    fd.size_base = [](Motzkin const& t) { return size111(t); };
    fd.size_structured = [](Ucs const& u) { return size111(u); };
    fd.enumerate_base = [](std::size_t n) { return enumerate_motzkin(static_cast<std::int64_t>(n)); };
    fd.enumerate_structured = [](std::size_t n) {
      return n < 2 ? std::vector<Ucs>{} : enumerate_ucs(static_cast<std::int64_t>(n));
    };
    fd.show_base = [](Motzkin const& t) { return to_string(t); };
    fd.show_structured = [](Ucs const& u) { return to_string(u); };
    fd.generate_base = [](unsigned fuel, Rng& rng) { return gen_motzkin(fuel, rng); };
    return std::make_shared<FamilyDescriptor<Motzkin, Ucs> const>(std::move(fd));
  }();
  return family;
}

}  // namespace lamfam
