#include "lamfam/lambda_open.hpp"

#include <algorithm>
#include <map>
#include <ostream>
#include <utility>

#include "lamfam/error.hpp"
#include "lamfam/gen.hpp"
#include "text_reader.hpp"

namespace lamfam {

Lmt Lmt::var(std::uint64_t index) {
  return Lmt(std::make_shared<Node const>(Node{Kind::Var, index, {}, {}}));
}

Lmt Lmt::lam(Lmt body) { return Lmt(std::make_shared<Node const>(Node{Kind::Lam, 0, std::move(body), {}})); }

Lmt Lmt::app(Lmt left, Lmt right) {
  return Lmt(std::make_shared<Node const>(Node{Kind::App, 0, std::move(left), std::move(right)}));
}

bool operator==(Lmt const& x, Lmt const& y) noexcept {
  if (x.node_ == y.node_) return true;
  if (x.kind() != y.kind()) return false;
  switch (x.kind()) {
    case Lmt::Kind::Var:
      return x.index() == y.index();
    case Lmt::Kind::Lam:
      return x.body() == y.body();
    case Lmt::Kind::App:
      return x.left() == y.left() && x.right() == y.right();
  }
  return false;
}

bool is_open(std::uint64_t m, Lmt const& t) {
  switch (t.kind()) {
    case Lmt::Kind::Var:
      return t.index() < m;
    case Lmt::Kind::Lam:
      return is_open(m + 1, t.body());
    case Lmt::Kind::App:
      return is_open(m, t.left()) && is_open(m, t.right());
  }
  return false;
}

OpenTerm OpenTerm::var(std::uint64_t m, std::uint64_t index) {
  if (index >= m) throw NotOpen("root", index, m);
  return OpenTerm(m, Lmt::var(index));
}

OpenTerm OpenTerm::lam(std::uint64_t m, OpenTerm const& body) {
  if (body.root_index_ != m + 1) {
    throw Error("OpenTerm::lam at index " + std::to_string(m) + " needs a body at index " +
                std::to_string(m + 1) + ", got " + std::to_string(body.root_index_));
  }
  return OpenTerm(m, Lmt::lam(body.tree_));
}

OpenTerm OpenTerm::app(std::uint64_t m, OpenTerm const& left, OpenTerm const& right) {
  if (left.root_index_ != m || right.root_index_ != m) {
    throw Error("OpenTerm::app at index " + std::to_string(m) + " needs both children at the same index");
  }
  return OpenTerm(m, Lmt::app(left.tree_, right.tree_));
}

namespace {

void check_open(std::uint64_t m, Lmt const& t, std::string& path) {
  switch (t.kind()) {
    case Lmt::Kind::Var:
      if (t.index() >= m) throw NotOpen(path, t.index(), m);
      return;
    case Lmt::Kind::Lam: {
      auto mark = path.size();
      path += ".body";
      check_open(m + 1, t.body(), path);
      path.resize(mark);
      return;
    }
    case Lmt::Kind::App: {
      auto mark = path.size();
      path += ".left";
      check_open(m, t.left(), path);
      path.resize(mark);
      path += ".right";
      check_open(m, t.right(), path);
      path.resize(mark);
      return;
    }
  }
}

}  // namespace

OpenTerm lmt_to_open(std::uint64_t m, Lmt const& t) {
  std::string path = "root";
  check_open(m, t, path);
  return OpenTerm(m, t);
}

Lmt open_to_lmt(OpenTerm const& o) { return o.tree(); }

Motzkin skeleton(Lmt const& t) {
  switch (t.kind()) {
    case Lmt::Kind::Var:
      return Motzkin::v();
    case Lmt::Kind::Lam:
      return Motzkin::l(skeleton(t.body()));
    case Lmt::Kind::App:
      return Motzkin::a(skeleton(t.left()), skeleton(t.right()));
  }
  return Motzkin::v();
}

bool label_check(std::uint64_t m, Motzkin const& mt, Lmt const& t) {
  switch (mt.kind()) {
    case Motzkin::Kind::Leaf:
      return t.kind() == Lmt::Kind::Var && t.index() < m;
    case Motzkin::Kind::Unary:
      return t.kind() == Lmt::Kind::Lam && label_check(m + 1, mt.body(), t.body());
    case Motzkin::Kind::Binary:
      return t.kind() == Lmt::Kind::App && label_check(m, mt.left(), t.left()) &&
             label_check(m, mt.right(), t.right());
  }
  return false;
}

void for_each_labeling(std::uint64_t m, Motzkin const& mt, std::function<void(Lmt const&)> const& visit) {
  switch (mt.kind()) {
    case Motzkin::Kind::Leaf:
      for (std::uint64_t i = 0; i < m; ++i) visit(Lmt::var(i));
      return;
    case Motzkin::Kind::Unary:
      for_each_labeling(m + 1, mt.body(), [&](Lmt const& b) { visit(Lmt::lam(b)); });
      return;
    case Motzkin::Kind::Binary: {
      // Small sides are built once and shared, so each result costs one node.
      constexpr Count kShareLimit = Count{1} << 16;
      auto small = [&](Motzkin const& side) {
        try {
          return count_labelings(m, side) < kShareLimit;
        } catch (std::overflow_error const&) {
          return false;
        }
      };
      if (small(mt.right())) {
        auto const ys = enumerate_labelings(m, mt.right());
        if (ys.empty()) return;
        if (small(mt.left())) {
          for (auto const& x : enumerate_labelings(m, mt.left())) {
            for (auto const& y : ys) visit(Lmt::app(x, y));
          }
          return;
        }
        for_each_labeling(m, mt.left(), [&](Lmt const& x) {
          for (auto const& y : ys) visit(Lmt::app(x, y));
        });
      } else {
        for_each_labeling(m, mt.left(), [&](Lmt const& x) {
          for_each_labeling(m, mt.right(), [&](Lmt const& y) { visit(Lmt::app(x, y)); });
        });
      }
      return;
    }
  }
}

std::vector<Lmt> enumerate_labelings(std::uint64_t m, Motzkin const& mt) {
  std::vector<Lmt> out;
  for_each_labeling(m, mt, [&](Lmt const& t) { out.push_back(t); });
  return out;
}

Count count_labelings(std::uint64_t m, Motzkin const& mt) {
  switch (mt.kind()) {
    case Motzkin::Kind::Leaf:
      return m;
    case Motzkin::Kind::Unary:
      return count_labelings(m + 1, mt.body());
    case Motzkin::Kind::Binary:
      return checked_mul(count_labelings(m, mt.left()), count_labelings(m, mt.right()));
  }
  return 0;
}

std::uint64_t minimal_openness(Lmt const& t) {
  switch (t.kind()) {
    case Lmt::Kind::Var:
      return t.index() + 1;
    case Lmt::Kind::Lam: {
      auto inner = minimal_openness(t.body());
      return inner == 0 ? 0 : inner - 1;
    }
    case Lmt::Kind::App:
      return std::max(minimal_openness(t.left()), minimal_openness(t.right()));
  }
  return 0;
}

std::size_t size111(Lmt const& t) {
  switch (t.kind()) {
    case Lmt::Kind::Var:
      return 1;
    case Lmt::Kind::Lam:
      return 1 + size111(t.body());
    case Lmt::Kind::App:
      return 1 + size111(t.left()) + size111(t.right());
  }
  return 0;
}

std::size_t size012(Lmt const& t) {
  switch (t.kind()) {
    case Lmt::Kind::Var:
      return 0;
    case Lmt::Kind::Lam:
      return 1 + size012(t.body());
    case Lmt::Kind::App:
      return 2 + size012(t.left()) + size012(t.right());
  }
  return 0;
}

namespace {

// Application children are materialized once per (openness, size) and
// shared; binder chains are streamed so the top levels never materialize.
class OpenEnumerator {
 public:
  void stream(std::uint64_t m, std::size_t n, std::function<void(Lmt const&)> const& visit) {
    if (n == 1) {
      for (std::uint64_t i = 0; i < m; ++i) visit(Lmt::var(i));
      return;
    }
    stream(m + 1, n - 1, [&](Lmt const& b) { visit(Lmt::lam(b)); });
    for (std::size_t left = 1; left + 2 <= n; ++left) {
      auto const& xs = list(m, left);
      auto const& ys = list(m, n - 1 - left);
      for (auto const& x : xs) {
        for (auto const& y : ys) visit(Lmt::app(x, y));
      }
    }
  }

 private:
  std::vector<Lmt> const& list(std::uint64_t m, std::size_t n) {
    auto key = std::make_pair(m, n);
    if (auto it = memo_.find(key); it != memo_.end()) return it->second;
    std::vector<Lmt> out;
    stream(m, n, [&](Lmt const& t) { out.push_back(t); });
    return memo_.emplace(key, std::move(out)).first->second;
  }

  std::map<std::pair<std::uint64_t, std::size_t>, std::vector<Lmt>> memo_;
};

}  // namespace

void for_each_open(std::uint64_t m, std::int64_t n, std::function<void(Lmt const&)> const& visit) {
  if (n < 1) throw InvalidSize("enumerate_open", n, 1);
  OpenEnumerator().stream(m, static_cast<std::size_t>(n), visit);
}

std::vector<Lmt> enumerate_open(std::uint64_t m, std::int64_t n) {
  std::vector<Lmt> out;
  for_each_open(m, n, [&](Lmt const& t) { out.push_back(t); });
  return out;
}

Count count_open(std::uint64_t m, std::int64_t n) {
  if (n < 1) throw InvalidSize("count_open", n, 1);
  std::map<std::pair<std::uint64_t, std::size_t>, Count> memo;
  std::function<Count(std::uint64_t, std::size_t)> count = [&](std::uint64_t k, std::size_t size) -> Count {
    if (size == 1) return k;
    auto key = std::make_pair(k, size);
    if (auto it = memo.find(key); it != memo.end()) return it->second;
    Count total = count(k + 1, size - 1);
    for (std::size_t left = 1; left + 2 <= size; ++left) {
      total = checked_add(total, checked_mul(count(k, left), count(k, size - 1 - left)));
    }
    memo.emplace(key, total);
    return total;
  };
  return count(m, static_cast<std::size_t>(n));
}

namespace {

void write(std::string& out, Lmt const& t) {
  switch (t.kind()) {
    case Lmt::Kind::Var:
      out += "var(";
      out += std::to_string(t.index());
      out += ')';
      return;
    case Lmt::Kind::Lam:
      out += "lam(";
      write(out, t.body());
      out += ')';
      return;
    case Lmt::Kind::App:
      out += "app(";
      write(out, t.left());
      out += ',';
      write(out, t.right());
      out += ')';
      return;
  }
}

Lmt read_lmt(detail::TextReader& r) {
  detail::TextReader::Depth guard(r);
  std::size_t at = r.position();
  auto w = r.word();
  if (w == "var") {
    r.expect('(');
    auto i = r.number();
    r.expect(')');
    return Lmt::var(i);
  }
  if (w == "lam") {
    r.expect('(');
    auto body = read_lmt(r);
    r.expect(')');
    return Lmt::lam(std::move(body));
  }
  if (w == "app") {
    r.expect('(');
    auto left = read_lmt(r);
    r.expect(',');
    auto right = read_lmt(r);
    r.expect(')');
    return Lmt::app(std::move(left), std::move(right));
  }
  r.unknown(w, at, "one of 'var(i)', 'lam(...)', 'app(...,...)'");
}

}  // namespace

std::string to_string(Lmt const& t) {
  std::string out;
  write(out, t);
  return out;
}

std::string to_string(OpenTerm const& o) {
  return "open(" + std::to_string(o.root_index()) + "," + to_string(o.tree()) + ")";
}

Lmt parse_lmt(std::string_view text) {
  detail::TextReader r(text);
  auto t = read_lmt(r);
  r.finish();
  return t;
}

OpenTerm parse_open_term(std::string_view text) {
  detail::TextReader r(text);
  std::size_t at = r.position();
  auto w = r.word();
  if (w != "open") r.unknown(w, at, "'open(m,...)'");
  r.expect('(');
  auto m = r.number();
  r.expect(',');
  std::size_t term_at = r.position();
  auto t = read_lmt(r);
  r.expect(')');
  r.finish();
  try {
    return lmt_to_open(m, t);
  } catch (NotOpen const& e) {
    throw ParseError(term_at, e.what());
  }
}

std::ostream& operator<<(std::ostream& os, Lmt const& t) { return os << to_string(t); }
std::ostream& operator<<(std::ostream& os, OpenTerm const& o) { return os << to_string(o); }

namespace {

// Built only from the OpenTerm smart constructors so that the audit's
// structured side does not go through lmt_to_open.
std::vector<OpenTerm> open_terms_by_constructors(std::uint64_t m, std::size_t n) {
  std::vector<OpenTerm> out;
  if (n == 1) {
    for (std::uint64_t i = 0; i < m; ++i) out.push_back(OpenTerm::var(m, i));
    return out;
  }
  for (auto const& body : open_terms_by_constructors(m + 1, n - 1)) out.push_back(OpenTerm::lam(m, body));
  for (std::size_t left = 1; left + 2 <= n; ++left) {
    auto xs = open_terms_by_constructors(m, left);
    auto ys = open_terms_by_constructors(m, n - 1 - left);
    for (auto const& x : xs) {
      for (auto const& y : ys) out.push_back(OpenTerm::app(m, x, y));
    }
  }
  return out;
}

FamilyHandle<Lmt, OpenTerm> make_open_family(std::uint64_t m) {
  FamilyDescriptor<Lmt, OpenTerm> fd;
  fd.name = "open-" + std::to_string(m);
  fd.filter = [m](Lmt const& t) { return is_open(m, t); };
  fd.to_structured = [m](Lmt const& t) { return lmt_to_open(m, t); };
  fd.to_base = [](OpenTerm const& o) { return open_to_lmt(o); };
  fd.default_base = Lmt::lam(Lmt::var(0));
  fd.size_base = [](Lmt const& t) { return size111(t); };
  fd.size_structured = [](OpenTerm const& o) { return size111(o); };
  // Candidates allow one index past the limit at every leaf, so the
  // filter has out-of-family values to reject.
  fd.enumerate_base = [m](std::size_t n) {
    std::vector<Lmt> out;
    for (auto const& mt : enumerate_motzkin(static_cast<std::int64_t>(n))) {
      for_each_labeling(m + 1, mt, [&](Lmt const& t) { out.push_back(t); });
    }
    return out;
  };
  fd.enumerate_structured = [m](std::size_t n) { return open_terms_by_constructors(m, n); };
  fd.show_base = [](Lmt const& t) { return to_string(t); };
  fd.show_structured = [](OpenTerm const& o) { return to_string(o); };
  fd.generate_base = [](unsigned fuel, Rng& rng) { return gen_lmt(fuel, rng); };
  return std::make_shared<FamilyDescriptor<Lmt, OpenTerm> const>(std::move(fd));
}

}  // namespace

OpenFamily const& open_family() {
  static OpenFamily const family{"open", &make_open_family};
  return family;
}

}  // namespace lamfam
