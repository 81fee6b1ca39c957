#pragma once

// De Bruijn lambda terms as leaf-labeled Motzkin trees, m-openness, and the
// relation between skeletons and their labelings.

#include <cstddef>
#include <cstdint>
#include <functional>
#include <iosfwd>
#include <memory>
#include <string>
#include <string_view>
#include <vector>

#include "lamfam/count.hpp"
#include "lamfam/family.hpp"
#include "lamfam/motzkin.hpp"

namespace lamfam {

/// Lambda term in de Bruijn form; indices count from 0 and are unbounded.
class Lmt {
 public:
  enum class Kind : std::uint8_t { Var, Lam, App };

  Lmt() = default;  // var(0)

  static Lmt var(std::uint64_t index);
  static Lmt lam(Lmt body);
  static Lmt app(Lmt left, Lmt right);

  Kind kind() const noexcept;
  std::uint64_t index() const noexcept;
  Lmt const& body() const noexcept;
  Lmt const& left() const noexcept;
  Lmt const& right() const noexcept;

  friend bool operator==(Lmt const& x, Lmt const& y) noexcept;

 private:
  struct Node;
  explicit Lmt(std::shared_ptr<Node const> node) : node_(std::move(node)) {}

  std::shared_ptr<Node const> node_;
};

struct Lmt::Node {
  Kind kind;
  std::uint64_t index;
  Lmt first;
  Lmt second;
};

inline Lmt::Kind Lmt::kind() const noexcept { return node_ ? node_->kind : Kind::Var; }
inline std::uint64_t Lmt::index() const noexcept { return node_ ? node_->index : 0; }
inline Lmt const& Lmt::body() const noexcept { return node_->first; }
inline Lmt const& Lmt::left() const noexcept { return node_->first; }
inline Lmt const& Lmt::right() const noexcept { return node_->second; }

/// True when every Var(i) satisfies i < m + (binders above it).
bool is_open(std::uint64_t m, Lmt const& t);
inline bool is_closed(Lmt const& t) { return is_open(0, t); }

/// An m-open term together with its openness m. Every value is checked at
/// construction; the smart constructors mirror the three term formers and
/// fix the ambient index of each subterm.
class OpenTerm {
 public:
  /// Requires index < m.
  static OpenTerm var(std::uint64_t m, std::uint64_t index);
  /// Requires body.root_index() == m + 1.
  static OpenTerm lam(std::uint64_t m, OpenTerm const& body);
  /// Requires both children at index m.
  static OpenTerm app(std::uint64_t m, OpenTerm const& left, OpenTerm const& right);

  std::uint64_t root_index() const noexcept { return root_index_; }
  Lmt const& tree() const noexcept { return tree_; }

  friend bool operator==(OpenTerm const& x, OpenTerm const& y) noexcept {
    return x.root_index_ == y.root_index_ && x.tree_ == y.tree_;
  }

 private:
  OpenTerm(std::uint64_t m, Lmt tree) : root_index_(m), tree_(std::move(tree)) {}
  friend OpenTerm lmt_to_open(std::uint64_t m, Lmt const& t);

  std::uint64_t root_index_;
  Lmt tree_;
};

/// Throws NotOpen for the leftmost leaf (in preorder) whose index is out of range.
OpenTerm lmt_to_open(std::uint64_t m, Lmt const& t);
Lmt open_to_lmt(OpenTerm const& o);

Motzkin skeleton(Lmt const& t);

/// t labels mt with every leaf index below m plus the binders above it.
bool label_check(std::uint64_t m, Motzkin const& mt, Lmt const& t);

/// Calls visit on every labeling of mt at openness m. Leftmost leaf varies
/// slowest; indices ascend.
void for_each_labeling(std::uint64_t m, Motzkin const& mt, std::function<void(Lmt const&)> const& visit);
std::vector<Lmt> enumerate_labelings(std::uint64_t m, Motzkin const& mt);

/// Product over leaves of (m + unary nodes above the leaf).
Count count_labelings(std::uint64_t m, Motzkin const& mt);

/// Least m such that t is m-open.
std::uint64_t minimal_openness(Lmt const& t);

// Variables weigh 1 (size111) or 0 (size012) whatever their index.
std::size_t size111(Lmt const& t);
std::size_t size012(Lmt const& t);
inline std::size_t size111(OpenTerm const& o) { return size111(o.tree()); }
inline std::size_t size012(OpenTerm const& o) { return size012(o.tree()); }

/// Every m-open term with size111 n, streamed. Order: var < lam < app,
/// indices ascending, application by ascending left size with the left
/// term varying slowest. Throws InvalidSize for n < 1.
void for_each_open(std::uint64_t m, std::int64_t n, std::function<void(Lmt const&)> const& visit);
std::vector<Lmt> enumerate_open(std::uint64_t m, std::int64_t n);
Count count_open(std::uint64_t m, std::int64_t n);

// var(i) | lam(t) | app(t,t); an OpenTerm prints as open(m,t).
std::string to_string(Lmt const& t);
std::string to_string(OpenTerm const& o);
Lmt parse_lmt(std::string_view text);
OpenTerm parse_open_term(std::string_view text);
std::ostream& operator<<(std::ostream& os, Lmt const& t);
std::ostream& operator<<(std::ostream& os, OpenTerm const& o);

using OpenFamily = ParamFamilyDescriptor<Lmt, OpenTerm>;

/// Lambda terms filtered by m-openness, paired with OpenTerm at index m.
OpenFamily const& open_family();

}  // namespace lamfam
