#pragma once

#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <memory>
#include <string>
#include <string_view>
#include <vector>

#include "lamfam/count.hpp"

namespace lamfam {

/// Unlabeled unary-binary tree: the skeleton of a lambda term.
///
/// Values are immutable and share subtrees, so copies are cheap and a
/// Motzkin can be handed between threads freely. The leaf carries no node.
class Motzkin {
 public:
  enum class Kind : std::uint8_t { Leaf, Unary, Binary };

  Motzkin() = default;  // the leaf `v`

  static Motzkin v() { return {}; }
  static Motzkin l(Motzkin body);
  static Motzkin a(Motzkin left, Motzkin right);

  Kind kind() const noexcept;
  bool is_leaf() const noexcept { return node_ == nullptr; }

  // Child accessors; calling one that does not match kind() is undefined.
  Motzkin const& body() const noexcept;
  Motzkin const& left() const noexcept;
  Motzkin const& right() const noexcept;

  friend bool operator==(Motzkin const& x, Motzkin const& y) noexcept;

 private:
  struct Node;
  explicit Motzkin(std::shared_ptr<Node const> node) : node_(std::move(node)) {}

  std::shared_ptr<Node const> node_;
};

struct Motzkin::Node {
  Kind kind;
  Motzkin first;
  Motzkin second;
};

inline Motzkin::Kind Motzkin::kind() const noexcept { return node_ ? node_->kind : Kind::Leaf; }
inline Motzkin const& Motzkin::body() const noexcept { return node_->first; }
inline Motzkin const& Motzkin::left() const noexcept { return node_->first; }
inline Motzkin const& Motzkin::right() const noexcept { return node_->second; }

// Predicates.

/// Every root-to-leaf path crosses at least one unary node.
bool is_closable(Motzkin const& t);

/// Counter formulation: `n` unary nodes have been seen above `t`.
bool is_closable2(Motzkin const& t, std::uint64_t n);
inline bool is_closable_counter(Motzkin const& t) { return is_closable2(t, 0); }

/// `seen` records whether a unary node already occurs above `t`.
bool is_ucs_aux(Motzkin const& t, bool seen);
/// Exactly one unary node on every root-to-leaf path.
inline bool is_ucs(Motzkin const& t) { return is_ucs_aux(t, false); }

bool ucs1_aux(Motzkin const& t, std::uint64_t n);
inline bool ucs1(Motzkin const& t) { return ucs1_aux(t, 0); }

// Sizes: every node weighs 1 (size111), or leaf 0 / unary 1 / binary 2 (size012).
std::size_t size111(Motzkin const& t);
std::size_t size012(Motzkin const& t);

std::size_t depth(Motzkin const& t);

/// All trees with size111 == n. Order: leaf < unary < binary, binary nodes by
/// ascending left size, left subtree varying slowest. Throws InvalidSize for n < 1.
std::vector<Motzkin> enumerate_motzkin(std::int64_t n);

/// |enumerate_motzkin(n)| without building trees.
Count count_motzkin(std::int64_t n);

// Canonical text: v | l(t) | a(t,t). Output has no whitespace; input may.
std::string to_string(Motzkin const& t);
Motzkin parse_motzkin(std::string_view text);
std::ostream& operator<<(std::ostream& os, Motzkin const& t);

}  // namespace lamfam
