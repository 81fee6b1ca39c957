#pragma once

#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <memory>
#include <string>
#include <string_view>
#include <vector>

#include "lamfam/family.hpp"
#include "lamfam/motzkin.hpp"

namespace lamfam {

/// Closable skeleton: either a unary node over an arbitrary Motzkin tree, or
/// a binary node over two closable skeletons.
class Closable {
 public:
  enum class Kind : std::uint8_t { Lam, App };

  static Closable lam(Motzkin body);
  static Closable app(Closable left, Closable right);

  Kind kind() const noexcept;
  Motzkin const& body() const noexcept;
  Closable const& left() const noexcept;
  Closable const& right() const noexcept;

  friend bool operator==(Closable const& x, Closable const& y) noexcept;

 private:
  struct Node;
  Closable() = default;  // placeholder child slot only
  explicit Closable(std::shared_ptr<Node const> node) : node_(std::move(node)) {}

  std::shared_ptr<Node const> node_;
};

struct Closable::Node {
  Kind kind;
  Motzkin body;
  Closable left;
  Closable right;
};

inline Closable::Kind Closable::kind() const noexcept { return node_->kind; }
inline Motzkin const& Closable::body() const noexcept { return node_->body; }
inline Closable const& Closable::left() const noexcept { return node_->left; }
inline Closable const& Closable::right() const noexcept { return node_->right; }

Motzkin closable2motzkin(Closable const& c);

/// Throws NotClosable naming a root-to-leaf path without a unary node.
Closable motzkin2closable(Motzkin const& t);

std::size_t size111(Closable const& c);
std::size_t size012(Closable const& c);

/// All closable skeletons of size111 n; lam before app, then as for Motzkin.
/// Throws InvalidSize for n < 2.
std::vector<Closable> enumerate_closable(std::int64_t n);

// cl(motzkin) | ca(closable,closable)
std::string to_string(Closable const& c);
Closable parse_closable(std::string_view text);
std::ostream& operator<<(std::ostream& os, Closable const& c);

using ClosableFamily = FamilyHandle<Motzkin, Closable>;

/// Motzkin trees filtered by is_closable.
ClosableFamily closable_family();
/// Same structured side, filter is the counter formulation.
ClosableFamily closable_counter_family();

}  // namespace lamfam
