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

/// Binder-free tree below the unique binder of a path: leaves and binary nodes.
class ClosedAbove {
 public:
  enum class Kind : std::uint8_t { Leaf, Branch };

  ClosedAbove() = default;  // CV

  static ClosedAbove leaf() { return {}; }
  static ClosedAbove branch(ClosedAbove left, ClosedAbove right);

  Kind kind() const noexcept { return node_ ? Kind::Branch : Kind::Leaf; }
  ClosedAbove const& left() const noexcept;
  ClosedAbove const& right() const noexcept;

  friend bool operator==(ClosedAbove const& x, ClosedAbove const& y) noexcept;

 private:
  struct Node;
  explicit ClosedAbove(std::shared_ptr<Node const> node) : node_(std::move(node)) {}

  std::shared_ptr<Node const> node_;
};

struct ClosedAbove::Node {
  ClosedAbove left;
  ClosedAbove right;
};

inline ClosedAbove const& ClosedAbove::left() const noexcept { return node_->left; }
inline ClosedAbove const& ClosedAbove::right() const noexcept { return node_->right; }

/// Uniquely closable skeleton. Application children each carry their own
/// binder; the body of the binder is closed above.
class Ucs {
 public:
  enum class Kind : std::uint8_t { Lam, App };

  static Ucs lam(ClosedAbove body);
  static Ucs app(Ucs left, Ucs right);

  Kind kind() const noexcept;
  ClosedAbove const& body() const noexcept;
  Ucs const& left() const noexcept;
  Ucs const& right() const noexcept;

  friend bool operator==(Ucs const& x, Ucs const& y) noexcept;

 private:
  struct Node;
  Ucs() = default;
  explicit Ucs(std::shared_ptr<Node const> node) : node_(std::move(node)) {}

  std::shared_ptr<Node const> node_;
};

struct Ucs::Node {
  Kind kind;
  ClosedAbove body;
  Ucs left;
  Ucs right;
};

inline Ucs::Kind Ucs::kind() const noexcept { return node_->kind; }
inline ClosedAbove const& Ucs::body() const noexcept { return node_->body; }
inline Ucs const& Ucs::left() const noexcept { return node_->left; }
inline Ucs const& Ucs::right() const noexcept { return node_->right; }

Motzkin ca2motzkin(ClosedAbove const& c);
Motzkin ucs2motzkin(Ucs const& u);

/// Throws NotUcs when some root-to-leaf path has zero or several unary nodes.
Ucs motzkin2ucs(Motzkin const& t);

std::size_t size111(ClosedAbove const& c);
std::size_t size012(ClosedAbove const& c);
std::size_t size111(Ucs const& u);
std::size_t size012(Ucs const& u);

/// Order: lam before app, leaf before branch, left size ascending.
std::vector<ClosedAbove> enumerate_closed_above(std::int64_t n);
/// Throws InvalidSize for n < 2. Sizes without members give an empty list.
std::vector<Ucs> enumerate_ucs(std::int64_t n);

// Ucs: L(ca) | A(ucs,ucs); ca: V | B(ca,ca)
std::string to_string(ClosedAbove const& c);
std::string to_string(Ucs const& u);
ClosedAbove parse_closed_above(std::string_view text);
Ucs parse_ucs(std::string_view text);
std::ostream& operator<<(std::ostream& os, Ucs const& u);

using UcsFamily = FamilyHandle<Motzkin, Ucs>;

UcsFamily ucs_family();

}  // namespace lamfam
