#pragma once

#include <cstddef>
#include <cstdint>
#include <stdexcept>
#include <string>

namespace lamfam {

// Root of every exception thrown by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class InvalidSize : public Error {
 public:
  InvalidSize(std::string const& what_enumerated, std::int64_t size, std::int64_t minimum)
      : Error(what_enumerated + ": invalid size " + std::to_string(size) + " (minimum " +
              std::to_string(minimum) + ")"),
        size_(size) {}

  std::int64_t size() const noexcept { return size_; }

 private:
  std::int64_t size_;
};

/// A base value was offered to a family whose filter rejects it.
class NotInFamily : public Error {
 public:
  NotInFamily(std::string family, std::string value)
      : Error("NotInFamily: " + value + " is not a member of family '" + family + "'"),
        family_(std::move(family)),
        value_(std::move(value)) {}

  std::string const& family() const noexcept { return family_; }
  std::string const& value() const noexcept { return value_; }

 private:
  std::string family_;
  std::string value_;
};

/// to_base produced a value the filter rejects. Always a descriptor bug.
class ConverterBroken : public Error {
 public:
  ConverterBroken(std::string const& family, std::string const& structured, std::string const& base)
      : Error("ConverterBroken: family '" + family + "' maps " + structured + " to " + base +
              ", which fails the filter") {}
};

class EnumeratorMissing : public Error {
 public:
  explicit EnumeratorMissing(std::string const& family)
      : Error("EnumeratorMissing: family '" + family + "' has no enumerators") {}
};

// Paths are rendered as dotted child selectors from the root, e.g. "root.left.body".

class NotClosable : public Error {
 public:
  NotClosable(std::string const& term, std::string path)
      : Error("NotClosable: " + term + " has a binder-free path to the leaf at " + path),
        path_(std::move(path)) {}

  std::string const& path() const noexcept { return path_; }

 private:
  std::string path_;
};

class NotUcs : public Error {
 public:
  NotUcs(std::string const& term, std::string path, std::size_t binders)
      : Error("NotUcs: " + term + " has " + std::to_string(binders) +
              " unary nodes on the path to " + path + " (exactly one required)"),
        path_(std::move(path)),
        binders_(binders) {}

  std::string const& path() const noexcept { return path_; }
  std::size_t binders() const noexcept { return binders_; }

 private:
  std::string path_;
  std::size_t binders_;
};

class NotOpen : public Error {
 public:
  NotOpen(std::string path, std::uint64_t index, std::uint64_t available)
      : Error("NotOpen: var(" + std::to_string(index) + ") at " + path + " but only " +
              std::to_string(available) + " binders are available"),
        path_(std::move(path)),
        index_(index),
        available_(available) {}

  std::string const& path() const noexcept { return path_; }
  std::uint64_t index() const noexcept { return index_; }
  std::uint64_t available() const noexcept { return available_; }

 private:
  std::string path_;
  std::uint64_t index_;
  std::uint64_t available_;
};

class ParseError : public Error {
 public:
  ParseError(std::size_t position, std::string const& message)
      : Error("parse error at position " + std::to_string(position) + ": " + message),
        position_(position) {}

  std::size_t position() const noexcept { return position_; }

 private:
  std::size_t position_;
};

}  // namespace lamfam
