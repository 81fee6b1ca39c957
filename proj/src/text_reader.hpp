#pragma once

// Tokenizer shared by the canonical-grammar parsers. Whitespace is skipped
// between every pair of tokens.

#include <cctype>
#include <cstdint>
#include <limits>
#include <string>
#include <string_view>

#include "lamfam/error.hpp"

namespace lamfam::detail {

class TextReader {
 public:
  static constexpr std::size_t kMaxDepth = 20000;

  explicit TextReader(std::string_view text) : text_(text) {}

  std::size_t position() const noexcept { return pos_; }

  // Reads a run of ASCII letters; empty when none.
  std::string_view word() {
    skip_ws();
    std::size_t start = pos_;
    while (pos_ < text_.size() && std::isalpha(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    return text_.substr(start, pos_ - start);
  }

  void expect(char c) {
    skip_ws();
    if (pos_ >= text_.size() || text_[pos_] != c) {
      fail(std::string("expected '") + c + "'" + found());
    }
    ++pos_;
  }

  std::uint64_t number() {
    skip_ws();
    std::size_t start = pos_;
    std::uint64_t value = 0;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
      auto digit = static_cast<std::uint64_t>(text_[pos_] - '0');
      if (value > (std::numeric_limits<std::uint64_t>::max() - digit) / 10) {
        throw ParseError(start, "index does not fit in 64 bits");
      }
      value = value * 10 + digit;
      ++pos_;
    }
    if (pos_ == start) fail("expected digits" + found());
    return value;
  }

  void finish() {
    skip_ws();
    if (pos_ != text_.size()) fail("trailing input" + found());
  }

  [[noreturn]] void fail(std::string const& message) const { throw ParseError(pos_, message); }

  [[noreturn]] void unknown(std::string_view got, std::size_t at, std::string_view grammar) const {
    throw ParseError(at, got.empty() ? "expected " + std::string(grammar) + found()
                                     : "unknown constructor '" + std::string(got) +
                                           "', expected " + std::string(grammar));
  }

  // RAII depth guard; recursive-descent parsers call enter() per node.
  class Depth {
   public:
    explicit Depth(TextReader& r) : r_(r) {
      if (++r_.depth_ > kMaxDepth) r_.fail("nesting deeper than " + std::to_string(kMaxDepth));
    }
    ~Depth() { --r_.depth_; }
    Depth(Depth const&) = delete;
    Depth& operator=(Depth const&) = delete;

   private:
    TextReader& r_;
  };

 private:
  void skip_ws() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  std::string found() const {
    if (pos_ >= text_.size()) return ", found end of input";
    return std::string(", found '") + text_[pos_] + "'";
  }

  std::string_view text_;
  std::size_t pos_ = 0;
  std::size_t depth_ = 0;
};

}  // namespace lamfam::detail
