#pragma once

// Test-only reference computations. Nothing here calls into the enumerators
// or predicates under test.

#include <cstdint>
#include <set>
#include <string>
#include <vector>

#include "lamfam/lambda_open.hpp"
#include "lamfam/motzkin.hpp"

namespace oracle {

// Motzkin numbers by the three-term recurrence; trees with n nodes number M(n-1).
inline std::uint64_t motzkin_number(unsigned k) {
  std::vector<std::uint64_t> m = {1, 1};
  for (unsigned i = 2; i <= k; ++i) m.push_back(((2 * i + 1) * m[i - 1] + (3 * i - 3) * m[i - 2]) / (i + 2));
  return m[k];
}

inline std::size_t letters(std::string const& s) {
  std::size_t n = 0;
  for (char c : s) n += (c >= 'a' && c <= 'z') ? 1 : 0;
  return n;
}

// Every Motzkin text with at most max_size nodes, by saturating {v} under
// the two constructors. Counts nodes as lowercase letters.
inline std::set<std::string> motzkin_closure(std::size_t max_size) {
  std::set<std::string> all = {"v"};
  for (bool grew = true; grew;) {
    grew = false;
    std::vector<std::string> snapshot(all.begin(), all.end());
    for (auto const& x : snapshot) {
      if (letters(x) + 1 <= max_size) grew |= all.insert("l(" + x + ")").second;
      for (auto const& y : snapshot) {
        if (letters(x) + letters(y) + 1 <= max_size) grew |= all.insert("a(" + x + "," + y + ")").second;
      }
    }
  }
  return all;
}

inline std::set<std::string> motzkin_of_size(std::size_t n) {
  std::set<std::string> out;
  for (auto const& s : motzkin_closure(n)) {
    if (letters(s) == n) out.insert(s);
  }
  return out;
}

// Free de Bruijn indices checked with an explicit binder counter.
inline bool open_by_walk(std::uint64_t m, lamfam::Lmt const& t) {
  struct Frame {
    lamfam::Lmt const* node;
    std::uint64_t binders;
  };
  std::vector<Frame> stack = {{&t, m}};
  while (!stack.empty()) {
    auto [node, binders] = stack.back();
    stack.pop_back();
    switch (node->kind()) {
      case lamfam::Lmt::Kind::Var:
        if (node->index() >= binders) return false;
        break;
      case lamfam::Lmt::Kind::Lam:
        stack.push_back({&node->body(), binders + 1});
        break;
      case lamfam::Lmt::Kind::App:
        stack.push_back({&node->left(), binders});
        stack.push_back({&node->right(), binders});
        break;
    }
  }
  return true;
}

// Every lambda term of exactly n nodes with indices below index_limit,
// built bottom-up by size.
inline std::vector<lamfam::Lmt> lmt_bounded(std::size_t n, std::uint64_t index_limit) {
  std::vector<std::vector<lamfam::Lmt>> by(n + 1);
  for (std::uint64_t i = 0; i < index_limit; ++i) by[1].push_back(lamfam::Lmt::var(i));
  for (std::size_t k = 2; k <= n; ++k) {
    for (auto const& b : by[k - 1]) by[k].push_back(lamfam::Lmt::lam(b));
    for (std::size_t a = 1; a + 1 < k; ++a) {
      for (auto const& x : by[a]) {
        for (auto const& y : by[k - 1 - a]) by[k].push_back(lamfam::Lmt::app(x, y));
      }
    }
  }
  return by[n];
}

}  // namespace oracle
