#pragma once

// A family pairs a base type restricted by a decidable filter with a
// structured type whose values are exactly the filtered base values. This
// header provides the descriptor, the filter-certified wrapper, both
// converters between them, and an audit that re-verifies a descriptor's
// claims by exhaustive enumeration.

#include <cstdint>
#include <functional>
#include <memory>
#include <string>
#include <utility>
#include <vector>

#include "lamfam/count.hpp"
#include "lamfam/error.hpp"
#include "lamfam/rng.hpp"

namespace lamfam {

template <typename Base, typename Structured>
struct FamilyDescriptor {
  using base_type = Base;
  using structured_type = Structured;

  std::string name;
  std::function<bool(Base const&)> filter;
  /// Defined exactly where filter holds; throws a lamfam::Error elsewhere.
  std::function<Structured(Base const&)> to_structured;
  std::function<Base(Structured const&)> to_base;
  Base default_base;

  std::function<std::size_t(Base const&)> size_base;
  std::function<std::size_t(Structured const&)> size_structured;

  /// Finite candidates of a given size, filtered or not. The audit applies
  /// the filter itself. Either may be left empty.
  std::function<std::vector<Base>(std::size_t)> enumerate_base;
  std::function<std::vector<Structured>(std::size_t)> enumerate_structured;

  std::function<bool(Base const&, Base const&)> equal_base = std::equal_to<>{};
  std::function<bool(Structured const&, Structured const&)> equal_structured = std::equal_to<>{};

  std::function<std::string(Base const&)> show_base;
  std::function<std::string(Structured const&)> show_structured;

  /// Unfiltered generator of base values, used by generate-and-test.
  SizedGenerator<Base> generate_base;
};

template <typename Base, typename Structured>
using FamilyHandle = std::shared_ptr<FamilyDescriptor<Base, Structured> const>;

/// A family indexed by a natural number (the openness of open terms).
template <typename Base, typename Structured>
struct ParamFamilyDescriptor {
  std::string name;
  std::function<FamilyHandle<Base, Structured>(std::uint64_t)> instantiate;

  FamilyHandle<Base, Structured> at(std::uint64_t m) const { return instantiate(m); }
};

/// A base value together with the knowledge that its family's filter holds.
/// Only validate() and structured_to_rec() construct one. Equality compares
/// values; the owning family is not part of identity.
template <typename Base, typename Structured>
class Validated {
 public:
  using Family = FamilyDescriptor<Base, Structured>;

  Base const& value() const noexcept { return value_; }
  Family const& family() const noexcept { return *family_; }
  FamilyHandle<Base, Structured> const& family_handle() const noexcept { return family_; }

  operator Base const&() const noexcept { return value_; }

  friend bool operator==(Validated const& x, Validated const& y) {
    return x.family_->equal_base(x.value_, y.value_);
  }

 private:
  Validated(FamilyHandle<Base, Structured> family, Base value)
      : family_(std::move(family)), value_(std::move(value)) {}

  template <typename B, typename S>
  friend Validated<B, S> validate(FamilyHandle<B, S> const&, B);
  template <typename B, typename S>
  friend Validated<B, S> structured_to_rec(FamilyHandle<B, S> const&, S const&);

  FamilyHandle<Base, Structured> family_;
  Base value_;
};

namespace detail {

template <typename T, typename Show>
std::string show_or(Show const& show, T const& value) {
  return show ? show(value) : std::string("<value>");
}

}  // namespace detail

/// Throws NotInFamily when the filter rejects x.
template <typename Base, typename Structured>
Validated<Base, Structured> validate(FamilyHandle<Base, Structured> const& fd, Base x) {
  if (!fd->filter(x)) throw NotInFamily(fd->name, detail::show_or(fd->show_base, x));
  return Validated<Base, Structured>(fd, std::move(x));
}

template <typename Base, typename Structured>
Structured rec_to_structured(Validated<Base, Structured> const& w) {
  return w.family().to_structured(w.value());
}

/// Throws ConverterBroken if to_base(s) fails the filter.
template <typename Base, typename Structured>
Validated<Base, Structured> structured_to_rec(FamilyHandle<Base, Structured> const& fd,
                                              Structured const& s) {
  Base b = fd->to_base(s);
  if (!fd->filter(b)) {
    throw ConverterBroken(fd->name, detail::show_or(fd->show_structured, s),
                          detail::show_or(fd->show_base, b));
  }
  return Validated<Base, Structured>(fd, std::move(b));
}

template <typename Base, typename Structured>
bool roundtrip_rec(Validated<Base, Structured> const& w) {
  auto back = structured_to_rec(w.family_handle(), rec_to_structured(w));
  return w.family().equal_base(back.value(), w.value());
}

template <typename Base, typename Structured>
bool roundtrip_structured(FamilyHandle<Base, Structured> const& fd, Structured const& s) {
  auto there = structured_to_rec(fd, s);
  return fd->equal_structured(rec_to_structured(there), s);
}

// Audit.

struct AuditSize {
  std::size_t n = 0;
  Count base_count = 0;        // filtered base values of size n
  Count structured_count = 0;  // structured values of size n
  Count rec_roundtrips_passed = 0;
  Count structured_roundtrips_passed = 0;
  Count invariant_violations = 0;

  bool counts_equal() const noexcept { return base_count == structured_count; }
  bool roundtrips_ok() const noexcept {
    return rec_roundtrips_passed == base_count &&
           structured_roundtrips_passed == structured_count && invariant_violations == 0;
  }
};

struct AuditReport {
  std::string family;
  bool default_ok = false;
  std::vector<AuditSize> sizes;
  std::vector<std::string> problems;  // first few, for diagnostics
  bool pass = false;
};

namespace detail {

inline void note(AuditReport& report, std::string problem) {
  constexpr std::size_t kMaxProblems = 16;
  if (report.problems.size() < kMaxProblems) report.problems.push_back(std::move(problem));
}

}  // namespace detail

/// Checks, for each size 1..max_size, that the filtered base values and the
/// structured values are equinumerous, that both converters round-trip, and
/// that the descriptor's invariants hold. Throws EnumeratorMissing when
/// either enumerator is absent.
template <typename Base, typename Structured>
AuditReport audit_family(FamilyHandle<Base, Structured> const& fd, std::size_t max_size) {
  if (!fd->enumerate_base || !fd->enumerate_structured) throw EnumeratorMissing(fd->name);

  AuditReport report;
  report.family = fd->name;
  report.default_ok = fd->filter(fd->default_base);
  if (!report.default_ok) {
    detail::note(report, "default " + detail::show_or(fd->show_base, fd->default_base) +
                             " fails the filter");
  }

  for (std::size_t n = 1; n <= max_size; ++n) {
    AuditSize row;
    row.n = n;

    for (auto const& b : fd->enumerate_base(n)) {
      if (fd->size_base(b) != n) {
        ++row.invariant_violations;
        detail::note(report, "base enumerator returned wrong size: " + detail::show_or(fd->show_base, b));
        continue;
      }
      if (!fd->filter(b)) {
        // to_structured must be undefined outside the filter.
        bool threw = false;
        try {
          (void)fd->to_structured(b);
        } catch (Error const&) {
          threw = true;
        }
        if (!threw) {
          ++row.invariant_violations;
          detail::note(report, "to_structured accepted filtered-out " + detail::show_or(fd->show_base, b));
        }
        continue;
      }
      ++row.base_count;
      try {
        if (roundtrip_rec(validate(fd, b))) {
          ++row.rec_roundtrips_passed;
        } else {
          detail::note(report, "rec roundtrip failed on " + detail::show_or(fd->show_base, b));
        }
      } catch (Error const& e) {
        detail::note(report, e.what());
      }
    }

    for (auto const& s : fd->enumerate_structured(n)) {
      ++row.structured_count;
      if (fd->size_structured(s) != n) {
        ++row.invariant_violations;
        detail::note(report, "structured enumerator returned wrong size: " +
                                 detail::show_or(fd->show_structured, s));
      }
      Base b = fd->to_base(s);
      if (!fd->filter(b) || fd->size_base(b) != n) {
        ++row.invariant_violations;
        detail::note(report, "to_base broke the filter or size on " + detail::show_or(fd->show_structured, s));
        continue;
      }
      if (roundtrip_structured(fd, s)) {
        ++row.structured_roundtrips_passed;
      } else {
        detail::note(report, "structured roundtrip failed on " + detail::show_or(fd->show_structured, s));
      }
    }

    if (!row.counts_equal()) {
      detail::note(report, "size " + std::to_string(n) + ": " + std::to_string(row.base_count) +
                               " base vs " + std::to_string(row.structured_count) + " structured");
    }
    report.sizes.push_back(row);
  }

  report.pass = report.default_ok;
  for (auto const& row : report.sizes) report.pass = report.pass && row.counts_equal() && row.roundtrips_ok();
  return report;
}

}  // namespace lamfam
