#pragma once

// Seeded random generators. Every generator is a pure function of
// (fuel, parameters, rng state); choices among constructors are uniform and
// only the chosen branch draws further numbers. Binary nodes recurse with
// fuel - 1 on both children, left child first.

#include <cstdint>
#include <utility>

#include "lamfam/closable.hpp"
#include "lamfam/family.hpp"
#include "lamfam/lambda_open.hpp"
#include "lamfam/motzkin.hpp"
#include "lamfam/rng.hpp"
#include "lamfam/ucs.hpp"

namespace lamfam {

inline constexpr unsigned kDefaultFilterMax = 1000;

// Generators shaped like the type definitions: at fuel 0 only
// non-recursive constructors are offered.
Motzkin gen_motzkin(unsigned fuel, Rng& rng);
/// Leaf indices uniform in [0, index_bound].
Lmt gen_lmt(unsigned fuel, Rng& rng, std::uint64_t index_bound);
/// Index bound is the top-level fuel.
inline Lmt gen_lmt(unsigned fuel, Rng& rng) { return gen_lmt(fuel, rng, fuel); }
Closable gen_closable(unsigned fuel, Rng& rng);
ClosedAbove gen_closed_above(unsigned fuel, Rng& rng);
Ucs gen_ucs(unsigned fuel, Rng& rng);

// Hand-written generators that only produce family members.

/// `unary_above` counts the unary nodes already emitted above this point.
Motzkin gen_closable_step(unsigned fuel, std::uint64_t unary_above, Rng& rng);
inline Motzkin gen_closable_struct(unsigned fuel, Rng& rng) { return gen_closable_step(fuel, 0, rng); }

/// `binder_above` is true once the single unary node of the path is placed.
Motzkin gen_ucs_step(unsigned fuel, bool binder_above, Rng& rng);
inline Motzkin gen_ucs_struct(unsigned fuel, Rng& rng) { return gen_ucs_step(fuel, false, rng); }

/// m-open terms built with the OpenTerm smart constructors. At fuel 0 and
/// m == 0 the result is lam(var(0)).
OpenTerm gen_open_term(std::uint64_t m, unsigned fuel, Rng& rng);
inline Lmt gen_open_struct(std::uint64_t m, unsigned fuel, Rng& rng) { return gen_open_term(m, fuel, rng).tree(); }

// Generate and test.

struct FilterStats {
  std::uint64_t attempts = 0;
  std::uint64_t discarded = 0;
  bool exhausted = false;
};

/// Draws from fd's base generator until the filter accepts, at most
/// filter_max times; then falls back to the family default.
template <typename Base, typename Structured>
std::pair<Base, FilterStats> gen_filtered(FamilyHandle<Base, Structured> const& fd, unsigned fuel, Rng& rng,
                                          std::uint64_t filter_max = kDefaultFilterMax) {
  FilterStats stats;
  while (stats.attempts < filter_max) {
    ++stats.attempts;
    Base candidate = fd->generate_base(fuel, rng);
    if (fd->filter(candidate)) return {std::move(candidate), stats};
    ++stats.discarded;
  }
  stats.exhausted = true;
  return {fd->default_base, stats};
}

/// Validated values obtained by converting structured draws.
template <typename Base, typename Structured>
SizedGenerator<Validated<Base, Structured>> gen_from_structured(FamilyHandle<Base, Structured> fd,
                                                                SizedGenerator<Structured> structured) {
  return [fd = std::move(fd), structured = std::move(structured)](unsigned fuel, Rng& rng) {
    return structured_to_rec(fd, structured(fuel, rng));
  };
}

/// Structured values obtained by converting validated draws.
template <typename Base, typename Structured>
SizedGenerator<Structured> gen_from_validated(SizedGenerator<Validated<Base, Structured>> validated) {
  return [validated = std::move(validated)](unsigned fuel, Rng& rng) {
    return rec_to_structured(validated(fuel, rng));
  };
}

}  // namespace lamfam
