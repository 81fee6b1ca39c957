#include "lamfam/gen.hpp"

namespace lamfam {

Motzkin gen_motzkin(unsigned fuel, Rng& rng) {
  if (fuel == 0) return Motzkin::v();
  switch (rng.below(3)) {
    case 0:
      return Motzkin::v();
    case 1:
      return Motzkin::l(gen_motzkin(fuel - 1, rng));
    default: {
      auto left = gen_motzkin(fuel - 1, rng);
      auto right = gen_motzkin(fuel - 1, rng);
      return Motzkin::a(std::move(left), std::move(right));
    }
  }
}

Lmt gen_lmt(unsigned fuel, Rng& rng, std::uint64_t index_bound) {
  auto leaf = [&] { return Lmt::var(rng.below(index_bound + 1)); };
  if (fuel == 0) return leaf();
  switch (rng.below(3)) {
    case 0:
      return leaf();
    case 1:
      return Lmt::lam(gen_lmt(fuel - 1, rng, index_bound));
    default: {
      auto left = gen_lmt(fuel - 1, rng, index_bound);
      auto right = gen_lmt(fuel - 1, rng, index_bound);
      return Lmt::app(std::move(left), std::move(right));
    }
  }
}

Closable gen_closable(unsigned fuel, Rng& rng) {
  if (fuel == 0) return Closable::lam(gen_motzkin(0, rng));
  if (rng.below(2) == 0) return Closable::lam(gen_motzkin(fuel - 1, rng));
  auto left = gen_closable(fuel - 1, rng);
  auto right = gen_closable(fuel - 1, rng);
  return Closable::app(std::move(left), std::move(right));
}

ClosedAbove gen_closed_above(unsigned fuel, Rng& rng) {
  if (fuel == 0 || rng.below(2) == 0) return ClosedAbove::leaf();
  auto left = gen_closed_above(fuel - 1, rng);
  auto right = gen_closed_above(fuel - 1, rng);
  return ClosedAbove::branch(std::move(left), std::move(right));
}

Ucs gen_ucs(unsigned fuel, Rng& rng) {
  if (fuel == 0) return Ucs::lam(gen_closed_above(0, rng));
  if (rng.below(2) == 0) return Ucs::lam(gen_closed_above(fuel - 1, rng));
  auto left = gen_ucs(fuel - 1, rng);
  auto right = gen_ucs(fuel - 1, rng);
  return Ucs::app(std::move(left), std::move(right));
}

Motzkin gen_closable_step(unsigned fuel, std::uint64_t unary_above, Rng& rng) {
  // With no binder above, stopping means emitting the default l(v).
  auto stop = [unary_above] { return unary_above == 0 ? Motzkin::l(Motzkin::v()) : Motzkin::v(); };
  if (fuel == 0) return stop();
  switch (rng.below(3)) {
    case 0:
      return stop();
    case 1:
      return Motzkin::l(gen_closable_step(fuel - 1, unary_above + 1, rng));
    default: {
      auto left = gen_closable_step(fuel - 1, unary_above, rng);
      auto right = gen_closable_step(fuel - 1, unary_above, rng);
      return Motzkin::a(std::move(left), std::move(right));
    }
  }
}

Motzkin gen_ucs_step(unsigned fuel, bool binder_above, Rng& rng) {
  auto stop = [binder_above] { return binder_above ? Motzkin::v() : Motzkin::l(Motzkin::v()); };
  if (fuel == 0) return stop();
  if (binder_above) {
    if (rng.below(2) == 0) return stop();
  } else {
    switch (rng.below(3)) {
      case 0:
        return stop();
      case 1:
        return Motzkin::l(gen_ucs_step(fuel - 1, true, rng));
      default:
        break;
    }
  }
  auto left = gen_ucs_step(fuel - 1, binder_above, rng);
  auto right = gen_ucs_step(fuel - 1, binder_above, rng);
  return Motzkin::a(std::move(left), std::move(right));
}

OpenTerm gen_open_term(std::uint64_t m, unsigned fuel, Rng& rng) {
  if (fuel == 0) {
    if (m > 0) return OpenTerm::var(m, rng.below(m));
    return OpenTerm::lam(0, OpenTerm::var(1, 0));
  }
  // Alternatives: [var when m > 0], lam, app.
  std::uint64_t const choices = m > 0 ? 3 : 2;
  std::uint64_t pick = rng.below(choices);
  if (m == 0) ++pick;
  switch (pick) {
    case 0:
      return OpenTerm::var(m, rng.below(m));
    case 1:
      return OpenTerm::lam(m, gen_open_term(m + 1, fuel - 1, rng));
    default: {
      auto left = gen_open_term(m, fuel - 1, rng);
      auto right = gen_open_term(m, fuel - 1, rng);
      return OpenTerm::app(m, left, right);
    }
  }
}

}  // namespace lamfam
