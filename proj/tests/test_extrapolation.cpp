#include <doctest.h>

#include <random>

#include "fixtures.hpp"
#include "zenokit/extrapolation.hpp"

using namespace zenokit;

namespace {

BoundProfile profile(ProfileKind kind, std::vector<BoundValue> lower, std::vector<BoundValue> upper) {
  BoundProfile p;
  p.kind = kind;
  p.lower = std::move(lower);
  p.upper = std::move(upper);
  return p;
}

BoundProfile as_m(const BoundProfile& lu) {
  BoundProfile m = lu;
  m.kind = ProfileKind::M;
  for (std::size_t x = 0; x < m.lower.size(); ++x) {
    const auto& l = lu.lower[x];
    const auto& u = lu.upper[x];
    m.lower[x] = m.upper[x] = !l ? u : !u ? l : std::max(*l, *u);
  }
  return m;
}

BoundProfile with_kind(BoundProfile p, ProfileKind k) {
  p.kind = k;
  return p;
}

Dbm nonneg_with(ClockIndex n, std::initializer_list<DifferenceConstraint> atoms) {
  return constrain(Dbm::nonnegative(n), std::span<const DifferenceConstraint>(atoms.begin(), atoms.size()));
}

}  // namespace

TEST_CASE("abstraction names") {
  const std::vector<std::string> names{"m", "m+", "lu", "lu+", "lbar-u", "lbar-u+", "l-ubar", "l-ubar+"};
  for (std::size_t i = 0; i < names.size(); ++i) {
    CHECK(to_string(abstraction::kAll[i]) == names[i]);
    CHECK(parse_abstraction(names[i]) == abstraction::kAll[i]);
  }
  CHECK_FALSE(parse_abstraction("LU").has_value());
  CHECK_FALSE(parse_abstraction("extra-lu").has_value());
  CHECK(is_lift_safe(abstraction::kWeakUPlus));
  CHECK_FALSE(is_lift_safe(abstraction::kLU));
  CHECK(is_weakly_order_preserving(abstraction::kWeakL));
  CHECK_FALSE(is_weakly_order_preserving(abstraction::kLUPlus));
}

TEST_CASE("extrapolation of the diagonal zones of A_inf") {
  // M(x1) = -inf, M(x2) = 1.
  const BoundProfile m = profile(ProfileKind::M, {0, std::nullopt, 1}, {0, std::nullopt, 1});
  for (int k = 0; k <= 5; ++k) {
    const Dbm zk = nonneg_with(2, {diff_le(1, 2, k), diff_le(2, 1, -k)});
    const Dbm out = extrapolate(abstraction::kM, zk, m);
    CHECK(out == Dbm::nonnegative(2));
    CHECK(includes(out, zk));
  }
}

TEST_CASE("plain LU flattens the reduction zones") {
  const TimedAutomaton anz = gen_nz_automaton(fixtures::example_formula());
  const BoundProfile lu = compute_bound_profile(anz, ProfileKind::LU);
  const ClockIndex n = anz.num_clocks();
  ClockSet x1;
  x1.insert(1);
  const Dbm ordered = up(reset(up(Dbm::origin(n)), x1));
  CHECK(extrapolate(abstraction::kLU, ordered, lu) == Dbm::nonnegative(n));

  const TimedAutomaton az = gen_z_automaton(fixtures::example_formula());
  const BoundProfile az_lu = compute_bound_profile(az, ProfileKind::LU);
  const Dbm lifted = nonneg_with(az.num_clocks(), {clock_ge(1, 1)});
  CHECK(extrapolate(abstraction::kLU, lifted, az_lu) == Dbm::nonnegative(az.num_clocks()));
}

TEST_CASE("input checks") {
  const BoundProfile lu = profile(ProfileKind::LU, {0, 1}, {0, 1});
  CHECK_THROWS_AS(extrapolate(abstraction::kLU, Dbm::empty(1), lu), std::invalid_argument);
  CHECK_THROWS_AS(extrapolate(abstraction::kM, Dbm::nonnegative(1), lu), std::invalid_argument);
  CHECK_THROWS_AS(extrapolate(abstraction::kLU, Dbm::nonnegative(2), lu), std::invalid_argument);
  // x1 <= 3 and x2 <= x1 without the implied x2 <= 3.
  const Dbm loose = Dbm::from_bounds(2, [](ClockIndex i, ClockIndex j) {
    if (i == j || i == 0) return Bound::zero();
    if (i == 1 && j == 0) return Bound::weak(3);
    if (i == 2 && j == 1) return Bound::zero();
    return Bound::infinity();
  });
  const BoundProfile lu2 = profile(ProfileKind::LU, {0, 1, 1}, {0, 1, 1});
  CHECK_THROWS_AS(extrapolate(abstraction::kLU, loose, lu2), std::invalid_argument);
  CHECK_NOTHROW(extrapolate(abstraction::kLU, canonicalize(loose), lu2));
}

TEST_CASE("extensive, idempotent and finite-range on random zones") {
  std::mt19937 rng(101);
  const std::array kinds{ProfileKind::M, ProfileKind::LU, ProfileKind::WeakL, ProfileKind::WeakU};
  for (int round = 0; round < 400; ++round) {
    const ClockIndex n = static_cast<ClockIndex>(1 + round % 4);
    const Dbm z = fixtures::random_zone(rng, n, 8);
    const ProfileKind pk = kinds[round % kinds.size()];
    const BoundProfile p = fixtures::random_profile(rng, n, pk, 8);
    for (Variant v : {Variant::Plain, Variant::Plus}) {
      const AbstractionKind kind{v, pk};
      const Dbm a = extrapolate(kind, z, p);
      CHECK(includes(a, z));
      CHECK(extrapolate(kind, a, p) == a);
      const Dbm raw = detail::extrapolate_entries(v, z, p);
      for (ClockIndex i = 0; i <= n; ++i)
        for (ClockIndex j = 0; j <= n; ++j) {
          const Bound b = raw(i, j);
          if (b.is_infinity()) continue;
          CHECK(std::abs(b.value()) <= p.max_constant());
        }
      for (ClockIndex j = 1; j <= n; ++j) CHECK(a(0, j) <= Bound::zero());
    }
  }
}

TEST_CASE("inclusion hierarchy between the four standard abstractions") {
  std::mt19937 rng(103);
  for (int round = 0; round < 400; ++round) {
    const ClockIndex n = static_cast<ClockIndex>(1 + round % 4);
    const Dbm z = fixtures::random_zone(rng, n, 8);
    const BoundProfile lu = fixtures::random_profile(rng, n, ProfileKind::LU, 8);
    const BoundProfile m = as_m(lu);
    const Dbm em = extrapolate(abstraction::kM, z, m);
    const Dbm emp = extrapolate(abstraction::kMPlus, z, m);
    const Dbm elu = extrapolate(abstraction::kLU, z, lu);
    const Dbm elup = extrapolate(abstraction::kLUPlus, z, lu);
    CHECK(includes(emp, em));
    CHECK(includes(elup, elu));
    CHECK(includes(elup, emp));
    CHECK(includes(elu, em));
  }
}

TEST_CASE("weak order preservation for m, m+ and lbar-u") {
  std::mt19937 rng(107);
  for (int round = 0; round < 600; ++round) {
    const ClockIndex n = static_cast<ClockIndex>(2 + round % 3);
    const Dbm z = fixtures::random_zone(rng, n, 6);
    BoundProfile lu = fixtures::random_profile(rng, n, ProfileKind::LU, 6);
    // A relevant clock has a zero check, so its upper bound is at least 0.
    ClockSet rl;
    for (ClockIndex x = 1; x <= n; ++x)
      if (rng() % 2) {
        rl.insert(x);
        if (!lu.upper[x]) lu.upper[x] = 0;
      }
    BoundProfile weak_l = with_kind(lu, ProfileKind::WeakL);
    for (ClockIndex x : rl.members())
      if (!weak_l.lower[x]) weak_l.lower[x] = 0;

    const ClockSet candidates = rl & zero_clocks(z);
    for (AbstractionKind kind :
         {abstraction::kM, abstraction::kMPlus, abstraction::kWeakL, abstraction::kWeakLPlus}) {
      const BoundProfile& p = kind.profile == ProfileKind::M ? as_m(lu) : weak_l;
      const Dbm a = extrapolate(kind, z, p);
      for (ClockIndex x : candidates.members())
        for (ClockIndex y : candidates.members()) {
          if (x == y) continue;
          INFO("kind " << to_string(kind) << " x" << x << " <= x" << y << "\n" << z);
          CHECK(entails(z, diff_le(x, y, 0)) == entails(a, diff_le(x, y, 0)));
        }
    }
  }
}

TEST_CASE("lift safety for m, m+ and l-ubar") {
  std::mt19937 rng(109);
  for (int round = 0; round < 600; ++round) {
    const ClockIndex n = static_cast<ClockIndex>(1 + round % 4);
    const Dbm z = fixtures::random_zone(rng, n, 6);
    BoundProfile lu = fixtures::random_profile(rng, n, ProfileKind::LU, 6);
    // A lifted clock has an atom implying x >= 1, so L(x) >= 1.
    ClockSet lf;
    for (ClockIndex x = 1; x <= n; ++x)
      if (rng() % 2) {
        lf.insert(x);
        if (!lu.lower[x] || *lu.lower[x] < 1) lu.lower[x] = 1;
      }
    BoundProfile weak_u = with_kind(lu, ProfileKind::WeakU);
    for (ClockIndex x = 1; x <= n; ++x)
      if (weak_u.lower[x] && *weak_u.lower[x] >= 1 && (!weak_u.upper[x] || *weak_u.upper[x] < 1)) weak_u.upper[x] = 1;

    for (AbstractionKind kind :
         {abstraction::kM, abstraction::kMPlus, abstraction::kWeakU, abstraction::kWeakUPlus}) {
      const BoundProfile p = kind.profile == ProfileKind::M ? as_m(lu) : weak_u;
      const Dbm a = extrapolate(kind, z, p);
      for (ClockIndex x : lf.members()) {
        INFO("kind " << to_string(kind) << " x" << x << "\n" << z);
        CHECK(entails(z, clock_ge(x, 1)) == entails(a, clock_ge(x, 1)));
      }
    }
  }
}

TEST_CASE("plain lu is neither order preserving nor lift safe") {
  const TimedAutomaton anz = gen_nz_automaton(fixtures::example_formula());
  const ClockIndex n = anz.num_clocks();
  ClockSet x1;
  x1.insert(1);
  const Dbm ordered = up(reset(up(Dbm::origin(n)), x1));
  const Dbm anz_abs = extrapolate(abstraction::kLU, ordered, compute_bound_profile(anz, ProfileKind::LU));
  CHECK(entails(ordered, diff_le(1, 2, 0)));
  CHECK_FALSE(entails(anz_abs, diff_le(1, 2, 0)));
  // The weak lower bound keeps the order.
  const Dbm anz_weak = extrapolate(abstraction::kWeakL, ordered, compute_bound_profile(anz, ProfileKind::WeakL));
  CHECK(entails(anz_weak, diff_le(1, 2, 0)));

  const TimedAutomaton az = gen_z_automaton(fixtures::example_formula());
  const Dbm lifted = nonneg_with(az.num_clocks(), {clock_ge(1, 1)});
  CHECK_FALSE(entails(extrapolate(abstraction::kLU, lifted, compute_bound_profile(az, ProfileKind::LU)), clock_ge(1, 1)));
  CHECK(entails(extrapolate(abstraction::kWeakU, lifted, compute_bound_profile(az, ProfileKind::WeakU)),
                clock_ge(1, 1)));
}
