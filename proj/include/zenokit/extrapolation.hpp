#pragma once

#include <algorithm>
#include <array>
#include <cstdint>
#include <limits>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "zenokit/dbm.hpp"
#include "zenokit/model.hpp"

namespace zenokit {

enum class Variant { Plain, Plus };

/// One of the eight abstractions: a plain or improved variant paired with a bound profile.
struct AbstractionKind {
  Variant variant = Variant::Plain;
  ProfileKind profile = ProfileKind::LU;

  friend bool operator==(const AbstractionKind&, const AbstractionKind&) = default;
};

namespace abstraction {
inline constexpr AbstractionKind kM{Variant::Plain, ProfileKind::M};
inline constexpr AbstractionKind kMPlus{Variant::Plus, ProfileKind::M};
inline constexpr AbstractionKind kLU{Variant::Plain, ProfileKind::LU};
inline constexpr AbstractionKind kLUPlus{Variant::Plus, ProfileKind::LU};
inline constexpr AbstractionKind kWeakL{Variant::Plain, ProfileKind::WeakL};
inline constexpr AbstractionKind kWeakLPlus{Variant::Plus, ProfileKind::WeakL};
inline constexpr AbstractionKind kWeakU{Variant::Plain, ProfileKind::WeakU};
inline constexpr AbstractionKind kWeakUPlus{Variant::Plus, ProfileKind::WeakU};

/// All eight, in the order the command line lists them.
inline constexpr std::array<AbstractionKind, 8> kAll{kM, kMPlus, kLU, kLUPlus, kWeakL, kWeakLPlus, kWeakU, kWeakUPlus};
}  // namespace abstraction

/// Command-line spelling: m, m+, lu, lu+, lbar-u, lbar-u+, l-ubar, l-ubar+.
std::string to_string(AbstractionKind k);
std::optional<AbstractionKind> parse_abstraction(std::string_view name);

/// Kinds that preserve x >= 1 for lifted clocks.
bool is_lift_safe(AbstractionKind k);
/// Kinds that preserve x <= y among relevant clocks that can be zero.
bool is_weakly_order_preserving(AbstractionKind k);

namespace detail {

/// The entrywise case analysis, without the final closure. Expects a
/// canonical non-empty zone of non-negative clocks.
template <typename Scalar>
BasicDbm<Scalar> extrapolate_entries(Variant variant, const BasicDbm<Scalar>& z, const BoundProfile& bounds) {
  using B = BasicBound<Scalar>;
  constexpr Scalar inf = B::kInfinityRaw;
  constexpr std::int64_t kNever = std::numeric_limits<std::int64_t>::max();
  constexpr std::int64_t kAlways = std::numeric_limits<std::int64_t>::min();
  const Eigen::Index n = z.dimension();
  const Scalar* src = z.matrix().data();

  // On raw entries r (value r >> 1): "c > L" is r > 2L+1 and "-c > U" is
  // r < -2U. A missing bound (-inf) makes the test always true.
  std::array<std::int64_t, kMaxClocks + 1> above_l, below_u;
  std::array<Scalar, kMaxClocks + 1> relaxed;  // (-U, <) or infinity
  std::array<bool, kMaxClocks + 1> row_free, col_free;
  for (Eigen::Index x = 0; x < n; ++x) {
    const BoundValue& l = bounds.lower[x];
    const BoundValue& u = bounds.upper[x];
    const std::int64_t c0x = src[x * n] >> 1;  // Z_{0x}
    above_l[x] = kAlways;
    below_u[x] = kNever;
    relaxed[x] = inf;
    row_free[x] = col_free[x] = true;
    if (l) {
      above_l[x] = 2 * std::int64_t{*l} + 1;
      row_free[x] = -c0x > *l;
    }
    if (u) {
      below_u[x] = -2 * std::int64_t{*u};
      relaxed[x] = B::strict(static_cast<Scalar>(-*u)).raw();
      col_free[x] = -c0x > *u;
    }
  }

  BasicDbm<Scalar> out = z;
  Scalar* d = out.matrix().data();
  for (Eigen::Index j = 0; j < n; ++j) {
    for (Eigen::Index i = 0; i < n; ++i) {
      const Scalar r = src[i + j * n];
      if (i == j || r == inf) continue;
      Scalar& e = d[i + j * n];
      if (variant == Variant::Plain) {
        if (r > above_l[i])
          e = inf;
        else if (r < below_u[j])
          e = relaxed[j];
      } else {
        if (r > above_l[i] || row_free[i])
          e = inf;
        else if (col_free[j])
          e = i != 0 ? inf : relaxed[j];
      }
    }
  }
  // Valuations stay non-negative: a relaxed lower bound never drops below x >= 0.
  for (Eigen::Index j = 1; j < n; ++j) d[j * n] = std::min(d[j * n], B::zero().raw());
  return out;
}

/// Closes `relaxed`, which is entrywise no tighter than the canonical
/// `before` and describes a non-empty zone. Entries left unchanged already
/// hold their shortest path (a path in `relaxed` is no shorter than in
/// `before`), so Floyd-Warshall only has to update the changed ones.
template <typename Scalar>
void close_relaxed(BasicDbm<Scalar>& relaxed, const BasicDbm<Scalar>& before) {
  constexpr Scalar inf = BasicBound<Scalar>::kInfinityRaw;
  const Eigen::Index n = relaxed.dimension();
  Scalar* d = relaxed.matrix().data();
  const Scalar* b = before.matrix().data();
  thread_local std::vector<std::pair<Eigen::Index, Eigen::Index>> changed;  // (i, j * n)
  changed.clear();
  for (Eigen::Index j = 0; j < n; ++j)
    for (Eigen::Index i = 0; i < n; ++i)
      if (d[i + j * n] != b[i + j * n]) changed.emplace_back(i, j * n);
  for (Eigen::Index k = 0; k < n; ++k) {
    const Scalar* ck = d + k * n;
    for (const auto& [i, jn] : changed) {
      const Scalar ik = ck[i], kj = d[k + jn];
      if (ik == inf || kj == inf) continue;
      const Scalar via = raw_add(ik, kj);
      if (via < d[i + jn]) d[i + jn] = via;
    }
  }
}

template <typename Scalar>
void check_extrapolation_input(AbstractionKind kind, const BasicDbm<Scalar>& z, const BoundProfile& bounds) {
  if (z.is_empty_marker()) throw std::invalid_argument("extrapolate: empty zone");
  if (bounds.kind != kind.profile) throw std::invalid_argument("extrapolate: bound profile does not match abstraction");
  if (bounds.lower.size() != static_cast<std::size_t>(z.dimension()) ||
      bounds.upper.size() != static_cast<std::size_t>(z.dimension()))
    throw std::invalid_argument("extrapolate: bound profile dimension mismatch");
  if (!(canonicalize(z) == z)) throw std::invalid_argument("extrapolate: zone is not canonical");
}

}  // namespace detail

/// abs(Z) for the chosen abstraction, returned canonical. No input checks;
/// callers guarantee a canonical non-empty zone and a matching profile.
template <typename Scalar>
BasicDbm<Scalar> extrapolate_canonical(AbstractionKind kind, const BasicDbm<Scalar>& z, const BoundProfile& bounds) {
  BasicDbm<Scalar> out = detail::extrapolate_entries(kind.variant, z, bounds);
  detail::close_relaxed(out, z);
  return out;
}

/// abs(Z). Rejects empty or non-canonical zones and mismatched profiles.
template <typename Scalar>
BasicDbm<Scalar> extrapolate(AbstractionKind kind, const BasicDbm<Scalar>& z, const BoundProfile& bounds) {
  detail::check_extrapolation_input(kind, z, bounds);
  return extrapolate_canonical(kind, z, bounds);
}

}  // namespace zenokit
