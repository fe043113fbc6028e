#pragma once

#include <Eigen/Core>

#include <cstddef>
#include <cstdint>
#include <functional>
#include <ostream>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include "zenokit/bound.hpp"
#include "zenokit/clock_set.hpp"

namespace zenokit {

/// x_i - x_j bounded by `bound`.
template <typename Scalar>
struct BasicDifferenceConstraint {
  ClockIndex i = 0;
  ClockIndex j = 0;
  BasicBound<Scalar> bound;

  /// The constraint describing the complement of this one, as x_j - x_i.
  BasicDifferenceConstraint negated() const { return {j, i, bound.complement()}; }
};

/// Difference bound matrix over clocks x0..xn, where entry (i, j) bounds
/// x_i - x_j. Row and column 0 belong to the reference clock.
///
/// Values are immutable from the outside; every operation in this header
/// returns a fresh canonical matrix. Empty zones are normalized to a single
/// marker so that matrix equality is zone equality.
template <std::signed_integral Scalar>
class BasicDbm {
 public:
  using scalar_type = Scalar;
  using bound_type = BasicBound<Scalar>;
  using Matrix = Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic>;

  BasicDbm() = default;

  /// Unconstrained matrix (every off-diagonal entry infinite).
  static BasicDbm unconstrained(ClockIndex num_clocks) {
    BasicDbm z(num_clocks, bound_type::infinity());
    z.m_.diagonal().setConstant(bound_type::zero().raw());
    return z;
  }

  /// The single valuation with every clock at 0.
  static BasicDbm origin(ClockIndex num_clocks) { return BasicDbm(num_clocks, bound_type::zero()); }

  /// The non-negative orthant, i.e. every x >= 0 and nothing else.
  static BasicDbm nonnegative(ClockIndex num_clocks) {
    BasicDbm z = unconstrained(num_clocks);
    z.m_.row(0).setConstant(bound_type::zero().raw());
    return z;
  }

  static BasicDbm empty(ClockIndex num_clocks) { return BasicDbm(num_clocks, bound_type::strict(0)); }

  /// Builds a matrix from raw entries without closing it.
  static BasicDbm from_bounds(ClockIndex num_clocks, const std::function<bound_type(ClockIndex, ClockIndex)>& entry) {
    BasicDbm z(num_clocks, bound_type::infinity());
    for (Eigen::Index i = 0; i < z.m_.rows(); ++i)
      for (Eigen::Index j = 0; j < z.m_.cols(); ++j)
        z.m_(i, j) = entry(static_cast<ClockIndex>(i), static_cast<ClockIndex>(j)).raw();
    return z;
  }

  ClockIndex num_clocks() const { return m_.rows() == 0 ? 0 : static_cast<ClockIndex>(m_.rows() - 1); }
  Eigen::Index dimension() const { return m_.rows(); }

  bound_type operator()(ClockIndex i, ClockIndex j) const { return bound_type::from_raw(m_(i, j)); }
  void set(ClockIndex i, ClockIndex j, bound_type b) { m_(i, j) = b.raw(); }

  bool is_empty_marker() const { return m_.rows() > 0 && m_(0, 0) < bound_type::zero().raw(); }

  const Matrix& matrix() const { return m_; }
  Matrix& matrix() { return m_; }

  friend bool operator==(const BasicDbm& a, const BasicDbm& b) {
    return a.m_.rows() == b.m_.rows() && a.m_ == b.m_;
  }

  std::size_t hash() const {
    std::uint64_t h = static_cast<std::uint64_t>(m_.rows());
    for (Eigen::Index k = 0; k < m_.size(); ++k)
      h = (h ^ static_cast<std::uint32_t>(m_.data()[k])) * 0x100000001b3ULL;
    return static_cast<std::size_t>(h ^ (h >> 29));
  }

 private:
  BasicDbm(ClockIndex num_clocks, bound_type fill)
      : m_(Matrix::Constant(num_clocks + 1, num_clocks + 1, fill.raw())) {}

  Matrix m_;
};

using Dbm = BasicDbm<std::int32_t>;
using DifferenceConstraint = BasicDifferenceConstraint<std::int32_t>;

namespace detail {

template <typename Scalar>
void require_nonempty(const BasicDbm<Scalar>& z, const char* op) {
  if (z.is_empty_marker()) throw std::invalid_argument(std::string(op) + ": empty zone");
}

/// Raw sum of two finite packed bounds.
template <typename Scalar>
constexpr Scalar raw_add(Scalar a, Scalar b) {
  return static_cast<Scalar>(a + b - ((a | b) & 1));
}

/// Tightens every entry through (i, j) after entry (i, j) changed.
/// Returns false when the zone became empty.
template <typename Scalar>
bool close_through(BasicDbm<Scalar>& z, ClockIndex i, ClockIndex j) {
  using B = BasicBound<Scalar>;
  constexpr Scalar inf = B::kInfinityRaw;
  const Eigen::Index n = z.dimension();
  Scalar* d = z.matrix().data();  // column-major: (r, c) at d[r + c * n]
  const Scalar ij = d[i + j * n];
  const Scalar ji = d[j + i * n];
  if (ji != inf && raw_add(ji, ij) < B::zero().raw()) return false;
  // Row j and column i are read while other entries change; neither can
  // tighten here because the zone stays non-empty.
  for (Eigen::Index l = 0; l < n; ++l) {
    const Scalar jl = d[j + l * n];
    if (jl == inf) continue;
    const Scalar ijl = raw_add(ij, jl);
    Scalar* col = d + l * n;
    const Scalar* ci = d + static_cast<Eigen::Index>(i) * n;
    for (Eigen::Index k = 0; k < n; ++k) {
      const Scalar ki = ci[k];
      if (ki == inf) continue;
      const Scalar via = raw_add(ki, ijl);
      if (via < col[k]) col[k] = via;
    }
  }
  return true;
}

}  // namespace detail

/// All-pairs tightest form. Any negative cycle yields the empty marker.
template <typename Scalar>
BasicDbm<Scalar> canonicalize(BasicDbm<Scalar> z) {
  constexpr Scalar inf = BasicBound<Scalar>::kInfinityRaw;
  constexpr Scalar zero = BasicBound<Scalar>::zero().raw();
  if (z.is_empty_marker()) return BasicDbm<Scalar>::empty(z.num_clocks());
  const Eigen::Index n = z.dimension();
  Scalar* d = z.matrix().data();
  for (Eigen::Index k = 0; k < n; ++k) {
    const Scalar* ck = d + k * n;
    for (Eigen::Index j = 0; j < n; ++j) {
      const Scalar kj = d[k + j * n];
      if (kj == inf) continue;
      Scalar* cj = d + j * n;
      for (Eigen::Index i = 0; i < n; ++i) {
        const Scalar ik = ck[i];
        if (ik == inf) continue;
        const Scalar via = detail::raw_add(ik, kj);
        if (via < cj[i]) cj[i] = via;
      }
    }
    // Stop at the first negative cycle so that entries cannot keep shrinking.
    for (Eigen::Index i = 0; i < n; ++i)
      if (d[i + i * n] < zero) return BasicDbm<Scalar>::empty(z.num_clocks());
  }
  return z;
}

template <typename Scalar>
bool is_empty(const BasicDbm<Scalar>& z) {
  return z.is_empty_marker();
}

/// Time elapse: drops every upper bound x_i - x0.
template <typename Scalar>
BasicDbm<Scalar> up(BasicDbm<Scalar> z) {
  detail::require_nonempty(z, "up");
  for (ClockIndex i = 1; i <= z.num_clocks(); ++i) z.set(i, 0, BasicBound<Scalar>::infinity());
  return z;
}

/// Intersection with a conjunction of difference constraints.
template <typename Scalar>
BasicDbm<Scalar> constrain(BasicDbm<Scalar> z, std::span<const BasicDifferenceConstraint<Scalar>> atoms) {
  if (z.is_empty_marker()) return z;
  for (const auto& a : atoms) {
    if (a.bound >= z(a.i, a.j)) continue;
    z.set(a.i, a.j, a.bound);
    if (!detail::close_through(z, a.i, a.j)) return BasicDbm<Scalar>::empty(z.num_clocks());
  }
  return z;
}

template <typename Scalar>
BasicDbm<Scalar> constrain(BasicDbm<Scalar> z, const BasicDifferenceConstraint<Scalar>& atom) {
  return constrain(std::move(z), std::span<const BasicDifferenceConstraint<Scalar>>(&atom, 1));
}

/// Image of the zone under setting every clock in `clocks` to 0.
template <typename Scalar>
BasicDbm<Scalar> reset(BasicDbm<Scalar> z, ClockSet clocks) {
  detail::require_nonempty(z, "reset");
  const auto n = static_cast<ClockIndex>(z.dimension());
  for (ClockIndex x : clocks.members()) {
    for (ClockIndex j = 0; j < n; ++j) {
      z.set(x, j, z(0, j));
      z.set(j, x, z(j, 0));
    }
    z.set(x, x, BasicBound<Scalar>::zero());
  }
  return z;
}

/// True iff `inner` is a subset of `outer`.
template <typename Scalar>
bool includes(const BasicDbm<Scalar>& outer, const BasicDbm<Scalar>& inner) {
  if (inner.is_empty_marker()) return true;
  if (outer.is_empty_marker()) return false;
  return (inner.matrix().array() <= outer.matrix().array()).all();
}

/// Clocks that can be 0 somewhere in the zone (zone assumed non-negative).
template <typename Scalar>
ClockSet zero_clocks(const BasicDbm<Scalar>& z) {
  detail::require_nonempty(z, "zero_clocks");
  ClockSet out;
  for (ClockIndex x = 1; x <= z.num_clocks(); ++x)
    if (z(0, x) == BasicBound<Scalar>::zero()) out.insert(x);
  return out;
}

/// True iff every valuation of the zone satisfies the constraint.
template <typename Scalar>
bool entails(const BasicDbm<Scalar>& z, const BasicDifferenceConstraint<Scalar>& c) {
  detail::require_nonempty(z, "entails");
  return z(c.i, c.j) <= c.bound;
}

template <typename Scalar>
bool consistent_with(const BasicDbm<Scalar>& z, std::span<const BasicDifferenceConstraint<Scalar>> atoms) {
  return !is_empty(constrain(z, atoms));
}

template <typename Scalar>
bool consistent_with(const BasicDbm<Scalar>& z, std::initializer_list<BasicDifferenceConstraint<Scalar>> atoms) {
  return consistent_with(z, std::span<const BasicDifferenceConstraint<Scalar>>(atoms.begin(), atoms.size()));
}

// Shorthands for the constraint shapes the algorithms ask about.

inline DifferenceConstraint clock_le(ClockIndex x, std::int32_t c) { return {x, 0, Bound::weak(c)}; }
inline DifferenceConstraint clock_lt(ClockIndex x, std::int32_t c) { return {x, 0, Bound::strict(c)}; }
inline DifferenceConstraint clock_ge(ClockIndex x, std::int32_t c) { return {0, x, Bound::weak(-c)}; }
inline DifferenceConstraint clock_gt(ClockIndex x, std::int32_t c) { return {0, x, Bound::strict(-c)}; }
inline DifferenceConstraint diff_le(ClockIndex x, ClockIndex y, std::int32_t c) { return {x, y, Bound::weak(c)}; }

template <typename Scalar>
std::ostream& operator<<(std::ostream& os, const BasicDbm<Scalar>& z) {
  if (z.is_empty_marker()) return os << "empty";
  for (Eigen::Index i = 0; i < z.dimension(); ++i) {
    for (Eigen::Index j = 0; j < z.dimension(); ++j)
      os << (j ? " " : "") << z(static_cast<ClockIndex>(i), static_cast<ClockIndex>(j));
    os << '\n';
  }
  return os;
}

}  // namespace zenokit

template <typename Scalar>
struct std::hash<zenokit::BasicDbm<Scalar>> {
  std::size_t operator()(const zenokit::BasicDbm<Scalar>& z) const noexcept { return z.hash(); }
};
