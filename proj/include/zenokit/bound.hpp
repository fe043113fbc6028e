#pragma once

#include <concepts>
#include <cstdint>
#include <limits>
#include <ostream>

namespace zenokit {

/// Packed difference bound (c, <) or (c, <=).
///
/// The raw encoding is 2c for strict and 2c+1 for weak bounds, so the integer
/// order of raw values is exactly the tightness order on bounds: (c,<) is
/// tighter than (c,<=), which is tighter than (c+1,<). Infinity is a reserved
/// raw value and always strict.
template <std::signed_integral Scalar>
class BasicBound {
 public:
  using scalar_type = Scalar;

  static constexpr Scalar kInfinityRaw = std::numeric_limits<Scalar>::max() & ~Scalar{1};

  constexpr BasicBound() = default;

  static constexpr BasicBound strict(Scalar c) { return BasicBound(static_cast<Scalar>(c * 2)); }
  static constexpr BasicBound weak(Scalar c) { return BasicBound(static_cast<Scalar>(c * 2 + 1)); }
  static constexpr BasicBound infinity() { return BasicBound(kInfinityRaw); }
  static constexpr BasicBound zero() { return weak(0); }
  static constexpr BasicBound from_raw(Scalar raw) { return BasicBound(raw); }

  constexpr Scalar raw() const { return raw_; }
  constexpr bool is_infinity() const { return raw_ == kInfinityRaw; }
  constexpr bool is_strict() const { return (raw_ & 1) == 0; }
  /// Constant part; meaningless for infinity.
  constexpr Scalar value() const { return raw_ >> 1; }

  friend constexpr auto operator<=>(BasicBound, BasicBound) = default;

  /// (c,<=)+(d,<=) = (c+d,<=); any strict operand gives a strict sum;
  /// infinity absorbs.
  friend constexpr BasicBound operator+(BasicBound a, BasicBound b) {
    if (a.is_infinity() || b.is_infinity()) return infinity();
    return BasicBound(static_cast<Scalar>(a.raw_ + b.raw_ - ((a.raw_ | b.raw_) & 1)));
  }

  /// Bound for the negated constraint: !(x <= c) is (-c, <) on the reverse
  /// difference, !(x < c) is (-c, <=).
  constexpr BasicBound complement() const {
    return is_strict() ? weak(static_cast<Scalar>(-value())) : strict(static_cast<Scalar>(-value()));
  }

  friend std::ostream& operator<<(std::ostream& os, BasicBound b) {
    if (b.is_infinity()) return os << "(inf,<)";
    return os << '(' << b.value() << (b.is_strict() ? ",<)" : ",<=)");
  }

 private:
  constexpr explicit BasicBound(Scalar raw) : raw_(raw) {}
  Scalar raw_ = kInfinityRaw;
};

using Bound = BasicBound<std::int32_t>;

}  // namespace zenokit
