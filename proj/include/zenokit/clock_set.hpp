#pragma once

#include <bit>
#include <cstdint>
#include <functional>
#include <vector>

namespace zenokit {

/// Clock index into a DBM. Index 0 is the reference clock x0; automaton
/// clocks are 1..n.
using ClockIndex = std::uint32_t;

inline constexpr ClockIndex kZeroClock = 0;
inline constexpr ClockIndex kMaxClocks = 63;

/// Small set of automaton clocks (indices 1..63) packed into one word.
class ClockSet {
 public:
  constexpr ClockSet() = default;
  constexpr explicit ClockSet(std::uint64_t bits) : bits_(bits) {}

  static constexpr ClockSet all(ClockIndex num_clocks) {
    if (num_clocks == 0) return ClockSet{};
    return ClockSet((num_clocks >= 63 ? ~std::uint64_t{0} : ((std::uint64_t{1} << (num_clocks + 1)) - 1)) &
                    ~std::uint64_t{1});
  }

  constexpr bool contains(ClockIndex x) const { return (bits_ >> x) & 1U; }
  constexpr void insert(ClockIndex x) { bits_ |= std::uint64_t{1} << x; }
  constexpr void erase(ClockIndex x) { bits_ &= ~(std::uint64_t{1} << x); }
  constexpr bool empty() const { return bits_ == 0; }
  constexpr int size() const { return std::popcount(bits_); }
  constexpr std::uint64_t bits() const { return bits_; }

  constexpr bool is_subset_of(ClockSet other) const { return (bits_ & ~other.bits_) == 0; }
  constexpr bool intersects(ClockSet other) const { return (bits_ & other.bits_) != 0; }

  friend constexpr ClockSet operator|(ClockSet a, ClockSet b) { return ClockSet(a.bits_ | b.bits_); }
  friend constexpr ClockSet operator&(ClockSet a, ClockSet b) { return ClockSet(a.bits_ & b.bits_); }
  /// Set difference.
  friend constexpr ClockSet operator-(ClockSet a, ClockSet b) { return ClockSet(a.bits_ & ~b.bits_); }
  friend constexpr bool operator==(ClockSet, ClockSet) = default;

  /// Members in increasing index order.
  std::vector<ClockIndex> members() const {
    std::vector<ClockIndex> out;
    for (auto b = bits_; b != 0; b &= b - 1) out.push_back(static_cast<ClockIndex>(std::countr_zero(b)));
    return out;
  }

 private:
  std::uint64_t bits_ = 0;
};

}  // namespace zenokit

template <>
struct std::hash<zenokit::ClockSet> {
  std::size_t operator()(zenokit::ClockSet s) const noexcept { return std::hash<std::uint64_t>{}(s.bits()); }
};
