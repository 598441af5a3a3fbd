#pragma once

#include <bit>
#include <compare>
#include <cstdint>
#include <functional>
#include <string>

#include "error.hpp"

namespace opinion {

/// Raw bit-vector over alternative indices. May be empty.
using AltMask = std::uint64_t;

inline constexpr int kMaxAlternatives = 64;

constexpr AltMask bit(int index) { return AltMask{1} << index; }

/// All alternatives of a universe of the given size.
constexpr AltMask full_mask(int universe) {
  return universe >= kMaxAlternatives ? ~AltMask{0} : bit(universe) - 1;
}

/// Number of nonempty subsets, 2^n - 1.
constexpr std::uint64_t nonempty_subset_count(int universe) { return full_mask(universe); }

/// Number of subsets containing one fixed alternative, 2^(n-1).
constexpr std::uint64_t subsets_containing_one(int universe) { return bit(universe - 1); }

constexpr bool mask_contains(AltMask mask, int index) { return (mask >> index) & 1U; }

constexpr int mask_size(AltMask mask) { return std::popcount(mask); }

inline void check_universe(int universe) {
  if (universe < 3 || universe > kMaxAlternatives) {
    throw ValidationError("universe size must be in [3, 64], got " + std::to_string(universe));
  }
}

/// A nonempty subset of the alternatives: an element of 2^X minus the empty set.
class AltSubset {
 public:
  /// Validates nonemptiness and that every member lies below `universe`.
  static AltSubset of(AltMask mask, int universe) {
    if (mask == 0) throw ValidationError("subset must be nonempty");
    if ((mask & ~full_mask(universe)) != 0) {
      throw ValidationError("subset has members outside the universe of size " +
                            std::to_string(universe));
    }
    return AltSubset(mask);
  }

  static AltSubset singleton(int index) { return AltSubset(bit(index)); }

  constexpr AltMask bits() const { return bits_; }
  constexpr bool contains(int index) const { return mask_contains(bits_, index); }
  constexpr int size() const { return mask_size(bits_); }
  constexpr bool fits(int universe) const { return (bits_ & ~full_mask(universe)) == 0; }

  friend constexpr auto operator<=>(AltSubset, AltSubset) = default;

 private:
  constexpr explicit AltSubset(AltMask bits) : bits_(bits) {}
  AltMask bits_;
};

}  // namespace opinion

template <>
struct std::hash<opinion::AltSubset> {
  std::size_t operator()(opinion::AltSubset s) const noexcept {
    return std::hash<std::uint64_t>{}(s.bits());
  }
};
