#pragma once

#include <bit>
#include <cstddef>
#include <cstdint>
#include <vector>

namespace arithmat {

/// Sublist of the ground list as a bitmask (bit i = ground element i).
using Subset = std::uint32_t;

/// Hard ceiling on ground size; tables have 2^k entries.
inline constexpr std::size_t kMaxGroundSize = 24;

inline constexpr Subset full_set(std::size_t k) {
  return k == 0 ? Subset{0} : static_cast<Subset>((std::uint64_t{1} << k) - 1);
}

inline constexpr Subset singleton(std::size_t i) { return Subset{1} << i; }

inline constexpr bool contains(Subset s, std::size_t i) { return (s >> i) & 1U; }

inline constexpr bool is_subset(Subset a, Subset b) { return (a & ~b) == 0; }

inline int cardinality(Subset s) { return std::popcount(s); }

/// Removes bit position v, shifting higher bits down.
inline constexpr Subset squeeze(Subset s, std::size_t v) {
  const Subset low = s & ((Subset{1} << v) - 1);
  return low | ((s >> (v + 1)) << v);
}

/// Inverse of squeeze: opens a zero bit at position v.
inline constexpr Subset expand(Subset s, std::size_t v) {
  const Subset low = s & ((Subset{1} << v) - 1);
  return low | ((s >> v) << (v + 1));
}

inline std::vector<std::size_t> elements_of(Subset s) {
  std::vector<std::size_t> out;
  while (s != 0) {
    out.push_back(static_cast<std::size_t>(std::countr_zero(s)));
    s &= s - 1;
  }
  return out;
}

}  // namespace arithmat
