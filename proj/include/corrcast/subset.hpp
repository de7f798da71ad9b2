#pragma once

#include <bit>
#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace corrcast {

/// Bit i set means the i-th element of the ground set is a member.
using SubsetMask = std::uint32_t;

/// Hard ceiling on ground-set sizes; the configurable default bound is lower.
inline constexpr std::size_t kMaxGround = 30;
inline constexpr std::size_t kDefaultSubsetBound = 16;

inline int subset_size(SubsetMask s) { return std::popcount(s); }
inline SubsetMask full_mask(std::size_t ground_size) {
  return ground_size == 0 ? 0 : static_cast<SubsetMask>((std::uint64_t{1} << ground_size) - 1);
}
inline bool is_subset(SubsetMask a, SubsetMask b) { return (a & ~b) == 0; }

/// Member positions in increasing order.
std::vector<std::size_t> members(SubsetMask s);

/// All nonempty subsets of a ground set of the given size, ordered by size and then
/// lexicographically by their sorted member positions.
std::vector<SubsetMask> nonempty_subsets(std::size_t ground_size);

/// "s1+s2" style label; "{}" for the empty set.
std::string subset_label(SubsetMask s, std::span<const std::string> ground);

/// Inverse of subset_label; accepts '+' or ',' separators. Throws SemanticError on unknown names.
SubsetMask parse_subset(std::string_view text, std::span<const std::string> ground);

/// Throws LimitError when the ground set exceeds the bound.
void check_subset_bound(std::size_t ground_size, std::size_t bound);

}  // namespace corrcast
