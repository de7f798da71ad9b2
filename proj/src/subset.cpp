#include "corrcast/subset.hpp"

#include <algorithm>

#include "corrcast/error.hpp"

namespace corrcast {

std::vector<std::size_t> members(SubsetMask s) {
  std::vector<std::size_t> out;
  out.reserve(static_cast<std::size_t>(subset_size(s)));
  for (std::size_t i = 0; s != 0; ++i, s >>= 1)
    if (s & 1u) out.push_back(i);
  return out;
}

std::vector<SubsetMask> nonempty_subsets(std::size_t ground_size) {
  if (ground_size > kMaxGround) throw LimitError("ground set too large to enumerate");
  std::vector<SubsetMask> out;
  out.reserve(static_cast<std::size_t>(full_mask(ground_size)));
  for (SubsetMask s = 1; s <= full_mask(ground_size) && s != 0; ++s) out.push_back(s);
  std::stable_sort(out.begin(), out.end(), [](SubsetMask a, SubsetMask b) {
    if (subset_size(a) != subset_size(b)) return subset_size(a) < subset_size(b);
    auto ma = members(a);
    auto mb = members(b);
    return std::lexicographical_compare(ma.begin(), ma.end(), mb.begin(), mb.end());
  });
  return out;
}

std::string subset_label(SubsetMask s, std::span<const std::string> ground) {
  if (s == 0) return "{}";
  std::string out;
  for (std::size_t i : members(s)) {
    if (!out.empty()) out += '+';
    out += i < ground.size() ? ground[i] : std::to_string(i);
  }
  return out;
}

SubsetMask parse_subset(std::string_view text, std::span<const std::string> ground) {
  SubsetMask mask = 0;
  std::size_t start = 0;
  while (start <= text.size()) {
    std::size_t end = text.find_first_of("+,", start);
    if (end == std::string_view::npos) end = text.size();
    std::string_view name = text.substr(start, end - start);
    while (!name.empty() && name.front() == ' ') name.remove_prefix(1);
    while (!name.empty() && name.back() == ' ') name.remove_suffix(1);
    if (name.empty()) throw SemanticError("empty member in subset '" + std::string(text) + "'");
    auto it = std::find(ground.begin(), ground.end(), name);
    if (it == ground.end()) throw SemanticError("unknown source '" + std::string(name) + "'");
    mask |= SubsetMask{1} << static_cast<unsigned>(it - ground.begin());
    start = end + 1;
  }
  return mask;
}

void check_subset_bound(std::size_t ground_size, std::size_t bound) {
  if (ground_size > bound || ground_size > kMaxGround)
    throw LimitError(std::to_string(ground_size) + " sources exceed the subset-enumeration bound of " +
                     std::to_string(std::min(bound, kMaxGround)));
}

}  // namespace corrcast
