#pragma once

#include <cstdint>
#include <filesystem>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "corrcast/rational.hpp"
#include "corrcast/setfunc.hpp"
#include "corrcast/subset.hpp"

namespace corrcast {

struct PmfEntry {
  std::vector<std::uint32_t> symbols;
  double p = 0;
  /// Exact probability when the document gave a rational string or an exact decimal.
  std::optional<Rational> exact;
};

/// Finite-alphabet i.i.d. source: one joint pmf per symbol time. Tuple coordinate i
/// belongs to sources[i]. Tuples absent from `pmf` have probability zero.
struct SourceModel {
  std::vector<std::string> sources;
  std::vector<std::uint32_t> alphabet_sizes;
  std::vector<PmfEntry> pmf;

  /// Same model with coordinates permuted to follow `order` (a permutation of sources).
  SourceModel aligned_to(const std::vector<std::string>& order) const;
  /// Number of joint symbols, product of alphabet sizes.
  std::uint64_t joint_alphabet_size() const;
};

/// Document: `{"sources": [..], "alphabets": [..], "pmf": [{"symbols": [..], "p": ..}]}`,
/// with p a number or rational string.
SourceModel parse_source_model(std::string_view text);
SourceModel load_source_model(const std::filesystem::path& path);
std::string to_json_text(const SourceModel& m);

/// Throws ModelError unless arities, alphabets and normalization hold. Exact when every
/// probability is exact; otherwise the sum must be within 1e-12 of one.
void validate_model(const SourceModel& m);

/// Marginal pmf of the coordinates in S, densely indexed by the mixed-radix code of the
/// S-tuple (first member least significant).
std::vector<double> marginal(const SourceModel& m, SubsetMask s);

/// H(X_S) in bits; 0 log 0 = 0. Throws PreconditionError for empty S.
double joint_entropy(const SourceModel& m, SubsetMask s);
/// H(X_S | X_{complement}) = H(X_all) - H(X_complement), with H(X_empty) = 0.
double conditional_entropy(const SourceModel& m, SubsetMask s);

struct EntropyProfile {
  /// sigma(S) = H(X_S | X_complement); values are the exact rationals of the computed doubles.
  SetFunction sigma;
  /// joint(S) = H(X_S).
  SetFunction joint;
  std::vector<double> sigma_bits;
  std::vector<double> joint_bits;
};

EntropyProfile entropy_profile(const SourceModel& m, std::size_t subset_bound = kDefaultSubsetBound);

/// h(p) = -p log2 p - (1-p) log2 (1-p), with h(0) = h(1) = 0.
double binary_entropy(double p);

}  // namespace corrcast
