#pragma once

#include <array>
#include <cstdint>
#include <functional>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "corrcast/entropy.hpp"
#include "corrcast/exec.hpp"
#include "corrcast/network.hpp"

namespace corrcast {

/// One block x_s^n per source, encoded base |X_s| with symbol k as digit k.
using SourceBlock = std::vector<std::uint64_t>;

/// Deterministic replacement for the random binning of one edge.
using EdgeEncoder = std::function<std::uint64_t(std::uint64_t input)>;

/// Random binning code on a normalized network. A node's input is the mixed-radix code of
/// its in-edge indices (first in-edge least significant), or its source block. Indices
/// are 0-based.
struct CodeInstance {
  Network net;
  std::vector<std::uint32_t> alphabet_sizes;
  std::size_t n = 0;
  double tau = 0;
  double delta = 0;
  std::uint64_t seed = 0;
  /// max(1, floor(2^{n(c + tau - delta)})); infinite edges carry their input unchanged.
  std::vector<std::uint64_t> index_sizes;
  std::vector<std::uint64_t> input_sizes;
  /// Empty entries use the seeded uniform binning.
  std::vector<EdgeEncoder> encoders;

  std::uint64_t encode(std::size_t edge, std::uint64_t input) const;
};

struct CodeLimits {
  std::uint64_t max_index_size = std::uint64_t{1} << 32;
};

/// Throws PreconditionError unless n >= 1 and 0 < delta < tau; LimitError when an index
/// set or node input domain is too large.
CodeInstance build_code(const Network& net, std::span<const std::uint32_t> alphabet_sizes, std::size_t n, double tau,
                        double delta, std::uint64_t seed, const CodeLimits& limits = {});

/// Received in-edge indices at every sink, in net.sinks() order.
std::vector<std::vector<std::uint64_t>> propagate(const CodeInstance& code, const SourceBlock& x);

/// Per-sink mixed-radix code of the received indices.
std::vector<std::uint64_t> sink_keys(const CodeInstance& code, const SourceBlock& x);

SourceBlock encode_block(std::span<const std::vector<std::uint32_t>> sequences, std::span<const std::uint32_t> alphabets);
std::vector<std::vector<std::uint32_t>> decode_block(const SourceBlock& x, std::span<const std::uint32_t> alphabets,
                                                     std::size_t n);

/// Every lambda-typical block of length n: |-(1/n) log2 p(x_S) - H(X_S)| < lambda for every
/// nonempty S.
class TypicalSet {
 public:
  TypicalSet(const SourceModel& m, std::size_t n, double lambda, std::uint64_t cap = std::uint64_t{1} << 24);

  std::size_t size() const noexcept { return count_; }
  SourceBlock at(std::size_t i) const;
  bool contains(const SourceBlock& x) const;
  std::size_t sources() const noexcept { return p_; }
  const std::uint64_t* raw(std::size_t i) const { return blocks_.data() + i * p_; }

 private:
  std::size_t p_ = 0;
  std::size_t count_ = 0;
  std::vector<std::uint64_t> weights_;
  std::vector<std::uint64_t> blocks_;
  std::vector<bool> member_;
};

/// The unique typical block whose propagation matches `received` at the sink, if any.
std::optional<SourceBlock> decode(const CodeInstance& code, const TypicalSet& typical, std::size_t sink_position,
                                  std::span<const std::uint64_t> received);

struct SimParams {
  std::size_t n = 4;
  double tau = 0.25;
  double delta = 0.05;
  /// Defaults to 3 tau / 8.
  std::optional<double> lambda;
  std::size_t trials = 1000;
  std::uint64_t seed = 1;
  bool fixed_code = false;
  std::uint64_t enumeration_cap = std::uint64_t{1} << 24;

  double effective_lambda() const { return lambda.value_or(3 * tau / 8); }
};

struct SimResult {
  std::size_t n = 0;
  double tau = 0;
  double delta = 0;
  double lambda = 0;
  std::size_t trials = 0;
  std::uint64_t seed = 0;
  bool fixed_code = false;
  std::vector<std::string> sinks;
  std::vector<std::size_t> errors;
  std::vector<double> estimate;
  /// 1.96 sqrt(p(1-p)/trials).
  std::vector<double> half_width;
  std::uint64_t typical_set_size = 0;
  std::size_t atypical_trials = 0;

  friend bool operator==(const SimResult&, const SimResult&) = default;
};

/// Monte-Carlo block error per sink. A trial fails at sink t when the sampled block is
/// atypical or another typical block reaches t with the same indices.
SimResult estimate_error(const Network& net, const SourceModel& m, const SimParams& params,
                         Exec exec = Exec::parallel);

/// Same, with one given code used for every trial.
SimResult estimate_error(const CodeInstance& code, const SourceModel& m, const SimParams& params,
                         Exec exec = Exec::parallel);

/// Butterfly network code: sources forward their bits, node 3 sends x1 xor x2.
CodeInstance butterfly_xor_code(std::size_t n);

struct DecodedPair {
  std::vector<std::uint8_t> x1;
  std::vector<std::uint8_t> x2;
  friend bool operator==(const DecodedPair&, const DecodedPair&) = default;
};

/// Reconstructions at t1 and t2.
std::array<DecodedPair, 2> butterfly_xor(std::span<const std::uint8_t> x1, std::span<const std::uint8_t> x2);

}  // namespace corrcast
