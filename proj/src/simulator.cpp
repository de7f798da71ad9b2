#include "corrcast/simulator.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <random>

#include "corrcast/error.hpp"
#include "corrcast/fixtures.hpp"

namespace corrcast {
namespace {

constexpr std::uint64_t kMaxDomain = std::uint64_t{1} << 62;

std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9E3779B97F4A7C15ULL;
  x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ULL;
  x = (x ^ (x >> 27)) * 0x94D049BB133111EBULL;
  return x ^ (x >> 31);
}

std::uint64_t mul_bounded(std::uint64_t a, std::uint64_t b, const char* what) {
  if (b != 0 && a > kMaxDomain / b) throw LimitError(std::string(what) + " exceeds 2^62");
  return a * b;
}

std::uint64_t power(std::uint64_t base, std::size_t exp, const char* what) {
  std::uint64_t out = 1;
  for (std::size_t k = 0; k < exp; ++k) out = mul_bounded(out, base, what);
  return out;
}

void node_inputs(const CodeInstance& code, const std::uint64_t* x, std::vector<std::uint64_t>& input) {
  const Network& net = code.net;
  input.assign(net.node_count(), 0);
  std::vector<std::size_t> source_slot(net.node_count(), SIZE_MAX);
  for (std::size_t i = 0; i < net.sources().size(); ++i) source_slot[net.sources()[i]] = i;
  for (std::size_t v : net.topological_order()) {
    if (source_slot[v] != SIZE_MAX) {
      input[v] = x[source_slot[v]];
      continue;
    }
    std::uint64_t key = 0;
    std::uint64_t radix = 1;
    for (std::size_t e : net.in_edges(v)) {
      key += code.encode(e, input[net.edges()[e].tail]) * radix;
      radix *= code.index_sizes[e];
    }
    input[v] = key;
  }
}

// Keys of every sink; scratch avoids reallocating in the decoder's inner loop.
void keys_into(const CodeInstance& code, const std::uint64_t* x, std::vector<std::uint64_t>& scratch,
               std::vector<std::uint64_t>& keys) {
  node_inputs(code, x, scratch);
  keys.resize(code.net.sinks().size());
  for (std::size_t j = 0; j < keys.size(); ++j) keys[j] = scratch[code.net.sinks()[j]];
}

void check_params(const SimParams& params) {
  if (params.trials == 0) throw PreconditionError("trials must be positive");
  if (!(params.effective_lambda() > 0)) throw PreconditionError("typicality slack lambda must be positive");
}

SimResult run_trials(const Network& net, const SourceModel& aligned, const SimParams& params, Exec exec,
                     const CodeInstance* fixed) {
  check_params(params);
  const double lambda = params.effective_lambda();
  const std::size_t p = aligned.sources.size();
  const TypicalSet typical(aligned, params.n, lambda, params.enumeration_cap);

  std::vector<double> cumulative;
  std::vector<const PmfEntry*> support;
  double acc = 0;
  for (const auto& e : aligned.pmf)
    if (e.p > 0) {
      acc += e.p;
      cumulative.push_back(acc);
      support.push_back(&e);
    }
  std::vector<std::uint64_t> digit(p);
  std::vector<std::uint64_t> place(p * params.n);
  for (std::size_t i = 0; i < p; ++i) {
    std::uint64_t w = 1;
    for (std::size_t k = 0; k < params.n; ++k) {
      place[i * params.n + k] = w;
      w *= aligned.alphabet_sizes[i];
    }
  }

  const std::size_t q = net.sinks().size();
  std::vector<std::uint8_t> failed(params.trials * q, 0);
  std::vector<std::uint8_t> atypical(params.trials, 0);

  auto trial = [&](std::size_t t) {
    std::seed_seq seq{static_cast<std::uint32_t>(params.seed), static_cast<std::uint32_t>(params.seed >> 32),
                      static_cast<std::uint32_t>(t), static_cast<std::uint32_t>(std::uint64_t{t} >> 32)};
    std::mt19937_64 rng(seq);
    const std::uint64_t code_seed = rng();
    std::optional<CodeInstance> fresh;
    if (!fixed) fresh = build_code(net, aligned.alphabet_sizes, params.n, params.tau, params.delta, code_seed);
    const CodeInstance& code = fixed ? *fixed : *fresh;

    SourceBlock x(p, 0);
    for (std::size_t k = 0; k < params.n; ++k) {
      const double u = static_cast<double>(rng() >> 11) * 0x1.0p-53;
      auto it = std::upper_bound(cumulative.begin(), cumulative.end(), u);
      const PmfEntry& e = *support[std::min<std::size_t>(it - cumulative.begin(), support.size() - 1)];
      for (std::size_t i = 0; i < p; ++i) x[i] += e.symbols[i] * place[i * params.n + k];
    }
    std::uint8_t* out = failed.data() + t * q;
    if (!typical.contains(x)) {
      atypical[t] = 1;
      std::fill(out, out + q, 1);
      return;
    }
    std::vector<std::uint64_t> scratch, truth, other;
    keys_into(code, x.data(), scratch, truth);
    std::size_t remaining = q;
    for (std::size_t i = 0; i < typical.size() && remaining > 0; ++i) {
      const std::uint64_t* y = typical.raw(i);
      if (std::equal(y, y + p, x.begin())) continue;
      keys_into(code, y, scratch, other);
      for (std::size_t j = 0; j < q; ++j)
        if (!out[j] && other[j] == truth[j]) {
          out[j] = 1;
          --remaining;
        }
    }
  };

  if (exec == Exec::serial) {
    for (std::size_t t = 0; t < params.trials; ++t) trial(t);
  } else {
    detail::ExceptionSlot slot;
    const auto trials = static_cast<std::int64_t>(params.trials);
#pragma omp parallel for schedule(dynamic)
    for (std::int64_t t = 0; t < trials; ++t) slot.run([&] { trial(static_cast<std::size_t>(t)); });
    slot.rethrow();
  }

  SimResult r;
  r.n = params.n;
  r.tau = params.tau;
  r.delta = params.delta;
  r.lambda = lambda;
  r.trials = params.trials;
  r.seed = params.seed;
  r.fixed_code = fixed != nullptr || params.fixed_code;
  r.sinks = net.sink_names();
  r.errors.assign(q, 0);
  for (std::size_t t = 0; t < params.trials; ++t)
    for (std::size_t j = 0; j < q; ++j) r.errors[j] += failed[t * q + j];
  for (std::size_t j = 0; j < q; ++j) {
    const double est = static_cast<double>(r.errors[j]) / static_cast<double>(params.trials);
    r.estimate.push_back(est);
    r.half_width.push_back(1.96 * std::sqrt(est * (1 - est) / static_cast<double>(params.trials)));
  }
  r.typical_set_size = typical.size();
  r.atypical_trials = static_cast<std::size_t>(std::count(atypical.begin(), atypical.end(), 1));
  return r;
}

}  // namespace

std::uint64_t CodeInstance::encode(std::size_t edge, std::uint64_t input) const {
  if (edge < encoders.size() && encoders[edge]) return encoders[edge](input);
  if (net.edges()[edge].capacity.is_infinite()) return input;
  const std::uint64_t h = splitmix64(splitmix64(seed ^ splitmix64(edge + 1)) ^ input);
  return static_cast<std::uint64_t>((static_cast<unsigned __int128>(h) * index_sizes[edge]) >> 64);
}

CodeInstance build_code(const Network& net_in, std::span<const std::uint32_t> alphabet_sizes, std::size_t n,
                        double tau, double delta, std::uint64_t seed, const CodeLimits& limits) {
  if (n == 0) throw PreconditionError("block length must be positive");
  if (!(delta > 0 && delta < tau)) throw PreconditionError("need 0 < delta < tau");
  Network net = normalize(net_in);
  if (alphabet_sizes.size() != net.sources().size())
    throw PreconditionError("one alphabet size per source is required");

  CodeInstance code{net, {alphabet_sizes.begin(), alphabet_sizes.end()}, n, tau, delta, seed, {}, {}, {}};
  code.index_sizes.assign(net.edges().size(), 1);
  code.input_sizes.assign(net.node_count(), 1);
  std::vector<bool> done(net.edges().size(), false);
  for (std::size_t i = 0; i < net.sources().size(); ++i)
    code.input_sizes[net.sources()[i]] = power(alphabet_sizes[i], n, "source block domain");
  for (std::size_t v : net.topological_order()) {
    if (!net.is_source(v)) {
      std::uint64_t size = 1;
      for (std::size_t e : net.in_edges(v)) size = mul_bounded(size, code.index_sizes[e], "node input domain");
      code.input_sizes[v] = size;
    }
    for (std::size_t e : net.out_edges(v)) {
      const ExtRational& c = net.edges()[e].capacity;
      if (c.is_infinite()) {
        code.index_sizes[e] = code.input_sizes[v];
        continue;
      }
      const double exponent = static_cast<double>(n) * (c.to_double() + tau - delta);
      if (exponent >= 63) throw LimitError("index set of edge " + net.edge_label(e) + " too large");
      const double size = std::floor(std::exp2(exponent));
      const auto bins = std::max<std::uint64_t>(1, static_cast<std::uint64_t>(size));
      if (bins > limits.max_index_size) throw LimitError("index set of edge " + net.edge_label(e) + " too large");
      code.index_sizes[e] = bins;
    }
  }
  return code;
}

std::vector<std::vector<std::uint64_t>> propagate(const CodeInstance& code, const SourceBlock& x) {
  if (x.size() != code.net.sources().size()) throw PreconditionError("one block per source is required");
  for (std::size_t i = 0; i < x.size(); ++i)
    if (x[i] >= code.input_sizes[code.net.sources()[i]]) throw PreconditionError("source block out of range");
  std::vector<std::uint64_t> input;
  node_inputs(code, x.data(), input);
  std::vector<std::vector<std::uint64_t>> out;
  for (std::size_t t : code.net.sinks()) {
    std::vector<std::uint64_t> z;
    for (std::size_t e : code.net.in_edges(t)) z.push_back(code.encode(e, input[code.net.edges()[e].tail]));
    out.push_back(std::move(z));
  }
  return out;
}

std::vector<std::uint64_t> sink_keys(const CodeInstance& code, const SourceBlock& x) {
  std::vector<std::uint64_t> scratch, keys;
  keys_into(code, x.data(), scratch, keys);
  return keys;
}

SourceBlock encode_block(std::span<const std::vector<std::uint32_t>> sequences,
                         std::span<const std::uint32_t> alphabets) {
  if (sequences.size() != alphabets.size()) throw PreconditionError("one sequence per source is required");
  SourceBlock out;
  for (std::size_t i = 0; i < sequences.size(); ++i) {
    std::uint64_t value = 0;
    std::uint64_t w = 1;
    for (std::uint32_t sym : sequences[i]) {
      if (sym >= alphabets[i]) throw PreconditionError("symbol outside the alphabet");
      value += sym * w;
      w = mul_bounded(w, alphabets[i], "source block domain");
    }
    out.push_back(value);
  }
  return out;
}

std::vector<std::vector<std::uint32_t>> decode_block(const SourceBlock& x, std::span<const std::uint32_t> alphabets,
                                                     std::size_t n) {
  std::vector<std::vector<std::uint32_t>> out;
  for (std::size_t i = 0; i < x.size(); ++i) {
    std::vector<std::uint32_t> seq;
    std::uint64_t v = x[i];
    for (std::size_t k = 0; k < n; ++k) {
      seq.push_back(static_cast<std::uint32_t>(v % alphabets[i]));
      v /= alphabets[i];
    }
    out.push_back(std::move(seq));
  }
  return out;
}

TypicalSet::TypicalSet(const SourceModel& m, std::size_t n, double lambda, std::uint64_t cap) {
  validate_model(m);
  if (n == 0) throw PreconditionError("block length must be positive");
  p_ = m.sources.size();
  std::uint64_t total = 1;
  for (std::size_t i = 0; i < p_; ++i) {
    weights_.push_back(total);
    total = mul_bounded(total, power(m.alphabet_sizes[i], n, "typical-set enumeration"), "typical-set enumeration");
    if (total > cap) throw LimitError("typical-set enumeration exceeds the cap of " + std::to_string(cap));
  }
  // -log2 p_S(x_S) for every joint symbol and every nonempty S
  const std::uint64_t joint = m.joint_alphabet_size();
  const SubsetMask full = full_mask(p_);
  std::vector<double> entropy(full + std::size_t{1}, 0);
  std::vector<double> neglog((full + std::size_t{1}) * joint, 0);
  for (SubsetMask s = 1; s <= full && s != 0; ++s) {
    const auto table = marginal(m, s);
    entropy[s] = joint_entropy(m, s);
    for (std::uint64_t j = 0; j < joint; ++j) {
      std::uint64_t rest = j, code = 0, radix = 1;
      for (std::size_t i = 0; i < p_; ++i) {
        const std::uint64_t sym = rest % m.alphabet_sizes[i];
        rest /= m.alphabet_sizes[i];
        if (s >> i & 1U) {
          code += sym * radix;
          radix *= m.alphabet_sizes[i];
        }
      }
      const double q = table[code];
      neglog[s * joint + j] = q > 0 ? -std::log2(q) : std::numeric_limits<double>::infinity();
    }
  }

  member_.assign(total, false);
  std::vector<double> sums(full + std::size_t{1});
  std::vector<std::uint64_t> block(p_);
  for (std::uint64_t key = 0; key < total; ++key) {
    std::uint64_t rest = key;
    for (std::size_t i = 0; i < p_; ++i) {
      const std::uint64_t width = (i + 1 < p_ ? weights_[i + 1] : total) / weights_[i];
      block[i] = rest % width;
      rest /= width;
    }
    std::fill(sums.begin(), sums.end(), 0.0);
    std::vector<std::uint64_t> digits = block;
    for (std::size_t k = 0; k < n; ++k) {
      std::uint64_t j = 0, radix = 1;
      for (std::size_t i = 0; i < p_; ++i) {
        j += (digits[i] % m.alphabet_sizes[i]) * radix;
        digits[i] /= m.alphabet_sizes[i];
        radix *= m.alphabet_sizes[i];
      }
      for (SubsetMask s = 1; s <= full && s != 0; ++s) sums[s] += neglog[s * joint + j];
    }
    bool ok = true;
    for (SubsetMask s = 1; s <= full && s != 0 && ok; ++s)
      ok = std::abs(sums[s] / static_cast<double>(n) - entropy[s]) < lambda;
    if (ok) {
      member_[key] = true;
      blocks_.insert(blocks_.end(), block.begin(), block.end());
      ++count_;
    }
  }
}

SourceBlock TypicalSet::at(std::size_t i) const {
  if (i >= count_) throw PreconditionError("typical-set index out of range");
  return {raw(i), raw(i) + p_};
}

bool TypicalSet::contains(const SourceBlock& x) const {
  if (x.size() != p_) return false;
  std::uint64_t key = 0;
  for (std::size_t i = 0; i < p_; ++i) {
    const std::uint64_t width = (i + 1 < p_ ? weights_[i + 1] : member_.size()) / weights_[i];
    if (x[i] >= width) return false;
    key += x[i] * weights_[i];
  }
  return member_[key];
}

std::optional<SourceBlock> decode(const CodeInstance& code, const TypicalSet& typical, std::size_t sink_position,
                                  std::span<const std::uint64_t> received) {
  const auto& sinks = code.net.sinks();
  if (sink_position >= sinks.size()) throw PreconditionError("sink position out of range");
  const auto& in = code.net.in_edges(sinks[sink_position]);
  if (received.size() != in.size()) throw PreconditionError("one index per in-edge of the sink is required");
  std::uint64_t target = 0, radix = 1;
  for (std::size_t k = 0; k < in.size(); ++k) {
    if (received[k] >= code.index_sizes[in[k]]) return std::nullopt;
    target += received[k] * radix;
    radix *= code.index_sizes[in[k]];
  }
  std::optional<SourceBlock> found;
  std::vector<std::uint64_t> scratch, keys;
  for (std::size_t i = 0; i < typical.size(); ++i) {
    keys_into(code, typical.raw(i), scratch, keys);
    if (keys[sink_position] != target) continue;
    if (found) return std::nullopt;
    found = typical.at(i);
  }
  return found;
}

SimResult estimate_error(const Network& net, const SourceModel& m, const SimParams& params, Exec exec) {
  validate_model(m);
  const SourceModel aligned = m.aligned_to(net.source_names());
  const Network normalized = normalize(net);
  // also rejects bad parameters before any trial runs
  const CodeInstance code =
      build_code(normalized, aligned.alphabet_sizes, params.n, params.tau, params.delta, params.seed);
  return run_trials(normalized, aligned, params, exec, params.fixed_code ? &code : nullptr);
}

SimResult estimate_error(const CodeInstance& code, const SourceModel& m, const SimParams& params, Exec exec) {
  validate_model(m);
  const SourceModel aligned = m.aligned_to(code.net.source_names());
  if (aligned.alphabet_sizes != code.alphabet_sizes) throw PreconditionError("code and model alphabets differ");
  SimParams p = params;
  p.n = code.n;
  if (!p.lambda) p.lambda = code.tau > 0 ? 3 * code.tau / 8 : params.effective_lambda();
  p.tau = code.tau;
  p.delta = code.delta;
  return run_trials(code.net, aligned, p, exec, &code);
}

CodeInstance butterfly_xor_code(std::size_t n) {
  if (n == 0 || n > 31) throw PreconditionError("butterfly XOR code supports 1 <= n <= 31");
  const Network net = fixtures::butterfly();
  const std::vector<std::uint32_t> bits{2, 2};
  const std::uint64_t width = std::uint64_t{1} << n;
  CodeInstance code{net, bits, n, 0, 0, 0, {}, {}, {}};
  code.index_sizes.assign(net.edges().size(), width);
  code.input_sizes.assign(net.node_count(), width);
  code.encoders.resize(net.edges().size());
  const std::size_t center = net.index_of("3");
  code.input_sizes[center] = width * width;
  for (std::size_t e = 0; e < net.edges().size(); ++e) {
    if (net.edges()[e].tail == center)
      code.encoders[e] = [width](std::uint64_t in) { return (in % width) ^ (in / width); };
    else
      code.encoders[e] = [](std::uint64_t in) { return in; };
  }
  return code;
}

std::array<DecodedPair, 2> butterfly_xor(std::span<const std::uint8_t> x1, std::span<const std::uint8_t> x2) {
  if (x1.size() != x2.size()) throw PreconditionError("x1 and x2 must have equal length");
  const std::size_t n = x1.size();
  const CodeInstance code = butterfly_xor_code(n);
  std::vector<std::vector<std::uint32_t>> seqs(2);
  for (std::size_t k = 0; k < n; ++k) {
    if (x1[k] > 1 || x2[k] > 1) throw PreconditionError("inputs must be bits");
    seqs[0].push_back(x1[k]);
    seqs[1].push_back(x2[k]);
  }
  const std::vector<std::uint32_t> bits{2, 2};
  const auto received = propagate(code, encode_block(seqs, bits));
  std::array<DecodedPair, 2> out;
  const auto& net = code.net;
  for (std::size_t j = 0; j < 2; ++j) {
    // one in-edge straight from a source, one carrying the XOR stream
    std::uint64_t direct = 0, mixed = 0;
    std::size_t from = 0;
    const auto& in = net.in_edges(net.sinks()[j]);
    for (std::size_t k = 0; k < in.size(); ++k) {
      const std::size_t tail = net.edges()[in[k]].tail;
      if (net.is_source(tail)) {
        direct = received[j][k];
        from = tail == net.sources()[0] ? 0 : 1;
      } else {
        mixed = received[j][k];
      }
    }
    const std::uint64_t other = direct ^ mixed;
    const std::uint64_t a = from == 0 ? direct : other;
    const std::uint64_t b = from == 0 ? other : direct;
    const auto pair = decode_block({a, b}, bits, n);
    for (std::size_t k = 0; k < n; ++k) {
      out[j].x1.push_back(static_cast<std::uint8_t>(pair[0][k]));
      out[j].x2.push_back(static_cast<std::uint8_t>(pair[1][k]));
    }
  }
  return out;
}

}  // namespace corrcast
