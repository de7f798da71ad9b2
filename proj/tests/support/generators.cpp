#include "generators.hpp"

#include <algorithm>

namespace gen {

using corrcast::Edge;
using corrcast::ExtRational;
using corrcast::Rational;
using corrcast::SetFunction;
using corrcast::SubsetMask;

namespace {

std::size_t uniform(Rng& rng, std::size_t lo, std::size_t hi) {
  return std::uniform_int_distribution<std::size_t>(lo, hi)(rng);
}

bool coin(Rng& rng, double p) { return std::uniform_real_distribution<double>(0, 1)(rng) < p; }

Rational capacity(Rng& rng) {
  const std::size_t d = uniform(rng, 1, 4);
  return Rational(static_cast<long>(uniform(rng, 0, 4 * d)), static_cast<long>(d));
}

}  // namespace

corrcast::Network network(Rng& rng, const NetworkShape& shape) {
  const std::size_t p = uniform(rng, 1, shape.max_sources);
  const std::size_t q = uniform(rng, 1, shape.max_sinks);
  const std::size_t v = uniform(rng, std::min(p + q, shape.max_nodes), shape.max_nodes);
  std::vector<std::string> names;
  for (std::size_t i = 0; i < v; ++i) names.push_back("v" + std::to_string(i));

  // node index is a topological order; sources sit early, sinks late
  std::vector<std::size_t> sources, sinks;
  for (std::size_t i = 0; i < p; ++i) sources.push_back(i);
  for (std::size_t j = 0; j < q; ++j) sinks.push_back(v - 1 - j);
  if (coin(rng, shape.unnormalized)) {
    std::vector<std::size_t> pool(v);
    for (std::size_t i = 0; i < v; ++i) pool[i] = i;
    std::shuffle(pool.begin(), pool.end(), rng);
    sources.assign(pool.begin(), pool.begin() + static_cast<long>(p));
    std::shuffle(pool.begin(), pool.end(), rng);
    sinks.assign(pool.begin(), pool.begin() + static_cast<long>(q));
  }
  std::vector<Edge> edges;
  for (std::size_t a = 0; a < v; ++a)
    for (std::size_t b = a + 1; b < v; ++b) {
      if (coin(rng, shape.edge_probability)) edges.push_back({a, b, ExtRational(capacity(rng))});
      if (coin(rng, 0.05)) edges.push_back({a, b, ExtRational(capacity(rng))});
    }
  return corrcast::Network(names, edges, sources, sinks);
}

corrcast::SourceModel model(Rng& rng, const std::vector<std::string>& sources, std::uint32_t max_alphabet) {
  corrcast::SourceModel m;
  m.sources = sources;
  std::uint64_t joint = 1;
  for (std::size_t i = 0; i < sources.size(); ++i) {
    m.alphabet_sizes.push_back(static_cast<std::uint32_t>(uniform(rng, 2, max_alphabet)));
    joint *= m.alphabet_sizes.back();
  }
  std::vector<long> weight(joint);
  long total = 0;
  while (total == 0) {
    total = 0;
    for (auto& w : weight) {
      w = coin(rng, 0.25) ? 0 : static_cast<long>(uniform(rng, 1, 6));
      total += w;
    }
  }
  for (std::uint64_t j = 0; j < joint; ++j) {
    if (weight[j] == 0 && coin(rng, 0.5)) continue;
    corrcast::PmfEntry e;
    std::uint64_t rest = j;
    for (auto a : m.alphabet_sizes) {
      e.symbols.push_back(static_cast<std::uint32_t>(rest % a));
      rest /= a;
    }
    e.exact = Rational(weight[j], total);
    e.exact->canonicalize();
    e.p = e.exact->get_d();
    m.pmf.push_back(e);
  }
  return m;
}

SetFunction coverage(Rng& rng, std::size_t ground_size) {
  const std::size_t universe = uniform(rng, 2, 7);
  std::vector<Rational> w;
  for (std::size_t u = 0; u < universe; ++u) w.push_back(Rational(static_cast<long>(uniform(rng, 0, 8)), 4));
  std::vector<std::uint32_t> cover(ground_size);
  for (auto& c : cover) c = static_cast<std::uint32_t>(uniform(rng, 0, (1U << universe) - 1));
  std::vector<std::string> ground;
  for (std::size_t i = 0; i < ground_size; ++i) ground.push_back("a" + std::to_string(i));
  SetFunction f(ground);
  for (SubsetMask s = 1; s <= f.full(); ++s) {
    std::uint32_t covered = 0;
    for (std::size_t i = 0; i < ground_size; ++i)
      if (s >> i & 1U) covered |= cover[i];
    Rational total = 0;
    for (std::size_t u = 0; u < universe; ++u)
      if (covered >> u & 1U) total += w[u];
    f.set(s, ExtRational(total));
  }
  return f;
}

SetFunction dual(const SetFunction& g) {
  SetFunction f(g.ground());
  const SubsetMask full = g.full();
  for (SubsetMask s = 1; s <= full; ++s) f.set(s, ExtRational(g(full).finite() - g(full & ~s).finite()));
  return f;
}

SetFunction scaled(const SetFunction& f, const Rational& k) {
  SetFunction out(f.ground());
  for (SubsetMask s = 1; s <= f.full(); ++s) out.set(s, ExtRational(Rational(f(s).finite() * k)));
  return out;
}

}  // namespace gen
