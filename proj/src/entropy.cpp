#include "corrcast/entropy.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <map>
#include <set>
#include <sstream>

#include <json.hpp>

#include "corrcast/error.hpp"

namespace corrcast {
namespace {

using json = nlohmann::ordered_json;

constexpr double kSumTolerance = 1e-12;
constexpr std::uint64_t kMaxMarginal = std::uint64_t{1} << 26;

double plogp_sum(const std::vector<double>& probs) {
  double h = 0;
  for (double q : probs)
    if (q > 0) h -= q * std::log2(q);
  return h;
}

}  // namespace

std::uint64_t SourceModel::joint_alphabet_size() const {
  std::uint64_t total = 1;
  for (auto a : alphabet_sizes) {
    if (a != 0 && total > UINT64_MAX / a) throw LimitError("joint alphabet too large");
    total *= a;
  }
  return total;
}

SourceModel SourceModel::aligned_to(const std::vector<std::string>& order) const {
  if (order.size() != sources.size()) throw SemanticError("source model and network have different source counts");
  std::vector<std::size_t> perm;
  for (const auto& name : order) {
    auto it = std::find(sources.begin(), sources.end(), name);
    if (it == sources.end()) throw SemanticError("source model has no source named '" + name + "'");
    perm.push_back(static_cast<std::size_t>(it - sources.begin()));
  }
  SourceModel out;
  out.sources = order;
  for (auto i : perm) out.alphabet_sizes.push_back(alphabet_sizes[i]);
  for (const auto& e : pmf) {
    PmfEntry moved{{}, e.p, e.exact};
    for (auto i : perm) moved.symbols.push_back(e.symbols.at(i));
    out.pmf.push_back(std::move(moved));
  }
  return out;
}

void validate_model(const SourceModel& m) {
  if (m.sources.empty()) throw ModelError(ModelError::Kind::arity, "source model has no sources");
  if (m.alphabet_sizes.size() != m.sources.size())
    throw ModelError(ModelError::Kind::arity, "one alphabet size per source is required");
  for (auto a : m.alphabet_sizes)
    if (a == 0) throw ModelError(ModelError::Kind::alphabet, "alphabet sizes must be positive");
  std::set<std::vector<std::uint32_t>> seen;
  bool all_exact = true;
  Rational exact_sum = 0;
  double sum = 0;
  for (const auto& e : m.pmf) {
    if (e.symbols.size() != m.sources.size())
      throw ModelError(ModelError::Kind::arity, "pmf tuple arity differs from the number of sources");
    for (std::size_t i = 0; i < e.symbols.size(); ++i)
      if (e.symbols[i] >= m.alphabet_sizes[i])
        throw ModelError(ModelError::Kind::alphabet, "symbol outside the alphabet of '" + m.sources[i] + "'");
    if (!seen.insert(e.symbols).second) throw ModelError(ModelError::Kind::duplicate, "pmf tuple listed twice");
    if (e.p < 0 || !std::isfinite(e.p) || (e.exact && *e.exact < 0))
      throw ModelError(ModelError::Kind::negative, "probabilities must be nonnegative");
    sum += e.p;
    if (e.exact)
      exact_sum += *e.exact;
    else
      all_exact = false;
  }
  if (all_exact ? exact_sum != 1 : std::abs(sum - 1.0) > kSumTolerance) {
    std::ostringstream msg;
    msg << "probabilities sum to " << (all_exact ? to_string(exact_sum) : std::to_string(sum)) << ", not 1";
    throw ModelError(ModelError::Kind::normalization, msg.str());
  }
}

std::vector<double> marginal(const SourceModel& m, SubsetMask s) {
  if (s > full_mask(m.sources.size())) throw PreconditionError("subset outside the source set");
  auto idx = members(s);
  std::uint64_t size = 1;
  for (auto i : idx) {
    size *= m.alphabet_sizes[i];
    if (size > kMaxMarginal) throw LimitError("marginal alphabet too large");
  }
  std::vector<double> out(size, 0.0);
  for (const auto& e : m.pmf) {
    std::uint64_t code = 0;
    std::uint64_t radix = 1;
    for (auto i : idx) {
      code += e.symbols[i] * radix;
      radix *= m.alphabet_sizes[i];
    }
    out[code] += e.p;
  }
  return out;
}

double joint_entropy(const SourceModel& m, SubsetMask s) {
  if (s == 0) throw PreconditionError("entropy of the empty set of sources is not an operation");
  return plogp_sum(marginal(m, s));
}

double conditional_entropy(const SourceModel& m, SubsetMask s) {
  if (s == 0) throw PreconditionError("conditional entropy needs a nonempty subset");
  const SubsetMask full = full_mask(m.sources.size());
  if (!is_subset(s, full)) throw PreconditionError("subset outside the source set");
  const SubsetMask rest = full & ~s;
  const double h_all = joint_entropy(m, full);
  return rest == 0 ? h_all : std::max(0.0, h_all - joint_entropy(m, rest));
}

EntropyProfile entropy_profile(const SourceModel& m, std::size_t subset_bound) {
  const std::size_t p = m.sources.size();
  check_subset_bound(p, subset_bound);
  const SubsetMask full = full_mask(p);
  EntropyProfile out{SetFunction(m.sources), SetFunction(m.sources), std::vector<double>(full + std::size_t{1}, 0.0),
                     std::vector<double>(full + std::size_t{1}, 0.0)};
  for (SubsetMask s = 1; s <= full && s != 0; ++s) out.joint_bits[s] = joint_entropy(m, s);
  for (SubsetMask s = 1; s <= full && s != 0; ++s) {
    const SubsetMask rest = full & ~s;
    // conditioning can only lower entropy; clamp rounding noise below zero
    out.sigma_bits[s] = std::max(0.0, out.joint_bits[full] - out.joint_bits[rest]);
    out.joint.set(s, ExtRational(exact_rational(out.joint_bits[s])));
    out.sigma.set(s, ExtRational(exact_rational(out.sigma_bits[s])));
  }
  return out;
}

double binary_entropy(double p) {
  if (!(p >= 0.0 && p <= 1.0)) throw PreconditionError("binary entropy needs 0 <= p <= 1");
  if (p == 0.0 || p == 1.0) return 0.0;
  return -p * std::log2(p) - (1.0 - p) * std::log2(1.0 - p);
}

SourceModel parse_source_model(std::string_view text) {
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::parse_error& e) {
    throw SyntaxError(std::string("source document: ") + e.what());
  }
  if (!doc.is_object()) throw SyntaxError("source document must be a JSON object");
  for (const char* field : {"sources", "alphabets", "pmf"})
    if (!doc.contains(field) || !doc.at(field).is_array())
      throw SyntaxError(std::string("missing array field '") + field + "'");
  SourceModel m;
  for (const auto& s : doc.at("sources")) {
    if (!s.is_string()) throw SyntaxError("source names must be strings");
    m.sources.push_back(s.get<std::string>());
  }
  for (const auto& a : doc.at("alphabets")) {
    if (!a.is_number_integer() || a.get<std::int64_t>() <= 0 || a.get<std::int64_t>() > (1 << 20))
      throw SyntaxError("alphabet sizes must be positive integers");
    m.alphabet_sizes.push_back(a.get<std::uint32_t>());
  }
  for (const auto& e : doc.at("pmf")) {
    if (!e.is_object() || !e.contains("symbols") || !e.contains("p") || !e.at("symbols").is_array())
      throw SyntaxError("pmf entries need 'symbols' and 'p'");
    PmfEntry entry;
    for (const auto& x : e.at("symbols")) {
      if (!x.is_number_integer() || x.get<std::int64_t>() < 0) throw SyntaxError("symbols must be nonnegative integers");
      entry.symbols.push_back(x.get<std::uint32_t>());
    }
    const json& p = e.at("p");
    if (p.is_string()) {
      entry.exact = parse_rational(p.get<std::string>());
      entry.p = entry.exact->get_d();
    } else if (p.is_number()) {
      entry.p = p.get<double>();
    } else {
      throw SyntaxError("probability must be a number or rational string");
    }
    m.pmf.push_back(std::move(entry));
  }
  validate_model(m);
  return m;
}

SourceModel load_source_model(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw SyntaxError("cannot read source file '" + path.string() + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_source_model(buf.str());
}

std::string to_json_text(const SourceModel& m) {
  json doc;
  doc["sources"] = m.sources;
  doc["alphabets"] = m.alphabet_sizes;
  json pmf = json::array();
  for (const auto& e : m.pmf) {
    json entry;
    entry["symbols"] = e.symbols;
    if (e.exact)
      entry["p"] = to_string(*e.exact);
    else
      entry["p"] = e.p;
    pmf.push_back(std::move(entry));
  }
  doc["pmf"] = std::move(pmf);
  return doc.dump(2);
}

}  // namespace corrcast
