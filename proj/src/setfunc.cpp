#include "corrcast/setfunc.hpp"

#include <algorithm>

#include <json.hpp>

#include "corrcast/error.hpp"
#include "corrcast/lp.hpp"

namespace corrcast {
namespace {

using json = nlohmann::ordered_json;

// Above this ground size, pairwise checks switch to the local (S+i, S+j) form.
constexpr std::size_t kAllPairsLimit = 12;

bool exceeds(const ExtRational& lhs, const ExtRational& rhs, const Rational& tol) {
  // lhs > rhs + tol
  return lhs > rhs + ExtRational(tol);
}

bool monotone_violated(const SetFunction& f, SubsetMask s, SubsetMask t, const Rational& tol) {
  return is_subset(s, t) && s != t && exceeds(f(s), f(t), tol);
}

bool modular_violated(const SetFunction& f, SubsetMask a, SubsetMask b, bool submodular, const Rational& tol) {
  ExtRational outer = f(a & b) + f(a | b);
  ExtRational inner = f(a) + f(b);
  return submodular ? exceeds(outer, inner, tol) : exceeds(inner, outer, tol);
}

template <class Pred>
std::optional<std::pair<SubsetMask, SubsetMask>> first_violation(SubsetMask full, Exec exec, Pred&& per_outer) {
  const std::int64_t count = static_cast<std::int64_t>(full) + 1;
  std::vector<std::optional<SubsetMask>> found(static_cast<std::size_t>(count));
  if (exec == Exec::parallel) {
    detail::ExceptionSlot slot;
#pragma omp parallel for schedule(dynamic, 16)
    for (std::int64_t s = 0; s < count; ++s)
      slot.run([&] { found[static_cast<std::size_t>(s)] = per_outer(static_cast<SubsetMask>(s)); });
    slot.rethrow();
  } else {
    for (std::int64_t s = 0; s < count; ++s) {
      found[static_cast<std::size_t>(s)] = per_outer(static_cast<SubsetMask>(s));
      if (found[static_cast<std::size_t>(s)]) break;
    }
  }
  for (std::int64_t s = 0; s < count; ++s)
    if (auto& t = found[static_cast<std::size_t>(s)]) return std::pair{static_cast<SubsetMask>(s), *t};
  return std::nullopt;
}

AxiomReport check_axioms(const SetFunction& f, const Rational& tol, Exec exec, bool submodular) {
  if (f.values().size() != static_cast<std::size_t>(f.full()) + 1)
    throw PreconditionError("set function is incomplete");
  if (f(0) != ExtRational(0)) return {false, AxiomViolation{Axiom::normalized, 0, 0}};
  const SubsetMask full = f.full();
  const bool all_pairs = f.ground_size() <= kAllPairsLimit;

  // monotone
  auto mono = first_violation(full, exec, [&](SubsetMask s) -> std::optional<SubsetMask> {
    const SubsetMask comp = full & ~s;
    if (all_pairs) {
      // supersets of s in ascending order: s | sub for ascending submasks sub of comp
      for (SubsetMask sub = comp & (0 - comp); sub != 0; sub = (sub - comp) & comp)
        if (monotone_violated(f, s, s | sub, tol)) return s | sub;
      return std::nullopt;
    }
    for (SubsetMask bit : members(comp)) {
      SubsetMask t = s | (SubsetMask{1} << bit);
      if (monotone_violated(f, s, t, tol)) return t;
    }
    return std::nullopt;
  });
  if (mono) return {false, AxiomViolation{Axiom::monotone, mono->first, mono->second}};

  const Axiom which = submodular ? Axiom::submodular : Axiom::supermodular;
  if (all_pairs) {
    auto pair = first_violation(full, exec, [&](SubsetMask a) -> std::optional<SubsetMask> {
      for (SubsetMask b = a + 1; b <= full && b != 0; ++b) {
        if (is_subset(a, b) || is_subset(b, a)) continue;
        if (modular_violated(f, a, b, submodular, tol)) return b;
      }
      return std::nullopt;
    });
    if (pair) return {false, AxiomViolation{which, pair->first, pair->second}};
    return {};
  }
  // local form: f(S+i) + f(S+j) against f(S) + f(S+i+j)
  auto local = first_violation(full, exec, [&](SubsetMask s) -> std::optional<SubsetMask> {
    auto outside = members(full & ~s);
    for (std::size_t x = 0; x < outside.size(); ++x)
      for (std::size_t y = x + 1; y < outside.size(); ++y) {
        SubsetMask a = s | (SubsetMask{1} << outside[x]);
        SubsetMask b = s | (SubsetMask{1} << outside[y]);
        if (modular_violated(f, a, b, submodular, tol)) return b;
      }
    return std::nullopt;
  });
  if (local) {
    // recover the (a, b) pair: redo the serial search on the reported base set
    const SubsetMask s = local->first;
    auto outside = members(full & ~s);
    for (std::size_t x = 0; x < outside.size(); ++x)
      for (std::size_t y = x + 1; y < outside.size(); ++y) {
        SubsetMask a = s | (SubsetMask{1} << outside[x]);
        SubsetMask b = s | (SubsetMask{1} << outside[y]);
        if (modular_violated(f, a, b, submodular, tol)) return {false, AxiomViolation{which, a, b}};
      }
  }
  return {};
}

}  // namespace

SetFunction::SetFunction(std::vector<std::string> ground) : ground_(std::move(ground)) {
  if (ground_.size() > kMaxGround) throw LimitError("ground set too large");
  values_.assign(static_cast<std::size_t>(full_mask(ground_.size())) + 1, ExtRational(0));
}

SetFunction::SetFunction(std::vector<std::string> ground, std::vector<ExtRational> values)
    : ground_(std::move(ground)), values_(std::move(values)) {
  if (ground_.size() > kMaxGround) throw LimitError("ground set too large");
  if (values_.size() != static_cast<std::size_t>(full_mask(ground_.size())) + 1)
    throw PreconditionError("set function needs a value for every subset");
  if (values_[0] != ExtRational(0)) throw PreconditionError("set function must vanish on the empty set");
  for (const auto& v : values_)
    if (v < ExtRational(0)) throw PreconditionError("set function values must be nonnegative");
}

void SetFunction::set(SubsetMask s, ExtRational value) {
  if (s == 0) throw PreconditionError("the empty set is fixed at 0");
  if (s > full()) throw PreconditionError("subset outside the ground set");
  if (value < ExtRational(0)) throw PreconditionError("set function values must be nonnegative");
  values_[s] = std::move(value);
}

std::string_view axiom_name(Axiom a) {
  switch (a) {
    case Axiom::normalized: return "normalized";
    case Axiom::monotone: return "monotone";
    case Axiom::submodular: return "submodular";
    case Axiom::supermodular: return "supermodular";
  }
  return "?";
}

AxiomReport is_polymatroid(const SetFunction& f, const Rational& tol, Exec exec) {
  return check_axioms(f, tol, exec, true);
}

AxiomReport is_copolymatroid(const SetFunction& f, const Rational& tol, Exec exec) {
  return check_axioms(f, tol, exec, false);
}

bool violates(const SetFunction& f, const AxiomViolation& v, const Rational& tol) {
  switch (v.axiom) {
    case Axiom::normalized: return f(0) != ExtRational(0);
    case Axiom::monotone: return monotone_violated(f, v.first, v.second, tol);
    case Axiom::submodular: return modular_violated(f, v.first, v.second, true, tol);
    case Axiom::supermodular: return modular_violated(f, v.first, v.second, false, tol);
  }
  return false;
}

Rational RatePoint::sum(SubsetMask s) const {
  Rational total = 0;
  for (std::size_t i : members(s)) total += rates.at(i);
  return total;
}

SandwichResult sandwich_feasible(const SetFunction& sigma, const SetFunction& rho, const Rational& tol) {
  if (sigma.ground() != rho.ground()) throw PreconditionError("sigma and rho have different ground sets");
  if (auto r = is_copolymatroid(sigma, tol); !r.holds)
    throw PreconditionError("sigma is not a co-polymatroid (" + std::string(axiom_name(r.witness->axiom)) +
                            " fails); use the general LP");
  if (auto r = is_polymatroid(rho, tol); !r.holds)
    throw PreconditionError("rho is not a polymatroid (" + std::string(axiom_name(r.witness->axiom)) +
                            " fails); use the general LP");

  SandwichResult out;
  for (SubsetMask s : nonempty_subsets(sigma.ground_size())) {
    if (exceeds(sigma(s), rho(s), tol)) {
      out.violated = s;
      return out;
    }
  }
  const std::size_t p = sigma.ground_size();
  const Rational half = tol / 2;
  std::vector<lp::Row> rows;
  for (SubsetMask s : nonempty_subsets(p)) {
    std::vector<Rational> coeffs(p, 0);
    for (std::size_t i : members(s)) coeffs[i] = 1;
    if (sigma(s).is_infinite()) throw PreconditionError("sigma must be finite");
    rows.push_back({coeffs, lp::Sense::at_least, sigma(s).finite() - half});
    if (rho(s).is_finite()) rows.push_back({coeffs, lp::Sense::at_most, rho(s).finite() + half});
  }
  lp::Result lp = lp::solve_feasibility(p, rows);
  if (!lp.feasible) throw Error("sandwich LP infeasible although sigma <= rho pointwise");
  out.point = RatePoint{sigma.ground(), std::move(lp.point)};
  return out;
}

SetFunction parse_set_function(std::string_view text) {
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::parse_error& e) {
    throw SyntaxError(std::string("set-function document: ") + e.what());
  }
  if (!doc.is_object()) throw SyntaxError("set-function document must be a JSON object");
  const json* values = &doc;
  std::vector<std::string> ground;
  if (doc.contains("values")) {
    values = &doc.at("values");
    if (!values->is_object()) throw SyntaxError("'values' must be an object");
    if (doc.contains("ground")) {
      if (!doc.at("ground").is_array()) throw SyntaxError("'ground' must be an array");
      for (const auto& g : doc.at("ground")) {
        if (!g.is_string()) throw SyntaxError("ground entries must be strings");
        ground.push_back(g.get<std::string>());
      }
    }
  }
  if (ground.empty()) {
    for (const auto& [key, _] : values->items()) {
      std::size_t start = 0;
      while (start <= key.size()) {
        std::size_t end = key.find_first_of("+,", start);
        if (end == std::string::npos) end = key.size();
        std::string name = key.substr(start, end - start);
        if (!name.empty() && std::find(ground.begin(), ground.end(), name) == ground.end()) ground.push_back(name);
        start = end + 1;
      }
    }
  }
  check_subset_bound(ground.size(), kMaxGround);
  std::vector<ExtRational> vals(static_cast<std::size_t>(full_mask(ground.size())) + 1, ExtRational(0));
  std::vector<bool> seen(vals.size(), false);
  seen[0] = true;
  for (const auto& [key, v] : values->items()) {
    SubsetMask s = parse_subset(key, ground);
    if (seen[s]) throw SemanticError("subset '" + key + "' given twice");
    ExtRational value;
    if (v.is_string())
      value = parse_ext_rational(v.get<std::string>());
    else if (v.is_number())
      value = ExtRational(parse_rational(v.dump()));
    else
      throw SyntaxError("value of '" + key + "' must be a number or rational string");
    if (value < ExtRational(0)) throw SemanticError("negative value for subset '" + key + "'");
    vals[s] = std::move(value);
    seen[s] = true;
  }
  for (std::size_t s = 0; s < seen.size(); ++s)
    if (!seen[s])
      throw SemanticError("set function incomplete: missing subset '" +
                          subset_label(static_cast<SubsetMask>(s), ground) + "'");
  return SetFunction(std::move(ground), std::move(vals));
}

std::string to_json_text(const SetFunction& f) {
  json doc;
  doc["ground"] = f.ground();
  json values = json::object();
  for (SubsetMask s : nonempty_subsets(f.ground_size())) values[subset_label(s, f.ground())] = f(s).str();
  doc["values"] = std::move(values);
  return doc.dump(2);
}

}  // namespace corrcast
