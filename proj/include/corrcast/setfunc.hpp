#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "corrcast/exec.hpp"
#include "corrcast/rational.hpp"
#include "corrcast/subset.hpp"

namespace corrcast {

/// Map from subsets of an ordered ground set to nonnegative extended rationals, with
/// f(empty) fixed at 0. Always complete: every subset carries a value.
class SetFunction {
 public:
  SetFunction() = default;
  explicit SetFunction(std::vector<std::string> ground);
  /// `values` is indexed by subset mask and must have 2^|ground| entries with values[0] == 0.
  SetFunction(std::vector<std::string> ground, std::vector<ExtRational> values);

  const std::vector<std::string>& ground() const noexcept { return ground_; }
  std::size_t ground_size() const noexcept { return ground_.size(); }
  SubsetMask full() const noexcept { return full_mask(ground_.size()); }

  const ExtRational& operator()(SubsetMask s) const { return values_.at(s); }
  void set(SubsetMask s, ExtRational value);

  const std::vector<ExtRational>& values() const noexcept { return values_; }

  friend bool operator==(const SetFunction&, const SetFunction&) = default;

 private:
  std::vector<std::string> ground_;
  std::vector<ExtRational> values_{ExtRational(0)};
};

/// Parses `{"ground": [..], "values": {"s1": "1", "s1+s2": "2", ...}}` or the bare values
/// object (ground taken from member names in order of first appearance). Missing subsets
/// are a SemanticError.
SetFunction parse_set_function(std::string_view text);
std::string to_json_text(const SetFunction& f);

enum class Axiom { normalized, monotone, submodular, supermodular };
std::string_view axiom_name(Axiom a);

struct AxiomViolation {
  Axiom axiom;
  SubsetMask first;
  SubsetMask second;
};

struct AxiomReport {
  bool holds = true;
  /// Present iff holds is false.
  std::optional<AxiomViolation> witness;
};

/// Normalized, monotone and submodular within `tol` (exact when tol == 0).
/// Witness is the first violating pair in (monotone, then submodular; ascending masks) order.
AxiomReport is_polymatroid(const SetFunction& f, const Rational& tol = 0, Exec exec = Exec::parallel);
/// Normalized, monotone and supermodular within `tol`.
AxiomReport is_copolymatroid(const SetFunction& f, const Rational& tol = 0, Exec exec = Exec::parallel);

/// Re-evaluates the named axiom on the witness pair; true iff it is violated by more than tol.
bool violates(const SetFunction& f, const AxiomViolation& v, const Rational& tol = 0);

/// One nonnegative rate per ground element.
struct RatePoint {
  std::vector<std::string> sources;
  std::vector<Rational> rates;

  Rational sum(SubsetMask s) const;
};

struct SandwichResult {
  /// R with sigma(S) <= sum_S R <= rho(S) for every nonempty S.
  std::optional<RatePoint> point;
  /// First subset (size-then-lex order) with sigma(S) > rho(S) + tol.
  std::optional<SubsetMask> violated;
};

/// Rates squeezed between a co-polymatroid and a polymatroid. Throws PreconditionError if
/// sigma is not a co-polymatroid or rho not a polymatroid (callers then use the general LP).
/// With tol > 0 the returned point satisfies the bounds within tol/2.
SandwichResult sandwich_feasible(const SetFunction& sigma, const SetFunction& rho, const Rational& tol = 0);

}  // namespace corrcast
