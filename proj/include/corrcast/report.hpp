#pragma once

#include <string>
#include <vector>

#include <json.hpp>

#include "corrcast/entropy.hpp"
#include "corrcast/mincut.hpp"
#include "corrcast/regions.hpp"
#include "corrcast/setfunc.hpp"
#include "corrcast/simulator.hpp"
#include "corrcast/transmissibility.hpp"

namespace corrcast::report {

using Json = nlohmann::ordered_json;

/// 9 significant digits.
std::string fmt(double v);

/// Fixed-width columns; first column left aligned, the rest right aligned.
class Table {
 public:
  explicit Table(std::vector<std::string> header) : rows_{std::move(header)} {}
  void add(std::vector<std::string> row) { rows_.push_back(std::move(row)); }
  std::string str() const;

 private:
  std::vector<std::vector<std::string>> rows_;
};

Json to_json(const TransmissibilityReport& r);
std::string to_table(const TransmissibilityReport& r);

Json to_json(const CapacityProfile& p);
std::string to_table(const CapacityProfile& p);

Json to_json(const EntropyProfile& e);
std::string to_table(const EntropyProfile& e);

Json to_json(const SetFunction& f, std::string_view kind, const AxiomReport& r);
std::string to_table(const SetFunction& f, std::string_view kind, const AxiomReport& r);

Json to_json(const RatePoint& p);
Json to_json(const FeasibilityResult& f, const std::vector<std::string>& ground);
Json to_json(const Theorem2Report& r);
std::string to_table(const Theorem2Report& r);
Json to_json(const SeparationReport& r);
std::string to_table(const SeparationReport& r);

Json to_json(const SimResult& r);
std::string to_table(const SimResult& r);
/// One row per (n, sink): lambda-hat and its half-width.
std::string sweep_table(const std::vector<SimResult>& results);

}  // namespace corrcast::report
