#pragma once

// Full analysis of one datum and its JSON form.

#include <string>
#include <vector>

#include <json.hpp>

#include "bmgroups/ktheory.hpp"
#include "bmgroups/tilingshift.hpp"
#include "bmgroups/vhdatum.hpp"
#include "bmgroups/zmatrix.hpp"

namespace bmg {

struct HSummary {
  bool h0 = false;
  bool h1a = false;
  bool h1b = false;
  bool h2 = false;
  bool h3 = false;
  int h3_bound = 0;
  std::size_t h3_periods_checked = 0;
  std::vector<std::pair<int, int>> h3_failures;
  bool degree_sums_ok = false;

  friend bool operator==(HSummary const&, HSummary const&) = default;
};

struct AnalysisReport {
  int m = 0;
  int n = 0;
  int alpha = 0;
  int beta = 0;
  long rho = 0;
  HSummary h_conditions;
  AbelianGroup C;
  AbelianGroup K0;
  AbelianGroup K1;
  AbelianGroup H1;
  long identity_class_order = 0;
  std::string bound_check;
  long chi = 0;
  long h2_rank = 0;
  bool rank_conjecture_holds = false;
  bool identity_order_equals_rho = false;

  friend bool operator==(AnalysisReport const&, AnalysisReport const&) = default;
};

AnalysisReport analyze(BMDatum const& datum, int h3_bound = 3);

nlohmann::ordered_json to_json(AnalysisReport const& r);
/// Throws nlohmann::json::exception or std::invalid_argument on malformed input.
AnalysisReport report_from_json(nlohmann::ordered_json const& j);

nlohmann::ordered_json group_json(AbelianGroup const& G);
AbelianGroup group_from_json(nlohmann::ordered_json const& j);

/// Human-readable multi-line summary.
std::string to_text(AnalysisReport const& r);

}  // namespace bmg
