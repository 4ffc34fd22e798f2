#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include <json.hpp>

#include "fairsweep/dataset.hpp"

namespace fairsweep {

// Per-(class, group) true positive rates. Cells with no members are absent.
struct TprTable {
  int num_classes = 0;
  int num_groups = 0;
  std::vector<double> tpr;               // row-major; meaningless where absent
  std::vector<std::int64_t> support;     // cell sizes

  double at(int c, int g) const { return tpr[static_cast<std::size_t>(c) * num_groups + g]; }
  bool present(int c, int g) const {
    return support[static_cast<std::size_t>(c) * num_groups + g] > 0;
  }
};

TprTable tpr_table(std::span<const int> predictions, const LabeledDataset& ds);

struct GapResult {
  double gap = 0.0;           // RMS over classes of |TPR_{c,0} - TPR_{c,1}|, in [0, 1]
  double fairness = 0.0;      // percent, 100 * (1 - gap)
  std::vector<double> per_class_gap;
  int absent_cells = 0;       // cells missing from the table; their class gap is 0
};

// Binary protected attribute only (throws otherwise).
GapResult gap_and_fairness(const TprTable& table);

// Euclidean distance from (performance, fairness) to the optimum (100, 100).
// Both inputs are percents in [0, 100].
double dto(double performance, double fairness);

struct GroupRegressionMetrics {
  double pearson = 0.0;
  double mae = 0.0;
  double rmse = 0.0;
  std::int64_t count = 0;
  bool pearson_defined = false;  // false when the group's targets are constant
};

struct RegressionMetricsReport {
  double pearson = 0.0;  // raw r in [-1, 1]; 0 with a flag when predictions are constant
  double mae = 0.0;
  double rmse = 0.0;
  bool pearson_defined = true;
  std::vector<GroupRegressionMetrics> per_group;
  double pearson_gap = 0.0;
  double mae_gap = 0.0;
  double rmse_gap = 0.0;
  double fairness = 0.0;  // percent, 100 * (1 - pearson_gap)
};

RegressionMetricsReport regression_metrics(std::span<const double> predictions,
                                           const LabeledDataset& ds);

// One evaluation of one checkpoint on one split.
struct EvalReport {
  TargetKind task = TargetKind::kClassification;
  double performance = 0.0;  // Accuracy percent, or Pearson r * 100
  double fairness = 0.0;     // percent
  double gap = 0.0;          // classification GAP in [0, 1], or Pearson-GAP
  double dto = 0.0;
  std::optional<TprTable> tpr;
  std::vector<double> per_class_gap;
  std::optional<RegressionMetricsReport> regression;

  nlohmann::json to_json() const;
  static EvalReport from_json(const nlohmann::json& j);
};

EvalReport evaluate_classification(std::span<const int> predictions, const LabeledDataset& ds);
EvalReport evaluate_regression(std::span<const double> predictions, const LabeledDataset& ds);

struct CandidateRun {
  std::string method;
  nlohmann::json hyperparameters;
  std::uint64_t seed = 0;
  EvalReport dev;
  EvalReport test;
  std::string checkpoint_path;
};

// Minimal dev DTO; ties broken by higher dev fairness, then lower index.
std::size_t select_by_dto(std::span<const CandidateRun> candidates);

}  // namespace fairsweep
