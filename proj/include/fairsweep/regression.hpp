#pragma once

#include <span>
#include <vector>

#include "fairsweep/dataset.hpp"
#include "fairsweep/methods.hpp"

namespace fairsweep {

// Equal-population binning of continuous targets, fitted on the training
// split only. Boundaries are frozen for dev/test mapping.
struct QuantileBinning {
  int num_bins = 0;
  std::vector<double> boundaries;      // num_bins - 1 non-decreasing cut points
  std::vector<int> fit_assignment;     // rank-based bins for the fitting set
  bool degenerate = false;             // all targets equal: one bin, warning emitted

  bool fitted() const { return num_bins > 0; }
  int bin_for(double target) const;    // boundary mapping (dev/test instances)
};

QuantileBinning fit_quantile_bins(std::span<const double> targets, int num_bins);

enum class ProxySource { kFitAssignment, kBoundaries };

// Assigns each instance's quantile proxy. The fitting split reuses the
// rank-based assignment; other splits map through the frozen boundaries.
LabeledDataset assign_proxies(const LabeledDataset& ds, const QuantileBinning& bins,
                              ProxySource source);

// EO penalty over (proxy bin, group) cells with per-instance MSE losses;
// structurally identical to eo_cla_loss.
double eo_reg_loss(std::span<const double> per_instance_mse, std::span<const int> proxy_bins,
                   std::span<const int> groups, int num_bins, int num_groups,
                   std::vector<double>* dloss = nullptr);

// Regression adaptation of a method config: proxy-cell grouping for DS / RW /
// FairBatch / EO, untouched configs for ADV / DADV (they never read targets
// or proxies), and regressor probes with 200 iterations for INLP unless the
// caller chose otherwise.
MethodConfig adapt_method(const MethodConfig& mc, const LabeledDataset& regression_ds);

}  // namespace fairsweep
