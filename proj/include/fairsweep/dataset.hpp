#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "fairsweep/tables.hpp"

namespace fairsweep {

enum class TargetKind { kClassification, kRegression };

// One labeled example. `target` holds the class index (stored exactly as a
// small non-negative float) or the real-valued regression target. `proxy` is
// the quantile bin used for grouping in regression mode, -1 when unassigned.
struct Instance {
  std::vector<float> features;
  float target = 0.0f;
  std::uint16_t group = 0;
  std::int32_t proxy = -1;
};

struct LabeledDataset {
  std::vector<Instance> instances;
  int num_classes = 2;
  int num_groups = 2;
  int feature_dim = 0;
  TargetKind target_kind = TargetKind::kClassification;
  int proxy_arity = 0;  // >0 once quantile proxies have been assigned

  std::size_t size() const { return instances.size(); }
  bool empty() const { return instances.empty(); }
  bool is_classification() const { return target_kind == TargetKind::kClassification; }
  bool has_proxies() const { return proxy_arity > 0; }

  int label(std::size_t i) const { return static_cast<int>(instances[i].target); }
  int group(std::size_t i) const { return instances[i].group; }
  double value(std::size_t i) const { return instances[i].target; }

  // Class used for (class, group) cell bookkeeping: the label for
  // classification, the quantile proxy for regression.
  int cell_class(std::size_t i) const;
  int cell_arity() const;

  void validate() const;  // throws on arity/dimension violations
};

struct SyntheticSpec {
  int num_classes = 2;
  int num_groups = 2;
  int feature_dim = 16;
  // Either explicit per-cell sizes (row-major, num_classes*num_groups) or a
  // joint table plus a total count.
  std::vector<std::int64_t> cell_sizes;
  std::optional<JointTable> joint;
  std::int64_t total = 0;
  TargetKind target_kind = TargetKind::kClassification;
  double class_separation = 1.0;
  double group_leak = 0.0;
  double noise_scale = 1.0;
  std::uint64_t seed = 0;
};

enum class FileFormat { kFvec, kCsv, kNdjson };

FileFormat format_from_path(const std::string& path);

LabeledDataset load_dataset(const std::string& path, FileFormat format);
void save_dataset(const LabeledDataset& ds, const std::string& path, FileFormat format);

GroupCounts count_groups(const LabeledDataset& ds);
JointTable empirical_joint(const GroupCounts& counts);

// Per cell (c, g): features = class_separation*e_c + group_leak*f_g + noise,
// with {e_c} and {f_g} columns of a seeded random orthonormal basis (needs
// feature_dim >= num_classes + num_groups). Regression targets come from a
// group-shifted linear function of the features.
LabeledDataset generate_synthetic(const SyntheticSpec& spec);

struct SplitFractions {
  double train = 0.8;
  double dev = 0.1;
  double test = 0.1;
};

struct DatasetSplits {
  LabeledDataset train;
  LabeledDataset dev;
  LabeledDataset test;
};

DatasetSplits split_dataset(const LabeledDataset& ds, const SplitFractions& fractions,
                            std::uint64_t seed);

std::vector<std::pair<LabeledDataset, LabeledDataset>> kfold_splits(const LabeledDataset& ds,
                                                                    int k, std::uint64_t seed);

// Row-major per-cell index lists; shared by the resamplers and the methods.
std::vector<std::vector<std::int64_t>> cell_indices(const LabeledDataset& ds);

}  // namespace fairsweep
