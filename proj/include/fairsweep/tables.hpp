#pragma once

#include <cstdint>
#include <vector>

namespace fairsweep {

// Integer class-by-group contingency table.
struct GroupCounts {
  int num_classes = 0;
  int num_groups = 0;
  std::vector<std::int64_t> counts;  // row-major, class-major
  std::int64_t total = 0;

  static GroupCounts zeros(int num_classes, int num_groups);

  std::int64_t& at(int c, int g) { return counts[static_cast<std::size_t>(c) * num_groups + g]; }
  std::int64_t at(int c, int g) const { return counts[static_cast<std::size_t>(c) * num_groups + g]; }
  void recompute_total();
};

// Probability table over (class, group). Valid tables have entries in [0, 1]
// summing to 1 within 1e-9.
struct JointTable {
  int num_classes = 0;
  int num_groups = 0;
  std::vector<double> probs;

  static JointTable uniform(int num_classes, int num_groups);
  static JointTable from_entries(int num_classes, int num_groups, std::vector<double> entries);

  double& at(int c, int g) { return probs[static_cast<std::size_t>(c) * num_groups + g]; }
  double at(int c, int g) const { return probs[static_cast<std::size_t>(c) * num_groups + g]; }

  double class_marginal(int c) const;
  double sum() const;
  bool is_valid(double tol = 1e-9) const;
  void validate() const;  // throws std::invalid_argument when not valid
};

// Interpolation output before normalization; entries may be negative or > 1.
struct RawTable {
  int num_classes = 0;
  int num_groups = 0;
  std::vector<double> entries;

  double& at(int c, int g) { return entries[static_cast<std::size_t>(c) * num_groups + g]; }
  double at(int c, int g) const { return entries[static_cast<std::size_t>(c) * num_groups + g]; }
  double sum() const;
};

}  // namespace fairsweep
