#pragma once

#include <cstdint>
#include <string>

#include "fairsweep/dataset.hpp"
#include "fairsweep/tables.hpp"

namespace fairsweep {

enum class InterpolationKind { kConditionalBalance, kJointBalance };

struct InterpolationSpec {
  InterpolationKind kind = InterpolationKind::kJointBalance;
  double alpha = 0.0;  // accepted range [0, 2]
};

std::string to_string(InterpolationKind kind);
InterpolationKind interpolation_kind_from_string(const std::string& s);

// Conditional balance: entry(c,g) = P(y=c) * [(1-alpha)*P(z=g|y=c) + alpha/G].
// Class marginals are preserved exactly before normalization. Classes with a
// zero marginal are rejected (their conditional is undefined).
RawTable interpolate_cb(const JointTable& joint, double alpha);

// Joint balance: entry(c,g) = (1-alpha)*P(c,g) + alpha/(C*G).
RawTable interpolate_jb(const JointTable& joint, double alpha);

RawTable interpolate(const JointTable& joint, const InterpolationSpec& spec);

// Clamp negatives to zero, then divide by the post-clamp sum. Idempotent on
// valid tables; throws when everything clamps to zero.
JointTable normalize_table(const RawTable& raw);

// Largest-remainder (Hamilton) rounding of m * P'; ties broken row-major.
// Output sums to m exactly and every cell is within 1 of its quota.
GroupCounts allocate_counts(const JointTable& target, std::int64_t m);

// Draw counts[c][g] instances per cell i.i.d. with replacement, seeded per
// cell. Demanding from an empty source cell raises an error naming the cell.
LabeledDataset resample(const LabeledDataset& ds, const GroupCounts& counts, std::uint64_t seed);

// Records every intermediate of a synthesize() call for the JSON sidecar.
struct SynthesisTrace {
  JointTable source;
  RawTable raw;
  JointTable target;
  GroupCounts counts;
  bool clamped = false;
  // Max |P'(y=c) - P(y=c)| after normalization; nonzero only when clamping
  // fired under CB (class marginals are not re-imposed).
  double class_marginal_deviation = 0.0;
};

LabeledDataset synthesize(const LabeledDataset& ds, const InterpolationSpec& spec, std::int64_t m,
                          std::uint64_t seed, SynthesisTrace* trace = nullptr);

// Sweep-protocol helpers: rescale P(y) to a target marginal keeping P(z|y),
// and recover the CB alpha that moves a shared per-class majority conditional
// to a requested target value.
JointTable rescale_class_marginal(const JointTable& joint, const std::vector<double>& marginal);
double alpha_for_conditional_target(const JointTable& joint, double target);

}  // namespace fairsweep
