#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <variant>
#include <vector>

#include "fairsweep/dataset.hpp"
#include "fairsweep/matrix.hpp"
#include "fairsweep/net.hpp"

namespace fairsweep {

struct VanillaConfig {};
struct DownsampleConfig {};
struct ReweightConfig {};

struct AdvConfig {
  double lambda_adv = 1.0;
  std::vector<int> disc_hidden{128};
  int adv_steps = 1;
};

struct DadvConfig {
  double lambda_adv = 1.0;
  double lambda_diverse = 10.0;
  int n_discriminators = 3;
  std::vector<int> disc_hidden{128};
  int adv_steps = 1;
};

struct FairBatchConfig {
  double fb_alpha = 0.1;
};

struct EoClaConfig {
  double lambda = 1.0;
};

struct EoGlbConfig {
  double lambda = 1.0;
};

enum class ProbeKind { kLinearClassifier, kLinearRegressor };

struct InlpConfig {
  int iterations = 300;  // 200 for regression, set by adapt_method
  ProbeKind probe_kind = ProbeKind::kLinearClassifier;
};

using MethodConfig = std::variant<VanillaConfig, DownsampleConfig, ReweightConfig, AdvConfig,
                                  DadvConfig, FairBatchConfig, EoClaConfig, EoGlbConfig,
                                  InlpConfig>;

std::string method_name(const MethodConfig& mc);

// A trained model handle: parameters plus the optional INLP projection that
// is applied to the last hidden layer before the output layer.
struct TrainedModel {
  ModelParams params;
  std::optional<Matrix> projection;
  TrainLog log;
};

ForwardPass model_forward(const TrainedModel& model, const Matrix& inputs);
std::vector<int> predict_classes(const TrainedModel& model, const LabeledDataset& ds,
                                 int chunk = 4096);
std::vector<double> predict_values(const TrainedModel& model, const LabeledDataset& ds,
                                   int chunk = 4096);
// Last-hidden activations (projection applied when present), one row per instance.
Matrix hidden_representations(const TrainedModel& model, const LabeledDataset& ds,
                              int chunk = 4096);

// --- pre-processing -------------------------------------------------------

// Group-balance within every class at the largest size that preserves the
// class ratio: n'_{c,g} = round(beta * P(y=c) / G) with beta maximal subject
// to n'_{c,g} <= n_{c,g}. Sampling is without replacement, seeded per cell.
LabeledDataset downsample(const LabeledDataset& ds, std::uint64_t seed);

// w_{c,g} = 1 / (C * G * P_hat(c,g)), rescaled to mean 1 over the dataset.
std::vector<double> reweight(const LabeledDataset& ds);

// --- loss-disparity penalties ----------------------------------------------

// sum_c sum_g |L^{c,g} - L^c| over cells present in the batch; optional
// subgradient w.r.t. each per-instance loss (0 at exact ties).
double eo_cla_loss(std::span<const double> per_instance_losses, std::span<const int> cell_class,
                   std::span<const int> cell_group, int num_classes, int num_groups,
                   std::vector<double>* dloss = nullptr);

// sum_c sum_g |L^{c,g} - L_overall| with L_overall the batch mean loss.
double eo_glb_loss(std::span<const double> per_instance_losses, std::span<const int> cell_class,
                   std::span<const int> cell_group, int num_classes, int num_groups,
                   std::vector<double>* dloss = nullptr);

// --- FairBatch --------------------------------------------------------------

// Per-(class, group) sampling probabilities; class mass is never altered.
struct FairBatchState {
  int num_classes = 0;
  int num_groups = 0;
  std::vector<double> probs;         // row-major, sums to 1
  std::vector<double> loss_sums;     // running per-cell loss sums (epoch scope)
  std::vector<std::int64_t> loss_counts;

  static FairBatchState init(const LabeledDataset& ds);
  double& prob(int c, int g) { return probs[static_cast<std::size_t>(c) * num_groups + g]; }
  double prob(int c, int g) const { return probs[static_cast<std::size_t>(c) * num_groups + g]; }
  void accumulate(int c, int g, double loss_value);
  // Within each class, move fb_alpha of sampling mass to the group with the
  // larger mean epoch loss (clipped; no transfer on exact ties).
  void update(double fb_alpha);
  void reset_losses();
};

// --- INLP --------------------------------------------------------------------

struct ProjectionState {
  Matrix projection;                   // hidden_dim x hidden_dim, symmetric idempotent
  std::vector<std::vector<double>> probe_directions;

  static ProjectionState identity(int dim);
  // P <- (I - w w^T) P for each unit direction (rowspace of the probe).
  void remove_direction(std::span<const double> unit_direction);
};

// Linear probe fit by plain gradient descent from zero init (updates stay in
// the row space of the inputs, which keeps INLP projections symmetric).
struct LinearProbe {
  Matrix weights;  // num_groups x dim (one row for binary regressor probes)
  std::vector<double> bias;
  ProbeKind kind = ProbeKind::kLinearClassifier;
};

LinearProbe fit_linear_probe(const Matrix& inputs, std::span<const int> labels, int num_groups,
                             ProbeKind kind, int iterations = 100, double learning_rate = 0.5,
                             double l2 = 1e-4);
double probe_accuracy(const LinearProbe& probe, const Matrix& inputs,
                      std::span<const int> labels);

// --- trainers ----------------------------------------------------------------

TrainedModel train_vanilla(const NetConfig& net, const TrainConfig& tc,
                           const LabeledDataset& train_ds, const LabeledDataset& dev_ds);

TrainedModel train_adv(const NetConfig& net, const TrainConfig& tc, const AdvConfig& mc,
                       const LabeledDataset& train_ds, const LabeledDataset& dev_ds);

TrainedModel train_dadv(const NetConfig& net, const TrainConfig& tc, const DadvConfig& mc,
                        const LabeledDataset& train_ds, const LabeledDataset& dev_ds);

TrainedModel train_fairbatch(const NetConfig& net, const TrainConfig& tc,
                             const FairBatchConfig& mc, const LabeledDataset& train_ds,
                             const LabeledDataset& dev_ds);

struct InlpResult {
  TrainedModel model;
  ProjectionState state;
};

InlpResult train_inlp(const NetConfig& net, const TrainConfig& tc, const InlpConfig& mc,
                      const LabeledDataset& train_ds, const LabeledDataset& dev_ds);

// Uniform dispatch over the nine strategies. Errors are rethrown with the
// method name attached.
TrainedModel run_method(const MethodConfig& mc, const NetConfig& net, const TrainConfig& tc,
                        const LabeledDataset& train_ds, const LabeledDataset& dev_ds);

// Dev-DTO early-stopping criterion used by the debiasing methods.
std::function<double(const ModelParams&, const LabeledDataset&)> dto_dev_criterion(
    const NetConfig& net);

}  // namespace fairsweep
