#pragma once

#include <cstdint>
#include <functional>
#include <span>
#include <string>
#include <vector>

#include "fairsweep/dataset.hpp"
#include "fairsweep/matrix.hpp"

namespace fairsweep {

enum class LossKind { kCrossEntropy, kMse };

struct NetConfig {
  int input_dim = 0;
  std::vector<int> hidden_sizes{300, 300};  // tanh layers; may be empty (linear model)
  int output_dim = 2;
  double weight_decay = 0.0;
  std::uint64_t seed = 0;
};

struct TrainConfig {
  double learning_rate = 3e-3;
  int batch_size = 1024;
  int max_epochs = 100;
  int patience = 5;
  std::vector<double> instance_weights;  // empty = unweighted; may contain negatives
};

struct AdamState {
  std::vector<Matrix> m_weights, v_weights;
  std::vector<std::vector<double>> m_biases, v_biases;
  std::int64_t step = 0;
};

// Weights are (fan_out x fan_in); weights.size() = hidden layers + 1.
struct ModelParams {
  std::vector<Matrix> weights;
  std::vector<std::vector<double>> biases;
  AdamState adam;

  int num_layers() const { return static_cast<int>(weights.size()); }
  int input_dim() const { return weights.empty() ? 0 : weights.front().cols; }
  int output_dim() const { return weights.empty() ? 0 : weights.back().rows; }
  int last_hidden_dim() const;
};

// Glorot-uniform weights, zero biases, seeded.
ModelParams init_params(const NetConfig& config);

struct ForwardPass {
  std::vector<Matrix> hidden;  // post-tanh activations, one per hidden layer
  Matrix outputs;              // batch x output_dim (raw logits / values)

  const Matrix& last_hidden(const Matrix& inputs) const {
    return hidden.empty() ? inputs : hidden.back();
  }
};

ForwardPass forward(const ModelParams& params, const Matrix& inputs);

// Per-instance losses and their gradients w.r.t. the raw outputs.
struct PerInstanceLoss {
  std::vector<double> loss;
  Matrix grad;  // batch x output_dim, d(loss_i)/d(outputs_i)
};

PerInstanceLoss loss_unreduced(const Matrix& outputs, std::span<const float> targets,
                               LossKind kind, int num_classes);

struct LossValue {
  double value = 0.0;
  Matrix output_grad;  // gradient of the (weighted) batch mean
};

// Weighted mean of per-instance losses: (1/B) * sum_i w_i * loss_i. Negative
// weights are permitted.
LossValue loss(const Matrix& outputs, std::span<const float> targets, LossKind kind,
               int num_classes, std::span<const double> weights = {});

struct Gradients {
  std::vector<Matrix> weights;
  std::vector<std::vector<double>> biases;
};

// Backpropagation for the given forward pass. `output_grad` is d(objective)/
// d(outputs); `extra_last_hidden_grad`, when given, is added to the gradient
// arriving at the last post-activation hidden layer (gradient-reversal entry
// point). `input_grad`, when given, receives d(objective)/d(inputs).
Gradients backward(const ModelParams& params, const Matrix& inputs, const ForwardPass& fwd,
                   const Matrix& output_grad, double weight_decay,
                   const Matrix* extra_last_hidden_grad = nullptr, Matrix* input_grad = nullptr);

// Adam with beta1=0.9, beta2=0.999, eps=1e-8 and bias correction; `step` is
// the 1-based step count.
void adam_step(ModelParams& params, const Gradients& grads, double learning_rate,
               std::int64_t step);

// State handed to the per-batch loss injector hook.
struct BatchContext {
  const LabeledDataset& dataset;
  const std::vector<std::int64_t>& indices;
  const Matrix& inputs;
  const ForwardPass& fwd;
  const std::vector<double>& per_instance_loss;
  std::vector<double>& coefficients;  // effective per-instance loss weights (mutable)
  Matrix& extra_last_hidden_grad;     // batch x last_hidden_dim, initially zero
  int epoch = 0;
  int batch_index = 0;
};

struct EpochHooks {
  // Batch index lists for the epoch; overrides default shuffled batching.
  std::function<std::vector<std::vector<std::int64_t>>(int epoch)> batch_sampler;
  // Extra loss terms; may adjust coefficients and the last-hidden gradient.
  // Returns the extra loss value added to the objective.
  std::function<double(BatchContext&)> loss_injector;
  std::function<void(int epoch)> epoch_end;
  // Early-stopping criterion on the dev set (lower is better); defaults to
  // the unweighted dev task loss.
  std::function<double(const ModelParams&, const LabeledDataset&)> dev_criterion;
};

struct EpochLogEntry {
  int epoch = 0;
  double train_loss = 0.0;
  double dev_criterion = 0.0;
};

struct TrainLog {
  std::vector<EpochLogEntry> entries;
  int best_epoch = 0;

  std::string to_ndjson() const;
};

struct TrainResult {
  ModelParams params;  // parameters of the best dev epoch
  TrainLog log;
};

// Minibatch training with early stopping: stops after `patience` consecutive
// epochs without dev improvement, or at max_epochs; returns best-epoch params.
TrainResult train(const NetConfig& net, const TrainConfig& tc, const LabeledDataset& train_ds,
                  const LabeledDataset& dev_ds, const EpochHooks& hooks = {});

// Plain task loss (unweighted mean) over a dataset, evaluated in chunks.
double dataset_loss(const ModelParams& params, const LabeledDataset& ds, LossKind kind,
                    int chunk = 4096);

Matrix features_matrix(const LabeledDataset& ds, std::span<const std::int64_t> indices);

LossKind loss_kind_for(const LabeledDataset& ds);

}  // namespace fairsweep
