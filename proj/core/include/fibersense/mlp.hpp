#pragma once

#include <cstdint>
#include <filesystem>
#include <string>
#include <vector>

#include "fibersense/dataset.hpp"

namespace fibersense {

/// Per-component min-max scaling fitted on the training rows.
struct Normalizer {
  std::vector<double> min;
  std::vector<double> max;

  void apply(const double* in, double* out) const;
  std::vector<double> apply(const std::vector<double>& in) const;
  bool operator==(const Normalizer&) const = default;
};

/// Throws numeric_error when a component is constant.
Normalizer fit_normalizer(const std::vector<double>& rows, std::size_t n_rows,
                          std::size_t n_cols);

/// Dense ReLU network; the output unit is ReLU as well, so predictions are
/// non-negative. Weights are row-major [out x in].
struct MlpModel {
  std::vector<std::size_t> dims;           // e.g. {20, 288, ..., 1}
  std::vector<std::vector<double>> weights;
  std::vector<std::vector<double>> biases;

  std::size_t layer_count() const { return weights.size(); }
  bool operator==(const MlpModel&) const = default;
};

/// Hidden layers: He-scaled normal weights (variance 2 / fan-in), zero
/// biases. Output layer: zero weights with bias `output_bias` (a ReLU-
/// activated He-initialized scalar head collapses to a dead unit under
/// RMSprop, so the head starts at the label mean instead).
MlpModel init_mlp(const std::vector<std::size_t>& dims, std::uint64_t seed,
                  double output_bias);

double forward(const MlpModel& m, const std::vector<double>& x);
void forward_batch(const MlpModel& m, const std::vector<double>& x, std::size_t rows,
                   std::vector<double>& out);

struct Gradients {
  std::vector<std::vector<double>> weights;
  std::vector<std::vector<double>> biases;
  double mse = 0.0;
};

/// Mean-squared-error gradients over a batch (row-major inputs).
Gradients backward(const MlpModel& m, const std::vector<double>& x, std::size_t rows,
                   const std::vector<double>& y);

/// RMSprop: s <- decay s + (1-decay) g^2; theta <- theta - lr g / sqrt(s + eps).
struct RmspropState {
  double decay = 0.9;
  double epsilon = 1e-8;
  std::vector<std::vector<double>> sq_weights;
  std::vector<std::vector<double>> sq_biases;
};

RmspropState make_rmsprop_state(const MlpModel& m);
void rmsprop_step(MlpModel& m, const Gradients& g, RmspropState& state, double lr);

struct TrainStage {
  double learning_rate = 0.0;
  int epochs = 0;
};

struct TrainSchedule {
  std::vector<TrainStage> stages;
  int batch_size = 100;
};

struct EpochStats {
  int epoch = 0;
  double learning_rate = 0.0;
  double train_mse = 0.0;  // running mean of batch losses
  double val_mse = 0.0;
};

struct TrainResult {
  MlpModel model;
  std::vector<EpochStats> history;
  bool diverged = false;
};

/// Trains on normalized inputs / bar-valued targets. Deterministic for a
/// fixed seed; batches are reshuffled each epoch from the seed.
TrainResult train(MlpModel model, const std::vector<double>& x_train,
                  const std::vector<double>& y_train, std::size_t n_train,
                  const std::vector<double>& x_val, const std::vector<double>& y_val,
                  std::size_t n_val, const TrainSchedule& schedule, std::uint64_t seed);

struct EvalReport {
  double mse = 0.0;   // bar^2
  double rmse = 0.0;  // bar
  std::vector<std::pair<double, double>> scatter;  // (truth, prediction)
};

EvalReport evaluate(const MlpModel& m, const std::vector<double>& x, std::size_t rows,
                    const std::vector<double>& y);

/// Model container: text header (dims, seed, normalizer, dataset hash,
/// species order, target) + little-endian parameter blocks + FNV-1a trailer.
struct ModelFile {
  MlpModel model;
  Normalizer normalizer;
  std::vector<std::string> species;
  std::uint64_t seed = 0;
  std::uint64_t dataset_hash = 0;
  std::string target = "co2_bar";
};

void save_model(const ModelFile& mf, const std::filesystem::path& path);
ModelFile load_model(const std::filesystem::path& path);

/// Deterministic 80/20-style split of row indices.
void split_rows(std::size_t rows, double val_fraction, std::uint64_t seed,
                std::vector<std::size_t>& train_idx, std::vector<std::size_t>& val_idx);

}  // namespace fibersense
