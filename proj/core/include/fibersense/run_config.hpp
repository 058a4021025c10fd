#pragma once

#include <cstdint>
#include <filesystem>
#include <string>

#include "fibersense/dataset.hpp"
#include "fibersense/mlp.hpp"
#include "fibersense/trap_model.hpp"

namespace fibersense {

/// Everything a run needs: file paths, sensor physics, sampling, training.
struct RunConfig {
  std::filesystem::path material_db;
  std::filesystem::path species_db;
  std::filesystem::path output_dir;
  std::uint64_t seed = 0;

  SensorConfig sensor;
  SamplingSpec sampling;

  TrainSchedule schedule;
  std::size_t hidden_layers = 12;
  std::size_t hidden_units = 288;
  double val_fraction = 0.2;
};

/// Parses the JSON run configuration; relative db paths resolve against the
/// config file's directory. Unknown keys are rejected.
RunConfig load_run_config(const std::filesystem::path& path);

/// Hash of every physics-relevant setting plus the db file contents;
/// stamped into datasets so downstream artifacts can detect drift.
std::uint64_t config_hash(const RunConfig& cfg);

}  // namespace fibersense
