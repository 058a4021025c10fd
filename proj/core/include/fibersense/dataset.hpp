#pragma once

#include <cstdint>
#include <filesystem>
#include <optional>
#include <string>
#include <vector>

#include "fibersense/trap_model.hpp"

namespace fibersense {

/// Constrained random mixtures: pressures sum to total_pressure_pa exactly.
/// Without a target range the vector is uniform on the scaled simplex
/// (sorted-uniform spacings). With a range, the target species is drawn
/// uniformly on [lo, hi] first and the rest fill the remainder simplex.
struct SamplingSpec {
  double total_pressure_pa = 2.0e4;
  std::string target_species = "co2";
  std::optional<std::pair<double, double>> target_range_pa;
  std::uint64_t seed = 0;
};

void validate(const SamplingSpec& spec, const SpeciesDb& gases);

/// One draw; rng_seed should already be row-specific (see mix_seed).
std::vector<double> sample_pressures(std::uint64_t rng_seed, const SamplingSpec& spec,
                                     const SpeciesDb& gases);

struct Dataset {
  std::vector<std::string> species;     // pressure column order
  std::vector<double> pressures_pa;     // rows x species
  std::vector<double> frequencies;      // rows x (2 * spheres), [wz..., wr...]
  std::size_t rows = 0;
  std::size_t n_species = 0;
  std::size_t n_frequencies = 0;

  std::uint64_t seed = 0;
  std::uint64_t config_hash = 0;
  std::uint64_t skipped_rows = 0;    // unstable draws encountered
  std::uint64_t resampled_rows = 0;  // rows that needed a fresh sub-seed

  const double* pressure_row(std::size_t i) const { return &pressures_pa[i * n_species]; }
  const double* frequency_row(std::size_t i) const { return &frequencies[i * n_frequencies]; }
  bool operator==(const Dataset&) const = default;
};

/// Evaluates `rows` sampled mixtures in parallel. Deterministic for a fixed
/// (seed, config) regardless of worker count: every row derives its own RNG
/// stream from (seed, row index) and unstable draws are re-drawn from
/// (seed, row index, attempt).
Dataset generate_dataset(const SamplingSpec& spec, const SensorModel& model,
                         std::size_t rows, int workers, std::uint64_t config_hash);

/// Binary container: text header (version, species order, units, seed,
/// config hash, row count), fixed-width little-endian rows, FNV-1a trailer.
void write_dataset(const Dataset& ds, const std::filesystem::path& path);
Dataset read_dataset(const std::filesystem::path& path);

/// Lossless TSV export (%.17g) for inspection.
void export_dataset_tsv(const Dataset& ds, const std::filesystem::path& path);

}  // namespace fibersense
