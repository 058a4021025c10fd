#pragma once

#include <filesystem>
#include <map>
#include <string>
#include <string_view>
#include <vector>

namespace fibersense {

/// One Lorentz term of a gas molecule's polarizability:
/// contributes strength_m3 / (1 + (xi/omega)^2). Strengths are
/// polarizability volumes (alpha_SI = 4 pi eps0 * alpha_vol).
struct GasTerm {
  double strength_m3 = 0.0;
  double omega_rad_s = 0.0;
};

struct GasSpecies {
  std::string name;
  std::vector<GasTerm> terms;
  std::string source;
};

/// Partial pressures in Pa plus the gas temperature.
struct MixtureState {
  std::map<std::string, double> pressure_pa;
  double temperature_k = 300.0;
};

void validate(const MixtureState& mix);

class SpeciesDb {
 public:
  static SpeciesDb load(const std::filesystem::path& path);

  const GasSpecies& find(std::string_view name) const;
  const GasSpecies& at(std::size_t i) const { return species_[i]; }
  std::size_t index_of(std::string_view name) const;  // throws config_error
  const std::vector<GasSpecies>& all() const { return species_; }
  std::vector<std::string> names() const;
  std::size_t size() const { return species_.size(); }

 private:
  std::vector<GasSpecies> species_;
};

/// Polarizability volume alpha(i xi) of one species, m^3. xi >= 0.
double species_alpha(const GasSpecies& s, double xi);

/// Dimensionless mixture polarizability density
///   alpha_mix(i xi) = sum_i P_i alpha_i(i xi) / (kB T).
double mixture_alpha(const MixtureState& mix, const SpeciesDb& db, double xi);

/// Effective medium permittivity eps_M = (1 + 2 a) / (1 - a), a = alpha_mix.
double effective_permittivity(const MixtureState& mix, const SpeciesDb& db, double xi);

/// Same map applied to a precomputed alpha_mix value.
double effective_permittivity_from_alpha(double alpha_mix);

}  // namespace fibersense
