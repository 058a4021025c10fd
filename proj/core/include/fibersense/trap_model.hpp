#pragma once

#include <string>
#include <vector>

#include "fibersense/cp_core.hpp"
#include "fibersense/gas_mixture.hpp"
#include "fibersense/materials.hpp"

namespace fibersense {

struct LaserSpec {
  double wavelength_m = 0.0;
  double beam_radius_m = 0.0;  // R of the e^{-2 r^2/R^2} amplitude profile
  double power_w = 0.0;

  double angular_frequency() const;  // 2 pi c / wavelength
};

void validate(const LaserSpec& laser, const FiberGeometry& geom);

struct SensorConfig {
  FiberGeometry geometry;
  LaserSpec laser;
  std::vector<SphereSpec> spheres;
  double temperature_k = 300.0;
  MatsubaraSpec matsubara;
  QuadratureSpec quadrature;
  double fd_step_m = 5e-9;  // finite-difference step for the radial curvature
};

void validate(const SensorConfig& cfg, const MaterialDb& materials);

/// Axial and radial trapping frequencies, ordered like SensorConfig::spheres.
struct FrequencyVector {
  std::vector<double> omega_z;  // rad/s
  std::vector<double> omega_r;  // rad/s

  std::vector<double> flat() const;  // [omega_z..., omega_r...]
  bool operator==(const FrequencyVector&) const = default;
};

/// Field amplitude of a beam of power P and radius R in a medium of
/// permittivity eps_m: E0 = sqrt(8 P / (pi R^2 eps0 c sqrt(eps_m))).
double e0_from_power(double power_w, double beam_radius_m, double eps_m);

/// Standing-wave optical potential -alpha E^2 / 2 with
/// E = E0 e^{-2 r^2/R^2} cos(omega z / c). alpha in SI units.
double optical_potential(double r_m, double z_m, double alpha_si, const LaserSpec& laser,
                         double eps_m = 1.0);

/// Precomputes per-material permittivities on the Matsubara grid and the
/// Green-trace table, then maps mixtures to frequency vectors. Read-only
/// (thread safe) once constructed.
class SensorModel {
 public:
  SensorModel(SensorConfig cfg, const MaterialDb& materials, const SpeciesDb& gases);

  const SensorConfig& config() const { return cfg_; }
  const std::vector<std::string>& species_names() const { return species_names_; }

  /// Builds the interpolation table for the wall integral; respond() uses it
  /// automatically afterwards. Must not run concurrently with respond().
  void build_cache();
  bool has_cache() const { return !cache_.empty(); }

  /// All trapping frequencies for a mixture given as partial pressures in
  /// the species-db order. Uses the cache when built.
  FrequencyVector respond(const std::vector<double>& pressures_pa) const;
  FrequencyVector respond(const MixtureState& mix) const;

  /// Cache-free reference path (per-term wall quadrature).
  FrequencyVector respond_direct(const std::vector<double>& pressures_pa) const;

  /// Single-sphere frequencies; sphere_index into config().spheres.
  /// CP radial curvature (J/m^2), axial and radial frequencies.
  struct SphereResponse {
    double omega_z;
    double omega_r;
    double omega_r_em_only;  // radial frequency without the CP term
    double cp_curvature;
  };
  SphereResponse sphere_response(std::size_t sphere_index,
                                 const std::vector<double>& pressures_pa,
                                 bool use_cache = true) const;

  /// CP potential at radial offset r for one sphere (direct path).
  double cp_potential_at(double r_offset_m, std::size_t sphere_index,
                         const std::vector<double>& pressures_pa) const;

  double matsubara_frequency(int n) const;

 private:
  struct TermTables;  // per-Matsubara-index permittivities

  double mixture_alpha_at(const std::vector<double>& pressures_pa, std::size_t xi_index) const;
  void accumulate_sphere(std::size_t sphere_index, const std::vector<double>& eps_m,
                         const std::vector<double>& chi_factor, const std::vector<double>& j0,
                         const std::vector<double>& jh, int used_terms, double& u0,
                         double& uh) const;

  SensorConfig cfg_;
  std::vector<std::string> species_names_;
  std::vector<std::string> sphere_names_;
  std::vector<double> sphere_mass_;

  // Per Matsubara index n = 1..n_terms_: xi_n, eps_fiber(i xi_n),
  // per-sphere eps_np(i xi_n), per-species alpha(i xi_n).
  int n_terms_ = 0;
  std::vector<double> xi_;
  std::vector<double> eps_fiber_;
  std::vector<std::vector<double>> eps_np_;     // [sphere][n]
  std::vector<std::vector<double>> alpha_gas_;  // [species][n]

  double omega_bar_ = 0.0;
  double eps_fiber_laser_ = 0.0;
  std::vector<double> eps_np_laser_;     // [sphere]
  std::vector<double> alpha_gas_laser_;  // [species]

  GreenTraceTable cache_;  // offsets {0, h}
};

}  // namespace fibersense
