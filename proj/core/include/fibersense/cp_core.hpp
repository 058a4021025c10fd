#pragma once

#include <string>
#include <vector>

#include "fibersense/gas_mixture.hpp"
#include "fibersense/materials.hpp"

namespace fibersense {

struct FiberGeometry {
  double inner_radius_m = 0.0;
  double outer_radius_m = 0.0;
  std::string fiber_material;  // name in the material db
};

void validate(const FiberGeometry& g);

struct SphereSpec {
  std::string material;  // name in the material db
  double radius_m = 0.0;
};

/// Sphere mass from its radius and the db mass density.
double sphere_mass_kg(const SphereSpec& sphere, const MaterialDb& db);

/// Matsubara summation controls. Terms are added until |term| stays below
/// rel_tol * |partial sum| for `consecutive` terms in a row; exceeding
/// max_terms raises accuracy_error.
struct MatsubaraSpec {
  int max_terms = 512;
  double rel_tol = 1e-8;
  int consecutive = 3;
};

/// Volume-integral controls for the scattering Green function.
/// Gauss-Legendre in the radial and axial directions, uniform (periodic
/// trapezoid) in the angle. z_max_m == 0 selects the adaptive axial cut
/// 15 / kappa, which bounds the e^{-2 kappa rho} tail below 1e-12.
struct QuadratureSpec {
  int radial_nodes = 16;
  int angular_nodes = 32;
  int axial_nodes = 48;
  double z_max_m = 0.0;
};

void validate(const QuadratureSpec& q);

QuadratureSpec doubled(const QuadratureSpec& q);

/// n-th Matsubara frequency (2 pi kB T / hbar) n, rad/s.
double matsubara_xi(double temperature_k, int n);

/// Medium-screened hard-sphere polarizability (SI units, C^2 m^2 / J):
///   4 pi eps0 eps_m a^3 (eps_np - eps_m) / (eps_np + 2 eps_m).
double hard_sphere_alpha(double eps_np, double eps_m, double radius_m);

/// Trace of the doubled regular bulk propagation kernel on the imaginary
/// axis: (kappa/4pi)^2 e^{-2 kappa rho} (2x^2+4x^3+10x^4+12x^5+6x^6) with
/// x = 1/(kappa rho). Units 1/m^2.
double trace_rr_closed_form(double kappa_per_m, double rho_m);

/// Mixture-independent part of the reduced Green trace:
///   I(r_A, kappa) = Int_V (kappa/4pi)^2 e^{-2 kappa rho} P(1/(kappa rho)) dV
/// over the fiber wall. reduced_green_trace() multiplies this by the
/// local-field factor chi / (1 + chi/3).
double geometric_trace_integral(double r_offset_m, double kappa_per_m,
                                const FiberGeometry& geom, const QuadratureSpec& quad);

/// Reduced Green trace J(r_A, xi) in meters; Tr G = -(xi^2/c^2) J on the
/// imaginary axis. eps_fiber and eps_medium are evaluated at i*xi by the
/// caller. Requires 0 <= r_A < R_i and xi > 0.
double reduced_green_trace(double r_offset_m, double xi, double eps_medium,
                           double eps_fiber, const FiberGeometry& geom,
                           const QuadratureSpec& quad);

/// reduced_green_trace with node-doubling until successive refinements agree
/// to rel_tol; throws accuracy_error after max_doublings.
double converged_green_trace(double r_offset_m, double xi, double eps_medium,
                             double eps_fiber, const FiberGeometry& geom,
                             QuadratureSpec quad, double rel_tol = 1e-3,
                             int max_doublings = 4);

/// Interpolation table for geometric_trace_integral at fixed sphere offsets.
/// For every Matsubara index it stores the integral at four Chebyshev nodes
/// in s = kappa c / xi_n (the sqrt(eps_M) scale factor) and evaluates by
/// cubic interpolation. Build once, then read-only.
class GreenTraceTable {
 public:
  GreenTraceTable() = default;

  /// offsets: radial sphere positions (m). n_terms tables are built for
  /// Matsubara indices 1..n_terms at temperature T.
  GreenTraceTable(std::vector<double> offsets, int n_terms, double temperature_k,
                  const FiberGeometry& geom, const QuadratureSpec& quad,
                  double s_min = 0.999999, double s_max = 1.0006);

  bool empty() const { return values_.empty(); }
  int terms() const { return n_terms_; }
  const std::vector<double>& offsets() const { return offsets_; }

  /// I(offset_index, n, s) with s = sqrt(eps_M); throws domain_error when s
  /// falls outside the tabulated span or n is out of range.
  double eval(std::size_t offset_index, int n, double s) const;

 private:
  std::vector<double> offsets_;
  int n_terms_ = 0;
  double s_nodes_[4] = {0, 0, 0, 0};
  double s_min_ = 0.0, s_max_ = 0.0;
  std::vector<double> values_;  // [offset][n-1][node]
};

/// Casimir-Polder potential of a sphere at radial offset r_A, J.
/// Direct path: evaluates the wall integral per Matsubara term.
double cp_potential(double r_offset_m, const SphereSpec& sphere, const MixtureState& mix,
                    const FiberGeometry& geom, const MatsubaraSpec& grid,
                    const QuadratureSpec& quad, const MaterialDb& materials,
                    const SpeciesDb& gases);

/// Radial curvature at the axis, 2 [U(h) - U(0)] / h^2 (even in r), J/m^2.
/// Requires 0 < h < R_i / 4.
double cp_radial_curvature(const SphereSpec& sphere, const MixtureState& mix,
                           const FiberGeometry& geom, const MatsubaraSpec& grid,
                           const QuadratureSpec& quad, const MaterialDb& materials,
                           const SpeciesDb& gases, double step_m);

}  // namespace fibersense
