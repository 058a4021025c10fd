#pragma once

#include <filesystem>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

namespace fibersense {

/// One Lorentz term of a solid's response on the imaginary axis:
/// contributes strength / (1 + (xi/omega)^2).
struct OscillatorTerm {
  double strength = 0.0;        // dimensionless
  double omega_rad_s = 0.0;     // resonance, rad/s
};

struct OscillatorModel {
  std::vector<OscillatorTerm> terms;
};

/// Measured Im eps(omega) on an ascending real-frequency grid. Transferred
/// to the imaginary axis with kk_transform().
struct TabulatedResponse {
  std::vector<double> omega_rad_s;  // strictly ascending
  std::vector<double> im_eps;       // >= 0
};

struct MaterialResponse {
  std::string name;
  std::variant<OscillatorModel, TabulatedResponse> model;
  double mass_density_kg_m3 = 0.0;
  std::string source;
};

/// Number of log-spaced quadrature points used by kk_transform.
inline constexpr int kk_default_grid_points = 2048;

/// eps(i xi) from tabulated Im eps via
///   eps(i xi) = 1 + (2/pi) Int_0^inf w Im eps(w) / (w^2 + xi^2) dw,
/// integrated with the trapezoid rule on a log-spaced grid covering one
/// decade beyond the table on each side (zero outside the table).
double kk_transform(const TabulatedResponse& tab, double xi,
                    int grid_points = kk_default_grid_points);

/// Permittivity of a solid evaluated at imaginary frequency i*xi, xi >= 0.
/// Real-valued, >= 1, monotone non-increasing in xi.
double eval_permittivity(const MaterialResponse& material, double xi);

void validate(const MaterialResponse& material);

class MaterialDb {
 public:
  static MaterialDb load(const std::filesystem::path& path);

  const MaterialResponse& find(std::string_view name) const;
  bool contains(std::string_view name) const;
  const std::vector<MaterialResponse>& all() const { return materials_; }
  std::size_t size() const { return materials_.size(); }

 private:
  std::vector<MaterialResponse> materials_;
};

}  // namespace fibersense
