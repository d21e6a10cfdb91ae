#pragma once

#include <Eigen/Dense>

#include <string>

#include "aclab/field.hpp"
#include "aclab/hermite.hpp"
#include "aclab/potential.hpp"

namespace aclab {

/// The increasing connection g(-inf) = -1, g(+inf) = +1, g(0) = 0 of
/// g'' = W'(g), tabulated on a uniform t-grid with its first-integral
/// slopes g' = sqrt(2 W(g)).
struct HeteroclinicProfile {
  Eigen::VectorXd t_grid;    // uniform, symmetric about 0
  Eigen::VectorXd g_values;  // strictly increasing, in (-1, 1)
  Eigen::VectorXd gp_values; // positive
  HermiteTable interp;       // t -> g on the uniform table

  Real t_max() const { return t_grid[t_grid.size() - 1]; }
  Real step() const { return t_grid[1] - t_grid[0]; }
  bool covers(Real t) const { return t >= -t_max() && t <= t_max(); }

  /// g(t); outside the tabulated range the nearest table value is returned.
  Real eval(Real t) const;
  Real eval_deriv(Real t) const;
  /// t(g) via inverse lookup; requires g inside the tabulated value range.
  Real inverse(Real g) const { return interp.inverse(g); }

  /// max_t |g'(t)^2 - 2 W(g(t))| over the table nodes.
  Real equipartition_residual(const DoubleWellPotential& pot) const;
  /// max over interior nodes of |second difference of g - W'(g)|.
  Real ode_residual(const DoubleWellPotential& pot) const;
};

/// Builds the profile from the first integral g' = sqrt(2 W(g)) by
/// Gauss-Legendre quadrature of t(g) = \int_0^g ds / sqrt(2 W(s)) on a
/// g-mesh graded like (1 - g^2), then inverts to the uniform t-grid by
/// monotone cubic interpolation.
HeteroclinicProfile solve_profile(const DoubleWellPotential& pot, Real t_max, Real step);

/// u(x) = g(x . direction + offset); direction must be unit to 1e-12.
/// Grid points whose argument leaves the profile's t-range are clamped to
/// the well values (-1 or +1) and flagged in the field metadata.
ScalarField planar_solution(const HeteroclinicProfile& profile, const Vec3& direction,
                            Real offset, const Grid& grid);

/// Two-column CSV (t, g) at full precision.
void save_profile_csv(const HeteroclinicProfile& profile, const std::string& path);

}  // namespace aclab
