#pragma once

#include <vector>

#include "aclab/field.hpp"
#include "aclab/potential.hpp"

namespace aclab {

/// Interval of u-values selecting the transition band {lo <= u <= hi}.
struct Band {
  Real lo = -1, hi = 1;
  bool contains(Real v) const { return v >= lo && v <= hi; }
};

struct ResidualStats {
  Real max = 0;
  Real mean = 0;
  Index count = 0;
};

/// Second-order central differences at interior nodes, second-order
/// one-sided at faces.
VectorField gradient(const ScalarField& u);

/// |grad u| as a field.
ScalarField gradient_norm(const ScalarField& u);

/// Central second differences on the diagonal, nested first differences on
/// mixed entries (symmetrized).
SymMatField hessian(const ScalarField& u);

/// Trace of the Hessian by the per-axis three-point stencil.
ScalarField laplacian(const ScalarField& u);

/// (|hess u|^2 - |grad |grad u||^2) / |grad u|^2 where |grad u| >= grad_floor,
/// zero otherwise.  The curvature-type quantity of the level sets.
ScalarField qsq(const ScalarField& u, Real grad_floor = 1e-8);

/// Residual of Delta|grad u| = (Qsq + W''(u)) |grad u| over interior band
/// nodes with |grad u| >= grad_floor.  Exact for solutions of Delta u = W'(u);
/// the statistic is pure discretization error there.
ResidualStats gradient_norm_identity(const ScalarField& u, const DoubleWellPotential& pot,
                                     Band band, Real grad_floor = 1e-8);

/// sup |grad u| / inf |grad u| over nodes in the ball with u-value in band.
/// Throws when the region is empty.
Real harnack_ratio(const ScalarField& u, const Ball& ball, Band band);

/// sup u - inf u over nodes in the ball.
Real oscillation(const ScalarField& u, const Ball& ball);

struct GradientEstimateCheck {
  bool pass = true;
  /// Worst margin (bound - |derivative|) over all first- and second-order
  /// entries; negative on failure.
  Real margin = 0;
  int worst_axis = -1;
  bool second_order_failure = false;
};

/// Interior derivative estimates on the cube D of half-width r around x0:
///   |u_xi(x0)|    <= (n/r) sup_{dD} |u|    + (r/2) sup_D |Delta u|
///   |u_xj_xi(x0)| <= (n/r) sup_{dD} |u_xi| + (r/2) sup_D |W''(u) u_xi|
/// The first bound uses the finite-difference Laplacian; the second uses the
/// differentiated equation Delta u_xi = W''(u) u_xi.
GradientEstimateCheck interior_gradient_estimate(const ScalarField& u,
                                                 const DoubleWellPotential& pot, const Vec3& x0,
                                                 Real r);

/// Interior nodes (margin >= 1) whose u-value lies in the band; when
/// grad_floor > 0, nodes with |grad u| < grad_floor are dropped as well.
/// Flagged nodes are always dropped.
std::vector<Index> band_nodes(const ScalarField& u, Band band, Index margin = 1,
                              Real grad_floor = 0);

}  // namespace aclab
