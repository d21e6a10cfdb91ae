#pragma once

#include <functional>
#include <string>
#include <vector>

#include "aclab/grid.hpp"

namespace aclab {

/// Double-well energy density with wells fixed at -1 and +1.
struct DoubleWellPotential {
  std::function<Real(Real)> W;    // energy density
  std::function<Real(Real)> Wp;   // W'
  std::function<Real(Real)> Wpp;  // W''
  std::string name;
};

/// W(u) = (1 - u^2)^2 / 4, the standard phase-transition well.
DoubleWellPotential canonical_potential();

/// W(u) = sum_k coeffs[k] u^k with analytic derivatives.
DoubleWellPotential polynomial_potential(const std::vector<Real>& coeffs);

/// "canonical" or "poly:a0,a1,..." selectors used by config files and the CLI.
DoubleWellPotential parse_potential(const std::string& spec);

struct ClauseResult {
  std::string clause;
  bool pass = true;
  std::vector<Real> violations;  // sample points witnessing the failure
};

struct DoubleWellReport {
  std::vector<ClauseResult> clauses;
  bool pass = true;

  const ClauseResult* find(const std::string& clause) const;
};

/// Evaluates each structural requirement on a double-well potential over a
/// uniform sample of [-1, 1]:
///   positive_inside        W > 0 on the open interval
///   zero_at_wells          W(-1) = W(1) = 0
///   flat_at_wells          W'(-1) = W'(1) = 0
///   curvature_two_at_wells W''(-1) = W''(1) = 2
///   single_interior_zero   W' vanishes exactly once in (-1, 1), at 0
/// The last clause locates roots of W' by sign changes on the sample.
DoubleWellReport check_double_well(const DoubleWellPotential& pot, int samples);

/// F(u) = W'(u) / u with the removable singularity filled by W''(0).
/// Requires |u| < 1.
Real hadamard_factor(const DoubleWellPotential& pot, Real u);

}  // namespace aclab
