#include "aclab/profile.hpp"

#include <cmath>
#include <fstream>
#include <stdexcept>
#include <vector>

#include "aclab/csv.hpp"

namespace aclab {

namespace {

// 8-point Gauss-Legendre nodes/weights on [-1, 1].
constexpr double kGaussX[8] = {-0.9602898564975363, -0.7966664774136267, -0.5255324099163290,
                               -0.1834346424956498, 0.1834346424956498,  0.5255324099163290,
                               0.7966664774136267,  0.9602898564975363};
constexpr double kGaussW[8] = {0.1012285362903763, 0.2223810344533745, 0.3137066458778873,
                               0.3626837833783620, 0.3626837833783620, 0.3137066458778873,
                               0.2223810344533745, 0.1012285362903763};

// \int_a^b ds / sqrt(2 W(s)); throws when W is nonpositive at a node.
Real segment_time(const DoubleWellPotential& pot, Real a, Real b) {
  const Real mid = 0.5 * (a + b), half = 0.5 * (b - a);
  Real acc = 0;
  for (int q = 0; q < 8; ++q) {
    const Real s = mid + half * kGaussX[q];
    const Real twoW = 2.0 * pot.W(s);
    if (!(twoW > 0))
      throw std::runtime_error("solve_profile: quadrature failure, W vanishes inside (-1, 1)");
    acc += kGaussW[q] / std::sqrt(twoW);
  }
  return acc * half;
}

}  // namespace

Real HeteroclinicProfile::eval(Real t) const {
  if (t <= -t_max()) return g_values[0];
  if (t >= t_max()) return g_values[g_values.size() - 1];
  return interp.eval(t);
}

Real HeteroclinicProfile::eval_deriv(Real t) const {
  if (!covers(t)) return 0.0;
  return interp.deriv(t);
}

Real HeteroclinicProfile::equipartition_residual(const DoubleWellPotential& pot) const {
  Real worst = 0;
  for (Eigen::Index i = 0; i < t_grid.size(); ++i) {
    const Real r = std::abs(gp_values[i] * gp_values[i] - 2.0 * pot.W(g_values[i]));
    worst = std::max(worst, r);
  }
  return worst;
}

Real HeteroclinicProfile::ode_residual(const DoubleWellPotential& pot) const {
  Real worst = 0;
  const Real h = step();
  for (Eigen::Index i = 1; i + 1 < t_grid.size(); ++i) {
    const Real second = (g_values[i + 1] - 2.0 * g_values[i] + g_values[i - 1]) / (h * h);
    worst = std::max(worst, std::abs(second - pot.Wp(g_values[i])));
  }
  return worst;
}

HeteroclinicProfile solve_profile(const DoubleWellPotential& pot, Real t_max, Real step) {
  if (!(t_max > 0) || !(step > 0)) throw std::invalid_argument("solve_profile: bad t_max/step");
  if (step > 1e-2 + 1e-15) throw std::invalid_argument("solve_profile: step must be <= 1e-2");
  if (!check_double_well(pot, 1000).pass)
    throw std::invalid_argument("solve_profile: potential fails the double-well requirements");

  // Fine (t, g) table from quadrature of the first integral, graded so the
  // mesh refines toward the wells; the table truncates at |g| = 1 - 1e-10.
  const Real grade = 1e-3, cap_eps = 1e-10;
  std::vector<Real> ts{0.0}, gs{0.0};
  {
    // positive branch
    Real g = 0, t = 0;
    const Real cap = 1.0 - cap_eps;
    while (g < cap) {
      Real next = std::min(g + grade * (1.0 - g * g), cap);
      t += segment_time(pot, g, next);
      ts.push_back(t);
      gs.push_back(next);
      g = next;
    }
    // negative branch, prepended in reverse below
    std::vector<Real> nts, ngs;
    g = 0;
    t = 0;
    while (g > -cap) {
      Real next = std::max(g - grade * (1.0 - g * g), -cap);
      t -= segment_time(pot, next, g);
      nts.push_back(t);
      ngs.push_back(next);
      g = next;
    }
    ts.insert(ts.begin(), nts.rbegin(), nts.rend());
    gs.insert(gs.begin(), ngs.rbegin(), ngs.rend());
  }

  const auto n_fine = static_cast<Eigen::Index>(ts.size());
  Eigen::VectorXd ft(n_fine), fg(n_fine), fs(n_fine);
  for (Eigen::Index i = 0; i < n_fine; ++i) {
    ft[i] = ts[static_cast<std::size_t>(i)];
    fg[i] = gs[static_cast<std::size_t>(i)];
    fs[i] = std::sqrt(2.0 * pot.W(fg[i]));
  }
  HermiteTable fine(ft, fg, fs, true);

  if (t_max > fine.x_max() || -t_max < fine.x_min())
    throw std::invalid_argument("solve_profile: t_max exceeds the heteroclinic time range " +
                                fmt17(fine.x_max()) + " reachable before |g| = 1 - 1e-10");

  const auto half = static_cast<Eigen::Index>(std::llround(t_max / step));
  const Eigen::Index n = 2 * half + 1;
  HeteroclinicProfile profile;
  profile.t_grid.resize(n);
  profile.g_values.resize(n);
  profile.gp_values.resize(n);
  for (Eigen::Index i = 0; i < n; ++i) {
    const Real t = static_cast<Real>(i - half) * step;
    profile.t_grid[i] = t;
    profile.g_values[i] = fine.eval(t);
    profile.gp_values[i] = fine.deriv(t);
  }
  profile.interp = HermiteTable(profile.t_grid, profile.g_values, profile.gp_values, true);
  return profile;
}

ScalarField planar_solution(const HeteroclinicProfile& profile, const Vec3& direction,
                            Real offset, const Grid& grid) {
  if (std::abs(direction.norm() - 1.0) > 1e-12)
    throw std::invalid_argument("planar_solution: direction must be a unit vector");
  for (int a = grid.dim(); a < 3; ++a)
    if (direction[a] != 0.0)
      throw std::invalid_argument("planar_solution: direction has components beyond grid dim");

  ScalarField u(grid, "planar", Provenance::analytic);
  for (Index idx = 0; idx < grid.size(); ++idx) {
    const Real t = grid.point(idx).dot(direction) + offset;
    if (t > profile.t_max()) {
      u[idx] = 1.0;
      u.meta.flagged.push_back(idx);
    } else if (t < -profile.t_max()) {
      u[idx] = -1.0;
      u.meta.flagged.push_back(idx);
    } else {
      u[idx] = profile.eval(t);
    }
  }
  return u;
}

void save_profile_csv(const HeteroclinicProfile& profile, const std::string& path) {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot open for writing: " + path);
  out << "t,g\n";
  for (Eigen::Index i = 0; i < profile.t_grid.size(); ++i)
    out << fmt17(profile.t_grid[i]) << "," << fmt17(profile.g_values[i]) << "\n";
}

}  // namespace aclab
