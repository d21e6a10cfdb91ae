#include "aclab/calculus.hpp"

#include <cmath>
#include <stdexcept>

namespace aclab {

namespace {

// Second-order first derivative along one axis; one-sided at the faces.
Real d1(const Eigen::ArrayXd& v, Index idx, Index s, Index pos, Index n, Real h) {
  if (pos >= 1 && pos <= n - 2) return (v[idx + s] - v[idx - s]) / (2 * h);
  if (pos == 0) return (-3 * v[idx] + 4 * v[idx + s] - v[idx + 2 * s]) / (2 * h);
  return (3 * v[idx] - 4 * v[idx - s] + v[idx - 2 * s]) / (2 * h);
}

// Second derivative along one axis; second-order one-sided at the faces.
Real d2(const Eigen::ArrayXd& v, Index idx, Index s, Index pos, Index n, Real h) {
  const Real h2 = h * h;
  if (pos >= 1 && pos <= n - 2) return (v[idx + s] - 2 * v[idx] + v[idx - s]) / h2;
  if (pos == 0)
    return (2 * v[idx] - 5 * v[idx + s] + 4 * v[idx + 2 * s] - v[idx + 3 * s]) / h2;
  return (2 * v[idx] - 5 * v[idx - s] + 4 * v[idx - 2 * s] - v[idx - 3 * s]) / h2;
}

}  // namespace

VectorField gradient(const ScalarField& u) {
  const Grid& g = u.grid;
  VectorField out(g);
  const Real h = g.spacing();
  for (Index idx = 0; idx < g.size(); ++idx) {
    const auto m = g.multi(idx);
    for (int a = 0; a < g.dim(); ++a)
      out.values(idx, a) = d1(u.values, idx, g.stride(a), m[a], g.nodes(a), h);
  }
  return out;
}

ScalarField gradient_norm(const ScalarField& u) {
  ScalarField out = gradient(u).norm();
  out.meta.name = u.meta.name + "_gradnorm";
  return out;
}

SymMatField hessian(const ScalarField& u) {
  const Grid& g = u.grid;
  const Real h = g.spacing();
  SymMatField out(g);

  // Diagonal entries directly from the scalar field.
  for (Index idx = 0; idx < g.size(); ++idx) {
    const auto m = g.multi(idx);
    for (int a = 0; a < g.dim(); ++a)
      out.values(idx, a) = d2(u.values, idx, g.stride(a), m[a], g.nodes(a), h);
  }

  // Mixed entries as nested first differences of the gradient components,
  // symmetrized; the two orders agree exactly at interior nodes.
  if (g.dim() >= 2) {
    const VectorField grad = gradient(u);
    auto mixed_col = [](int a, int b) {
      if ((a == 0 && b == 1) || (a == 1 && b == 0)) return 3;
      if ((a == 0 && b == 2) || (a == 2 && b == 0)) return 4;
      return 5;
    };
    for (int a = 0; a < g.dim(); ++a)
      for (int b = a + 1; b < g.dim(); ++b) {
        const Eigen::ArrayXd ga = grad.values.col(a).array();
        const Eigen::ArrayXd gb = grad.values.col(b).array();
        for (Index idx = 0; idx < g.size(); ++idx) {
          const auto m = g.multi(idx);
          const Real dab = d1(ga, idx, g.stride(b), m[b], g.nodes(b), h);
          const Real dba = d1(gb, idx, g.stride(a), m[a], g.nodes(a), h);
          out.values(idx, mixed_col(a, b)) = 0.5 * (dab + dba);
        }
      }
  }
  return out;
}

ScalarField laplacian(const ScalarField& u) {
  const Grid& g = u.grid;
  const Real h = g.spacing();
  ScalarField out(g, u.meta.name + "_lap", u.meta.provenance);
  for (Index idx = 0; idx < g.size(); ++idx) {
    const auto m = g.multi(idx);
    Real acc = 0;
    for (int a = 0; a < g.dim(); ++a)
      acc += d2(u.values, idx, g.stride(a), m[a], g.nodes(a), h);
    out[idx] = acc;
  }
  return out;
}

ScalarField qsq(const ScalarField& u, Real grad_floor) {
  if (!(grad_floor > 0)) throw std::invalid_argument("qsq: grad_floor must be positive");
  const ScalarField gnorm = gradient_norm(u);
  const ScalarField hnorm = hessian(u).norm();
  const ScalarField dgnorm = gradient_norm(gnorm);
  ScalarField out(u.grid, u.meta.name + "_qsq", u.meta.provenance);
  for (Index idx = 0; idx < u.grid.size(); ++idx) {
    const Real gn = gnorm[idx];
    if (gn >= grad_floor)
      out[idx] = (hnorm[idx] * hnorm[idx] - dgnorm[idx] * dgnorm[idx]) / (gn * gn);
    else
      out[idx] = 0.0;
  }
  return out;
}

ResidualStats gradient_norm_identity(const ScalarField& u, const DoubleWellPotential& pot,
                                     Band band, Real grad_floor) {
  const ScalarField gnorm = gradient_norm(u);
  const ScalarField lap_gnorm = laplacian(gnorm);
  const ScalarField q = qsq(u, grad_floor);
  ResidualStats st;
  Real sum = 0;
  for (Index idx = 0; idx < u.grid.size(); ++idx) {
    if (!u.grid.interior(idx, 2)) continue;  // the outer stencil needs interior gradients
    if (!band.contains(u[idx]) || gnorm[idx] < grad_floor) continue;
    const Real rhs = (q[idx] + pot.Wpp(u[idx])) * gnorm[idx];
    const Real r = std::abs(lap_gnorm[idx] - rhs);
    st.max = std::max(st.max, r);
    sum += r;
    ++st.count;
  }
  if (st.count == 0) throw std::runtime_error("gradient_norm_identity: empty band region");
  st.mean = sum / static_cast<Real>(st.count);
  return st;
}

Real harnack_ratio(const ScalarField& u, const Ball& ball, Band band) {
  const ScalarField gnorm = gradient_norm(u);
  Real lo = std::numeric_limits<Real>::infinity(), hi = 0;
  Index count = 0;
  for (Index idx : ball_nodes(u.grid, ball)) {
    if (!band.contains(u[idx])) continue;
    lo = std::min(lo, gnorm[idx]);
    hi = std::max(hi, gnorm[idx]);
    ++count;
  }
  if (count == 0) throw std::runtime_error("harnack_ratio: empty region");
  return hi / lo;
}

Real oscillation(const ScalarField& u, const Ball& ball) {
  Real lo = std::numeric_limits<Real>::infinity(), hi = -lo;
  Index count = 0;
  for (Index idx : ball_nodes(u.grid, ball)) {
    lo = std::min(lo, u[idx]);
    hi = std::max(hi, u[idx]);
    ++count;
  }
  if (count == 0) throw std::runtime_error("oscillation: ball misses the grid");
  return hi - lo;
}

GradientEstimateCheck interior_gradient_estimate(const ScalarField& u,
                                                 const DoubleWellPotential& pot, const Vec3& x0,
                                                 Real r) {
  const Grid& g = u.grid;
  const Real h = g.spacing();
  const int n = g.dim();

  // Node set of the closed cube and its boundary shell; the cube must sit
  // inside the grid.
  std::array<Index, 3> lo{0, 0, 0}, hi{0, 0, 0}, c{0, 0, 0};
  for (int a = 0; a < n; ++a) {
    c[a] = static_cast<Index>(std::llround((x0[a] - g.lo()[a]) / h));
    const auto steps = static_cast<Index>(std::floor(r / h + 1e-12));
    lo[a] = c[a] - steps;
    hi[a] = c[a] + steps;
    if (lo[a] < 0 || hi[a] > g.nodes(a) - 1)
      throw std::invalid_argument("interior_gradient_estimate: cube exceeds the grid");
  }
  const Index center = g.index(c[0], c[1], c[2]);

  const VectorField grad = gradient(u);
  const SymMatField hess = hessian(u);
  const ScalarField lap = laplacian(u);

  Real sup_bd_u = 0, sup_lap = 0;
  Eigen::Vector3d sup_bd_grad = Eigen::Vector3d::Zero(), sup_w2grad = Eigen::Vector3d::Zero();
  std::vector<Index> cube;
  for (Index idx = 0; idx < g.size(); ++idx) {
    const auto m = g.multi(idx);
    bool inside = true, on_face = false;
    for (int a = 0; a < n; ++a) {
      if (m[a] < lo[a] || m[a] > hi[a]) inside = false;
      if (m[a] == lo[a] || m[a] == hi[a]) on_face = true;
    }
    if (!inside) continue;
    sup_lap = std::max(sup_lap, std::abs(lap[idx]));
    for (int a = 0; a < n; ++a)
      sup_w2grad[a] = std::max(sup_w2grad[a], std::abs(pot.Wpp(u[idx]) * grad.values(idx, a)));
    if (on_face) {
      sup_bd_u = std::max(sup_bd_u, std::abs(u[idx]));
      for (int a = 0; a < n; ++a)
        sup_bd_grad[a] = std::max(sup_bd_grad[a], std::abs(grad.values(idx, a)));
    }
  }

  GradientEstimateCheck res;
  res.margin = std::numeric_limits<Real>::infinity();
  auto mixed_col = [](int a, int b) {
    if (a == b) return a;
    if ((a == 0 && b == 1) || (a == 1 && b == 0)) return 3;
    if ((a == 0 && b == 2) || (a == 2 && b == 0)) return 4;
    return 5;
  };
  for (int i = 0; i < n; ++i) {
    const Real bound1 = (static_cast<Real>(n) / r) * sup_bd_u + 0.5 * r * sup_lap;
    const Real m1 = bound1 - std::abs(grad.values(center, i));
    if (m1 < res.margin) {
      res.margin = m1;
      res.worst_axis = i;
      res.second_order_failure = false;
    }
    for (int j = 0; j < n; ++j) {
      const Real bound2 = (static_cast<Real>(n) / r) * sup_bd_grad[i] + 0.5 * r * sup_w2grad[i];
      const Real m2 = bound2 - std::abs(hess.values(center, mixed_col(i, j)));
      if (m2 < res.margin) {
        res.margin = m2;
        res.worst_axis = i;
        res.second_order_failure = true;
      }
    }
  }
  res.pass = res.margin >= 0;
  return res;
}

std::vector<Index> band_nodes(const ScalarField& u, Band band, Index margin, Real grad_floor) {
  std::vector<Index> out;
  ScalarField gnorm(u.grid);
  if (grad_floor > 0) gnorm = gradient_norm(u);
  for (Index idx = 0; idx < u.grid.size(); ++idx) {
    if (margin > 0 && !u.grid.interior(idx, margin)) continue;
    if (!band.contains(u[idx])) continue;
    if (grad_floor > 0 && gnorm[idx] < grad_floor) continue;
    if (u.meta.is_flagged(idx)) continue;
    out.push_back(idx);
  }
  return out;
}

}  // namespace aclab
