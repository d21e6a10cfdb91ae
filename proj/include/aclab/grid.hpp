#pragma once

#include <Eigen/Dense>

#include <array>
#include <cstdint>
#include <stdexcept>
#include <vector>

namespace aclab {

using Real = double;
using Index = std::int64_t;
using Vec3 = Eigen::Vector3d;

/// Uniform isotropic rectangular grid in dimension 1, 2 or 3.
///
/// Node coordinates along axis a are lo[a] + i*h.  Storage is row-major
/// with axis 0 slowest (last axis contiguous).  Unused axes collapse to a
/// single node at coordinate 0.
class Grid {
 public:
  Grid(int dim, const Vec3& lo, const std::array<Index, 3>& nodes, Real h)
      : dim_(dim), lo_(lo), nodes_(nodes), h_(h) {
    if (dim < 1 || dim > 3) throw std::invalid_argument("Grid: dim must be 1, 2 or 3");
    if (!(h > 0)) throw std::invalid_argument("Grid: spacing must be positive");
    for (int a = 0; a < 3; ++a) {
      if (a < dim) {
        if (nodes_[a] < 8)
          throw std::invalid_argument("Grid: need at least 8 nodes per axis");
      } else {
        nodes_[a] = 1;
        lo_[a] = 0.0;
      }
    }
  }

  static Grid from_extent(int dim, const Vec3& lo, const Vec3& hi, Real h) {
    std::array<Index, 3> nodes{1, 1, 1};
    for (int a = 0; a < dim; ++a) {
      const Real len = hi[a] - lo[a];
      const Index n = static_cast<Index>(std::llround(len / h)) + 1;
      if (std::abs(lo[a] + static_cast<Real>(n - 1) * h - hi[a]) >
          1e-9 * std::max<Real>(1.0, std::abs(hi[a])))
        throw std::invalid_argument("Grid: extent not an integer multiple of spacing");
      nodes[a] = n;
    }
    return Grid(dim, lo, nodes, h);
  }

  int dim() const { return dim_; }
  Real spacing() const { return h_; }
  Index nodes(int axis) const { return nodes_[axis]; }
  const Vec3& lo() const { return lo_; }
  Vec3 hi() const {
    Vec3 v = lo_;
    for (int a = 0; a < dim_; ++a) v[a] += static_cast<Real>(nodes_[a] - 1) * h_;
    return v;
  }
  Index size() const { return nodes_[0] * nodes_[1] * nodes_[2]; }

  Index index(Index i, Index j = 0, Index k = 0) const {
    return (i * nodes_[1] + j) * nodes_[2] + k;
  }
  std::array<Index, 3> multi(Index idx) const {
    std::array<Index, 3> m{};
    m[2] = idx % nodes_[2];
    idx /= nodes_[2];
    m[1] = idx % nodes_[1];
    m[0] = idx / nodes_[1];
    return m;
  }
  /// Stride in the flat index for a unit step along `axis`.
  Index stride(int axis) const {
    switch (axis) {
      case 0: return nodes_[1] * nodes_[2];
      case 1: return nodes_[2];
      default: return 1;
    }
  }

  Vec3 point(Index idx) const {
    const auto m = multi(idx);
    Vec3 p = Vec3::Zero();
    for (int a = 0; a < dim_; ++a) p[a] = lo_[a] + static_cast<Real>(m[a]) * h_;
    return p;
  }

  /// True when the node is at least `margin` nodes away from every face.
  bool interior(Index idx, Index margin = 1) const {
    const auto m = multi(idx);
    for (int a = 0; a < dim_; ++a)
      if (m[a] < margin || m[a] > nodes_[a] - 1 - margin) return false;
    return true;
  }
  bool boundary(Index idx) const { return !interior(idx, 1); }

  bool same_layout(const Grid& o) const {
    return dim_ == o.dim_ && nodes_ == o.nodes_ && h_ == o.h_ &&
           (lo_ - o.lo_).cwiseAbs().maxCoeff() <= 1e-12 * std::max<Real>(1.0, h_);
  }

 private:
  int dim_;
  Vec3 lo_;
  std::array<Index, 3> nodes_;
  Real h_;
};

/// Ball realized downstream as the node subset {x : |x - center| <= radius}.
struct Ball {
  Vec3 center = Vec3::Zero();
  Real radius = 0;

  bool contains(const Vec3& p) const { return (p - center).norm() <= radius; }
};

/// Nodes of `grid` inside `ball`, at least `margin` nodes from every face.
inline std::vector<Index> ball_nodes(const Grid& grid, const Ball& ball, Index margin = 0) {
  std::vector<Index> out;
  for (Index idx = 0; idx < grid.size(); ++idx) {
    if (margin > 0 && !grid.interior(idx, margin)) continue;
    if (ball.contains(grid.point(idx))) out.push_back(idx);
  }
  return out;
}

}  // namespace aclab
