#pragma once

#include <Eigen/Dense>

#include <string>
#include <vector>

#include "aclab/grid.hpp"

namespace aclab {

enum class Provenance { analytic, solved, transformed, loaded };

std::string to_string(Provenance p);
Provenance provenance_from_string(const std::string& s);

struct FieldMeta {
  std::string name;
  Provenance provenance = Provenance::analytic;
  /// Nodes where the value was clamped or fell outside a construction's
  /// range; excluded from downstream masks.
  std::vector<Index> flagged;

  bool is_flagged(Index idx) const;
};

/// Real-valued function sampled on a Grid.
struct ScalarField {
  Grid grid;
  Eigen::ArrayXd values;
  FieldMeta meta;

  ScalarField(const Grid& g, std::string name = "", Provenance prov = Provenance::analytic)
      : grid(g), values(Eigen::ArrayXd::Zero(g.size())) {
    meta.name = std::move(name);
    meta.provenance = prov;
  }

  Real& operator[](Index idx) { return values[idx]; }
  Real operator[](Index idx) const { return values[idx]; }

  /// Multilinear interpolation at a point inside the grid hull.
  Real interpolate(const Vec3& p) const;
};

/// Vector-valued function on a Grid; one row per node, unused columns zero.
struct VectorField {
  Grid grid;
  Eigen::Matrix<Real, Eigen::Dynamic, 3> values;

  explicit VectorField(const Grid& g)
      : grid(g), values(Eigen::Matrix<Real, Eigen::Dynamic, 3>::Zero(g.size(), 3)) {}

  Vec3 at(Index idx) const { return values.row(idx).transpose(); }
  ScalarField norm() const;
  Vec3 interpolate(const Vec3& p) const;
};

/// Symmetric-matrix-valued function; columns are xx, yy, zz, xy, xz, yz.
struct SymMatField {
  Grid grid;
  Eigen::Matrix<Real, Eigen::Dynamic, 6> values;

  explicit SymMatField(const Grid& g)
      : grid(g), values(Eigen::Matrix<Real, Eigen::Dynamic, 6>::Zero(g.size(), 6)) {}

  Eigen::Matrix3d at(Index idx) const {
    Eigen::Matrix3d m;
    const auto r = values.row(idx);
    m << r[0], r[3], r[4], r[3], r[1], r[5], r[4], r[5], r[2];
    return m;
  }
  /// Frobenius norm per node.
  ScalarField norm() const;
};

/// Analytic sampling helper.
template <class F>
ScalarField sample(const Grid& g, F&& f, std::string name = "",
                   Provenance prov = Provenance::analytic) {
  ScalarField u(g, std::move(name), prov);
  for (Index idx = 0; idx < g.size(); ++idx) u[idx] = f(g.point(idx));
  return u;
}

/// Plain-text field format: header (dim, node counts, extents, spacing,
/// name, provenance) followed by row-major values, one per line, at full
/// decimal precision (bit-exact round-trip).
void save_field(const ScalarField& u, const std::string& path);
ScalarField load_field(const std::string& path);

}  // namespace aclab
