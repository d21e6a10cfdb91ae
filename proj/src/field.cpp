#include "aclab/field.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <sstream>
#include <stdexcept>

#include "aclab/csv.hpp"

namespace aclab {

std::string to_string(Provenance p) {
  switch (p) {
    case Provenance::analytic: return "analytic";
    case Provenance::solved: return "solved";
    case Provenance::transformed: return "transformed";
    case Provenance::loaded: return "loaded";
  }
  return "analytic";
}

Provenance provenance_from_string(const std::string& s) {
  if (s == "analytic") return Provenance::analytic;
  if (s == "solved") return Provenance::solved;
  if (s == "transformed") return Provenance::transformed;
  if (s == "loaded") return Provenance::loaded;
  throw std::invalid_argument("unknown provenance: " + s);
}

bool FieldMeta::is_flagged(Index idx) const {
  return std::binary_search(flagged.begin(), flagged.end(), idx);
}

namespace {

// Gather the 2^dim cell corners around p; weights are multilinear.
// Coordinates are clamped into the hull within a small slack.
struct CellStencil {
  std::array<Index, 8> corner;
  std::array<Real, 8> weight;
  int count;
};

CellStencil cell_stencil(const Grid& g, const Vec3& p) {
  const Real h = g.spacing();
  std::array<Index, 3> base{0, 0, 0};
  std::array<Real, 3> frac{0, 0, 0};
  for (int a = 0; a < g.dim(); ++a) {
    Real s = (p[a] - g.lo()[a]) / h;
    const Real top = static_cast<Real>(g.nodes(a) - 1);
    if (s < -1e-9 || s > top + 1e-9)
      throw std::domain_error("interpolate: point outside grid hull");
    s = std::clamp(s, 0.0, top);
    Index i = static_cast<Index>(std::floor(s));
    if (i >= g.nodes(a) - 1) i = g.nodes(a) - 2;
    base[a] = i;
    frac[a] = s - static_cast<Real>(i);
  }
  CellStencil st{};
  st.count = 1 << g.dim();
  for (int c = 0; c < st.count; ++c) {
    std::array<Index, 3> m = base;
    Real w = 1.0;
    for (int a = 0; a < g.dim(); ++a) {
      const bool hi = (c >> a) & 1;
      if (hi) {
        m[a] += 1;
        w *= frac[a];
      } else {
        w *= 1.0 - frac[a];
      }
    }
    st.corner[c] = g.index(m[0], m[1], m[2]);
    st.weight[c] = w;
  }
  return st;
}

}  // namespace

Real ScalarField::interpolate(const Vec3& p) const {
  const auto st = cell_stencil(grid, p);
  Real v = 0;
  for (int c = 0; c < st.count; ++c) v += st.weight[c] * values[st.corner[c]];
  return v;
}

ScalarField VectorField::norm() const {
  ScalarField out(grid, "norm");
  out.values = values.rowwise().norm().array();
  return out;
}

Vec3 VectorField::interpolate(const Vec3& p) const {
  const auto st = cell_stencil(grid, p);
  Vec3 v = Vec3::Zero();
  for (int c = 0; c < st.count; ++c) v += st.weight[c] * values.row(st.corner[c]).transpose();
  return v;
}

ScalarField SymMatField::norm() const {
  ScalarField out(grid, "hess_norm");
  const auto& v = values;
  out.values = (v.col(0).array().square() + v.col(1).array().square() +
                v.col(2).array().square() +
                2.0 * (v.col(3).array().square() + v.col(4).array().square() +
                       v.col(5).array().square()))
                   .sqrt();
  return out;
}

void save_field(const ScalarField& u, const std::string& path) {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot open for writing: " + path);
  const Grid& g = u.grid;
  out << "aclab-field 1\n";
  out << "dim " << g.dim() << "\n";
  out << "nodes";
  for (int a = 0; a < g.dim(); ++a) out << " " << g.nodes(a);
  out << "\n";
  for (int a = 0; a < g.dim(); ++a)
    out << "extent " << fmt17(g.lo()[a]) << " " << fmt17(g.hi()[a]) << "\n";
  out << "spacing " << fmt17(g.spacing()) << "\n";
  out << "name " << (u.meta.name.empty() ? "field" : u.meta.name) << "\n";
  out << "provenance " << to_string(u.meta.provenance) << "\n";
  if (!u.meta.flagged.empty()) {
    out << "flagged";
    for (Index i : u.meta.flagged) out << " " << i;
    out << "\n";
  }
  out << "values\n";
  for (Index i = 0; i < g.size(); ++i) out << fmt17(u.values[i]) << "\n";
  if (!out) throw std::runtime_error("write failed: " + path);
}

ScalarField load_field(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open: " + path);
  std::string magic;
  int version = 0;
  in >> magic >> version;
  if (magic != "aclab-field" || version != 1)
    throw std::runtime_error("not an aclab field file: " + path);

  int dim = 0;
  std::array<Index, 3> nodes{1, 1, 1};
  Vec3 lo = Vec3::Zero(), hi = Vec3::Zero();
  Real h = 0;
  std::string name = "field", prov = "loaded";
  std::vector<Index> flagged;

  std::string key;
  int extent_axis = 0;
  while (in >> key) {
    if (key == "dim") {
      in >> dim;
    } else if (key == "nodes") {
      for (int a = 0; a < dim; ++a) in >> nodes[a];
    } else if (key == "extent") {
      in >> lo[extent_axis] >> hi[extent_axis];
      ++extent_axis;
    } else if (key == "spacing") {
      in >> h;
    } else if (key == "name") {
      in >> name;
    } else if (key == "provenance") {
      in >> prov;
    } else if (key == "flagged") {
      std::string rest;
      std::getline(in, rest);
      std::istringstream fs(rest);
      Index i;
      while (fs >> i) flagged.push_back(i);
    } else if (key == "values") {
      break;
    } else {
      throw std::runtime_error("unknown field-file key: " + key);
    }
  }
  if (dim < 1 || h <= 0) throw std::runtime_error("malformed field header: " + path);

  Grid g(dim, lo, nodes, h);
  ScalarField u(g, name, provenance_from_string(prov));
  u.meta.flagged = std::move(flagged);
  for (Index i = 0; i < g.size(); ++i) {
    if (!(in >> u.values[i])) throw std::runtime_error("truncated field file: " + path);
  }
  return u;
}

}  // namespace aclab
