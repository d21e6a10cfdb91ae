#include "aclab/potential.hpp"

#include <cmath>
#include <sstream>
#include <stdexcept>

namespace aclab {

DoubleWellPotential canonical_potential() {
  DoubleWellPotential p;
  p.W = [](Real u) {
    const Real q = 1.0 - u * u;
    return 0.25 * q * q;
  };
  p.Wp = [](Real u) { return u * u * u - u; };
  p.Wpp = [](Real u) { return 3.0 * u * u - 1.0; };
  p.name = "canonical";
  return p;
}

DoubleWellPotential polynomial_potential(const std::vector<Real>& coeffs) {
  if (coeffs.empty()) throw std::invalid_argument("polynomial_potential: empty coefficients");
  DoubleWellPotential p;
  p.W = [coeffs](Real u) {
    Real v = 0;
    for (auto it = coeffs.rbegin(); it != coeffs.rend(); ++it) v = v * u + *it;
    return v;
  };
  p.Wp = [coeffs](Real u) {
    Real v = 0;
    for (std::size_t k = coeffs.size(); k-- > 1;) v = v * u + static_cast<Real>(k) * coeffs[k];
    return v;
  };
  p.Wpp = [coeffs](Real u) {
    Real v = 0;
    for (std::size_t k = coeffs.size(); k-- > 2;)
      v = v * u + static_cast<Real>(k) * static_cast<Real>(k - 1) * coeffs[k];
    return v;
  };
  std::ostringstream name;
  name << "poly";
  for (Real c : coeffs) name << ":" << c;
  p.name = name.str();
  return p;
}

DoubleWellPotential parse_potential(const std::string& spec) {
  if (spec == "canonical") return canonical_potential();
  if (spec.rfind("poly:", 0) == 0) {
    std::vector<Real> coeffs;
    std::istringstream in(spec.substr(5));
    std::string tok;
    while (std::getline(in, tok, ',')) coeffs.push_back(std::stod(tok));
    return polynomial_potential(coeffs);
  }
  throw std::invalid_argument("unknown potential spec: " + spec);
}

const ClauseResult* DoubleWellReport::find(const std::string& clause) const {
  for (const auto& c : clauses)
    if (c.clause == clause) return &c;
  return nullptr;
}

DoubleWellReport check_double_well(const DoubleWellPotential& pot, int samples) {
  if (samples < 100) throw std::invalid_argument("check_double_well: need samples >= 100");

  DoubleWellReport rep;
  const Real tol = 1e-8;

  ClauseResult positive;
  positive.clause = "positive_inside";
  for (int i = 1; i < samples; ++i) {
    const Real u = -1.0 + 2.0 * static_cast<Real>(i) / samples;
    if (!(pot.W(u) > 0)) positive.violations.push_back(u);
  }
  positive.pass = positive.violations.empty();

  ClauseResult zeros;
  zeros.clause = "zero_at_wells";
  for (Real u : {-1.0, 1.0})
    if (std::abs(pot.W(u)) > tol) zeros.violations.push_back(u);
  zeros.pass = zeros.violations.empty();

  ClauseResult flat;
  flat.clause = "flat_at_wells";
  for (Real u : {-1.0, 1.0})
    if (std::abs(pot.Wp(u)) > tol) flat.violations.push_back(u);
  flat.pass = flat.violations.empty();

  ClauseResult curvature;
  curvature.clause = "curvature_two_at_wells";
  for (Real u : {-1.0, 1.0})
    if (std::abs(pot.Wpp(u) - 2.0) > 1e-6) curvature.violations.push_back(u);
  curvature.pass = curvature.violations.empty();

  // Roots of W' strictly inside (-1, 1), located by sign changes between
  // consecutive samples; the well must have exactly one, at the origin.
  ClauseResult unique;
  unique.clause = "single_interior_zero";
  {
    const Real du = 2.0 / samples;
    std::vector<Real> roots;
    Real prev_u = -1.0 + du;
    Real prev_v = pot.Wp(prev_u);
    for (int i = 2; i < samples; ++i) {
      const Real u = -1.0 + du * i;
      const Real v = pot.Wp(u);
      if (prev_v == 0) roots.push_back(prev_u);
      else if (prev_v * v < 0) roots.push_back(0.5 * (prev_u + u));
      prev_u = u;
      prev_v = v;
    }
    if (prev_v == 0) roots.push_back(prev_u);
    if (roots.size() != 1 || std::abs(roots.front()) > du) {
      unique.pass = false;
      unique.violations = roots;
    }
  }

  rep.clauses = {positive, zeros, flat, curvature, unique};
  rep.pass = true;
  for (const auto& c : rep.clauses) rep.pass = rep.pass && c.pass;
  return rep;
}

Real hadamard_factor(const DoubleWellPotential& pot, Real u) {
  if (!(std::abs(u) < 1.0)) throw std::domain_error("hadamard_factor: requires |u| < 1");
  if (u == 0.0) return pot.Wpp(0.0);
  return pot.Wp(u) / u;
}

}  // namespace aclab
