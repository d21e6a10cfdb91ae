#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <chrono>
#include <cmath>
#include <filesystem>

#include "aclab/profile.hpp"

using namespace aclab;

namespace {

// Closed form for the canonical well, obtained by solving the first
// integral g' = (1 - g^2)/sqrt(2) directly.
Real tanh_profile(Real t) { return std::tanh(t / std::sqrt(2.0)); }

}  // namespace

TEST_CASE("canonical potential values") {
  const auto pot = canonical_potential();
  CHECK(pot.W(0.0) == doctest::Approx(0.25).epsilon(1e-15));
  CHECK(pot.W(1.0) == 0.0);
  CHECK(pot.W(-1.0) == 0.0);
  CHECK(pot.Wpp(1.0) == doctest::Approx(2.0).epsilon(1e-15));
  CHECK(pot.Wpp(-1.0) == doctest::Approx(2.0).epsilon(1e-15));
  CHECK(pot.Wp(0.5) == doctest::Approx(0.125 - 0.5).epsilon(1e-15));
}

TEST_CASE("polynomial potential reproduces the canonical well") {
  const auto poly = polynomial_potential({0.25, 0.0, -0.5, 0.0, 0.25});
  const auto can = canonical_potential();
  for (Real u : {-0.9, -0.3, 0.0, 0.4, 1.0}) {
    CHECK(poly.W(u) == doctest::Approx(can.W(u)).epsilon(1e-14));
    CHECK(poly.Wp(u) == doctest::Approx(can.Wp(u)).epsilon(1e-14));
    CHECK(poly.Wpp(u) == doctest::Approx(can.Wpp(u)).epsilon(1e-14));
  }
  CHECK(parse_potential("poly:0.25,0,-0.5,0,0.25").W(0.3) ==
        doctest::Approx(can.W(0.3)).epsilon(1e-14));
  CHECK_THROWS(parse_potential("bogus"));
}

TEST_CASE("double-well check accepts the canonical potential") {
  const auto rep = check_double_well(canonical_potential(), 1000);
  CHECK(rep.pass);
  for (const auto& c : rep.clauses) CHECK_MESSAGE(c.pass, c.clause);
}

TEST_CASE("double-well check rejects the wrong normalizations") {
  // Factor-one quartic: W''(+-1) = 8, verified by differentiating
  // (1 - u^2)^2 by hand.
  auto wrong_curv = polynomial_potential({1.0, 0.0, -2.0, 0.0, 1.0});
  auto rep = check_double_well(wrong_curv, 500);
  CHECK_FALSE(rep.pass);
  CHECK_FALSE(rep.find("curvature_two_at_wells")->pass);
  CHECK(rep.find("zero_at_wells")->pass);

  // Lifted well: no zeros at the wells.
  auto lifted = polynomial_potential({0.35, 0.0, -0.5, 0.0, 0.25});
  rep = check_double_well(lifted, 500);
  CHECK_FALSE(rep.pass);
  CHECK_FALSE(rep.find("zero_at_wells")->pass);

  CHECK_THROWS_AS(check_double_well(canonical_potential(), 50), std::invalid_argument);
}

TEST_CASE("hadamard factor") {
  const auto pot = canonical_potential();
  CHECK(hadamard_factor(pot, 0.5) == doctest::Approx(-0.75).epsilon(1e-14));
  CHECK(hadamard_factor(pot, 0.0) == doctest::Approx(-1.0).epsilon(1e-14));
  // Continuity across the removable singularity.
  CHECK(std::abs(hadamard_factor(pot, 1e-6) - hadamard_factor(pot, 0.0)) < 1e-6);
  CHECK_THROWS_AS(hadamard_factor(pot, 1.0), std::domain_error);
  CHECK_THROWS_AS(hadamard_factor(pot, -1.5), std::domain_error);
}

TEST_CASE("profile matches the closed form to 1e-8 on [-6, 6]") {
  const auto pot = canonical_potential();
  const auto t0 = std::chrono::steady_clock::now();
  const auto profile = solve_profile(pot, 6.0, 0.01);
  const auto elapsed =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  CHECK(elapsed < 1.0);

  Real worst = 0;
  for (Real t = -6.0; t <= 6.0; t += 0.003)
    worst = std::max(worst, std::abs(profile.eval(t) - tanh_profile(t)));
  CHECK(worst <= 1e-8);

  CHECK(profile.eval(0.0) == doctest::Approx(0.0).epsilon(1e-12));
  CHECK(profile.eval_deriv(0.0) == doctest::Approx(std::sqrt(0.5)).epsilon(1e-10));
  CHECK(profile.equipartition_residual(pot) <= 1e-8);
  CHECK(profile.ode_residual(pot) <= 10 * 0.01 * 0.01);
}

TEST_CASE("profile is strictly increasing") {
  const auto profile = solve_profile(canonical_potential(), 5.0, 0.01);
  for (Eigen::Index i = 0; i + 1 < profile.g_values.size(); ++i)
    CHECK(profile.g_values[i + 1] > profile.g_values[i]);
  for (Eigen::Index i = 0; i < profile.gp_values.size(); ++i)
    CHECK(profile.gp_values[i] > 0);
}

TEST_CASE("profile rejects potentials with interior zeros of W") {
  // Touches zero at u = 0: quadrature of 1/sqrt(2W) must fail.
  auto degenerate = polynomial_potential({0.0, 0.0, 1.0, 0.0, -2.0, 0.0, 1.0});
  CHECK_THROWS_AS(solve_profile(degenerate, 2.0, 0.01), std::invalid_argument);
}

TEST_CASE("planar solution samples the profile") {
  const auto profile = solve_profile(canonical_potential(), 8.0, 0.01);
  const Grid grid = Grid::from_extent(2, Vec3(0, 0, 0), Vec3(1, 1, 0), 1.0 / 32);

  SUBCASE("zero offset along e1 vanishes on the zero level line") {
    const auto u = planar_solution(profile, Vec3(1, 0, 0), 0.0, grid);
    CHECK(u[grid.index(0, 5)] == doctest::Approx(0.0).epsilon(1e-14));
    CHECK(u.meta.flagged.empty());
  }

  SUBCASE("direction must be unit") {
    CHECK_THROWS_AS(planar_solution(profile, Vec3(1, 1, 0), 0.0, grid), std::invalid_argument);
  }

  SUBCASE("rotation equivariance on a symmetric grid") {
    const Grid sym = Grid::from_extent(2, Vec3(-1, -1, 0), Vec3(1, 1, 0), 1.0 / 16);
    const Vec3 a(1, 0, 0), a_rot(0, 1, 0);  // 90-degree rotation
    const auto u = planar_solution(profile, a, 0.1, sym);
    const auto v = planar_solution(profile, a_rot, 0.1, sym);
    // v(Rx) = u(x) where R maps (x, y) to (-y, x).
    for (Index idx = 0; idx < sym.size(); ++idx) {
      const Vec3 p = sym.point(idx);
      const Vec3 rp(-p[1], p[0], 0);
      const Index ridx =
          sym.index(std::llround((rp[0] - sym.lo()[0]) / sym.spacing()),
                    std::llround((rp[1] - sym.lo()[1]) / sym.spacing()));
      CHECK(v[ridx] == doctest::Approx(u[idx]).epsilon(1e-13));
    }
  }

  SUBCASE("translation covariance") {
    const Real b = 0.25;
    const Vec3 a(std::sqrt(0.5), std::sqrt(0.5), 0);
    const Grid base = Grid::from_extent(2, Vec3(0, 0, 0), Vec3(1, 1, 0), 1.0 / 16);
    const Grid shifted = Grid::from_extent(2, Vec3(b * a[0], b * a[1], 0),
                                           Vec3(1 + b * a[0], 1 + b * a[1], 0), 1.0 / 16);
    const auto u_b = planar_solution(profile, a, b, base);
    const auto u_0 = planar_solution(profile, a, 0.0, shifted);
    for (Index idx = 0; idx < base.size(); ++idx)
      CHECK(u_b[idx] == doctest::Approx(u_0[idx]).epsilon(1e-12));
  }

  SUBCASE("arguments beyond the profile range clamp to the wells and flag") {
    const auto short_profile = solve_profile(canonical_potential(), 0.5, 0.005);
    const Grid wide = Grid::from_extent(1, Vec3(-4, 0, 0), Vec3(4, 0, 0), 0.25);
    const auto u = planar_solution(short_profile, Vec3(1, 0, 0), 0.0, wide);
    CHECK(!u.meta.flagged.empty());
    CHECK(u[0] == -1.0);
    CHECK(u[wide.size() - 1] == 1.0);
  }
}

TEST_CASE("profile CSV export") {
  const auto profile = solve_profile(canonical_potential(), 1.0, 0.01);
  const auto path = std::filesystem::temp_directory_path() / "aclab_profile_test.csv";
  save_profile_csv(profile, path.string());
  CHECK(std::filesystem::file_size(path) > 0);
  std::filesystem::remove(path);
}
