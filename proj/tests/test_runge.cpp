#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "h8/report.hpp"
#include "h8/runge.hpp"

using namespace h8;

namespace {

// theta_3(0, i) = pi^{1/4} / Gamma(3/4)
const double kTheta3AtI = std::pow(M_PI, 0.25) / std::tgamma(0.75);

PolyZ f_poly(const std::string& file) { return load_f_poly(asset_path(RunConfig{}, file)); }

}  // namespace

TEST_CASE("gaussian rationals") {
  Gauss i{0, 1};
  CHECK(i * i == Gauss{-1, 0});
  CHECK(Gauss{1, 2} + Gauss{3, -2} == Gauss{4, 0});
}

TEST_CASE("S~ is unitary with the stated inverse") {
  GaussMatrix s = s_tilde(), si = s_tilde_inverse();
  CHECK(s * si == gauss_identity());
  CHECK(si * s == gauss_identity());
  CHECK(s * conjugate_transpose(s) == gauss_identity());
  CHECK(s.e[0][0] == Gauss{mpq_class(-1, 4), mpq_class(1, 4)});
  CHECK(s.e[7][7] == Gauss{mpq_class(1, 4), mpq_class(-1, 4)});
}

TEST_CASE("T~ is diagonal with powers of i") {
  GaussMatrix t = t_tilde({2, 0, 0});
  for (int a = 0; a < 8; ++a) {
    int sign = (a & 4) ? -1 : 1;
    CHECK(t.e[a][a] == Gauss{sign, 0});
  }
  CHECK(t * t == gauss_identity());
  CHECK(t_tilde({1, 0, 0}).e[4][4] == Gauss{0, 1});
}

TEST_CASE("conjugated generators are permutation matrices") {
  auto gens = n3_prime_generators();
  REQUIRE(gens.size() == 6);
  for (int k = 1; k < 6; k += 2)
    for (auto& row : gens[k].e) {
      int ones = 0, zeros = 0;
      for (auto& x : row) {
        ones += x == Gauss{1, 0};
        zeros += x == Gauss{0, 0};
      }
      CHECK(ones == 1);
      CHECK(zeros == 7);
    }
}

TEST_CASE("group orders") {
  auto r = runge_groups();
  CHECK(r.order_n3_prime == 128);
  CHECK(r.order_n3 == 256);
  CHECK(r.minus_e_in);
  CHECK_FALSE(r.i_e_in);
  CHECK(r.i_e_in_n3);
  CHECK(r.order_stable);
  CHECK_FALSE(r.capped);
  // closure respects its cap
  CHECK(closure(n3_prime_generators(), 10).capped);
}

TEST_CASE("invariance of P and Q") {
  PolyZ p = f_poly("p_poly.txt"), q = f_poly("q_poly.txt");
  CHECK(p.degree() == 2);
  auto r = invariance_PQ(p, q);
  CHECK(r.generators == 6);
  CHECK(r.p_invariant == 6);
  CHECK(r.q_invariant == 6);
  CHECK(r.control_changes_q);
  CHECK(r.control_outside_group);
  CHECK_FALSE(transform(p, scalar_matrix({0, 1})));
  CHECK(*transform(q, gauss_identity()) == q);
}

TEST_CASE("siegel points") {
  std::mt19937_64 rng(1);
  for (int k = 0; k < 20; ++k) {
    auto z = random_siegel(rng);
    CHECK(z.valid());
    CHECK(z.min_imag_eig() > 0.5);
  }
  SiegelPoint d = i_identity();
  d.z[0][0] = {0, 2};
  d.z[1][1] = {0, 0.75};
  CHECK(d.min_imag_eig() == doctest::Approx(0.75));
  d.z[0][1] = d.z[1][0] = {0, 0.5};
  // eigenvalues of [[2,.5],[.5,.75]] and 1
  double lo = (2.75 - std::sqrt(1.25 * 1.25 + 1.0)) / 2;
  CHECK(d.min_imag_eig() == doctest::Approx(lo).epsilon(1e-12));
}

TEST_CASE("theta sums") {
  CHECK(one_dim_theta(12) == doctest::Approx(kTheta3AtI).epsilon(1e-14));
  auto t0 = theta_eval(0, i_identity(), 12);
  CHECK(std::abs(t0.value - std::pow(kTheta3AtI, 3)) < 1e-12);
  CHECK(t0.tail < 1e-100);
  std::mt19937_64 rng(2);
  auto z = random_siegel(rng);
  for (Char m : odd_chars()) CHECK(std::abs(theta_eval(m, z, 12).value) < 1e-10);
  // period shifts Z -> Z + 2S leave theta[0|m''] unchanged
  auto shifted = z;
  shifted.z[0][1] += 2.0;
  shifted.z[1][0] += 2.0;
  shifted.z[2][2] += 2.0;
  for (Char m = 0; m < 8; ++m)
    CHECK(std::abs(theta_eval(m, z, 12).value - theta_eval(m, shifted, 12).value) < 1e-10);
}

TEST_CASE("duplication and schottky numerics") {
  auto d = duplication_check(2, 10, 3, 1e-8);
  CHECK(d.matching == "variant");
  CHECK(d.variant_residual < 1e-10);
  CHECK(d.printed_residual > 1e-2);
  CHECK(d.second_formula_residual < 1e-10);
  auto f = schottky_numeric_fit(3, 10, 4);
  CHECK(f.mean == doctest::Approx(8).epsilon(1e-9));
  CHECK(f.spread < 1e-9);
  auto b = numeric_basics(2, 10, 5);
  CHECK(b.odd_max < 1e-10);
  CHECK(b.doubling_within_tail);
}
