#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "h8/report.hpp"
#include "h8/specht.hpp"

using namespace h8;

namespace {

PolyZ x(int i) { return PolyZ::variable(8, i - 1); }

RunConfig defaults() { return RunConfig{}; }

// lattice-point count, independent of both closed forms
mpz_class compositions(int n) { return deconcini_by_counting(n); }

}  // namespace

TEST_CASE("tableaux") {
  auto t = enumerate_tableaux();
  CHECK(t.all.size() == 105);
  CHECK(t.standard.size() == 14);
  for (auto& s : t.standard) CHECK(s.is_standard());
  CHECK(standard_tableaux().front().str() == "1234/5678");
  CHECK(parse_tableau("1234/5678") == standard_tableaux().front());
  CHECK_FALSE(parse_tableau("2134/5678").is_standard());
}

TEST_CASE("first Specht polynomial") {
  PolyZ y1 = (x(1) - x(5)) * (x(2) - x(6)) * (x(3) - x(7)) * (x(4) - x(8));
  CHECK(specht_basis().at(0) == y1);
  for (auto& p : specht_basis()) CHECK(p.degree() == 4);
}

TEST_CASE("evaluation matches the expanded polynomials") {
  PrimeField F;
  std::mt19937_64 rng(2);
  for (int k = 0; k < 10; ++k) {
    auto pt = random_point(rng, 8, F);
    auto ys = eval_Y(pt, F);
    for (int i = 0; i < 14; ++i) CHECK(ys[i] == eval_mod(specht_basis()[i], pt, F));
  }
  CHECK(specht_span_dim(F, 1) == 14);
}

TEST_CASE("non-standard tableaux re-expand exactly") {
  int n = 0;
  for (auto& t : enumerate_tableaux().all) {
    if (t.is_standard()) continue;
    auto c = express_in_Y(specht_polynomial(t), kDefaultPrime, 1);
    REQUIRE(c);
    CHECK(combine_Y(*c) == specht_polynomial(t));
    if (++n == 30) break;
  }
}

TEST_CASE("Y representation") {
  std::mt19937_64 rng(4);
  CHECK(y_rep(identity_perm()) == mat_identity());
  for (int k = 0; k < 10; ++k) {
    Perm a = random_perm(rng), b = random_perm(rng);
    CHECK(y_rep(compose(a, b)) == mat_mul(y_rep(a), y_rep(b)));
    // column i of M(a) expresses a.Y_i
    IntMat14 m = y_rep(a);
    for (int i = 0; i < 14; ++i) {
      std::vector<mpq_class> col(14);
      for (int j = 0; j < 14; ++j) col[j] = m[j][i];
      CHECK(combine_Y(col) == permute_vars(specht_basis()[i], a));
    }
  }
}

TEST_CASE("koike generators vanish") {
  auto gens = load_koike(asset_path(defaults(), "koike_generators.txt"));
  REQUIRE(gens.size() == 14);
  auto r = verify_koike(gens);
  CHECK(r.total == 14);
  CHECK(r.vanishing == 14);
  // a mutated generator survives
  gens[0].poly = gens[0].poly + PolyZ::variable(14, 0) * PolyZ::variable(14, 1);
  CHECK(verify_koike(gens).vanishing == 13);
}

TEST_CASE("graded dimensions") {
  PrimeField F;
  const int want[] = {1, 14, 91, 364};
  for (int n = 1; n <= 3; ++n) {
    CHECK(graded_dim_config(n, F, 1).rank == want[n]);
    CHECK(howe_dim(n) == want[n]);
    CHECK(deconcini_dim(n) == want[n]);
  }
  for (int n = 0; n <= 8; ++n) {
    CHECK(howe_dim(n) == compositions(n));
    CHECK(deconcini_dim(n) == compositions(n));
  }
  CHECK(howe_dim(4) == 1085);
  CHECK(howe_dim(5) == 2666);
  CHECK(howe_dim(6) == 5719);
}
