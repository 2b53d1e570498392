#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "h8/report.hpp"
#include "h8/thetaring.hpp"

using namespace h8;

namespace {

const SubspaceDigitList& alist() {
  static const auto a = load_theta_subspaces(asset_path(RunConfig{}, "theta_subspaces.txt"));
  return a;
}

ThetaCubic cubic() { return load_cubic_relation(asset_path(RunConfig{}, "cubic_relation.txt")); }

// Theta_i values straight from the definition: sum of D_m over the seven members
std::array<u64, 15> thetas_direct(const std::array<u64, 64>& d, const PrimeField& F) {
  std::array<u64, 15> t{};
  for (int i = 0; i < 15; ++i)
    for (Char m : members(alist().sets[i])) t[i] = F.add(t[i], d[m]);
  return t;
}

}  // namespace

TEST_CASE("decoding the printed list") {
  auto& a = alist();
  REQUIRE(a.sets.size() == 15);
  for (auto s : a.sets) CHECK(set_size(s) == 7);
  auto r = decode_check(a);
  CHECK(r.all_subspaces);
  CHECK(r.theta1_matches);
  CHECK(r.a15_matches);
  CHECK(r.one_class);
  CHECK(a.digits[0] == std::array<int, 7>{6, 8, 14, 48, 54, 56, 62});
}

TEST_CASE("theta values from D") {
  PrimeField F;
  std::mt19937_64 rng(3);
  for (int k = 0; k < 5; ++k) {
    auto x = random_point(rng, 8, F);
    auto d = eval_all(x, F);
    CHECK(eval_thetas(alist().sets, x, F) == thetas_direct(d, F));
    CHECK(thetas_from_d(alist().sets, d, F) == thetas_direct(d, F));
    u64 sum = 0;
    for (u64 v : thetas_direct(d, F)) sum = F.add(sum, v);
    CHECK(sum == 0);
  }
}

TEST_CASE("weight two") {
  PrimeField F;
  auto r = weight2_structure(alist().sets, F, 1);
  CHECK(r.rank == 14);
  CHECK(r.kernel_is_ones);
  CHECK(r.incidence_three);
  CHECK(r.sum_vanishes);
}

TEST_CASE("D_m in the span of the Theta") {
  PrimeField F;
  std::mt19937_64 rng(5);
  for (Char m : {make_char(0, 0, 0, 0, 0, 1), kMEmpty}) {
    auto c = theta4_in_Theta(alist().sets, m, kDefaultPrime, 1);
    REQUIRE(c);
    CHECK(c->at(14) == 0);
    for (int k = 0; k < 3; ++k) {
      auto x = random_point(rng, 8, F);
      auto d = eval_all(x, F);
      auto t = thetas_direct(d, F);
      u64 s = 0;
      for (int i = 0; i < 15; ++i) {
        mpq_class q = (*c)[i];
        u64 v = F.mul(F.from_mpz(q.get_num()), F.inv(F.from_mpz(q.get_den())));
        s = F.add(s, F.mul(v, t[i]));
      }
      CHECK(s == d[m]);
    }
  }
}

TEST_CASE("cubic relation") {
  auto c = cubic();
  REQUIRE_FALSE(c.empty());
  CHECK(c.front().idx == std::array<int, 3>{1, 1, 1});
  CHECK(c.front().coef == -43);
  CHECK(canonical(c) == canonical(canonical(c)));
  PrimeField F;
  std::mt19937_64 rng(6);
  for (int k = 0; k < 10; ++k) {
    auto t = thetas_direct(eval_all(random_point(rng, 8, F), F), F);
    CHECK(eval_cubic(c, t, F) == 0);
  }
  std::array<int, 15> id{};
  for (int i = 0; i < 15; ++i) id[i] = i;
  CHECK(canonical(relabel(c, id)) == canonical(c));
  auto r = cubic_relation_suite(alist().sets, c, F, 100, 1);
  CHECK(r.image.zero);
  CHECK(r.image.degree_bound == 36);
  CHECK(r.mutation_caught);
  CHECK(r.span_dim == 14);
}

TEST_CASE("induced permutations") {
  auto p = induced_theta_perm(alist().sets, compose(transposition(1, 2), transposition(3, 4)));
  REQUIRE(p);
  std::array<bool, 15> hit{};
  for (int i : *p) hit.at(i) = true;
  for (bool b : hit) CHECK(b);
  CHECK_FALSE(induced_theta_perm(alist().sets, transposition(1, 2)));
}

TEST_CASE("quartic families") {
  auto co = coset_quartic_relations();
  CHECK(co.subspaces == 105);
  CHECK(co.three_even_cosets_each);
  CHECK(co.holding == 105);
  PrimeField F;
  auto sq = squared_quartic_relations(alist().sets, F, 100, 1, false);
  CHECK(sq.passing == 210);
  CHECK(sq.passing_odd_s == 0);
  CHECK(sq.control_witness);
}

TEST_CASE("schottky image") {
  PrimeField F;
  std::mt19937_64 rng(12);
  CharSet evens = 0;
  for (Char m : even_chars()) evens |= CharSet(1) << m;
  for (int k = 0; k < 5; ++k) {
    auto d = eval_all(random_point(rng, 8, F), F);
    CHECK(schottky_value(d, evens, 8, F) == 0);
  }
  auto r = schottky_image(alist().sets, F, 100, 1);
  CHECK(r.eight.zero);
  CHECK(r.witness_without_constant);
  CHECK(r.witness_zero_constant);
  CHECK(r.witness_single_subspace);
}

TEST_CASE("graded dimensions of the Theta ring") {
  PrimeField F;
  CHECK(graded_dim_B(2, alist().sets, F, 1).rank == 14);
  CHECK(graded_dim_B(4, alist().sets, F, 2).rank == 105);
  CHECK_THROWS_AS(graded_dim_B(3, alist().sets, F, 1), std::invalid_argument);
}

TEST_CASE("series") {
  auto a = series_ring_A(11);
  CHECK(a[9] == 7534);
  auto b = series_even_B(13);
  CHECK(b[10] == 6062);
  CHECK(b[12] == 14945);
  auto rb = series_ring_B(13);
  for (int w = 0; w <= 12; w += 2) CHECK(rb[w] == b[w]);
  auto c = series_config(5);
  CHECK(c == std::vector<mpz_class>{1, 14, 91, 364, 1085});
  auto s = series_suite();
  for (auto& ch : s.checks) CHECK(ch.first_mismatch == -1);
  CHECK(s.even_part_matches);
}
