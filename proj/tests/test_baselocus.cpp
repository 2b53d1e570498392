#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <set>

#include "h8/baselocus.hpp"
#include "h8/report.hpp"

using namespace h8;

namespace {

const LinearSpace& base() {
  static const auto b = load_base_space(asset_path(RunConfig{}, "base_ideal_example.txt"));
  return b;
}

const std::vector<LinearSpace>& orbit() {
  static const auto o = orbit_of_base_space(base());
  return o;
}

IntVec14 random_member(const LinearSpace& s, std::mt19937_64& rng) {
  IntVec14 y{};
  for (auto& v : s.param) {
    long c = long(rng() % 7) - 3;
    for (int i = 0; i < 14; ++i) y[i] += c * v[i];
  }
  return y;
}

}  // namespace

TEST_CASE("normalization") {
  IntVec14 v{};
  v[2] = -4;
  v[5] = 6;
  auto n = normalize(v);
  CHECK(n[2] == 2);
  CHECK(n[5] == -3);
  CHECK(normalize(n) == n);
  CHECK(normalize(IntVec14{}) == IntVec14{});
}

TEST_CASE("parsing and canonical form") {
  CHECK(base().rank() == 10);
  CHECK(base().param.size() == 4);
  auto again = parse_space(space_to_string(base()));
  CHECK(again == base());
  // a different generating set of the same space
  auto alt = parse_space("Y2+Y3, Y3, Y5, Y6-Y5, Y8, Y9, Y10, Y11, Y13, Y14");
  CHECK(alt == base());
  for (auto& v : base().param) CHECK(contains(base(), v));
}

TEST_CASE("action is compatible with composition and incidence") {
  std::mt19937_64 rng(4);
  for (int k = 0; k < 10; ++k) {
    Perm a = random_perm(rng), b = random_perm(rng);
    CHECK(act_space(base(), compose(a, b)) == act_space(act_space(base(), b), a));
    IntVec14 y = random_member(base(), rng);
    CHECK(contains(act_space(base(), a), act_point(y, a)));
  }
  CHECK(act_space(base(), identity_perm()) == base());
}

TEST_CASE("orbit and stabilizer") {
  CHECK(orbit().size() == 56);
  CHECK(index_of(orbit(), base()) >= 0);
  CHECK(stabilizer_order(base()) == 720);
  CHECK(action_kernel(orbit()) == "trivial");
}

TEST_CASE("koike ideal vanishes on the printed space") {
  auto gens = load_koike(asset_path(RunConfig{}, "koike_generators.txt"));
  CHECK(koike_vanish_on(base(), gens));
  IntVec14 off{};
  for (int i = 0; i < 14; ++i) off[i] = i * i + 1;
  CHECK_FALSE(koike_vanish_at(off, gens));
}

TEST_CASE("collision triple and exceptional vanishing set") {
  PrimeField F;
  auto t = collision_triple(base(), F, 1);
  REQUIRE(t);
  CharSet v = exceptional_vanishing_set(*t, F, 1);
  CHECK(set_size(v) == 6);
  CHECK(contains(v, 0));
  auto tr = triplets_for(v);
  REQUIRE(tr.size() == 1);
  CHECK((orthogonal_even_set({tr[0][0], tr[0][1], tr[0][2]}) | 1) == v);
  // every D_m dies on the space itself
  CHECK(set_size(restricted_vanishing_set(base(), F, 1)) == 36);
}

TEST_CASE("collision triples label the orbit bijectively") {
  PrimeField F;
  std::set<std::array<int, 3>> seen;
  for (auto& s : orbit()) {
    auto t = collision_triple(s, F, 2);
    REQUIRE(t);
    seen.insert(*t);
  }
  CHECK(seen.size() == 56);
}

TEST_CASE("vanishing sets are equivariant") {
  PrimeField F;
  std::mt19937_64 rng(9);
  auto t = collision_triple(base(), F, 1);
  REQUIRE(t);
  CharSet v = exceptional_vanishing_set(*t, F, 1);
  for (int k = 0; k < 4; ++k) {
    Perm s = random_perm(rng);
    auto img = act_space(base(), s);
    auto ti = collision_triple(img, F, 1);
    REQUIRE(ti);
    CHECK(exceptional_vanishing_set(*ti, F, 1) == act_set(s, v));
  }
}

TEST_CASE("cusp ideals") {
  auto ci = load_cusp_ideals(asset_path(RunConfig{}, "cusp_eight_ideals.txt"));
  REQUIRE(ci.spaces.size() == 8);
  int through = 0;
  for (auto& s : ci.spaces) {
    CHECK(index_of(orbit(), s) >= 0);
    through += contains(s, ci.cusp);
  }
  CHECK(through == 8);
  auto gens = load_koike(asset_path(RunConfig{}, "koike_generators.txt"));
  CHECK(koike_vanish_at(ci.cusp, gens));
}
