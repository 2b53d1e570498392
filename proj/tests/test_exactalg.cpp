#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "h8/exactalg.hpp"

using namespace h8;

namespace {

u64 slow_mul(u64 a, u64 b, u64 p) { return u64(u128(a) * b % p); }

PolyZ random_poly(std::mt19937_64& rng, int nvars, int terms, int maxdeg) {
  PolyZ f(nvars);
  for (int t = 0; t < terms; ++t) {
    Exponent e{};
    for (int i = 0; i < nvars; ++i) e[i] = std::uint8_t(rng() % (maxdeg + 1));
    f.add_term(e, mpz_class(long(rng() % 21) - 10));
  }
  return f;
}

}  // namespace

TEST_CASE("default prime") {
  CHECK(kDefaultPrime == (u64{1} << 62) - 57);
  CHECK(is_probable_prime(kDefaultPrime));
  CHECK_FALSE(is_probable_prime(kDefaultPrime - 2));
  CHECK_THROWS_AS(PrimeField(u64{1} << 62), std::invalid_argument);
  auto ps = primes_below(kDefaultPrime, 3);
  REQUIRE(ps.size() == 3);
  CHECK(ps[0] < kDefaultPrime);
  CHECK(ps[1] < ps[0]);
}

TEST_CASE("field arithmetic agrees with 128-bit remainders") {
  std::mt19937_64 rng(7);
  for (u64 p : {kDefaultPrime, u64(1000003), u64(53)}) {
    PrimeField F(p);
    for (int i = 0; i < 3000; ++i) {
      u64 a = rng() % p, b = rng() % p;
      CHECK(F.mul(a, b) == slow_mul(a, b, p));
      CHECK(F.add(a, b) == u64((u128(a) + b) % p));
      CHECK(F.sub(F.add(a, b), b) == a);
      CHECK(ShoupMul(b, p)(a) == slow_mul(a, b, p));
      if (a) CHECK(F.mul(a, F.inv(a)) == 1);
    }
    CHECK(F.pow(3, p - 1) == 1);
    CHECK(F.to_signed(F.from_int(-5)) == -5);
  }
}

TEST_CASE("polynomial ring identities") {
  PolyZ x = PolyZ::variable(3, 0), y = PolyZ::variable(3, 1), z = PolyZ::variable(3, 2);
  PolyZ cube = (x + y).pow(3);
  CHECK(cube.size() == 4);
  CHECK(cube.degree() == 3);
  CHECK((x - y) * (x + y) == x * x - y * y);
  // substitute x -> y + z, y -> y, z -> z
  PolyZ s = (x * x).substitute({y + z, y, z});
  CHECK(s == y * y + (y * z).scaled(2) + z * z);
  CHECK((x - x).is_zero());
}

TEST_CASE("parse and print round trip") {
  std::mt19937_64 rng(11);
  std::vector<std::string> names;
  for (int i = 0; i < 5; ++i) names.push_back("F_" + std::to_string(i));
  for (int k = 0; k < 50; ++k) {
    PolyZ f = random_poly(rng, 5, 1 + int(rng() % 8), 3);
    CHECK(parse_poly(to_string(f, names), 5, "F_", 0) == f);
  }
  CHECK(parse_poly("-2F_0^4F_1^2+3F_2", 3, "F_", 0).size() == 2);
  CHECK_THROWS_AS(parse_poly("F_9", 3, "F_", 0), std::invalid_argument);
}

TEST_CASE("evaluation mod p is a ring homomorphism") {
  std::mt19937_64 rng(3);
  PrimeField F;
  for (int k = 0; k < 30; ++k) {
    PolyZ f = random_poly(rng, 4, 5, 3), g = random_poly(rng, 4, 5, 3);
    auto pt = random_point(rng, 4, F);
    CHECK(eval_mod(f * g, pt, F) == F.mul(eval_mod(f, pt, F), eval_mod(g, pt, F)));
    CHECK(eval_mod(f + g, pt, F) == F.add(eval_mod(f, pt, F), eval_mod(g, pt, F)));
  }
}

TEST_CASE("rank of products of random thin matrices") {
  std::mt19937_64 rng(5);
  PrimeField F;
  for (int k : {1, 3, 6, 9}) {
    int n = 12;
    PrimeFieldMatrix a(n, k), b(k, n), c(n, n);
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < k; ++j) a.at(i, j) = rng() % F.p();
    for (int i = 0; i < k; ++i)
      for (int j = 0; j < n; ++j) b.at(i, j) = rng() % F.p();
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) {
        u64 s = 0;
        for (int t = 0; t < k; ++t) s = F.add(s, F.mul(a.at(i, t), b.at(t, j)));
        c.at(i, j) = s;
      }
    CHECK(rank_mod_p(c, F) == k);
    CHECK(rank_mod_p(c.transpose(), F) == k);
    auto e = rref_mod_p(c, F);
    CHECK(e.rank == k);
    for (int r = 0; r < e.rank; ++r) CHECK(e.reduced.at(r, e.pivots[r]) == 1);
  }
}

TEST_CASE("solve mod p") {
  std::mt19937_64 rng(9);
  PrimeField F;
  int n = 10;
  PrimeFieldMatrix a(n, n);
  std::vector<u64> x(n), b(n, 0);
  for (int i = 0; i < n; ++i) {
    x[i] = rng() % F.p();
    for (int j = 0; j < n; ++j) a.at(i, j) = rng() % F.p();
  }
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) b[i] = F.add(b[i], F.mul(a.at(i, j), x[j]));
  auto sol = solve_mod_p(a, b, F);
  REQUIRE(sol);
  CHECK(*sol == x);
  // inconsistent: duplicate a row with a different right-hand side
  for (int j = 0; j < n; ++j) a.at(1, j) = a.at(0, j);
  b[1] = F.add(b[0], 1);
  CHECK_FALSE(solve_mod_p(a, b, F));
}

TEST_CASE("rational nullspace annihilates") {
  std::mt19937_64 rng(13);
  for (int k = 0; k < 20; ++k) {
    int rows = 2 + int(rng() % 4), cols = rows + 1 + int(rng() % 3);
    MatQ m(rows, std::vector<mpq_class>(cols));
    for (auto& r : m)
      for (auto& v : r) v = long(rng() % 7) - 3;
    auto ns = nullspace_q(m, cols);
    CHECK(int(ns.size()) == cols - rank_q(m));
    for (auto& v : ns)
      for (auto& r : m) {
        mpq_class s = 0;
        for (int j = 0; j < cols; ++j) s += r[j] * v[j];
        CHECK(s == 0);
      }
  }
}

TEST_CASE("rational reconstruction and multimodular recovery") {
  mpz_class p(std::to_string(kDefaultPrime));
  std::mt19937_64 rng(17);
  for (int k = 0; k < 40; ++k) {
    mpq_class q(long(rng() % 20001) - 10000, long(rng() % 9999) + 1);
    q.canonicalize();
    mpz_class inv, den = q.get_den();
    mpz_invert(inv.get_mpz_t(), den.get_mpz_t(), p.get_mpz_t());
    mpz_class img = q.get_num() * inv % p;
    if (img < 0) img += p;
    auto r = rational_reconstruct(img, p);
    REQUIRE(r);
    CHECK(*r == q);
  }
  // values whose numerators exceed a single prime need CRT across several
  std::vector<mpq_class> want = {mpq_class(mpz_class("123456789012345678901234567"), 7), mpq_class(-1, 3)};
  auto got = multimodular(
      [&](const PrimeField& F) -> std::optional<std::vector<u64>> {
        std::vector<u64> v;
        for (auto& q : want) v.push_back(F.mul(F.from_mpz(q.get_num()), F.inv(F.from_mpz(q.get_den()))));
        return v;
      },
      [&](const std::vector<mpq_class>& v) { return v == want; }, kDefaultPrime);
  REQUIRE(got);
  CHECK(*got == want);
}

TEST_CASE("identity testing") {
  PrimeField F;
  PolyZ x = PolyZ::variable(2, 0), y = PolyZ::variable(2, 1);
  PolyZ zero = (x + y).pow(4) - (x - y).pow(4) - (x.pow(3) * y + x * y.pow(3)).scaled(8);
  auto v = pit_is_zero([&](const std::vector<u64>& p) { return eval_mod(zero, p, F); }, 2, 4, 50, 1, F);
  CHECK(v.zero);
  CHECK(v.trials == 50);
  CHECK(v.log10_error_bound < -800);
  PolyZ nz = x * y * (x - y);
  auto w = pit_is_zero([&](const std::vector<u64>& p) { return eval_mod(nz, p, F); }, 2, 3, 50, 1, F);
  REQUIRE_FALSE(w.zero);
  CHECK(eval_mod(nz, w.witness, F) != 0);
}

TEST_CASE("series expansion against binomials") {
  for (int k = 1; k <= 6; ++k) {
    std::vector<int> pows(k, 1);
    auto s = series_expand(RationalSeries::from_factors({1}, pows), 15);
    REQUIRE(s.size() == 16);
    for (int n = 0; n <= 15; ++n) CHECK(s[n] == binomial(n + k - 1, k - 1));
  }
  // 1/(1-t^2) has alternating zeros
  auto s = series_expand(RationalSeries::from_factors({1}, {2}), 6);
  CHECK(s == std::vector<mpz_class>{1, 0, 1, 0, 1, 0, 1});
  CHECK(poly_mul({1, 1}, {1, -1}) == std::vector<mpz_class>{1, 0, -1});
}
