#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <set>

#include "h8/charspace.hpp"
#include "h8/thetaring.hpp"

using namespace h8;

namespace {

// q by the definition m'.m'' over F2, independent of the library
int q_direct(int m) { return ((m >> 5 & 1) * (m >> 2 & 1) + (m >> 4 & 1) * (m >> 1 & 1) + (m >> 3 & 1) * (m & 1)) & 1; }

}  // namespace

TEST_CASE("packing and parity") {
  CHECK(make_char(0, 1, 0, 1, 0, 1) == 21);
  CHECK(char_to_string(21) == "(0,1,0|1,0,1)");
  CHECK(char_bits(21) == "010101");
  for (int m = 0; m < 64; ++m) CHECK(q_form(Char(m)) == q_direct(m));
  CHECK(even_chars().size() == 36);
  CHECK(odd_chars().size() == 28);
  CHECK(q_form(make_char(1, 1, 1, 1, 0, 0)) == 1);
}

TEST_CASE("q is a quadratic form for the pairing") {
  for (int a = 0; a < 64; ++a)
    for (int b = 0; b < 64; ++b) {
      CHECK(q_form(Char(a ^ b)) == (q_form(Char(a)) ^ q_form(Char(b)) ^ bilinear(Char(a), Char(b))));
      CHECK(bilinear(Char(a), Char(b)) == bilinear(Char(b), Char(a)));
      CHECK(e_sign(Char(a), Char(b)) == (bilinear(Char(a), Char(b)) ? -1 : 1));
    }
}

TEST_CASE("totally singular subspaces") {
  CHECK(singular_subspaces(1).size() == 35);
  CHECK(singular_subspaces(2).size() == 105);
  auto max = singular_subspaces(3);
  CHECK(max.size() == 30);
  for (auto& s : max) {
    CHECK(set_size(s.members) == 8);
    CHECK(contains(s.members, 0));
    for (Char a : members(s.members)) CHECK(q_form(a) == 0);
  }
  CHECK(span({1, 2}).dim == 2);
  CHECK(span({1, 2, 3}).dim == 2);
}

TEST_CASE("two classes of maximal subspaces") {
  auto max = singular_subspaces(3);
  auto split = so_orbit_split(max, 0xFF);
  REQUIRE(split.class_a.size() == 15);
  REQUIRE(split.class_b.size() == 15);
  // same class: intersections of odd vector dimension
  auto dim = [](CharSet s) {
    int n = set_size(s), d = 0;
    while ((1 << d) < n) ++d;
    return d;
  };
  for (auto& a : split.class_a) {
    for (auto& b : split.class_a) CHECK(dim(a.members & b.members) % 2 == 1);
    for (auto& b : split.class_b) CHECK(dim(a.members & b.members) % 2 == 0);
  }
}

TEST_CASE("stars and triplets") {
  auto stars = enumerate_stars();
  CHECK(stars.size() == 105);
  std::set<Star> unique(stars.begin(), stars.end());
  CHECK(unique.size() == 105);
  for (auto& s : stars) {
    for (Char a : s) CHECK(q_form(a) == 1);
    CHECK(Char(s[0] ^ s[1] ^ s[2]) == s[3]);
    auto sums = span({Char(s[0] ^ s[1]), Char(s[0] ^ s[2])});
    CHECK(sums.dim == 2);
    CHECK(sums.singular);
  }
  auto trip = enumerate_odd_triplets();
  CHECK(trip.size() == 56);
  for (auto& t : trip) {
    CHECK(q_form(Char(t[0] ^ t[1] ^ t[2])) == 0);
    CHECK(set_size(orthogonal_even_set({t[0], t[1], t[2]})) == 5);
  }
}

TEST_CASE("boundary dictionaries") {
  auto d = boundary_dictionaries();
  CHECK(d.sextuplets.size() == 56);
  CHECK(d.example_sextuplet_present);
  CHECK(d.even_sum_pairs.size() == 210);
  for (auto& p : d.even_sum_pairs) CHECK(set_size(p.orthogonal_union) == 23);
  CHECK(d.pairwise_even_triples.size() == 420);
  CHECK(d.triples_partition_stars);
  CHECK(d.per_even.size() == 35);
  for (auto& e : d.per_even) {
    CHECK(e.orthogonal_odds.size() == 12);
    CHECK(e.odd_sum_evens.size() == 16);
    // counted directly
    CHECK(e.star_partitions.size() == 6);
  }
  auto trip = enumerate_odd_triplets();
  for (auto& s : d.sextuplets) {
    CHECK(s[0] == 0);
    CharSet mask = 0;
    for (Char m : s) mask |= CharSet(1) << m;
    int owners = 0;
    for (auto& t : trip) owners += (orthogonal_even_set({t[0], t[1], t[2]}) | 1) == mask;
    CHECK(owners == 1);
  }
}

TEST_CASE("mumford dictionary") {
  CHECK(char_of_subset(0) == kMEmpty);
  CHECK(char_of_subset(0b10000001) == make_char(1, 0, 1, 0, 1, 0));
  Char m34 = char_of_subset(0b00001100);
  CHECK(m34 == make_char(1, 0, 1, 0, 0, 1));
  CHECK(q_form(m34) == 1);
  for (int x = 2; x <= 8; ++x) CHECK(char_of_subset(Subset8(1 | 1 << (x - 1))) == kBaseTable[x - 2]);
  auto r = verify_mumford_properties();
  CHECK(r.pairs_checked == 16384);
  CHECK(r.a_fibers);
  CHECK(r.b_composition);
  CHECK(r.c_parity);
  CHECK(r.d_sign);
  CHECK(r.decomposition_independent);
  // composition rule as a property over all pairs of even subsets
  for (Subset8 a : even_subsets())
    for (Subset8 b : even_subsets())
      CHECK(char_of_subset(circ(a, b)) == Char(char_of_subset(a) ^ char_of_subset(b) ^ kMEmpty));
  for (int m = 0; m < 64; ++m) CHECK(char_of_subset(subset_of_char(Char(m))) == m);
}

TEST_CASE("orthogonal representation") {
  std::mt19937_64 rng(21);
  for (int k = 0; k < 300; ++k) {
    Perm s = random_perm(rng), t = random_perm(rng);
    F2Mat ms = perm_to_orthogonal(s);
    CHECK(f2_mul(ms, perm_to_orthogonal(t)) == perm_to_orthogonal(compose(s, t)));
    CHECK(preserves_q(ms));
    for (int m = 0; m < 64; ++m) {
      CHECK(q_form(act(s, Char(m))) == q_form(Char(m)));
      CHECK(act(s, Char(m)) == ms.apply(Char(m)));
    }
  }
  CHECK(perm_to_orthogonal(identity_perm()) == f2_identity());
  std::string w;
  CHECK_FALSE(literal_action_is_linear(transposition(1, 5), &w));
  CHECK_FALSE(w.empty());
  CHECK(literal_action_is_linear(transposition(1, 2), nullptr));
}

TEST_CASE("transpositions act as transvections") {
  for (int i = 1; i <= 8; ++i)
    for (int j = i + 1; j <= 8; ++j) {
      Char t = t_ij_char(i, j);
      CHECK(q_form(t) == 1);
      for (int m = 0; m < 64; ++m)
        CHECK(act(transposition(i, j), Char(m)) == Char(bilinear(Char(m), t) ? m ^ t : m));
    }
}

TEST_CASE("chi layer") {
  auto r = chi_layer();
  CHECK(r.span_dim == 14);
  CHECK(r.six_through_each);
}
