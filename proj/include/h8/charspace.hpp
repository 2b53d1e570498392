#pragma once

#include <array>
#include <cstdint>
#include <string>
#include <vector>

#include "h8/perm.hpp"

namespace h8 {

// Characteristic m = (m'1 m'2 m'3 | m''1 m''2 m''3) packed as 32m'1+16m'2+8m'3+4m''1+2m''2+m''3.
using Char = std::uint8_t;
// Set of characteristics as a 64-bit membership mask.
using CharSet = std::uint64_t;

Char make_char(int a1, int a2, int a3, int b1, int b2, int b3);
std::string char_to_string(Char m);  // "(0,1,0|1,0,1)"
std::string char_bits(Char m);       // "010101"

int q_form(Char m);
int bilinear(Char m, Char n);
int e_sign(Char m, Char n);  // (-1)^{(m,n)}

std::vector<Char> even_chars();
std::vector<Char> odd_chars();
std::vector<Char> members(CharSet s);
inline bool contains(CharSet s, Char m) { return s >> m & 1; }
int set_size(CharSet s);

struct Subspace {
  int dim = 0;
  std::vector<Char> basis;  // reduced echelon form
  CharSet members = 1;
  bool singular = true;
};

Subspace span(const std::vector<Char>& gens);
std::vector<Subspace> singular_subspaces(int d);

struct OrbitSplit {
  std::vector<Subspace> class_a;  // the class of the printed A-list
  std::vector<Subspace> class_b;
};
// Partition maximal singular subspaces into the two classes: same class iff the
// projective dimension of the intersection is even. `reference` must contain 0.
OrbitSplit so_orbit_split(const std::vector<Subspace>& maximals, CharSet reference);

using Star = std::array<Char, 4>;
using Triplet = std::array<Char, 3>;
std::vector<Star> enumerate_stars();
std::vector<Triplet> enumerate_odd_triplets();
CharSet orthogonal_even_set(const std::vector<Char>& chars);

struct EvenCharData {
  Char m = 0;
  std::vector<Char> orthogonal_odds;
  std::vector<std::array<int, 3>> star_partitions;  // indices into enumerate_stars()
  std::vector<Char> odd_sum_evens;                  // evens n with m+n odd
};

struct OddPairData {
  Char a = 0, b = 0;
  CharSet orthogonal_union = 0;
};

struct BoundaryDictionaries {
  std::vector<std::array<Char, 6>> sextuplets;
  bool example_sextuplet_present = false;
  std::vector<OddPairData> even_sum_pairs;
  std::vector<EvenCharData> per_even;
  std::vector<Triplet> pairwise_even_triples;
  std::vector<int> triples_per_star;  // indexed like enumerate_stars()
  bool triples_partition_stars = false;
};

std::array<Char, 6> example_sextuplet();
BoundaryDictionaries boundary_dictionaries();

// ---- subsets of {1..8} and the Mumford dictionary ----

inline constexpr Subset8 kU = 0x0F;          // {1,2,3,4}
inline constexpr Char kMEmpty = 0b010101;   // m(emptyset)
// m({1,x}) for x = 2..8, index x-2
inline constexpr std::array<Char, 7> kBaseTable = {0b111100, 0b110011, 0b001111, 0b011000,
                                                  0b100001, 0b000110, 0b101010};

Subset8 circ(Subset8 a, Subset8 b);
Subset8 canonical_subset(Subset8 t);  // representative not containing 8
std::vector<Subset8> even_subsets();  // all 128
std::string subset_to_string(Subset8 t);

// m(T) via sorted consecutive pairing.
Char char_of_subset(Subset8 t);
// m(T) via an explicit pairing of T's elements (must cover T).
Char char_of_pairing(const std::vector<std::pair<int, int>>& pairs);
Subset8 subset_of_char(Char m);  // canonical preimage

struct MumfordReport {
  bool a_fibers = true, b_composition = true, c_parity = true, d_sign = true;
  bool decomposition_independent = true;
  long pairs_checked = 0;
  std::string witness;
};
MumfordReport verify_mumford_properties();

// ---- S8 -> O(F2^6) ----

struct F2Mat {
  std::array<Char, 6> col{};  // image of basis vector 1<<k
  Char apply(Char m) const;
  bool operator==(const F2Mat&) const = default;
};
F2Mat f2_identity();
F2Mat f2_mul(const F2Mat& a, const F2Mat& b);

// sigma.m(T) = m(sigma T) + m(sigma U)
F2Mat perm_to_orthogonal(const Perm& sigma);
Char act(const Perm& sigma, Char m);
// Literal rule m(T) -> m(sigma T); returns a witness description when not linear.
bool literal_action_is_linear(const Perm& sigma, std::string* witness);
bool preserves_q(const F2Mat& m);

Char t_ij_char(int i, int j);

struct ChiLayerReport {
  int span_dim = 0;
  int lines_tested = 0;
  bool six_through_each = true;
  int linear_orderings_found = 0;
  int quadratic_orderings_found = 0;
  std::string offending;
};
ChiLayerReport chi_layer();

}  // namespace h8
