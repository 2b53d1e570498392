#pragma once

#include <array>
#include <optional>
#include <string>
#include <vector>

#include "h8/charspace.hpp"
#include "h8/exactalg.hpp"
#include "h8/perm.hpp"
#include "h8/thomae.hpp"

namespace h8 {

// The printed digit lists A_1..A_15 and their decoded character sets.
struct SubspaceDigitList {
  std::vector<std::array<int, 7>> digits;
  std::vector<CharSet> sets;  // nonzero elements only
};
SubspaceDigitList load_theta_subspaces(const std::string& path);

// Theta_1 as displayed: seven 3x2 matrices, column 0 = m', column 1 = m''.
const std::vector<Char>& theta1_display();

struct DecodeReport {
  int count = 0;
  bool all_subspaces = true;   // each A_i plus 0 is a 3-dim totally singular subspace
  bool digits_sorted = true;
  bool theta1_matches = false;
  bool a15_matches = false;    // m' = 0, m'' != 0
  bool one_class = true;       // pairwise intersections of even projective dimension
  std::string error;
};
DecodeReport decode_check(const SubspaceDigitList& a);

// D(Theta_i)(x) for i = 1..15 (index 0..14).
std::array<u64, 15> eval_thetas(const std::vector<CharSet>& a, const std::vector<u64>& x, const PrimeField& F);
std::array<u64, 15> thetas_from_d(const std::vector<CharSet>& a, const std::array<u64, 64>& d, const PrimeField& F);

struct Weight2Report {
  int rank = 0;
  bool kernel_is_ones = false;
  bool incidence_three = true;  // each nonzero even m lies in exactly 3 of the A_i
  bool sum_vanishes = false;    // sum of all D(Theta_i) is the zero polynomial
};
Weight2Report weight2_structure(const std::vector<CharSet>& a, const PrimeField& F, u64 seed);

// Coefficients c (Theta_15 coefficient fixed to 0) with sum c_i D(Theta_i) = D_m, certified exactly.
std::optional<std::vector<mpq_class>> theta4_in_Theta(const std::vector<CharSet>& a, Char m, u64 prime, u64 seed);
// The same, reduced mod p for every even m (zero row for m = 0).
std::array<std::array<u64, 15>, 64> theta4_mod_p(const std::vector<CharSet>& a, const PrimeField& F, u64 seed);

// ---- cubic relation ----

struct CubicTerm {
  mpz_class coef;
  std::array<int, 3> idx;  // 1-based, sorted ascending
  bool operator==(const CubicTerm&) const = default;
};
using ThetaCubic = std::vector<CubicTerm>;
ThetaCubic load_cubic_relation(const std::string& path);
// Merges equal index triples; drops zero terms; sorts.
ThetaCubic canonical(ThetaCubic c);
u64 eval_cubic(const ThetaCubic& c, const std::array<u64, 15>& theta, const PrimeField& F);
// Theta_i -> Theta_{pi(i)}; pi is 0-based.
ThetaCubic relabel(const ThetaCubic& c, const std::array<int, 15>& pi);

// Induced permutation of A_1..A_15 under sigma; nullopt when sigma maps the list to the other class.
std::optional<std::array<int, 15>> induced_theta_perm(const std::vector<CharSet>& a, const Perm& sigma);

struct CubicSuiteReport {
  PitVerdict image;
  bool mutation_caught = false;
  int orbit_size = 0;
  int span_dim = 0;
  bool odd_perms_swap_classes = false;
  bool even_perms_preserve = false;
};
CubicSuiteReport cubic_relation_suite(const std::vector<CharSet>& a, const ThetaCubic& c, const PrimeField& F,
                                      int trials, u64 seed);

// ---- quartic families ----

struct CosetRelation {
  std::array<Char, 2> m_basis{};
  Char a = 0, b = 0;  // smallest elements of the two non-trivial all-even cosets
  bool holds = false;
};
struct CosetReport {
  int subspaces = 0;
  bool three_even_cosets_each = true;
  int holding = 0;
  std::vector<CosetRelation> relations;
};
CosetReport coset_quartic_relations();

// Product of D over a set of characteristics as one signed monomial.
SignedMonomial d_product(const std::vector<Char>& chars);

struct QuarticCandidate {
  Char s = 0;
  std::array<std::array<Char, 2>, 3> pairs{};
};
struct SquaredQuarticReport {
  int candidates = 0;
  int passing = 0;
  int passing_even_s = 0, passing_odd_s = 0;
  std::vector<QuarticCandidate> relations;
  bool control_witness = false;  // a non-passing candidate yields a PIT witness
  int span_dim = 0;              // span of the passing relations as quartics in Theta
  int span_with_cosets = 0;
};
SquaredQuarticReport squared_quartic_relations(const std::vector<CharSet>& a, const PrimeField& F, int trials,
                                               u64 seed, bool with_span);

struct SchottkyReport {
  PitVerdict eight;
  bool witness_without_constant = false;  // constant 1
  bool witness_zero_constant = false;     // constant 0
  bool witness_single_subspace = false;   // sums restricted to A_1
};
// (sum_m D_m^2)^2 - c sum_m D_m^4 over the chars in `set`.
u64 schottky_value(const std::array<u64, 64>& d, CharSet set, u64 c, const PrimeField& F);
SchottkyReport schottky_image(const std::vector<CharSet>& a, const PrimeField& F, int trials, u64 seed);

// ---- dimensions and series ----

struct GradedDimB {
  int weight = 0;
  int rank = 0;
  int points = 0;
  int monomials = 0;
};
GradedDimB graded_dim_B(int weight, const std::vector<CharSet>& a, const PrimeField& F, u64 seed);

// Closed forms as printed, expanded to `terms` coefficients in z.
std::vector<mpz_class> series_ring_A(int terms);       // (1-z^8) times the rational function
std::vector<mpz_class> series_ring_B(int terms);       // ring A times (1-z)(1-z^4)/(1-z^8)
std::vector<mpz_class> series_even_B(int terms);       // numerator in z^2 over (1-z^2)^6
std::vector<mpz_class> series_config(int terms);       // numerator in t over (1-t)^6

struct SeriesCheck {
  std::string name;
  std::vector<long> printed;  // printed coefficients, -1 where the display omits a term
  std::vector<mpz_class> computed;
  int first_mismatch = -1;
};
struct SeriesReport {
  std::vector<SeriesCheck> checks;
  bool even_part_matches = false;
};
SeriesReport series_suite();

}  // namespace h8
