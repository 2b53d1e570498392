#pragma once

#include <array>
#include <optional>
#include <string>
#include <vector>

#include "h8/charspace.hpp"
#include "h8/exactalg.hpp"
#include "h8/perm.hpp"
#include "h8/specht.hpp"

namespace h8 {

using IntVec14 = std::array<long, 14>;

// Primitive integer vector with first nonzero entry positive (zero stays zero).
IntVec14 normalize(IntVec14 v);
IntVec14 normalize_q(const std::vector<mpq_class>& v);

// Linear subspace of the Y-space cut out by integer linear forms.
struct LinearSpace {
  std::vector<IntVec14> forms;  // as given (or as transported)
  std::vector<IntVec14> param;  // integer basis of the common kernel
  std::vector<IntVec14> canon;  // reduced echelon rows, made primitive; identifies the space
  int rank() const { return int(canon.size()); }
  bool operator==(const LinearSpace& o) const { return canon == o.canon; }
};

LinearSpace make_space(std::vector<IntVec14> forms);
LinearSpace parse_space(const std::string& line);  // "Y2, Y3-Y11+Y14, ..."
std::string space_to_string(const LinearSpace& s);  // canonical forms, comma separated
bool contains(const LinearSpace& s, const IntVec14& y);

// Action induced by permuting X_1..X_8; incidence between spaces and points is preserved.
LinearSpace act_space(const LinearSpace& s, const Perm& sigma);
IntVec14 act_point(const IntVec14& y, const Perm& sigma);

LinearSpace load_base_space(const std::string& path);
struct CuspIdeals {
  IntVec14 cusp{};
  std::vector<LinearSpace> spaces;
};
CuspIdeals load_cusp_ideals(const std::string& path);

// Orbit under <(1 2), (1 2 ... 8)>, deduplicated by canonical form, in discovery order.
std::vector<LinearSpace> orbit_of_base_space(const LinearSpace& base);
int index_of(const std::vector<LinearSpace>& spaces, const LinearSpace& s);
// Walks all of S8, counting permutations that fix the space.
int stabilizer_order(const LinearSpace& s);

// Koike generators pulled back to the parametrization, as polynomials in 4 parameters.
bool koike_vanish_on(const LinearSpace& s, const std::vector<KoikeGenerator>& gens);
bool koike_vanish_at(const IntVec14& y, const std::vector<KoikeGenerator>& gens);

// Cubic representatives of D_m in Y for every even m, computed once.
const std::array<std::vector<mpq_class>, 64>& cubic_representatives(u64 prime, u64 seed);

// Even m (0 included) whose D_m vanishes identically on the space. Every space lies in the
// base locus, so this is the full set of 36.
CharSet restricted_vanishing_set(const LinearSpace& s, const PrimeField& F, u64 seed, int trials = 4);

// The 3-subset {a,b,c} of {1..8} such that configurations with x_a = x_b = x_c map into the space
// and span it; nullopt when no unique such subset exists.
std::optional<std::array<int, 3>> collision_triple(const LinearSpace& s, const PrimeField& F, u64 seed);

// Even m (0 included) vanishing on the exceptional divisor over the space: along generic curves
// x0 + eps*v with x0 in the collision locus, D_m vanishes to higher order in eps than the minimum.
CharSet exceptional_vanishing_set(const std::array<int, 3>& triple, const PrimeField& F, u64 seed, int trials = 3);

// Zero-sum odd triplets whose orthogonal evens, together with 0, equal `vanish`.
std::vector<Triplet> triplets_for(CharSet vanish);
CharSet act_set(const Perm& sigma, CharSet s);

struct VanishingReport {
  int spaces = 0;
  bool koike_on_all = true;
  bool restricted_all_vanish = true;  // all 36 D_m vanish on every space
  bool collision_triples_bijective = false;
  bool all_size_six = true;
  bool triplet_unique = true;
  bool bijective = false;         // onto the 56 zero-sum odd triplets
  bool match_sextuplets = false;  // vanishing sets are the boundary sextuplets
  int equivariance_checked = 0, equivariance_passed = 0;
  std::string base_triplet;
  std::vector<CharSet> vanish;  // aligned with the orbit
  std::vector<Triplet> triplets;
  std::vector<std::array<int, 3>> collisions;
};
VanishingReport vanishing_suite(const std::vector<LinearSpace>& orbit, const std::vector<KoikeGenerator>& gens,
                                const PrimeField& F, u64 seed, int equivariance_samples);

struct CuspReport {
  bool printed_on_variety = false;
  int printed_in_given = 0;  // of the 8 printed ideals
  int orbit_size = 0;
  bool eight_per_cusp = true;
  bool five_per_space = true;
  bool char_bijection = false;
  int intersecting_pairs = 0;
  int intersections_with_cusp = 0;
  std::vector<int> intersection_dims;  // histogram over unordered pairs, index = dimension
  std::vector<IntVec14> cusps;
};
CuspReport cusp_suite(const CuspIdeals& printed, const std::vector<LinearSpace>& orbit,
                      const std::vector<Triplet>& triplets, const std::vector<KoikeGenerator>& gens,
                      const PrimeField& F);

// Normal subgroups of S8 are 1, A8 and S8, so the action kernel is decided by (1 2) and (1 2 3).
std::string action_kernel(const std::vector<LinearSpace>& orbit);

}  // namespace h8
