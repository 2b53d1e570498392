#pragma once

#include <array>
#include <complex>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include "h8/charspace.hpp"
#include "h8/exactalg.hpp"

namespace h8 {

// ---- exact matrices over Q(i), indexed by F2^3 via a = 4a1+2a2+a3 ----

struct Gauss {
  mpq_class re = 0, im = 0;
  bool operator==(const Gauss& o) const { return re == o.re && im == o.im; }
};
Gauss operator+(const Gauss& a, const Gauss& b);
Gauss operator*(const Gauss& a, const Gauss& b);

struct GaussMatrix {
  std::array<std::array<Gauss, 8>, 8> e;
  bool operator==(const GaussMatrix& o) const { return e == o.e; }
  std::string key() const;
};
GaussMatrix operator*(const GaussMatrix& a, const GaussMatrix& b);
GaussMatrix gauss_identity();
GaussMatrix scalar_matrix(const Gauss& c);
GaussMatrix conjugate_transpose(const GaussMatrix& m);

int dot3(int a, int b);  // a.b over F2 for 3-bit vectors

GaussMatrix s_tilde();                         // ((1+i)/2)^3 ((-1)^{a.b})
GaussMatrix s_tilde_inverse();
GaussMatrix t_tilde(const std::array<int, 3>& diag);  // diagonal i^{S[a]}, S = diag, reduced mod 4

struct Closure {
  std::vector<GaussMatrix> elements;
  bool capped = false;
};
Closure closure(const std::vector<GaussMatrix>& gens, std::size_t cap = 4096);
bool member(const Closure& g, const GaussMatrix& m);

std::vector<GaussMatrix> n3_prime_generators();  // T(2e_k) and S~^{-1} T(2e_k) S~
struct RungeReport {
  int order_n3_prime = 0;
  int order_n3 = 0;
  bool minus_e_in = false;
  bool i_e_in = false;
  bool i_e_in_n3 = false;
  bool order_stable = false;  // same order with the generator list reversed
  bool capped = false;
};
RungeReport runge_groups();

// Polynomial in F_0..F_7 composed with F -> g F; g must have real integral entries.
std::optional<PolyZ> transform(const PolyZ& f, const GaussMatrix& g);
PolyZ load_f_poly(const std::string& path);

struct InvarianceReport {
  int generators = 0;
  int p_invariant = 0, q_invariant = 0;
  bool control_changes_q = false;       // F_0 -> -F_0
  bool control_outside_group = false;
  int q_terms = 0, q_degree = 0;
  std::string mismatch;
};
InvarianceReport invariance_PQ(const PolyZ& p, const PolyZ& q);

// ---- numerics ----

using cplx = std::complex<double>;
using CMat3 = std::array<std::array<cplx, 3>, 3>;

struct SiegelPoint {
  CMat3 z{};
  bool valid() const;         // symmetric with positive definite imaginary part
  double min_imag_eig() const;
};
SiegelPoint random_siegel(std::mt19937_64& rng);
SiegelPoint i_identity();

struct Approx {
  cplx value;
  double tail = 0;  // bound on the omitted terms
};
// theta[m](Z) = sum_n exp(pi i (Z[n + m'/2] + (n + m'/2).m''))
Approx theta_eval(Char m, const SiegelPoint& z, int radius);
// f_a(Z) = sum_g exp(2 pi i Z[g + a/2])
Approx f_eval(int a, const SiegelPoint& z, int radius);
// sum_n exp(-pi n^2), summed independently of the lattice code
double one_dim_theta(int radius);

struct NumericBasics {
  double odd_max = 0;
  double identity_rel_err = 0;    // theta[0](iI) against the cube of the 1-D series
  bool doubling_within_tail = true;
};
NumericBasics numeric_basics(int points, int radius, u64 seed);

struct DuplicationReport {
  double printed_residual = 0;  // max relative error, sign (-1)^{m'.m''}
  double variant_residual = 0;  // sign (-1)^{a.m''}
  double sign_gap = 0;          // largest relative gap between the two sign choices
  double second_formula_residual = 0;
  std::string matching;         // "variant", "printed", "both" or "neither"
};
DuplicationReport duplication_check(int points, int radius, u64 seed, double tol);

struct SchottkyFit {
  std::vector<double> ratios;
  double mean = 0, spread = 0;
  double residual_at_eight = 0;  // max |(sum th^8)^2 - 8 sum th^16| / (sum th^8)^2
};
SchottkyFit schottky_numeric_fit(int points, int radius, u64 seed);

}  // namespace h8
