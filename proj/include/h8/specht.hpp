#pragma once

#include <array>
#include <optional>
#include <string>
#include <vector>

#include "h8/exactalg.hpp"
#include "h8/perm.hpp"

namespace h8 {

struct Tableau {
  std::array<int, 4> top{}, bottom{};
  bool operator==(const Tableau&) const = default;
  bool is_valid() const;
  bool is_standard() const;
  std::string str() const;  // "1234/5678"
};

struct TableauSets {
  std::vector<Tableau> all;
  std::vector<Tableau> standard;
};

TableauSets enumerate_tableaux();
Tableau parse_tableau(const std::string& s);
// The 14 standard tableaux in the fixed order defining Y1..Y14.
const std::vector<Tableau>& standard_tableaux();

PolyZ specht_polynomial(const Tableau& t);  // in X1..X8
const std::vector<PolyZ>& specht_basis();   // Y1..Y14 expanded in X
std::vector<u64> eval_Y(const std::vector<u64>& x, const PrimeField& F);

// X_k -> X_{sigma(k)}
PolyZ permute_vars(const PolyZ& f, const Perm& sigma);

// Coefficients c with f = sum c_i Y_i, certified by exact re-expansion.
std::optional<std::vector<mpq_class>> express_in_Y(const PolyZ& f, u64 prime, u64 seed);
PolyZ combine_Y(const std::vector<mpq_class>& c);  // sum c_i Y_i, must be integral
int specht_span_dim(const PrimeField& F, u64 seed);

// Polynomials in Y1..Y14 (14 variables) mapped into X1..X8.
PolyZ substitute_Y(const PolyZ& in_y);

struct KoikeGenerator {
  std::string name;
  PolyZ poly;  // 14 variables
};
std::vector<KoikeGenerator> load_koike(const std::string& path);

struct KoikeReport {
  int total = 0;
  int vanishing = 0;
  std::vector<std::string> failures;  // name and first surviving monomial
};
KoikeReport verify_koike(const std::vector<KoikeGenerator>& gens);

// Matrix of sigma acting on span(Y): column i holds sigma.Y_i in the Y basis,
// so that M(sigma tau) = M(sigma) M(tau).
using IntMat14 = std::array<std::array<long, 14>, 14>;
IntMat14 y_rep(const Perm& sigma);
IntMat14 mat_mul(const IntMat14& a, const IntMat14& b);
IntMat14 mat_identity();

struct GradedDim {
  int n = 0;
  int rank = 0;
  int points = 0;
  int monomials = 0;
};
GradedDim graded_dim_config(int n, const PrimeField& F, u64 seed);
mpz_class howe_dim(int n);
mpz_class deconcini_dim(int n);
// Cross-check: lattice points of {0..n}^8 with coordinate sum 4n minus sum 4n-1.
mpz_class deconcini_by_counting(int n);

}  // namespace h8
