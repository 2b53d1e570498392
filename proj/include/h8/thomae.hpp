#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "h8/charspace.hpp"
#include "h8/exactalg.hpp"
#include "h8/perm.hpp"

namespace h8 {

using Pair = std::pair<int, int>;  // (i,j), i<j, standing for W_ij = X_i - X_j

struct SignedMonomial {
  int sign = 0;
  std::vector<Pair> factors;  // sorted; empty when sign == 0
  bool operator==(const SignedMonomial&) const = default;
  std::string str() const;  // "- 13 16 ..."
};

SignedMonomial normalize(int sign, std::vector<Pair> oriented);  // orients i<j, sorts
SignedMonomial d_of_subset(Subset8 t);
SignedMonomial d_of_char(Char m);
SignedMonomial permute(const SignedMonomial& d, const Perm& sigma);  // X_k -> X_sigma(k)
PolyZ expand(const SignedMonomial& d);
u64 eval(const SignedMonomial& d, const std::vector<u64>& x, const PrimeField& F);
// All 36 values D_m(x), indexed by characteristic (odd entries are 0).
std::array<u64, 64> eval_all(const std::vector<u64>& x, const PrimeField& F);

struct TableRow {
  Char m = 0;
  SignedMonomial d;
};
std::vector<TableRow> load_thomae_table(const std::string& path);

struct TableReport {
  int rows = 0, matched = 0;
  std::vector<std::string> diffs;
};
TableReport verify_table(const std::vector<TableRow>& golden);

struct SupportReport {
  int checks = 0, passed = 0;
  bool twelve_factors = true;
  std::string counterexample;
};
SupportReport support_law();

enum class Equivariance { Exact, UpToSign, Broken };
struct EquivarianceReport {
  Equivariance verdict = Equivariance::Exact;
  int sign_character = 1;  // observed factor relating sigma.D_m to D_{sigma.m}
  std::string mismatch;
};
EquivarianceReport equivariance(const Perm& sigma);

bool well_defined_on_complements(std::string* witness);
PolyZ sum_of_all_D();

// Cubic monomials in Y1..Y14 (560), lexicographically descending.
const std::vector<Exponent>& cubic_monomials();
PolyZ cubic_to_poly(const std::vector<mpq_class>& c);  // in Y; coefficients must be integral after scaling
std::optional<std::vector<mpq_class>> cubic_in_Y(Char m, u64 prime, u64 seed);
// Re-expansion oracle: sum c_k * monomial_k(Y(X)) == D_m exactly.
bool cubic_reexpands_to(const std::vector<mpq_class>& c, const SignedMonomial& d);

// (Y1-Y10+Y11-Y14)(Y1-Y2-Y6+Y7+Y8-Y9+Y11-Y13)(Y8-Y9), the printed representative for m = (0,0,0|0,0,1).
PolyZ factored_cubic();

}  // namespace h8
