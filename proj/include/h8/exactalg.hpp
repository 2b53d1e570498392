#pragma once

#include <gmpxx.h>

#include <array>
#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <random>
#include <stdexcept>
#include <string>
#include <vector>

namespace h8 {

using u64 = std::uint64_t;
using u128 = unsigned __int128;

inline constexpr u64 kDefaultPrime = (u64{1} << 62) - 57;

class PrimeField {
 public:
  explicit PrimeField(u64 p = kDefaultPrime);

  u64 p() const { return p_; }
  u64 add(u64 a, u64 b) const {
    u64 s = a + b;
    return s >= p_ ? s - p_ : s;
  }
  u64 sub(u64 a, u64 b) const { return a >= b ? a - b : a + p_ - b; }
  u64 neg(u64 a) const { return a ? p_ - a : 0; }
  u64 mul(u64 a, u64 b) const { return redc(u128(redc(u128(a) * b)) * r2_); }
  u64 pow(u64 a, u64 e) const;
  u64 inv(u64 a) const;
  u64 from_int(long long v) const;
  u64 from_mpz(const mpz_class& v) const;
  // symmetric lift into (-p/2, p/2]
  long long to_signed(u64 a) const;

 private:
  u64 redc(u128 t) const {
    u64 m = u64(t) * nprime_;
    u128 s = (t + u128(m) * p_) >> 64;
    u64 r = u64(s);
    return r >= p_ ? r - p_ : r;
  }
  u64 p_;
  u64 nprime_;
  u64 r2_;
};

// Precomputed multiplier for repeated products by one constant.
struct ShoupMul {
  u64 w = 0, wp = 0, p = 0;
  ShoupMul(u64 w_, u64 p_) : w(w_), wp(u64((u128(w_) << 64) / p_)), p(p_) {}
  u64 operator()(u64 a) const {
    u64 q = u64((u128(a) * wp) >> 64);
    u64 r = a * w - q * p;
    return r >= p ? r - p : r;
  }
};

bool is_probable_prime(u64 p);
// Primes strictly below `start`, descending; used for CRT.
std::vector<u64> primes_below(u64 start, int count);

// ---- sparse polynomials ----

inline constexpr int kMaxVars = 16;
using Exponent = std::array<std::uint8_t, kMaxVars>;

int total_degree(const Exponent& e);
// All exponent vectors of total degree `deg` in `nvars` variables, lexicographically descending.
std::vector<Exponent> monomials_of_degree(int nvars, int deg);

template <class C>
class SparsePoly {
 public:
  using TermMap = std::map<Exponent, C>;

  SparsePoly() : nvars_(0) {}
  explicit SparsePoly(int nvars) : nvars_(nvars) {
    if (nvars < 0 || nvars > kMaxVars) throw std::invalid_argument("variable count out of range");
  }
  static SparsePoly constant(int nvars, const C& c) {
    SparsePoly r(nvars);
    if (c != 0) r.terms_[Exponent{}] = c;
    return r;
  }
  static SparsePoly variable(int nvars, int i) {
    SparsePoly r(nvars);
    Exponent e{};
    e.at(i) = 1;
    r.terms_[e] = C(1);
    return r;
  }

  int nvars() const { return nvars_; }
  const TermMap& terms() const { return terms_; }
  std::size_t size() const { return terms_.size(); }
  bool is_zero() const { return terms_.empty(); }
  int degree() const {
    int d = -1;
    for (auto& [e, c] : terms_) d = std::max(d, total_degree(e));
    return d;
  }

  void add_term(const Exponent& e, const C& c) {
    if (c == 0) return;
    auto [it, fresh] = terms_.emplace(e, c);
    if (!fresh) {
      it->second += c;
      if (it->second == 0) terms_.erase(it);
    }
  }

  SparsePoly& operator+=(const SparsePoly& o) {
    check(o);
    for (auto& [e, c] : o.terms_) add_term(e, c);
    return *this;
  }
  SparsePoly& operator-=(const SparsePoly& o) {
    check(o);
    for (auto& [e, c] : o.terms_) add_term(e, C(-c));
    return *this;
  }
  SparsePoly operator+(const SparsePoly& o) const { SparsePoly r = *this; r += o; return r; }
  SparsePoly operator-(const SparsePoly& o) const { SparsePoly r = *this; r -= o; return r; }
  SparsePoly operator-() const { return scaled(C(-1)); }
  SparsePoly scaled(const C& k) const {
    SparsePoly r(nvars_);
    if (k == 0) return r;
    for (auto& [e, c] : terms_) r.terms_.emplace_hint(r.terms_.end(), e, C(c * k));
    return r;
  }
  SparsePoly operator*(const SparsePoly& o) const {
    check(o);
    SparsePoly r(nvars_);
    for (auto& [ea, ca] : terms_)
      for (auto& [eb, cb] : o.terms_) {
        Exponent e;
        for (int i = 0; i < kMaxVars; ++i) e[i] = std::uint8_t(ea[i] + eb[i]);
        r.add_term(e, C(ca * cb));
      }
    return r;
  }
  bool operator==(const SparsePoly& o) const { return nvars_ == o.nvars_ && terms_ == o.terms_; }
  bool operator!=(const SparsePoly& o) const { return !(*this == o); }

  SparsePoly pow(int k) const {
    SparsePoly r = constant(nvars_, C(1)), b = *this;
    for (; k > 0; k >>= 1) {
      if (k & 1) r = r * b;
      if (k > 1) b = b * b;
    }
    return r;
  }

  // Replace variable i by subs[i]; subs polys share one variable count.
  SparsePoly substitute(const std::vector<SparsePoly>& subs) const {
    if (int(subs.size()) != nvars_) throw std::invalid_argument("substitution arity mismatch");
    int nv = subs.empty() ? 0 : subs[0].nvars();
    for (auto& s : subs)
      if (s.nvars() != nv) throw std::invalid_argument("variable-count mismatch");
    std::vector<std::vector<SparsePoly>> powers(nvars_);
    SparsePoly r(nv);
    for (auto& [e, c] : terms_) {
      SparsePoly t = constant(nv, c);
      for (int i = 0; i < nvars_; ++i) {
        if (!e[i]) continue;
        auto& pw = powers[i];
        if (pw.empty()) pw.push_back(constant(nv, C(1)));
        while (int(pw.size()) <= e[i]) pw.push_back(pw.back() * subs[i]);
        t = t * pw[e[i]];
      }
      r += t;
    }
    return r;
  }

 private:
  void check(const SparsePoly& o) const {
    if (o.nvars_ != nvars_) throw std::invalid_argument("variable-count mismatch");
  }
  int nvars_;
  TermMap terms_;
};

using PolyZ = SparsePoly<mpz_class>;
using PolyQ = SparsePoly<mpq_class>;

// Evaluation at a point with coordinates in GF(p).
u64 eval_mod(const PolyZ& f, const std::vector<u64>& x, const PrimeField& F);
u64 eval_mod(const PolyQ& f, const std::vector<u64>& x, const PrimeField& F);
std::string to_string(const PolyZ& f, const std::vector<std::string>& names);
// Parses sums like "-2F_0^4F_1^2+3F_2" with variable stem "F_"; indices shifted by index_base.
PolyZ parse_poly(const std::string& text, int nvars, const std::string& stem, int index_base);

// ---- prime-field matrices ----

class PrimeFieldMatrix {
 public:
  PrimeFieldMatrix(int rows, int cols) : rows_(rows), cols_(cols), a_(std::size_t(rows) * cols, 0) {}
  int rows() const { return rows_; }
  int cols() const { return cols_; }
  u64& at(int r, int c) { return a_[std::size_t(r) * cols_ + c]; }
  u64 at(int r, int c) const { return a_[std::size_t(r) * cols_ + c]; }
  u64* row(int r) { return a_.data() + std::size_t(r) * cols_; }
  const u64* row(int r) const { return a_.data() + std::size_t(r) * cols_; }
  PrimeFieldMatrix transpose() const;

 private:
  int rows_, cols_;
  std::vector<u64> a_;
};

struct Echelon {
  int rank = 0;
  std::vector<int> pivots;  // pivot column for each of the first `rank` rows
  PrimeFieldMatrix reduced{0, 0};
};

int rank_mod_p(PrimeFieldMatrix m, const PrimeField& F);
// Full reduced row echelon form (pivot entries 1, zero above and below).
Echelon rref_mod_p(PrimeFieldMatrix m, const PrimeField& F);
// Solve A x = b; free variables set to 0. Returns nullopt if inconsistent.
std::optional<std::vector<u64>> solve_mod_p(const PrimeFieldMatrix& a, const std::vector<u64>& b,
                                            const PrimeField& F, std::vector<int>* pivots = nullptr);

// ---- exact rational linear algebra ----

using MatQ = std::vector<std::vector<mpq_class>>;
struct RrefQ {
  MatQ rows;  // nonzero rows only
  std::vector<int> pivots;
};
RrefQ rref_q(MatQ m);
int rank_q(const MatQ& m);
// Basis of {x : m x = 0}, one vector per free column.
MatQ nullspace_q(const MatQ& m, int cols);

// ---- rational reconstruction ----

std::optional<mpq_class> rational_reconstruct(const mpz_class& a, const mpz_class& m);

// Recover a rational vector from residues under several primes: `solver(F)` returns the
// residue vector for prime F; stops once reconstruction is stable and `accept` holds.
std::optional<std::vector<mpq_class>> multimodular(
    const std::function<std::optional<std::vector<u64>>(const PrimeField&)>& solver,
    const std::function<bool(const std::vector<mpq_class>&)>& accept, u64 first_prime,
    int max_primes = 12);

// ---- polynomial identity testing ----

struct PitVerdict {
  bool zero = true;
  int trials = 0;
  int degree_bound = 0;
  u64 seed = 0;
  u64 prime = 0;
  double log10_error_bound = 0;  // log10((d/p)^trials)
  std::vector<u64> witness;
};

using BlackBox = std::function<u64(const std::vector<u64>&)>;

PitVerdict pit_is_zero(const BlackBox& f, int nvars, int degree_bound, int trials, u64 seed,
                       const PrimeField& F);

std::vector<u64> random_point(std::mt19937_64& rng, int n, const PrimeField& F);

// ---- rational series ----

struct RationalSeries {
  std::vector<mpz_class> numerator;
  std::vector<mpz_class> denominator;  // expanded coefficient list, constant term nonzero

  static RationalSeries from_factors(std::vector<mpz_class> num, const std::vector<int>& one_minus_t_pows);
};

std::vector<mpz_class> poly_mul(const std::vector<mpz_class>& a, const std::vector<mpz_class>& b);
std::vector<mpz_class> series_expand(const RationalSeries& s, int n);

mpz_class binomial(long n, long k);

}  // namespace h8
