#include "h8/exactalg.hpp"

#include <algorithm>
#include <cctype>
#include <cmath>
#include <sstream>
#include <unordered_map>

namespace h8 {

PrimeField::PrimeField(u64 p) : p_(p) {
  if (p < 3 || !(p & 1) || p >= (u64{1} << 62)) throw std::invalid_argument("prime must be odd and below 2^62");
  u64 inv = p;  // Newton iteration for p^{-1} mod 2^64
  for (int i = 0; i < 6; ++i) inv *= 2 - p * inv;
  nprime_ = ~inv + 1;
  u128 r = (u128(1) << 64) % p;
  r2_ = u64((r * r) % p);
}

u64 PrimeField::pow(u64 a, u64 e) const {
  u64 r = 1 % p_;
  for (; e; e >>= 1) {
    if (e & 1) r = mul(r, a);
    a = mul(a, a);
  }
  return r;
}

u64 PrimeField::inv(u64 a) const {
  if (a == 0) throw std::domain_error("inverse of zero");
  return pow(a, p_ - 2);
}

u64 PrimeField::from_int(long long v) const {
  if (v >= 0) return u64(v) % p_;
  u64 m = u64(-(v + 1)) % p_;
  return sub(p_ - 1, m);
}

u64 PrimeField::from_mpz(const mpz_class& v) const {
  mpz_class r;
  mpz_class pp;
  mpz_import(pp.get_mpz_t(), 1, 1, sizeof(u64), 0, 0, &p_);
  mpz_fdiv_r(r.get_mpz_t(), v.get_mpz_t(), pp.get_mpz_t());
  u64 out = 0;
  mpz_export(&out, nullptr, 1, sizeof(u64), 0, 0, r.get_mpz_t());
  return out;
}

long long PrimeField::to_signed(u64 a) const { return a > p_ / 2 ? -(long long)(p_ - a) : (long long)a; }

static mpz_class mpz_of(u64 v) {
  mpz_class r;
  mpz_import(r.get_mpz_t(), 1, 1, sizeof(u64), 0, 0, &v);
  return r;
}

bool is_probable_prime(u64 p) { return mpz_probab_prime_p(mpz_of(p).get_mpz_t(), 40) > 0; }

std::vector<u64> primes_below(u64 start, int count) {
  std::vector<u64> out;
  for (u64 c = (start - 2) | 1; int(out.size()) < count && c > 3; c -= 2)
    if (is_probable_prime(c)) out.push_back(c);
  return out;
}

int total_degree(const Exponent& e) {
  int d = 0;
  for (auto x : e) d += x;
  return d;
}

std::vector<Exponent> monomials_of_degree(int nvars, int deg) {
  std::vector<Exponent> out;
  Exponent e{};
  auto rec = [&](auto&& self, int var, int left) -> void {
    if (var == nvars - 1) {
      e[var] = std::uint8_t(left);
      out.push_back(e);
      e[var] = 0;
      return;
    }
    for (int k = left; k >= 0; --k) {
      e[var] = std::uint8_t(k);
      self(self, var + 1, left - k);
    }
    e[var] = 0;
  };
  if (nvars > 0) rec(rec, 0, deg);
  else if (deg == 0) out.push_back(e);
  return out;
}

template <class C, class Lift>
static u64 eval_generic(const SparsePoly<C>& f, const std::vector<u64>& x, const PrimeField& F, Lift lift) {
  if (int(x.size()) < f.nvars()) throw std::invalid_argument("point has too few coordinates");
  std::vector<std::vector<u64>> pw(f.nvars());
  u64 acc = 0;
  for (auto& [e, c] : f.terms()) {
    u64 t = lift(c);
    for (int i = 0; i < f.nvars(); ++i) {
      if (!e[i]) continue;
      auto& p = pw[i];
      if (p.empty()) p.push_back(1);
      while (int(p.size()) <= e[i]) p.push_back(F.mul(p.back(), x[i]));
      t = F.mul(t, p[e[i]]);
    }
    acc = F.add(acc, t);
  }
  return acc;
}

u64 eval_mod(const PolyZ& f, const std::vector<u64>& x, const PrimeField& F) {
  return eval_generic(f, x, F, [&](const mpz_class& c) { return F.from_mpz(c); });
}

u64 eval_mod(const PolyQ& f, const std::vector<u64>& x, const PrimeField& F) {
  return eval_generic(f, x, F, [&](const mpq_class& c) {
    return F.mul(F.from_mpz(c.get_num()), F.inv(F.from_mpz(c.get_den())));
  });
}

std::string to_string(const PolyZ& f, const std::vector<std::string>& names) {
  if (f.is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (auto it = f.terms().rbegin(); it != f.terms().rend(); ++it) {
    auto& [e, c] = *it;
    mpz_class a = abs(c);
    os << (c < 0 ? "-" : (first ? "" : "+"));
    bool mono = total_degree(e) > 0;
    if (a != 1 || !mono) os << a.get_str();
    for (int i = 0; i < f.nvars(); ++i) {
      if (!e[i]) continue;
      os << names.at(i);
      if (e[i] > 1) os << '^' << int(e[i]);
    }
    first = false;
  }
  return os.str();
}

PolyZ parse_poly(const std::string& text, int nvars, const std::string& stem, int index_base) {
  PolyZ out(nvars);
  std::size_t i = 0, n = text.size();
  auto skip = [&] {
    while (i < n && std::isspace((unsigned char)text[i])) ++i;
  };
  skip();
  while (i < n) {
    int sign = 1;
    if (text[i] == '+' || text[i] == '-') {
      sign = text[i] == '-' ? -1 : 1;
      ++i;
      skip();
    }
    mpz_class coef = 1;
    std::size_t j = i;
    while (j < n && std::isdigit((unsigned char)text[j])) ++j;
    if (j > i) {
      coef = mpz_class(text.substr(i, j - i));
      i = j;
    }
    Exponent e{};
    while (i < n && text.compare(i, stem.size(), stem) == 0) {
      i += stem.size();
      if (i < n && text[i] == '{') ++i;
      std::size_t k = i;
      while (k < n && std::isdigit((unsigned char)text[k])) ++k;
      if (k == i) throw std::invalid_argument("missing variable index in: " + text);
      int v = std::stoi(text.substr(i, k - i)) - index_base;
      i = k;
      if (i < n && text[i] == '}') ++i;
      int p = 1;
      if (i < n && text[i] == '^') {
        ++i;
        std::size_t m = i;
        while (m < n && std::isdigit((unsigned char)text[m])) ++m;
        p = std::stoi(text.substr(i, m - i));
        i = m;
      }
      if (v < 0 || v >= nvars) throw std::invalid_argument("variable index out of range in: " + text);
      e[v] = std::uint8_t(e[v] + p);
    }
    out.add_term(e, sign * coef);
    skip();
    if (i < n && text[i] != '+' && text[i] != '-')
      throw std::invalid_argument("unexpected character in polynomial: " + text.substr(i, 10));
  }
  return out;
}

// ---- matrices ----

PrimeFieldMatrix PrimeFieldMatrix::transpose() const {
  PrimeFieldMatrix t(cols_, rows_);
  for (int r = 0; r < rows_; ++r)
    for (int c = 0; c < cols_; ++c) t.at(c, r) = at(r, c);
  return t;
}

// Forward elimination, optionally followed by back substitution.
static Echelon eliminate(PrimeFieldMatrix m, const PrimeField& F, bool full) {
  const u64 p = F.p();
  int rows = m.rows(), cols = m.cols(), r = 0;
  Echelon out;
  for (int c = 0; c < cols && r < rows; ++c) {
    int piv = -1;
    for (int i = r; i < rows; ++i)
      if (m.at(i, c)) {
        piv = i;
        break;
      }
    if (piv < 0) continue;
    if (piv != r) std::swap_ranges(m.row(piv), m.row(piv) + cols, m.row(r));
    u64* pr = m.row(r);
    u64 inv = F.inv(pr[c]);
    ShoupMul sc(inv, p);
    for (int k = c; k < cols; ++k) pr[k] = sc(pr[k]);
    int start = full ? 0 : r + 1;
    for (int i = start; i < rows; ++i) {
      if (i == r) continue;
      u64* ri = m.row(i);
      u64 f = ri[c];
      if (!f) continue;
      ShoupMul fm(f, p);
      for (int k = c; k < cols; ++k)
        if (pr[k]) {
          u64 t = fm(pr[k]);
          ri[k] = ri[k] >= t ? ri[k] - t : ri[k] + p - t;
        }
    }
    out.pivots.push_back(c);
    ++r;
  }
  out.rank = r;
  out.reduced = std::move(m);
  return out;
}

int rank_mod_p(PrimeFieldMatrix m, const PrimeField& F) { return eliminate(std::move(m), F, false).rank; }

Echelon rref_mod_p(PrimeFieldMatrix m, const PrimeField& F) { return eliminate(std::move(m), F, true); }

std::optional<std::vector<u64>> solve_mod_p(const PrimeFieldMatrix& a, const std::vector<u64>& b,
                                            const PrimeField& F, std::vector<int>* pivots) {
  if (int(b.size()) != a.rows()) throw std::invalid_argument("rhs length mismatch");
  PrimeFieldMatrix aug(a.rows(), a.cols() + 1);
  for (int r = 0; r < a.rows(); ++r) {
    std::copy(a.row(r), a.row(r) + a.cols(), aug.row(r));
    aug.at(r, a.cols()) = b[r];
  }
  Echelon e = eliminate(std::move(aug), F, true);
  if (!e.pivots.empty() && e.pivots.back() == a.cols()) return std::nullopt;
  std::vector<u64> x(a.cols(), 0);
  for (int i = 0; i < e.rank; ++i) x[e.pivots[i]] = e.reduced.at(i, a.cols());
  if (pivots) *pivots = e.pivots;
  return x;
}

// ---- exact rational linear algebra ----

RrefQ rref_q(MatQ m) {
  RrefQ out;
  if (m.empty()) return out;
  int rows = int(m.size()), cols = int(m[0].size()), r = 0;
  for (int c = 0; c < cols && r < rows; ++c) {
    int piv = -1;
    for (int i = r; i < rows; ++i)
      if (m[i][c] != 0) {
        piv = i;
        break;
      }
    if (piv < 0) continue;
    std::swap(m[piv], m[r]);
    mpq_class inv = 1 / m[r][c];
    for (int k = c; k < cols; ++k) m[r][k] *= inv;
    for (int i = 0; i < rows; ++i) {
      if (i == r || m[i][c] == 0) continue;
      mpq_class f = m[i][c];
      for (int k = c; k < cols; ++k)
        if (m[r][k] != 0) m[i][k] -= f * m[r][k];
    }
    out.pivots.push_back(c);
    ++r;
  }
  m.resize(r);
  out.rows = std::move(m);
  return out;
}

int rank_q(const MatQ& m) { return int(rref_q(m).pivots.size()); }

MatQ nullspace_q(const MatQ& m, int cols) {
  RrefQ e = rref_q(m);
  std::vector<bool> is_piv(cols, false);
  for (int c : e.pivots) is_piv[c] = true;
  MatQ basis;
  for (int f = 0; f < cols; ++f) {
    if (is_piv[f]) continue;
    std::vector<mpq_class> v(cols, 0);
    v[f] = 1;
    for (std::size_t i = 0; i < e.pivots.size(); ++i) v[e.pivots[i]] = -e.rows[i][f];
    basis.push_back(std::move(v));
  }
  return basis;
}

// ---- rational reconstruction ----

std::optional<mpq_class> rational_reconstruct(const mpz_class& a, const mpz_class& m) {
  mpz_class bound;
  mpz_sqrt(bound.get_mpz_t(), mpz_class(m / 2).get_mpz_t());
  mpz_class r0 = m, r1 = a % m, t0 = 0, t1 = 1;
  if (r1 < 0) r1 += m;
  while (r1 > bound) {
    mpz_class q = r0 / r1;
    mpz_class r2 = r0 - q * r1, t2 = t0 - q * t1;
    r0 = r1, r1 = r2, t0 = t1, t1 = t2;
  }
  if (abs(t1) > bound || t1 == 0) return std::nullopt;
  mpz_class g;
  mpz_gcd(g.get_mpz_t(), r1.get_mpz_t(), t1.get_mpz_t());
  if (g != 1) return std::nullopt;
  mpq_class q(r1, t1);
  q.canonicalize();
  return q;
}

std::optional<std::vector<mpq_class>> multimodular(
    const std::function<std::optional<std::vector<u64>>(const PrimeField&)>& solver,
    const std::function<bool(const std::vector<mpq_class>&)>& accept, u64 first_prime, int max_primes) {
  std::vector<u64> ps{first_prime};
  for (u64 q : primes_below(first_prime, max_primes - 1)) ps.push_back(q);
  std::vector<mpz_class> res;
  mpz_class mod = 1;
  for (u64 p : ps) {
    PrimeField F(p);
    auto v = solver(F);
    if (!v) return std::nullopt;
    mpz_class P = mpz_of(p);
    if (res.empty()) res.assign(v->size(), 0);
    if (res.size() != v->size()) throw std::logic_error("solution length changed across primes");
    mpz_class inv;
    mpz_invert(inv.get_mpz_t(), mod.get_mpz_t(), P.get_mpz_t());
    for (std::size_t i = 0; i < res.size(); ++i) {
      mpz_class d = (mpz_of((*v)[i]) - res[i]) % P;
      if (d < 0) d += P;
      res[i] += mod * ((d * inv) % P);
    }
    mod *= P;
    std::vector<mpq_class> q(res.size());
    bool ok = true;
    for (std::size_t i = 0; i < res.size() && ok; ++i) {
      auto r = rational_reconstruct(res[i], mod);
      if (!r) ok = false;
      else q[i] = *r;
    }
    if (ok && accept(q)) return q;
  }
  return std::nullopt;
}

// ---- PIT ----

std::vector<u64> random_point(std::mt19937_64& rng, int n, const PrimeField& F) {
  std::uniform_int_distribution<u64> d(0, F.p() - 1);
  std::vector<u64> x(n);
  for (auto& v : x) v = d(rng);
  return x;
}

PitVerdict pit_is_zero(const BlackBox& f, int nvars, int degree_bound, int trials, u64 seed,
                       const PrimeField& F) {
  if (trials < 1) throw std::invalid_argument("trials must be positive");
  if (degree_bound < 0 || u64(degree_bound) >= F.p()) throw std::invalid_argument("degree bound must be below p");
  PitVerdict v;
  v.trials = trials;
  v.degree_bound = degree_bound;
  v.seed = seed;
  v.prime = F.p();
  v.log10_error_bound = degree_bound == 0 ? -INFINITY
                                          : trials * (std::log10(double(degree_bound)) - std::log10(double(F.p())));
  std::mt19937_64 rng(seed);
  for (int t = 0; t < trials; ++t) {
    auto x = random_point(rng, nvars, F);
    if (f(x) != 0) {
      v.zero = false;
      v.witness = x;
      return v;
    }
  }
  return v;
}

// ---- series ----

mpz_class binomial(long n, long k) {
  if (k < 0 || n < 0 || k > n) return 0;
  mpz_class r;
  mpz_bin_uiui(r.get_mpz_t(), (unsigned long)n, (unsigned long)k);
  return r;
}

std::vector<mpz_class> poly_mul(const std::vector<mpz_class>& a, const std::vector<mpz_class>& b) {
  if (a.empty() || b.empty()) return {};
  std::vector<mpz_class> r(a.size() + b.size() - 1, 0);
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < b.size(); ++j) r[i + j] += a[i] * b[j];
  return r;
}

RationalSeries RationalSeries::from_factors(std::vector<mpz_class> num, const std::vector<int>& pows) {
  std::vector<mpz_class> den{1};
  for (int k : pows) {
    std::vector<mpz_class> f(k + 1, 0);
    f[0] = 1;
    f[k] = -1;
    den = poly_mul(den, f);
  }
  return {std::move(num), std::move(den)};
}

std::vector<mpz_class> series_expand(const RationalSeries& s, int n) {
  if (s.denominator.empty() || s.denominator[0] == 0) throw std::invalid_argument("denominator constant term is zero");
  const mpz_class& d0 = s.denominator[0];
  std::vector<mpz_class> c(n + 1, 0);
  for (int k = 0; k <= n; ++k) {
    mpz_class acc = k < int(s.numerator.size()) ? s.numerator[k] : mpz_class(0);
    for (int j = 1; j <= k && j < int(s.denominator.size()); ++j) acc -= s.denominator[j] * c[k - j];
    if (acc % d0 != 0) throw std::domain_error("series has non-integral coefficients");
    c[k] = acc / d0;
  }
  return c;
}

}  // namespace h8
