#include "h8/specht.hpp"

#include <algorithm>
#include <fstream>
#include <map>
#include <numeric>
#include <stdexcept>

namespace h8 {

bool Tableau::is_valid() const {
  std::array<bool, 9> seen{};
  for (int k = 0; k < 4; ++k) {
    for (int v : {top[k], bottom[k]}) {
      if (v < 1 || v > 8 || seen[v]) return false;
      seen[v] = true;
    }
    if (top[k] >= bottom[k]) return false;
    if (k && top[k - 1] >= top[k]) return false;
  }
  return true;
}

bool Tableau::is_standard() const {
  if (!is_valid()) return false;
  for (int k = 1; k < 4; ++k)
    if (bottom[k - 1] >= bottom[k]) return false;
  return true;
}

std::string Tableau::str() const {
  std::string s;
  for (int v : top) s += char('0' + v);
  s += '/';
  for (int v : bottom) s += char('0' + v);
  return s;
}

Tableau parse_tableau(const std::string& s) {
  if (s.size() != 9 || s[4] != '/') throw std::invalid_argument("tableau must look like 1234/5678");
  Tableau t;
  for (int k = 0; k < 4; ++k) {
    t.top[k] = s[k] - '0';
    t.bottom[k] = s[5 + k] - '0';
  }
  return t;
}

TableauSets enumerate_tableaux() {
  TableauSets out;
  Perm p = identity_perm();
  do {
    Tableau t;
    for (int k = 0; k < 4; ++k) {
      t.top[k] = p[k];
      t.bottom[k] = p[4 + k];
    }
    if (t.is_valid()) out.all.push_back(t);
  } while (std::next_permutation(p.begin(), p.end()));
  for (auto& t : out.all)
    if (t.is_standard()) out.standard.push_back(t);
  return out;
}

const std::vector<Tableau>& standard_tableaux() {
  static const std::vector<Tableau> v = [] {
    std::vector<Tableau> r;
    for (const char* s : {"1234/5678", "1235/4678", "1236/4578", "1237/4568", "1245/3678", "1246/3578",
                          "1247/3568", "1256/3478", "1257/3468", "1345/2678", "1346/2578", "1347/2568",
                          "1356/2478", "1357/2468"})
      r.push_back(parse_tableau(s));
    return r;
  }();
  return v;
}

PolyZ specht_polynomial(const Tableau& t) {
  PolyZ r = PolyZ::constant(8, 1);
  for (int k = 0; k < 4; ++k)
    r = r * (PolyZ::variable(8, t.top[k] - 1) - PolyZ::variable(8, t.bottom[k] - 1));
  return r;
}

const std::vector<PolyZ>& specht_basis() {
  static const std::vector<PolyZ> v = [] {
    std::vector<PolyZ> r;
    for (auto& t : standard_tableaux()) r.push_back(specht_polynomial(t));
    return r;
  }();
  return v;
}

std::vector<u64> eval_Y(const std::vector<u64>& x, const PrimeField& F) {
  std::vector<u64> y(14);
  auto& tabs = standard_tableaux();
  for (int i = 0; i < 14; ++i) {
    u64 v = 1;
    for (int k = 0; k < 4; ++k) v = F.mul(v, F.sub(x[tabs[i].top[k] - 1], x[tabs[i].bottom[k] - 1]));
    y[i] = v;
  }
  return y;
}

PolyZ permute_vars(const PolyZ& f, const Perm& sigma) {
  PolyZ r(f.nvars());
  for (auto& [e, c] : f.terms()) {
    Exponent g{};
    for (int k = 0; k < 8; ++k) g[sigma[k] - 1] = std::uint8_t(g[sigma[k] - 1] + e[k]);
    r.add_term(g, c);
  }
  return r;
}

static bool integral_combination_equals(const std::vector<mpq_class>& c, const PolyZ& f) {
  mpz_class den = 1;
  for (auto& q : c) mpz_lcm(den.get_mpz_t(), den.get_mpz_t(), q.get_den_mpz_t());
  PolyZ lhs = f.scaled(den), rhs(8);
  auto& Y = specht_basis();
  for (int i = 0; i < 14; ++i) {
    mpz_class k = c[i].get_num() * (den / c[i].get_den());
    if (k != 0) rhs += Y[i].scaled(k);
  }
  return lhs == rhs;
}

std::optional<std::vector<mpq_class>> express_in_Y(const PolyZ& f, u64 prime, u64 seed) {
  if (f.nvars() != 8) throw std::invalid_argument("expected a polynomial in X1..X8");
  auto solver = [&](const PrimeField& F) -> std::optional<std::vector<u64>> {
    std::mt19937_64 rng(seed);
    const int pts = 24;
    PrimeFieldMatrix a(pts, 14);
    std::vector<u64> b(pts);
    for (int r = 0; r < pts; ++r) {
      auto x = random_point(rng, 8, F);
      auto y = eval_Y(x, F);
      std::copy(y.begin(), y.end(), a.row(r));
      b[r] = eval_mod(f, x, F);
    }
    return solve_mod_p(a, b, F);
  };
  return multimodular(solver, [&](const std::vector<mpq_class>& c) { return integral_combination_equals(c, f); },
                      prime, 6);
}

PolyZ combine_Y(const std::vector<mpq_class>& c) {
  PolyZ r(8);
  auto& Y = specht_basis();
  for (int i = 0; i < 14; ++i) {
    if (c[i] == 0) continue;
    if (c[i].get_den() != 1) throw std::invalid_argument("non-integral Y combination");
    r += Y[i].scaled(c[i].get_num());
  }
  return r;
}

int specht_span_dim(const PrimeField& F, u64 seed) {
  auto all = enumerate_tableaux().all;
  std::mt19937_64 rng(seed);
  const int pts = 40;
  std::vector<std::vector<u64>> xs;
  for (int r = 0; r < pts; ++r) xs.push_back(random_point(rng, 8, F));
  PrimeFieldMatrix m(int(all.size()), pts);
  for (std::size_t i = 0; i < all.size(); ++i)
    for (int r = 0; r < pts; ++r) {
      u64 v = 1;
      for (int k = 0; k < 4; ++k) v = F.mul(v, F.sub(xs[r][all[i].top[k] - 1], xs[r][all[i].bottom[k] - 1]));
      m.at(int(i), r) = v;
    }
  return rank_mod_p(std::move(m), F);
}

PolyZ substitute_Y(const PolyZ& in_y) {
  if (in_y.nvars() != 14) throw std::invalid_argument("expected a polynomial in Y1..Y14");
  return in_y.substitute(specht_basis());
}

std::vector<KoikeGenerator> load_koike(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open " + path);
  std::vector<KoikeGenerator> out;
  std::string line;
  while (std::getline(in, line)) {
    if (line.empty() || line[0] == '#') continue;
    auto eq = line.find('=');
    if (eq == std::string::npos) throw std::runtime_error("malformed generator line: " + line);
    out.push_back({line.substr(0, eq), parse_poly(line.substr(eq + 1), 14, "Y", 1)});
  }
  return out;
}

KoikeReport verify_koike(const std::vector<KoikeGenerator>& gens) {
  KoikeReport r;
  std::vector<std::string> xs;
  for (int k = 1; k <= 8; ++k) xs.push_back("X" + std::to_string(k));
  for (auto& g : gens) {
    ++r.total;
    PolyZ s = substitute_Y(g.poly);
    if (s.is_zero()) {
      ++r.vanishing;
      continue;
    }
    PolyZ first(8);
    auto it = s.terms().rbegin();
    first.add_term(it->first, it->second);
    r.failures.push_back(g.name + ": " + to_string(first, xs));
  }
  return r;
}

IntMat14 mat_identity() {
  IntMat14 m{};
  for (int i = 0; i < 14; ++i) m[i][i] = 1;
  return m;
}

IntMat14 mat_mul(const IntMat14& a, const IntMat14& b) {
  IntMat14 r{};
  for (int i = 0; i < 14; ++i)
    for (int k = 0; k < 14; ++k) {
      if (!a[i][k]) continue;
      for (int j = 0; j < 14; ++j) r[i][j] += a[i][k] * b[k][j];
    }
  return r;
}

IntMat14 y_rep(const Perm& sigma) {
  static std::map<Perm, IntMat14> cache;
  if (auto it = cache.find(sigma); it != cache.end()) return it->second;
  IntMat14 m{};
  auto& Y = specht_basis();
  for (int i = 0; i < 14; ++i) {
    auto c = express_in_Y(permute_vars(Y[i], sigma), kDefaultPrime, 0x5eed + i);
    if (!c) throw std::logic_error("permuted Specht polynomial left the span");
    for (int j = 0; j < 14; ++j) {
      if ((*c)[j].get_den() != 1) throw std::logic_error("non-integral Specht representation");
      m[j][i] = (*c)[j].get_num().get_si();
    }
  }
  cache.emplace(sigma, m);
  return m;
}

mpz_class howe_dim(int n) {
  mpz_class x = n;
  mpz_class v = x * x * x * x * x + 5 * x * x * x * x + 11 * x * x * x + 13 * x * x + 9 * x + 3;
  if (v % 3 != 0) throw std::logic_error("Howe numerator not divisible by 3");
  return v / 3;
}

// Sum over (i_1..i_n) with sum k*i_k = target of prod_k C(8 - i_1 - ... - i_{k-1}, i_k).
static mpz_class successive_binomials(int n, int target) {
  mpz_class total = 0;
  auto rec = [&](auto&& self, int k, int used, int weight, mpz_class acc) -> void {
    if (k > n) {
      if (weight == target) total += acc;
      return;
    }
    for (int i = 0; used + i <= 8 && weight + k * i <= target; ++i)
      self(self, k + 1, used + i, weight + k * i, acc * binomial(8 - used, i));
  };
  rec(rec, 1, 0, 0, mpz_class(1));
  return total;
}

mpz_class deconcini_dim(int n) {
  if (n == 0) return 1;
  return successive_binomials(n, 4 * n) - successive_binomials(n, 4 * n - 1);
}

mpz_class deconcini_by_counting(int n) {
  std::vector<mpz_class> ways(4 * n + 1, 0);
  ways[0] = 1;
  for (int coord = 0; coord < 8; ++coord) {
    std::vector<mpz_class> next(4 * n + 1, 0);
    for (int s = 0; s <= 4 * n; ++s)
      for (int v = 0; v <= n && s + v <= 4 * n; ++v) next[s + v] += ways[s];
    ways = std::move(next);
  }
  return ways[4 * n] - (n ? ways[4 * n - 1] : mpz_class(0));
}

GradedDim graded_dim_config(int n, const PrimeField& F, u64 seed) {
  GradedDim g;
  g.n = n;
  auto mons = monomials_of_degree(14, n);
  g.monomials = int(mons.size());
  int rows = std::min<long>(g.monomials, howe_dim(n).get_si() + 20);
  std::mt19937_64 rng(seed);
  for (;;) {
    PrimeFieldMatrix m(rows, g.monomials);
    for (int r = 0; r < rows; ++r) {
      auto y = eval_Y(random_point(rng, 8, F), F);
      std::array<std::vector<u64>, 14> pw;
      for (int i = 0; i < 14; ++i) {
        pw[i].assign(n + 1, 1);
        for (int k = 1; k <= n; ++k) pw[i][k] = F.mul(pw[i][k - 1], y[i]);
      }
      u64* row = m.row(r);
      for (int c = 0; c < g.monomials; ++c) {
        u64 v = 1;
        for (int i = 0; i < 14; ++i)
          if (mons[c][i]) v = F.mul(v, pw[i][mons[c][i]]);
        row[c] = v;
      }
    }
    g.rank = rank_mod_p(std::move(m), F);
    g.points = rows;
    if (g.rank < rows || rows == g.monomials) return g;
    rows = std::min(g.monomials, rows * 2);
  }
}

}  // namespace h8
