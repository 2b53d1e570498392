#include "h8/thomae.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>
#include <stdexcept>
#include <unordered_map>

#include "h8/specht.hpp"

namespace h8 {

std::string SignedMonomial::str() const {
  if (!sign) return "0";
  std::string s = sign > 0 ? "+" : "-";
  for (auto [i, j] : factors) s += " " + std::to_string(i) + std::to_string(j);
  return s;
}

SignedMonomial normalize(int sign, std::vector<Pair> oriented) {
  SignedMonomial d;
  if (!sign) return d;
  for (auto& [i, j] : oriented)
    if (i > j) {
      std::swap(i, j);
      sign = -sign;
    }
  std::sort(oriented.begin(), oriented.end());
  d.sign = sign;
  d.factors = std::move(oriented);
  return d;
}

SignedMonomial d_of_subset(Subset8 t) {
  Subset8 v = circ(t, kU);
  if (popcount8(v) != 4) return {};
  int sign = e_sign(char_of_subset(t), kMEmpty) * (popcount8(Subset8(t & kU)) % 2 ? -1 : 1);
  std::vector<Pair> f;
  for (int i = 1; i <= 8; ++i)
    for (int j = i + 1; j <= 8; ++j) {
      bool vi = v >> (i - 1) & 1, vj = v >> (j - 1) & 1;
      if (vi == vj) f.push_back({i, j});
      else if (vj) sign = -sign;  // Delta holds W_ij but the divisor is W_ji
    }
  return normalize(sign, f);
}

static const std::array<SignedMonomial, 64>& d_table() {
  static const std::array<SignedMonomial, 64> t = [] {
    std::array<SignedMonomial, 64> r{};
    for (Char m : even_chars()) r[m] = d_of_subset(subset_of_char(m));
    return r;
  }();
  return t;
}

SignedMonomial d_of_char(Char m) {
  if (q_form(m)) throw std::invalid_argument("D is defined on even characteristics only");
  return d_table()[m];
}

SignedMonomial permute(const SignedMonomial& d, const Perm& sigma) {
  std::vector<Pair> f;
  for (auto [i, j] : d.factors) f.push_back({sigma[i - 1], sigma[j - 1]});
  return normalize(d.sign, f);
}

PolyZ expand(const SignedMonomial& d) {
  PolyZ r = PolyZ::constant(8, d.sign);
  for (auto [i, j] : d.factors) r = r * (PolyZ::variable(8, i - 1) - PolyZ::variable(8, j - 1));
  return r;
}

u64 eval(const SignedMonomial& d, const std::vector<u64>& x, const PrimeField& F) {
  if (!d.sign) return 0;
  u64 v = 1;
  for (auto [i, j] : d.factors) v = F.mul(v, F.sub(x[i - 1], x[j - 1]));
  return d.sign > 0 ? v : F.neg(v);
}

std::array<u64, 64> eval_all(const std::vector<u64>& x, const PrimeField& F) {
  std::array<u64, 64> out{};
  for (Char m : even_chars()) out[m] = eval(d_table()[m], x, F);
  return out;
}

std::vector<TableRow> load_thomae_table(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open " + path);
  std::vector<TableRow> rows;
  std::string line;
  while (std::getline(in, line)) {
    if (line.empty() || line[0] == '#') continue;
    std::istringstream ls(line);
    std::string bits, sign;
    ls >> bits >> sign;
    if (bits.size() != 6) throw std::runtime_error("bad characteristic in table: " + line);
    TableRow r;
    for (int k = 0; k < 6; ++k) r.m = Char(r.m << 1 | (bits[k] - '0'));
    std::string p;
    std::vector<Pair> f;
    while (ls >> p) f.push_back({p[0] - '0', p[1] - '0'});
    int s = sign == "+" ? 1 : sign == "-" ? -1 : 0;
    r.d.sign = s;
    r.d.factors = f;
    rows.push_back(r);
  }
  return rows;
}

TableReport verify_table(const std::vector<TableRow>& golden) {
  TableReport r;
  for (auto& row : golden) {
    if (!row.m) continue;
    ++r.rows;
    SignedMonomial d = d_of_char(row.m);
    if (d == row.d) ++r.matched;
    else r.diffs.push_back(char_bits(row.m) + ": expected " + row.d.str() + ", got " + d.str());
  }
  return r;
}

SupportReport support_law() {
  SupportReport r;
  for (Char m : even_chars()) {
    if (!m) continue;
    auto d = d_of_char(m);
    if (d.factors.size() != 12) r.twelve_factors = false;
    for (int i = 1; i <= 8; ++i)
      for (int j = i + 1; j <= 8; ++j) {
        ++r.checks;
        bool present = std::find(d.factors.begin(), d.factors.end(), Pair{i, j}) != d.factors.end();
        bool orth = !bilinear(m, t_ij_char(i, j));
        if (present == orth) ++r.passed;
        else if (r.counterexample.empty())
          r.counterexample = char_to_string(m) + " W" + std::to_string(i) + std::to_string(j);
      }
  }
  return r;
}

EquivarianceReport equivariance(const Perm& sigma) {
  EquivarianceReport r;
  int ratio = 0;
  for (Char m : even_chars()) {
    if (!m) continue;
    SignedMonomial lhs = permute(d_of_char(m), sigma), rhs = d_of_char(act(sigma, m));
    if (lhs.factors != rhs.factors || !rhs.sign) {
      r.verdict = Equivariance::Broken;
      r.mismatch = "factor sets differ at " + char_to_string(m);
      return r;
    }
    int k = lhs.sign * rhs.sign;
    if (ratio && k != ratio) {
      r.verdict = Equivariance::Broken;
      r.mismatch = "sign ratio not constant at " + char_to_string(m);
      return r;
    }
    ratio = k;
  }
  r.sign_character = ratio;
  r.verdict = ratio == 1 ? Equivariance::Exact : Equivariance::UpToSign;
  return r;
}

bool well_defined_on_complements(std::string* witness) {
  for (Subset8 t : even_subsets())
    if (!(d_of_subset(t) == d_of_subset(Subset8(~t)))) {
      if (witness) *witness = subset_to_string(t);
      return false;
    }
  return true;
}

PolyZ sum_of_all_D() {
  PolyZ s(8);
  for (Char m : even_chars()) s += expand(d_of_char(m));
  return s;
}

// ---- cubic representatives ----

const std::vector<Exponent>& cubic_monomials() {
  static const std::vector<Exponent> v = monomials_of_degree(14, 3);
  return v;
}

PolyZ cubic_to_poly(const std::vector<mpq_class>& c) {
  PolyZ r(14);
  auto& mons = cubic_monomials();
  for (std::size_t k = 0; k < mons.size(); ++k) {
    if (c[k] == 0) continue;
    if (c[k].get_den() != 1) throw std::invalid_argument("non-integral cubic coefficient");
    r.add_term(mons[k], c[k].get_num());
  }
  return r;
}

namespace {

using Packed = std::vector<std::pair<u64, mpz_class>>;

u64 pack(const Exponent& e) {
  u64 k = 0;
  for (int i = 0; i < 8; ++i) k |= u64(e[i]) << (8 * i);
  return k;
}

const Packed& cubic_expansion(std::size_t k) {
  static std::vector<std::optional<Packed>> cache(cubic_monomials().size());
  if (!cache[k]) {
    auto& Y = specht_basis();
    PolyZ p = PolyZ::constant(8, 1);
    auto& e = cubic_monomials()[k];
    for (int i = 0; i < 14; ++i)
      for (int r = 0; r < e[i]; ++r) p = p * Y[i];
    Packed out;
    for (auto& [ex, c] : p.terms()) out.push_back({pack(ex), c});
    cache[k] = std::move(out);
  }
  return *cache[k];
}

}  // namespace

bool cubic_reexpands_to(const std::vector<mpq_class>& c, const SignedMonomial& d) {
  if (c.size() != cubic_monomials().size()) return false;
  mpz_class den = 1;
  for (auto& q : c) mpz_lcm(den.get_mpz_t(), den.get_mpz_t(), q.get_den_mpz_t());
  std::unordered_map<u64, mpz_class> acc;
  PolyZ target = expand(d);
  for (auto& [e, v] : target.terms()) acc[pack(e)] -= v * den;
  for (std::size_t k = 0; k < c.size(); ++k) {
    if (c[k] == 0) continue;
    mpz_class w = c[k].get_num() * (den / c[k].get_den());
    for (auto& [key, v] : cubic_expansion(k)) acc[key] += w * v;
  }
  for (auto& [key, v] : acc)
    if (v != 0) return false;
  return true;
}

std::optional<std::vector<mpq_class>> cubic_in_Y(Char m, u64 prime, u64 seed) {
  if (q_form(m)) throw std::invalid_argument("cubic representative needs an even characteristic");
  auto& mons = cubic_monomials();
  int n = int(mons.size());
  if (!m) return std::vector<mpq_class>(n, 0);
  SignedMonomial d = d_of_char(m);
  auto solver = [&](const PrimeField& F) -> std::optional<std::vector<u64>> {
    std::mt19937_64 rng(seed);
    const int pts = n + 40;
    PrimeFieldMatrix a(pts, n);
    std::vector<u64> b(pts);
    for (int r = 0; r < pts; ++r) {
      auto x = random_point(rng, 8, F);
      auto y = eval_Y(x, F);
      u64* row = a.row(r);
      for (int k = 0; k < n; ++k) {
        u64 v = 1;
        for (int i = 0; i < 14; ++i)
          for (int t = 0; t < mons[k][i]; ++t) v = F.mul(v, y[i]);
        row[k] = v;
      }
      b[r] = eval(d, x, F);
    }
    return solve_mod_p(a, b, F);
  };
  return multimodular(solver, [&](const std::vector<mpq_class>& c) { return cubic_reexpands_to(c, d); }, prime, 8);
}

PolyZ factored_cubic() {
  return parse_poly("Y1-Y10+Y11-Y14", 14, "Y", 1) * parse_poly("Y1-Y2-Y6+Y7+Y8-Y9+Y11-Y13", 14, "Y", 1) *
         parse_poly("Y8-Y9", 14, "Y", 1);
}

}  // namespace h8
