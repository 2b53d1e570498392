#include "h8/runge.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <map>
#include <numbers>
#include <sstream>
#include <stdexcept>

namespace h8 {

Gauss operator+(const Gauss& a, const Gauss& b) { return {a.re + b.re, a.im + b.im}; }
Gauss operator*(const Gauss& a, const Gauss& b) {
  return {a.re * b.re - a.im * b.im, a.re * b.im + a.im * b.re};
}

std::string GaussMatrix::key() const {
  std::string k;
  for (auto& row : e)
    for (auto& x : row) k += x.re.get_str() + "," + x.im.get_str() + ";";
  return k;
}

GaussMatrix operator*(const GaussMatrix& a, const GaussMatrix& b) {
  GaussMatrix r;
  for (int i = 0; i < 8; ++i)
    for (int k = 0; k < 8; ++k) {
      const Gauss& x = a.e[i][k];
      if (x.re == 0 && x.im == 0) continue;
      for (int j = 0; j < 8; ++j) r.e[i][j] = r.e[i][j] + x * b.e[k][j];
    }
  return r;
}

GaussMatrix scalar_matrix(const Gauss& c) {
  GaussMatrix m;
  for (int i = 0; i < 8; ++i) m.e[i][i] = c;
  return m;
}

GaussMatrix gauss_identity() { return scalar_matrix({1, 0}); }

GaussMatrix conjugate_transpose(const GaussMatrix& m) {
  GaussMatrix r;
  for (int i = 0; i < 8; ++i)
    for (int j = 0; j < 8; ++j) r.e[i][j] = {m.e[j][i].re, -m.e[j][i].im};
  return r;
}

int dot3(int a, int b) { return std::popcount(unsigned(a & b)) & 1; }

static GaussMatrix hadamard_times(const Gauss& c) {
  GaussMatrix m;
  for (int a = 0; a < 8; ++a)
    for (int b = 0; b < 8; ++b) m.e[a][b] = dot3(a, b) ? Gauss{-c.re, -c.im} : c;
  return m;
}

GaussMatrix s_tilde() {
  Gauss h{mpq_class(1, 2), mpq_class(1, 2)};
  return hadamard_times(h * h * h);
}

GaussMatrix s_tilde_inverse() {
  // H^2 = 8E, so the inverse is H scaled by 1/(8c)
  Gauss h{mpq_class(1, 2), mpq_class(1, 2)};
  Gauss c = h * h * h;
  mpq_class n = c.re * c.re + c.im * c.im;
  return hadamard_times({c.re / (n * 8), -c.im / (n * 8)});
}

GaussMatrix t_tilde(const std::array<int, 3>& diag) {
  static const Gauss ipow[4] = {{1, 0}, {0, 1}, {-1, 0}, {0, -1}};
  GaussMatrix m;
  for (int a = 0; a < 8; ++a) {
    int s = 0;
    for (int k = 0; k < 3; ++k)
      if (a >> (2 - k) & 1) s += diag[k];
    m.e[a][a] = ipow[((s % 4) + 4) % 4];
  }
  return m;
}

Closure closure(const std::vector<GaussMatrix>& gens, std::size_t cap) {
  Closure c;
  std::map<std::string, std::size_t> seen;
  c.elements.push_back(gauss_identity());
  seen[c.elements[0].key()] = 0;
  for (std::size_t k = 0; k < c.elements.size(); ++k)
    for (auto& g : gens) {
      GaussMatrix n = c.elements[k] * g;
      auto key = n.key();
      if (seen.count(key)) continue;
      if (c.elements.size() >= cap) {
        c.capped = true;
        return c;
      }
      seen[key] = c.elements.size();
      c.elements.push_back(std::move(n));
    }
  return c;
}

bool member(const Closure& g, const GaussMatrix& m) {
  return std::find(g.elements.begin(), g.elements.end(), m) != g.elements.end();
}

std::vector<GaussMatrix> n3_prime_generators() {
  std::vector<GaussMatrix> gens;
  GaussMatrix s = s_tilde(), si = s_tilde_inverse();
  for (int k = 0; k < 3; ++k) {
    std::array<int, 3> d{};
    d[k] = 2;
    GaussMatrix t = t_tilde(d);
    gens.push_back(t);
    gens.push_back(si * t * s);
  }
  return gens;
}

RungeReport runge_groups() {
  RungeReport r;
  auto gens = n3_prime_generators();
  Closure n3p = closure(gens);
  GaussMatrix ie = scalar_matrix({0, 1}), me = scalar_matrix({-1, 0});
  auto with_i = gens;
  with_i.push_back(ie);
  Closure n3 = closure(with_i);
  auto rev = gens;
  std::reverse(rev.begin(), rev.end());
  Closure n3p_rev = closure(rev);
  r.capped = n3p.capped || n3.capped || n3p_rev.capped;
  r.order_n3_prime = int(n3p.elements.size());
  r.order_n3 = int(n3.elements.size());
  r.minus_e_in = member(n3p, me);
  r.i_e_in = member(n3p, ie);
  r.i_e_in_n3 = member(n3, ie);
  r.order_stable = n3p_rev.elements.size() == n3p.elements.size();
  return r;
}

std::optional<PolyZ> transform(const PolyZ& f, const GaussMatrix& g) {
  std::vector<PolyZ> subs;
  for (int b = 0; b < 8; ++b) {
    PolyZ lin(8);
    for (int c = 0; c < 8; ++c) {
      const Gauss& x = g.e[b][c];
      if (x.im != 0 || x.re.get_den() != 1) return std::nullopt;
      if (x.re != 0) lin += PolyZ::variable(8, c).scaled(x.re.get_num());
    }
    subs.push_back(lin);
  }
  return f.substitute(subs);
}

PolyZ load_f_poly(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open " + path);
  std::string line, text;
  while (std::getline(in, line))
    if (!line.empty() && line[0] != '#') text += line;
  return parse_poly(text, 8, "F_", 0);
}

InvarianceReport invariance_PQ(const PolyZ& p, const PolyZ& q) {
  InvarianceReport r;
  r.q_terms = int(q.size());
  r.q_degree = q.degree();
  auto gens = n3_prime_generators();
  for (std::size_t k = 0; k < gens.size(); ++k) {
    ++r.generators;
    auto tp = transform(p, gens[k]), tq = transform(q, gens[k]);
    if (tp && *tp == p) ++r.p_invariant;
    else if (r.mismatch.empty()) r.mismatch = "P under generator " + std::to_string(k);
    if (tq && *tq == q) ++r.q_invariant;
    else if (r.mismatch.empty()) r.mismatch = "Q under generator " + std::to_string(k);
  }
  GaussMatrix flip = gauss_identity();
  flip.e[0][0] = {-1, 0};
  auto tq = transform(q, flip);
  r.control_changes_q = tq && *tq != q;
  r.control_outside_group = !member(closure(gens), flip);
  return r;
}

// ---- numerics ----

bool SiegelPoint::valid() const {
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j)
      if (z[i][j] != z[j][i]) return false;
  return min_imag_eig() > 0;
}

double SiegelPoint::min_imag_eig() const {
  // closed form for the eigenvalues of a real symmetric 3x3 matrix
  double a[3][3];
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) a[i][j] = z[i][j].imag();
  double p1 = a[0][1] * a[0][1] + a[0][2] * a[0][2] + a[1][2] * a[1][2];
  double q = (a[0][0] + a[1][1] + a[2][2]) / 3;
  if (p1 == 0) return std::min({a[0][0], a[1][1], a[2][2]});
  double p2 = (a[0][0] - q) * (a[0][0] - q) + (a[1][1] - q) * (a[1][1] - q) + (a[2][2] - q) * (a[2][2] - q) + 2 * p1;
  double p = std::sqrt(p2 / 6);
  double b[3][3];
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) b[i][j] = (a[i][j] - (i == j ? q : 0)) / p;
  double det = b[0][0] * (b[1][1] * b[2][2] - b[1][2] * b[2][1]) - b[0][1] * (b[1][0] * b[2][2] - b[1][2] * b[2][0]) +
               b[0][2] * (b[1][0] * b[2][1] - b[1][1] * b[2][0]);
  double phi = std::acos(std::clamp(det / 2, -1.0, 1.0)) / 3;
  return q + 2 * p * std::cos(phi + 2 * std::numbers::pi / 3);
}

SiegelPoint random_siegel(std::mt19937_64& rng) {
  std::uniform_real_distribution<double> re(-0.5, 0.5), im(-0.15, 0.15);
  SiegelPoint s;
  for (int i = 0; i < 3; ++i)
    for (int j = i; j < 3; ++j) {
      double x = re(rng), y = (i == j ? 1.0 : 0.0) + im(rng);
      s.z[i][j] = s.z[j][i] = {x, y};
    }
  return s;
}

SiegelPoint i_identity() {
  SiegelPoint s;
  for (int i = 0; i < 3; ++i) s.z[i][i] = {0, 1};
  return s;
}

namespace {

// Bound on sum over n with max-norm > radius of exp(-scale * pi * lambda * |n + shift|^2), |shift| <= 1/2.
double gaussian_tail(double lambda, double scale, int radius) {
  double t = 0;
  for (int k = radius + 1; k < radius + 400; ++k) {
    double r = k - 0.5;
    t += (24.0 * k * k + 2) * std::exp(-scale * std::numbers::pi * lambda * r * r);
  }
  return t;
}

cplx quad(const CMat3& z, const double v[3]) {
  cplx s = 0;
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) s += z[i][j] * (v[i] * v[j]);
  return s;
}

}  // namespace

Approx theta_eval(Char m, const SiegelPoint& z, int radius) {
  if (radius < 1) throw std::invalid_argument("radius must be at least 1");
  double mp[3], mpp[3];
  for (int k = 0; k < 3; ++k) {
    mp[k] = (m >> (5 - k)) & 1;
    mpp[k] = (m >> (2 - k)) & 1;
  }
  cplx s = 0;
  const cplx ipi(0, std::numbers::pi);
  for (int a = -radius; a <= radius; ++a)
    for (int b = -radius; b <= radius; ++b)
      for (int c = -radius; c <= radius; ++c) {
        double v[3] = {a + mp[0] / 2, b + mp[1] / 2, c + mp[2] / 2};
        s += std::exp(ipi * (quad(z.z, v) + (v[0] * mpp[0] + v[1] * mpp[1] + v[2] * mpp[2])));
      }
  return {s, gaussian_tail(z.min_imag_eig(), 1, radius)};
}

Approx f_eval(int a, const SiegelPoint& z, int radius) {
  if (radius < 1) throw std::invalid_argument("radius must be at least 1");
  double h[3] = {double((a >> 2) & 1) / 2, double((a >> 1) & 1) / 2, double(a & 1) / 2};
  cplx s = 0;
  const cplx i2pi(0, 2 * std::numbers::pi);
  for (int x = -radius; x <= radius; ++x)
    for (int y = -radius; y <= radius; ++y)
      for (int w = -radius; w <= radius; ++w) {
        double v[3] = {x + h[0], y + h[1], w + h[2]};
        s += std::exp(i2pi * quad(z.z, v));
      }
  return {s, gaussian_tail(z.min_imag_eig(), 2, radius)};
}

double one_dim_theta(int radius) {
  double s = 1;
  for (int n = radius; n >= 1; --n) s += 2 * std::exp(-std::numbers::pi * n * n);
  return s;
}

NumericBasics numeric_basics(int points, int radius, u64 seed) {
  NumericBasics r;
  std::mt19937_64 rng(seed);
  for (int p = 0; p < points; ++p) {
    auto z = random_siegel(rng);
    for (Char m : odd_chars()) r.odd_max = std::max(r.odd_max, std::abs(theta_eval(m, z, radius).value));
    for (Char m : {Char(0), Char(1), Char(63)}) {
      auto lo = theta_eval(m, z, radius / 2), hi = theta_eval(m, z, radius);
      if (std::abs(lo.value - hi.value) > lo.tail + 1e-12 * std::abs(hi.value)) r.doubling_within_tail = false;
    }
  }
  double t = one_dim_theta(radius);
  r.identity_rel_err = std::abs(theta_eval(0, i_identity(), radius).value - t * t * t) / (t * t * t);
  return r;
}

DuplicationReport duplication_check(int points, int radius, u64 seed, double tol) {
  DuplicationReport r;
  std::mt19937_64 rng(seed);
  for (int p = 0; p < points; ++p) {
    auto z = random_siegel(rng);
    std::array<cplx, 8> f;
    for (int a = 0; a < 8; ++a) f[a] = f_eval(a, z, radius).value;
    std::array<cplx, 64> th2{};
    for (Char m = 0; m < 64; ++m) {
      cplx t = theta_eval(m, z, radius).value;
      th2[m] = t * t;
    }
    for (Char m : even_chars()) {
      int mp = m >> 3, mpp = m & 7;
      cplx printed = 0, variant = 0;
      for (int a = 0; a < 8; ++a) {
        cplx term = f[mp ^ a] * f[a];
        printed += dot3(mp, mpp) ? -term : term;
        variant += dot3(a, mpp) ? -term : term;
      }
      double scale = std::max(std::abs(th2[m]), 1e-300);
      r.printed_residual = std::max(r.printed_residual, std::abs(th2[m] - printed) / scale);
      r.variant_residual = std::max(r.variant_residual, std::abs(th2[m] - variant) / scale);
      r.sign_gap = std::max(r.sign_gap, std::abs(printed - variant) / scale);
    }
    for (int a = 0; a < 8; ++a)
      for (int b = 0; b < 8; ++b) {
        cplx s = 0;
        for (int c = 0; c < 8; ++c) s += (dot3(a, c) ? -1.0 : 1.0) * th2[((a ^ b) << 3) | c];
        s /= 8.0;
        cplx lhs = f[a] * f[b];
        r.second_formula_residual = std::max(r.second_formula_residual, std::abs(lhs - s) / std::abs(lhs));
      }
  }
  bool pv = r.printed_residual < tol, vv = r.variant_residual < tol;
  r.matching = pv && vv ? "both" : pv ? "printed" : vv ? "variant" : "neither";
  return r;
}

SchottkyFit schottky_numeric_fit(int points, int radius, u64 seed) {
  SchottkyFit r;
  std::mt19937_64 rng(seed);
  for (int p = 0; p < points; ++p) {
    auto z = random_siegel(rng);
    cplx s8 = 0, s16 = 0;
    for (Char m : even_chars()) {
      cplx t = theta_eval(m, z, radius).value;
      cplx t8 = std::pow(t, 8);
      s8 += t8;
      s16 += t8 * t8;
    }
    r.ratios.push_back(std::abs(s8 * s8 / s16));
    r.residual_at_eight = std::max(r.residual_at_eight, std::abs(s8 * s8 - 8.0 * s16) / std::abs(s8 * s8));
  }
  double lo = *std::min_element(r.ratios.begin(), r.ratios.end());
  double hi = *std::max_element(r.ratios.begin(), r.ratios.end());
  for (double x : r.ratios) r.mean += x;
  r.mean /= double(r.ratios.size());
  r.spread = (hi - lo) / r.mean;
  return r;
}

}  // namespace h8
