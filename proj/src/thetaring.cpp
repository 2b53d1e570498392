#include "h8/thetaring.hpp"

#include <algorithm>
#include <bit>
#include <fstream>
#include <map>
#include <set>
#include <sstream>
#include <stdexcept>

namespace h8 {

SubspaceDigitList load_theta_subspaces(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open " + path);
  SubspaceDigitList out;
  std::string line;
  while (std::getline(in, line)) {
    if (line.empty() || line[0] == '#') continue;
    auto colon = line.find(':');
    if (colon == std::string::npos) throw std::runtime_error("malformed subspace line: " + line);
    std::istringstream ls(line.substr(colon + 1));
    std::array<int, 7> d{};
    CharSet s = 0;
    for (int k = 0; k < 7; ++k) {
      if (!(ls >> d[k]) || d[k] < 1 || d[k] > 63) throw std::runtime_error("bad digit in: " + line);
      s |= CharSet(1) << d[k];
    }
    out.digits.push_back(d);
    out.sets.push_back(s);
  }
  return out;
}

const std::vector<Char>& theta1_display() {
  // rows of the printed 3x2 matrices, read column-wise
  static const std::vector<Char> v = [] {
    std::vector<Char> r;
    for (const char* rows : {"01 01 00", "00 00 10", "01 01 10", "10 10 00", "11 11 00", "10 10 10", "11 11 10"})
      r.push_back(make_char(rows[0] - '0', rows[3] - '0', rows[6] - '0', rows[1] - '0', rows[4] - '0', rows[7] - '0'));
    return r;
  }();
  return v;
}

DecodeReport decode_check(const SubspaceDigitList& a) {
  DecodeReport r;
  r.count = int(a.sets.size());
  for (std::size_t i = 0; i < a.sets.size(); ++i) {
    if (!std::is_sorted(a.digits[i].begin(), a.digits[i].end())) r.digits_sorted = false;
    auto ms = members(a.sets[i]);
    Subspace s = span(ms);
    if (set_size(a.sets[i]) != 7 || s.dim != 3 || !s.singular || s.members != (a.sets[i] | 1)) {
      r.all_subspaces = false;
      if (r.error.empty()) r.error = "A" + std::to_string(i + 1) + " is not a maximal singular subspace";
    }
    for (std::size_t j = i + 1; j < a.sets.size(); ++j) {
      int k = set_size(a.sets[i] & a.sets[j]) + 1;  // 2^dim
      if (std::countr_zero(unsigned(k)) % 2 == 0) r.one_class = false;  // projective dimension must be even
    }
  }
  if (!a.sets.empty()) {
    CharSet t1 = 0;
    for (Char m : theta1_display()) t1 |= CharSet(1) << m;
    r.theta1_matches = t1 == a.sets[0];
    CharSet a15 = 0;
    for (Char m = 1; m < 8; ++m) a15 |= CharSet(1) << m;
    r.a15_matches = a.sets.back() == a15;
  }
  return r;
}

std::array<u64, 15> thetas_from_d(const std::vector<CharSet>& a, const std::array<u64, 64>& d, const PrimeField& F) {
  std::array<u64, 15> t{};
  for (std::size_t i = 0; i < a.size() && i < 15; ++i)
    for (Char m : members(a[i])) t[i] = F.add(t[i], d[m]);
  return t;
}

std::array<u64, 15> eval_thetas(const std::vector<CharSet>& a, const std::vector<u64>& x, const PrimeField& F) {
  return thetas_from_d(a, eval_all(x, F), F);
}

Weight2Report weight2_structure(const std::vector<CharSet>& a, const PrimeField& F, u64 seed) {
  Weight2Report r;
  std::mt19937_64 rng(seed);
  const int pts = 40;
  PrimeFieldMatrix m(pts, 15);
  for (int i = 0; i < pts; ++i) {
    auto t = eval_thetas(a, random_point(rng, 8, F), F);
    std::copy(t.begin(), t.end(), m.row(i));
  }
  Echelon e = rref_mod_p(m, F);
  r.rank = e.rank;
  if (e.rank == 14) {
    std::vector<bool> piv(15, false);
    for (int c : e.pivots) piv[c] = true;
    int free = int(std::find(piv.begin(), piv.end(), false) - piv.begin());
    std::vector<u64> v(15, 0);
    v[free] = 1;
    for (int k = 0; k < e.rank; ++k) v[e.pivots[k]] = F.neg(e.reduced.at(k, free));
    r.kernel_is_ones = std::all_of(v.begin(), v.end(), [](u64 x) { return x == 1; });
  }
  for (Char m : even_chars()) {
    if (!m) continue;
    int c = 0;
    for (CharSet s : a) c += contains(s, m);
    if (c != 3) r.incidence_three = false;
  }
  PolyZ sum(8);
  for (CharSet s : a)
    for (Char m : members(s)) sum += expand(d_of_char(m));
  r.sum_vanishes = sum.is_zero();
  return r;
}

namespace {

const PolyZ& expanded_d(Char m) {
  static std::array<std::optional<PolyZ>, 64> cache;
  if (!cache[m]) cache[m] = expand(d_of_char(m));
  return *cache[m];
}

// Rows: D(Theta_i) at random points; right-hand side D_m.
std::optional<std::vector<u64>> solve_theta4(const std::vector<CharSet>& a, Char m, const PrimeField& F, u64 seed) {
  std::mt19937_64 rng(seed);
  const int pts = 30;
  PrimeFieldMatrix mat(pts, 15);
  std::vector<u64> b(pts);
  for (int i = 0; i < pts; ++i) {
    auto x = random_point(rng, 8, F);
    auto d = eval_all(x, F);
    auto t = thetas_from_d(a, d, F);
    std::copy(t.begin(), t.end(), mat.row(i));
    b[i] = d[m];
  }
  return solve_mod_p(mat, b, F);
}

}  // namespace

std::optional<std::vector<mpq_class>> theta4_in_Theta(const std::vector<CharSet>& a, Char m, u64 prime, u64 seed) {
  if (q_form(m)) throw std::invalid_argument("theta4_in_Theta needs an even characteristic");
  if (!m) return std::vector<mpq_class>(15, 0);
  auto accept = [&](const std::vector<mpq_class>& c) {
    mpz_class den = 1;
    for (auto& q : c) mpz_lcm(den.get_mpz_t(), den.get_mpz_t(), q.get_den_mpz_t());
    PolyZ lhs(8);
    for (int i = 0; i < 15; ++i) {
      if (c[i] == 0) continue;
      mpz_class k = c[i].get_num() * (den / c[i].get_den());
      for (Char n : members(a[i])) lhs += expanded_d(n).scaled(k);
    }
    return lhs == expanded_d(m).scaled(den);
  };
  return multimodular([&](const PrimeField& F) { return solve_theta4(a, m, F, seed); }, accept, prime, 6);
}

std::array<std::array<u64, 15>, 64> theta4_mod_p(const std::vector<CharSet>& a, const PrimeField& F, u64 seed) {
  std::array<std::array<u64, 15>, 64> out{};
  for (Char m : even_chars()) {
    if (!m) continue;
    auto s = solve_theta4(a, m, F, seed);
    if (!s) throw std::logic_error("D_m outside the span of the Theta images");
    std::copy(s->begin(), s->end(), out[m].begin());
  }
  return out;
}

// ---- cubic relation ----

ThetaCubic canonical(ThetaCubic c) {
  std::map<std::array<int, 3>, mpz_class> acc;
  for (auto& t : c) {
    auto idx = t.idx;
    std::sort(idx.begin(), idx.end());
    acc[idx] += t.coef;
  }
  ThetaCubic out;
  for (auto& [idx, k] : acc)
    if (k != 0) out.push_back({k, idx});
  return out;
}

ThetaCubic load_cubic_relation(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open " + path);
  ThetaCubic c;
  std::string line;
  while (std::getline(in, line)) {
    if (line.empty() || line[0] == '#') continue;
    std::istringstream ls(line);
    std::string coef;
    CubicTerm t;
    if (!(ls >> coef >> t.idx[0] >> t.idx[1] >> t.idx[2])) throw std::runtime_error("malformed cubic term: " + line);
    for (int i : t.idx)
      if (i < 1 || i > 15) throw std::runtime_error("Theta index out of range: " + line);
    t.coef = mpz_class(coef[0] == '+' ? coef.substr(1) : coef);
    c.push_back(t);
  }
  return canonical(c);
}

u64 eval_cubic(const ThetaCubic& c, const std::array<u64, 15>& theta, const PrimeField& F) {
  u64 s = 0;
  for (auto& t : c) {
    u64 v = F.mul(F.mul(theta[t.idx[0] - 1], theta[t.idx[1] - 1]), theta[t.idx[2] - 1]);
    s = F.add(s, F.mul(v, F.from_mpz(t.coef)));
  }
  return s;
}

ThetaCubic relabel(const ThetaCubic& c, const std::array<int, 15>& pi) {
  ThetaCubic out;
  for (auto& t : c) out.push_back({t.coef, {pi[t.idx[0] - 1] + 1, pi[t.idx[1] - 1] + 1, pi[t.idx[2] - 1] + 1}});
  return canonical(out);
}

std::optional<std::array<int, 15>> induced_theta_perm(const std::vector<CharSet>& a, const Perm& sigma) {
  std::array<int, 15> pi{};
  for (int i = 0; i < 15; ++i) {
    CharSet img = 0;
    for (Char m : members(a[i])) img |= CharSet(1) << act(sigma, m);
    auto it = std::find(a.begin(), a.end(), img);
    if (it == a.end()) return std::nullopt;
    pi[i] = int(it - a.begin());
  }
  return pi;
}

namespace {

// Rank of a family of cubics in Theta_1..Theta_14 after eliminating Theta_15 = -(sum of the others).
int cubic_span_dim(const std::vector<ThetaCubic>& family, const PrimeField& F, u64 seed) {
  const int pts = 600;
  std::mt19937_64 rng(seed);
  PrimeFieldMatrix m(int(family.size()), pts);
  for (int p = 0; p < pts; ++p) {
    auto v = random_point(rng, 14, F);
    std::array<u64, 15> t{};
    u64 s = 0;
    for (int i = 0; i < 14; ++i) {
      t[i] = v[i];
      s = F.add(s, v[i]);
    }
    t[14] = F.neg(s);
    for (std::size_t k = 0; k < family.size(); ++k) m.at(int(k), p) = eval_cubic(family[k], t, F);
  }
  return rank_mod_p(std::move(m), F);
}

}  // namespace

CubicSuiteReport cubic_relation_suite(const std::vector<CharSet>& a, const ThetaCubic& c, const PrimeField& F,
                                      int trials, u64 seed) {
  CubicSuiteReport r;
  r.image = pit_is_zero([&](const std::vector<u64>& x) { return eval_cubic(c, eval_thetas(a, x, F), F); }, 8, 36,
                        trials, seed, F);

  ThetaCubic mutated = c;
  mutated.front().coef += 1;
  r.mutation_caught = !pit_is_zero([&](const std::vector<u64>& x) { return eval_cubic(mutated, eval_thetas(a, x, F), F); },
                                   8, 36, trials, seed + 1, F)
                           .zero;

  // (1 2 3) and (2 3 4 5 6 7 8) generate the even permutations of 8 letters.
  Perm g1 = identity_perm(), g2 = identity_perm();
  g1[0] = 2, g1[1] = 3, g1[2] = 1;
  for (int k = 1; k < 8; ++k) g2[k] = k == 7 ? 2 : k + 2;
  std::vector<std::array<int, 15>> gens;
  r.even_perms_preserve = true;
  for (auto& g : {g1, g2}) {
    auto pi = induced_theta_perm(a, g);
    if (!pi) {
      r.even_perms_preserve = false;
      return r;
    }
    gens.push_back(*pi);
  }
  r.odd_perms_swap_classes = !induced_theta_perm(a, transposition(1, 2)).has_value();

  std::set<std::vector<std::pair<std::string, std::array<int, 3>>>> seen;
  auto key = [](const ThetaCubic& t) {
    std::vector<std::pair<std::string, std::array<int, 3>>> k;
    for (auto& x : t) k.push_back({x.coef.get_str(), x.idx});
    return k;
  };
  std::vector<ThetaCubic> orbit{c}, frontier{c};
  seen.insert(key(c));
  while (!frontier.empty()) {
    std::vector<ThetaCubic> next;
    for (auto& t : frontier)
      for (auto& pi : gens) {
        ThetaCubic u = relabel(t, pi);
        if (seen.insert(key(u)).second) {
          orbit.push_back(u);
          next.push_back(u);
        }
      }
    frontier = std::move(next);
  }
  r.orbit_size = int(orbit.size());
  r.span_dim = cubic_span_dim(orbit, F, seed + 2);
  return r;
}

// ---- quartic families ----

SignedMonomial d_product(const std::vector<Char>& chars) {
  SignedMonomial r;
  r.sign = 1;
  for (Char m : chars) {
    auto d = d_of_char(m);
    r.sign *= d.sign;
    r.factors.insert(r.factors.end(), d.factors.begin(), d.factors.end());
  }
  if (!r.sign) return {};
  std::sort(r.factors.begin(), r.factors.end());
  return r;
}

CosetReport coset_quartic_relations() {
  CosetReport r;
  for (auto& sub : singular_subspaces(2)) {
    ++r.subspaces;
    auto ms = members(sub.members);
    std::set<Char> reps;
    for (Char x = 0; x < 64; ++x) {
      bool all_even = true;
      Char lo = 63;
      for (Char m : ms) {
        all_even = all_even && !q_form(Char(x ^ m));
        lo = std::min<Char>(lo, Char(x ^ m));
      }
      if (all_even) reps.insert(lo);
    }
    if (reps.size() != 3 || !reps.count(0)) {
      r.three_even_cosets_each = false;
      continue;
    }
    reps.erase(0);
    CosetRelation rel;
    rel.m_basis = {sub.basis[0], sub.basis[1]};
    rel.a = *reps.begin();
    rel.b = *reps.rbegin();
    std::vector<Char> ca, cb;
    for (Char m : ms) {
      ca.push_back(Char(rel.a ^ m));
      cb.push_back(Char(rel.b ^ m));
    }
    rel.holds = d_product(ca) == d_product(cb);
    r.holding += rel.holds;
    r.relations.push_back(rel);
  }
  return r;
}

namespace {

u64 squared_form(u64 A, u64 B, u64 C, const PrimeField& F) {
  u64 sq = F.add(F.add(F.mul(A, A), F.mul(B, B)), F.mul(C, C));
  u64 cross = F.add(F.add(F.mul(A, B), F.mul(A, C)), F.mul(B, C));
  return F.sub(sq, F.add(cross, cross));
}

u64 candidate_value(const QuarticCandidate& q, const std::array<u64, 64>& d, const PrimeField& F) {
  u64 v[3];
  for (int k = 0; k < 3; ++k) v[k] = F.mul(d[q.pairs[k][0]], d[q.pairs[k][1]]);
  return squared_form(v[0], v[1], v[2], F);
}

// theta^4 values as linear forms in free Theta_1..Theta_14.
std::array<u64, 64> d_from_free_thetas(const std::array<std::array<u64, 15>, 64>& ell, const std::vector<u64>& t,
                                       const PrimeField& F) {
  std::array<u64, 64> d{};
  for (Char m : even_chars()) {
    u64 s = 0;
    for (int i = 0; i < 14; ++i) s = F.add(s, F.mul(ell[m][i], t[i]));
    d[m] = s;
  }
  return d;
}

}  // namespace

SquaredQuarticReport squared_quartic_relations(const std::vector<CharSet>& a, const PrimeField& F, int trials,
                                               u64 seed, bool with_span) {
  SquaredQuarticReport r;
  std::vector<QuarticCandidate> failing;
  for (Char s = 1; s < 64; ++s) {
    std::vector<std::array<Char, 2>> pairs;
    for (Char x : even_chars()) {
      Char y = Char(x ^ s);
      if (x && y && x < y && !q_form(y)) pairs.push_back({x, y});
    }
    int n = int(pairs.size());
    for (int i = 0; i < n; ++i)
      for (int j = i + 1; j < n; ++j)
        for (int k = j + 1; k < n; ++k) {
          QuarticCandidate q{s, {pairs[i], pairs[j], pairs[k]}};
          ++r.candidates;
          auto v = pit_is_zero([&](const std::vector<u64>& x) { return candidate_value(q, eval_all(x, F), F); }, 8,
                               48, trials, seed, F);
          if (v.zero) {
            r.relations.push_back(q);
            ++(q_form(s) ? r.passing_odd_s : r.passing_even_s);
          } else {
            failing.push_back(q);
          }
        }
  }
  r.passing = int(r.relations.size());
  if (!failing.empty()) {
    std::mt19937_64 rng(seed);
    auto& q = failing[rng() % failing.size()];
    r.control_witness =
        !pit_is_zero([&](const std::vector<u64>& x) { return candidate_value(q, eval_all(x, F), F); }, 8, 48, trials,
                     seed + 7, F)
             .zero;
  }
  if (with_span) {
    auto ell = theta4_mod_p(a, F, seed);
    auto cosets = coset_quartic_relations();
    const int pts = 400;
    std::mt19937_64 rng(seed + 3);
    int nq = r.passing, nc = int(cosets.relations.size());
    std::vector<std::vector<Char>> subs;
    for (auto& c : cosets.relations) subs.push_back(members(span({c.m_basis[0], c.m_basis[1]}).members));
    PrimeFieldMatrix m(nq + nc, pts);
    for (int p = 0; p < pts; ++p) {
      auto d = d_from_free_thetas(ell, random_point(rng, 14, F), F);
      for (int k = 0; k < nq; ++k) m.at(k, p) = candidate_value(r.relations[k], d, F);
      for (int k = 0; k < nc; ++k) {
        auto& c = cosets.relations[k];
        u64 pa = 1, pb = 1;
        for (Char x : subs[k]) {
          pa = F.mul(pa, d[c.a ^ x]);
          pb = F.mul(pb, d[c.b ^ x]);
        }
        m.at(nq + k, p) = F.sub(pa, pb);
      }
    }
    PrimeFieldMatrix top(nq, pts);
    for (int k = 0; k < nq; ++k) std::copy(m.row(k), m.row(k) + pts, top.row(k));
    r.span_dim = rank_mod_p(std::move(top), F);
    r.span_with_cosets = rank_mod_p(std::move(m), F);
  }
  return r;
}

u64 schottky_value(const std::array<u64, 64>& d, CharSet set, u64 c, const PrimeField& F) {
  u64 s2 = 0, s4 = 0;
  for (Char m : members(set)) {
    u64 sq = F.mul(d[m], d[m]);
    s2 = F.add(s2, sq);
    s4 = F.add(s4, F.mul(sq, sq));
  }
  return F.sub(F.mul(s2, s2), F.mul(F.from_int((long long)c), s4));
}

SchottkyReport schottky_image(const std::vector<CharSet>& a, const PrimeField& F, int trials, u64 seed) {
  SchottkyReport r;
  CharSet evens = 0;
  for (Char m : even_chars()) evens |= CharSet(1) << m;
  auto run = [&](CharSet set, u64 c) {
    return pit_is_zero([&](const std::vector<u64>& x) { return schottky_value(eval_all(x, F), set, c, F); }, 8, 48,
                       trials, seed, F);
  };
  r.eight = run(evens, 8);
  r.witness_without_constant = !run(evens, 1).zero;
  r.witness_zero_constant = !run(evens, 0).zero;
  r.witness_single_subspace = !run(a.at(0), 8).zero;
  return r;
}

// ---- dimensions and series ----

GradedDimB graded_dim_B(int weight, const std::vector<CharSet>& a, const PrimeField& F, u64 seed) {
  if (weight < 2 || weight % 2) throw std::invalid_argument("weight must be a positive even number");
  GradedDimB g;
  g.weight = weight;
  int deg = weight / 2;
  auto mons = monomials_of_degree(15, deg);
  g.monomials = int(mons.size());
  long hint = series_even_B(weight + 1)[weight].get_si();
  int rows = int(std::min<long>(g.monomials, hint + 20));
  std::mt19937_64 rng(seed);
  for (;;) {
    PrimeFieldMatrix m(rows, g.monomials);
    for (int r = 0; r < rows; ++r) {
      auto t = eval_thetas(a, random_point(rng, 8, F), F);
      std::array<std::vector<u64>, 15> pw;
      for (int i = 0; i < 15; ++i) {
        pw[i].assign(deg + 1, 1);
        for (int k = 1; k <= deg; ++k) pw[i][k] = F.mul(pw[i][k - 1], t[i]);
      }
      u64* row = m.row(r);
      for (int c = 0; c < g.monomials; ++c) {
        u64 v = 1;
        for (int i = 0; i < 15; ++i)
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

namespace {

std::vector<mpz_class> zs(std::initializer_list<long> v) {
  std::vector<mpz_class> r;
  for (long x : v) r.push_back(x);
  return r;
}

std::vector<mpz_class> truncate(std::vector<mpz_class> v, int terms) {
  v.resize(terms, 0);
  return v;
}

}  // namespace

std::vector<mpz_class> series_ring_A(int terms) {
  auto num = poly_mul(zs({1, -3, 13, -17, 44, -17, 13, -3, 1}), zs({1, 0, 0, 0, 0, 0, 0, 0, -1}));
  return truncate(series_expand(RationalSeries::from_factors(num, {2, 2, 2, 2, 1, 1, 1, 1}), terms - 1), terms);
}

std::vector<mpz_class> series_ring_B(int terms) {
  // multiply by (1-z)(1-z^4), then divide by (1-z^8) as a power series
  auto a = poly_mul(series_ring_A(terms), poly_mul(zs({1, -1}), zs({1, 0, 0, 0, -1})));
  a = truncate(a, terms);
  for (int k = 8; k < terms; ++k) a[k] += a[k - 8];
  return a;
}

std::vector<mpz_class> series_even_B(int terms) {
  auto num = zs({1, 0, 8, 0, 36, 0, 106, 0, 91, 0, 14});
  return truncate(series_expand(RationalSeries::from_factors(num, {2, 2, 2, 2, 2, 2}), terms - 1), terms);
}

std::vector<mpz_class> series_config(int terms) {
  return truncate(series_expand(RationalSeries::from_factors(zs({1, 8, 22, 8, 1}), {1, 1, 1, 1, 1, 1}), terms - 1),
                  terms);
}

SeriesReport series_suite() {
  SeriesReport r;
  auto check = [&](std::string name, std::vector<long> printed, std::vector<mpz_class> computed) {
    SeriesCheck c{std::move(name), std::move(printed), std::move(computed), -1};
    for (std::size_t k = 0; k < c.printed.size(); ++k)
      if (c.printed[k] >= 0 && c.computed[k] != c.printed[k]) {
        c.first_mismatch = int(k);
        break;
      }
    r.checks.push_back(std::move(c));
  };
  check("ring A", {1, 1, 15, 29, 135, 310, 870, 1830, 3992, 7534, 14142}, series_ring_A(11));
  check("ring B", {1, 0, 14, 14, 105, 175, 546, 946, 2057}, series_ring_B(9));
  check("even part of ring B", {1, -1, 14, -1, 105, -1, 546, -1, 2057, -1, 6062, -1, 14945, -1, 32306, -1, 63217, -1,
                                114478},
        series_even_B(19));
  auto b = series_ring_B(19), e = series_even_B(19);
  r.even_part_matches = true;
  for (int k = 0; k < 19; k += 2) r.even_part_matches = r.even_part_matches && b[k] == e[k];
  for (int k = 1; k < 19; k += 2) r.even_part_matches = r.even_part_matches && e[k] == 0;
  return r;
}

}  // namespace h8
