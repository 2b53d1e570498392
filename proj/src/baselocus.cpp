#include "h8/baselocus.hpp"

#include <algorithm>
#include <fstream>
#include <map>
#include <numeric>
#include <set>
#include <sstream>
#include <stdexcept>

#include "h8/thomae.hpp"

namespace h8 {

IntVec14 normalize(IntVec14 v) {
  long g = 0;
  for (long x : v) g = std::gcd(g, x);
  if (!g) return v;
  long first = *std::find_if(v.begin(), v.end(), [](long x) { return x != 0; });
  if (first < 0) g = -g;
  for (long& x : v) x /= g;
  return v;
}

IntVec14 normalize_q(const std::vector<mpq_class>& v) {
  mpz_class den = 1;
  for (auto& q : v) mpz_lcm(den.get_mpz_t(), den.get_mpz_t(), q.get_den_mpz_t());
  IntVec14 out{};
  for (int i = 0; i < 14; ++i) {
    mpz_class k = v[i].get_num() * (den / v[i].get_den());
    if (!k.fits_slong_p()) throw std::overflow_error("coordinate too large");
    out[i] = k.get_si();
  }
  return normalize(out);
}

static MatQ to_q(const std::vector<IntVec14>& rows) {
  MatQ m;
  for (auto& r : rows) m.emplace_back(r.begin(), r.end());
  return m;
}

LinearSpace make_space(std::vector<IntVec14> forms) {
  LinearSpace s;
  MatQ m = to_q(forms);
  for (auto& row : rref_q(m).rows) s.canon.push_back(normalize_q(row));
  for (auto& v : nullspace_q(m, 14)) s.param.push_back(normalize_q(v));
  s.forms = std::move(forms);
  return s;
}

LinearSpace parse_space(const std::string& line) {
  std::vector<IntVec14> forms;
  std::istringstream in(line);
  std::string item;
  while (std::getline(in, item, ',')) {
    item.erase(std::remove_if(item.begin(), item.end(), ::isspace), item.end());
    if (item.empty()) continue;
    PolyZ f = parse_poly(item, 14, "Y", 1);
    IntVec14 v{};
    for (auto& [e, c] : f.terms()) {
      if (total_degree(e) != 1) throw std::runtime_error("not a linear form: " + item);
      int i = int(std::find(e.begin(), e.end(), 1) - e.begin());
      v[i] = c.get_si();
    }
    forms.push_back(v);
  }
  return make_space(std::move(forms));
}

std::string space_to_string(const LinearSpace& s) {
  std::string out;
  for (auto& row : s.canon) {
    if (!out.empty()) out += ", ";
    std::string t;
    for (int i = 0; i < 14; ++i) {
      if (!row[i]) continue;
      long c = row[i];
      if (!t.empty() || c < 0) t += c < 0 ? "-" : "+";
      if (std::labs(c) != 1) t += std::to_string(std::labs(c));
      t += "Y" + std::to_string(i + 1);
    }
    out += t;
  }
  return out;
}

bool contains(const LinearSpace& s, const IntVec14& y) {
  for (auto& f : s.canon) {
    long d = 0;
    for (int i = 0; i < 14; ++i) d += f[i] * y[i];
    if (d) return false;
  }
  return true;
}

static IntVec14 transport_form(const IntVec14& l, const IntMat14& m) {
  IntVec14 r{};
  for (int j = 0; j < 14; ++j)
    for (int i = 0; i < 14; ++i) r[j] += m[j][i] * l[i];
  return r;
}

LinearSpace act_space(const LinearSpace& s, const Perm& sigma) {
  IntMat14 m = y_rep(sigma);
  std::vector<IntVec14> forms;
  for (auto& l : s.canon) forms.push_back(transport_form(l, m));
  return make_space(std::move(forms));
}

IntVec14 act_point(const IntVec14& y, const Perm& sigma) {
  IntMat14 m = y_rep(inverse(sigma));
  IntVec14 r{};
  for (int j = 0; j < 14; ++j)
    for (int i = 0; i < 14; ++i) r[j] += m[i][j] * y[i];
  return r;
}

LinearSpace load_base_space(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open " + path);
  std::string line;
  while (std::getline(in, line))
    if (!line.empty() && line[0] != '#') return parse_space(line);
  throw std::runtime_error("no ideal in " + path);
}

CuspIdeals load_cusp_ideals(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open " + path);
  CuspIdeals c;
  std::string line;
  while (std::getline(in, line)) {
    if (line.empty() || line[0] == '#') continue;
    if (line.rfind("cusp:", 0) == 0) {
      std::istringstream ls(line.substr(5));
      for (auto& x : c.cusp)
        if (!(ls >> x)) throw std::runtime_error("cusp needs 14 coordinates");
      continue;
    }
    c.spaces.push_back(parse_space(line));
  }
  return c;
}

std::vector<LinearSpace> orbit_of_base_space(const LinearSpace& base) {
  std::vector<LinearSpace> orbit{base};
  std::set<std::vector<IntVec14>> seen{base.canon};
  for (std::size_t k = 0; k < orbit.size(); ++k)
    for (auto& g : {transposition(1, 2), eight_cycle()}) {
      LinearSpace t = act_space(orbit[k], g);
      if (seen.insert(t.canon).second) orbit.push_back(std::move(t));
    }
  return orbit;
}

int index_of(const std::vector<LinearSpace>& spaces, const LinearSpace& s) {
  for (std::size_t i = 0; i < spaces.size(); ++i)
    if (spaces[i].canon == s.canon) return int(i);
  return -1;
}

int stabilizer_order(const LinearSpace& s) {
  auto code = [](const Perm& p) {
    unsigned c = 0;
    for (int v : p) c = c << 3 | unsigned(v - 1);
    return c;
  };
  std::vector<bool> seen(1u << 24, false);
  std::vector<Perm> gens{transposition(1, 2), eight_cycle()};
  std::vector<IntMat14> gm;
  for (auto& g : gens) gm.push_back(y_rep(g));
  std::vector<std::pair<Perm, IntMat14>> frontier{{identity_perm(), mat_identity()}};
  seen[code(identity_perm())] = true;
  int count = 0;
  while (!frontier.empty()) {
    std::vector<std::pair<Perm, IntMat14>> next;
    for (auto& [p, m] : frontier) {
      bool fixes = true;
      for (auto& l : s.canon) {
        IntVec14 t = transport_form(l, m);
        for (auto& v : s.param) {
          long d = 0;
          for (int i = 0; i < 14; ++i) d += t[i] * v[i];
          fixes = fixes && d == 0;
        }
      }
      count += fixes;
      for (std::size_t k = 0; k < gens.size(); ++k) {
        Perm q = compose(p, gens[k]);
        if (seen[code(q)]) continue;
        seen[code(q)] = true;
        next.push_back({q, mat_mul(m, gm[k])});
      }
    }
    frontier = std::move(next);
  }
  return count;
}

bool koike_vanish_on(const LinearSpace& s, const std::vector<KoikeGenerator>& gens) {
  int k = int(s.param.size());
  std::vector<PolyZ> subs;
  for (int i = 0; i < 14; ++i) {
    PolyZ y(k);
    for (int j = 0; j < k; ++j) y += PolyZ::variable(k, j).scaled(mpz_class(s.param[j][i]));
    subs.push_back(y);
  }
  for (auto& g : gens)
    if (!g.poly.substitute(subs).is_zero()) return false;
  return true;
}

bool koike_vanish_at(const IntVec14& y, const std::vector<KoikeGenerator>& gens) {
  for (auto& g : gens) {
    mpz_class total = 0;
    for (auto& [e, c] : g.poly.terms()) {
      mpz_class t = c;
      for (int i = 0; i < 14; ++i)
        for (int r = 0; r < e[i]; ++r) t *= y[i];
      total += t;
    }
    if (total != 0) return false;
  }
  return true;
}

const std::array<std::vector<mpq_class>, 64>& cubic_representatives(u64 prime, u64 seed) {
  static std::optional<std::array<std::vector<mpq_class>, 64>> reps;
  if (!reps) {
    std::array<std::vector<mpq_class>, 64> r;
    for (Char m : even_chars()) {
      auto c = cubic_in_Y(m, prime, seed);
      if (!c) throw std::runtime_error("no cubic representative for " + char_to_string(m));
      r[m] = std::move(*c);
    }
    reps = std::move(r);
  }
  return *reps;
}

namespace {

struct ModpReps {
  std::array<std::vector<u64>, 64> c;
};

ModpReps reps_mod_p(const PrimeField& F, u64 seed) {
  auto& reps = cubic_representatives(kDefaultPrime, seed);
  ModpReps r;
  for (Char m : even_chars()) {
    r.c[m].resize(reps[m].size());
    for (std::size_t k = 0; k < reps[m].size(); ++k)
      r.c[m][k] = F.mul(F.from_mpz(reps[m][k].get_num()), F.inv(F.from_mpz(reps[m][k].get_den())));
  }
  return r;
}

// All cubic representatives evaluated at one Y point.
std::array<u64, 64> eval_reps(const ModpReps& reps, const std::vector<u64>& y, const PrimeField& F) {
  auto& mons = cubic_monomials();
  std::vector<u64> mv(mons.size());
  for (std::size_t k = 0; k < mons.size(); ++k) {
    u64 v = 1;
    for (int i = 0; i < 14; ++i)
      for (int r = 0; r < mons[k][i]; ++r) v = F.mul(v, y[i]);
    mv[k] = v;
  }
  std::array<u64, 64> out{};
  for (Char m : even_chars()) {
    u64 acc = 0;
    for (std::size_t k = 0; k < mons.size(); ++k)
      if (reps.c[m][k]) acc = F.add(acc, F.mul(reps.c[m][k], mv[k]));
    out[m] = acc;
  }
  return out;
}

CharSet all_evens() {
  CharSet e = 0;
  for (Char m : even_chars()) e |= CharSet(1) << m;
  return e;
}

bool in_space_mod_p(const LinearSpace& s, const std::vector<u64>& y, const PrimeField& F) {
  for (auto& f : s.canon) {
    u64 d = 0;
    for (int i = 0; i < 14; ++i) d = F.add(d, F.mul(F.from_int(f[i]), y[i]));
    if (d) return false;
  }
  return true;
}

std::vector<u64> collision_point(std::mt19937_64& rng, const std::array<int, 3>& t, const PrimeField& F) {
  auto x = random_point(rng, 8, F);
  x[t[1] - 1] = x[t[2] - 1] = x[t[0] - 1];
  return x;
}

}  // namespace

CharSet restricted_vanishing_set(const LinearSpace& s, const PrimeField& F, u64 seed, int trials) {
  auto reps = reps_mod_p(F, seed);
  CharSet alive = 0;
  std::mt19937_64 rng(seed);
  for (int t = 0; t < trials; ++t) {
    auto w = random_point(rng, int(s.param.size()), F);
    std::vector<u64> y(14, 0);
    for (std::size_t j = 0; j < s.param.size(); ++j)
      for (int i = 0; i < 14; ++i) y[i] = F.add(y[i], F.mul(w[j], F.from_int(s.param[j][i])));
    auto v = eval_reps(reps, y, F);
    for (Char m : even_chars())
      if (v[m]) alive |= CharSet(1) << m;
  }
  return all_evens() & ~alive;
}

std::optional<std::array<int, 3>> collision_triple(const LinearSpace& s, const PrimeField& F, u64 seed) {
  std::optional<std::array<int, 3>> found;
  std::mt19937_64 rng(seed);
  for (int a = 1; a <= 8; ++a)
    for (int b = a + 1; b <= 8; ++b)
      for (int c = b + 1; c <= 8; ++c) {
        std::array<int, 3> t{a, b, c};
        PrimeFieldMatrix m(6, 14);
        bool inside = true;
        for (int k = 0; k < 6 && inside; ++k) {
          auto y = eval_Y(collision_point(rng, t, F), F);
          inside = in_space_mod_p(s, y, F);
          std::copy(y.begin(), y.end(), m.row(k));
        }
        if (!inside || rank_mod_p(std::move(m), F) != 14 - s.rank()) continue;
        if (found) return std::nullopt;
        found = t;
      }
  return found;
}

CharSet exceptional_vanishing_set(const std::array<int, 3>& triple, const PrimeField& F, u64 seed, int trials) {
  auto reps = reps_mod_p(F, seed);
  const int deg = 12;  // D_m(x0 + eps v) has degree 12 in eps
  PrimeFieldMatrix vand(deg + 1, deg + 1);
  for (int k = 0; k <= deg; ++k)
    for (int j = 0; j <= deg; ++j) vand.at(k, j) = F.pow(F.from_int(k + 1), u64(j));
  CharSet result = all_evens();
  std::mt19937_64 rng(seed);
  for (int t = 0; t < trials; ++t) {
    auto x0 = collision_point(rng, triple, F);
    auto v = random_point(rng, 8, F);
    std::array<std::vector<u64>, 64> samples;
    for (int k = 0; k <= deg; ++k) {
      std::vector<u64> x(8);
      u64 eps = F.from_int(k + 1);
      for (int i = 0; i < 8; ++i) x[i] = F.add(x0[i], F.mul(eps, v[i]));
      auto val = eval_reps(reps, eval_Y(x, F), F);
      for (Char m : even_chars()) samples[m].push_back(val[m]);
    }
    std::array<int, 64> order{};
    int lowest = deg + 1;
    for (Char m : even_chars()) {
      auto coef = solve_mod_p(vand, samples[m], F);
      if (!coef) throw std::logic_error("interpolation failed");
      order[m] = int(std::find_if(coef->begin(), coef->end(), [](u64 c) { return c != 0; }) - coef->begin());
      lowest = std::min(lowest, order[m]);
    }
    CharSet higher = 0;
    for (Char m : even_chars())
      if (order[m] > lowest) higher |= CharSet(1) << m;
    result &= higher;
  }
  return result;
}

std::vector<Triplet> triplets_for(CharSet vanish) {
  std::vector<Triplet> out;
  for (auto& t : enumerate_odd_triplets())
    if ((orthogonal_even_set({t[0], t[1], t[2]}) | 1) == vanish) out.push_back(t);
  return out;
}

CharSet act_set(const Perm& sigma, CharSet s) {
  CharSet r = 0;
  for (Char m : members(s)) r |= CharSet(1) << act(sigma, m);
  if (s & 1) r |= 1;
  return r;
}

static CharSet triplet_mask(const Triplet& t) {
  return CharSet(1) << t[0] | CharSet(1) << t[1] | CharSet(1) << t[2];
}

VanishingReport vanishing_suite(const std::vector<LinearSpace>& orbit, const std::vector<KoikeGenerator>& gens,
                                const PrimeField& F, u64 seed, int equivariance_samples) {
  VanishingReport r;
  r.spaces = int(orbit.size());
  std::set<CharSet> seen_triplets;
  std::set<std::array<int, 3>> seen_collisions;
  for (auto& s : orbit) {
    if (!koike_vanish_on(s, gens)) r.koike_on_all = false;
    if (restricted_vanishing_set(s, F, seed, 2) != all_evens()) r.restricted_all_vanish = false;
    auto t = collision_triple(s, F, seed);
    r.collisions.push_back(t.value_or(std::array<int, 3>{}));
    if (t) seen_collisions.insert(*t);
    CharSet v = t ? exceptional_vanishing_set(*t, F, seed) : CharSet(0);
    r.vanish.push_back(v);
    if (set_size(v) != 6) r.all_size_six = false;
    auto ts = triplets_for(v);
    if (ts.size() != 1) {
      r.triplet_unique = false;
      r.triplets.push_back({});
      continue;
    }
    r.triplets.push_back(ts[0]);
    seen_triplets.insert(triplet_mask(ts[0]));
  }
  r.collision_triples_bijective = seen_collisions.size() == orbit.size() && orbit.size() == 56;
  r.bijective = r.triplet_unique && seen_triplets.size() == orbit.size() &&
                seen_triplets.size() == enumerate_odd_triplets().size();
  std::set<CharSet> sext, got(r.vanish.begin(), r.vanish.end());
  for (auto& s : boundary_dictionaries().sextuplets) {
    CharSet m = 0;
    for (Char c : s) m |= CharSet(1) << c;
    sext.insert(m);
  }
  r.match_sextuplets = sext == got;
  if (!r.triplets.empty() && r.triplet_unique) {
    auto& t = r.triplets[0];
    r.base_triplet = char_to_string(t[0]) + " " + char_to_string(t[1]) + " " + char_to_string(t[2]);
  }
  std::mt19937_64 rng(seed);
  for (int k = 0; k < equivariance_samples && r.triplet_unique; ++k) {
    Perm sigma = random_perm(rng);
    int i = int(rng() % orbit.size());
    int j = index_of(orbit, act_space(orbit[i], sigma));
    ++r.equivariance_checked;
    if (j < 0) continue;
    CharSet moved = act_set(sigma, triplet_mask(r.triplets[i]));
    if (r.vanish[j] == act_set(sigma, r.vanish[i]) && triplet_mask(r.triplets[j]) == moved) ++r.equivariance_passed;
  }
  return r;
}

CuspReport cusp_suite(const CuspIdeals& printed, const std::vector<LinearSpace>& orbit,
                      const std::vector<Triplet>& triplets, const std::vector<KoikeGenerator>& gens,
                      const PrimeField& F) {
  CuspReport r;
  IntVec14 c0 = normalize(printed.cusp);
  r.printed_on_variety = koike_vanish_at(c0, gens);
  for (auto& s : printed.spaces) r.printed_in_given += contains(s, c0);

  std::set<IntVec14> seen{c0};
  r.cusps.push_back(c0);
  for (std::size_t k = 0; k < r.cusps.size(); ++k)
    for (auto& g : {transposition(1, 2), eight_cycle()}) {
      IntVec14 y = normalize(act_point(r.cusps[k], g));
      if (seen.insert(y).second) r.cusps.push_back(y);
    }
  r.orbit_size = int(r.cusps.size());

  std::vector<int> per_space(orbit.size(), 0);
  std::set<Char> chars;
  bool chars_unique = true;
  for (auto& c : r.cusps) {
    int n = 0;
    std::vector<Char> odds;
    for (std::size_t i = 0; i < orbit.size(); ++i)
      if (contains(orbit[i], c)) {
        ++n;
        ++per_space[i];
        if (i < triplets.size()) odds.insert(odds.end(), triplets[i].begin(), triplets[i].end());
      }
    if (n != 8) r.eight_per_cusp = false;
    auto orth = members(orthogonal_even_set(odds));
    if (orth.size() != 1 || !chars.insert(orth[0]).second) chars_unique = false;
  }
  for (int n : per_space)
    if (n != 5) r.five_per_space = false;
  r.char_bijection = chars_unique && chars.size() == 35 && r.cusps.size() == 35;

  r.intersection_dims.assign(15, 0);
  for (std::size_t i = 0; i < orbit.size(); ++i)
    for (std::size_t j = i + 1; j < orbit.size(); ++j) {
      PrimeFieldMatrix m(orbit[i].rank() + orbit[j].rank(), 14);
      int row = 0;
      for (auto* s : {&orbit[i], &orbit[j]})
        for (auto& f : s->canon) {
          for (int k = 0; k < 14; ++k) m.at(row, k) = F.from_int(f[k]);
          ++row;
        }
      int dim = 14 - rank_mod_p(std::move(m), F);
      ++r.intersection_dims[dim];
      if (!dim) continue;
      ++r.intersecting_pairs;
      for (auto& c : r.cusps)
        if (contains(orbit[i], c) && contains(orbit[j], c)) {
          ++r.intersections_with_cusp;
          break;
        }
    }
  while (!r.intersection_dims.empty() && !r.intersection_dims.back()) r.intersection_dims.pop_back();
  return r;
}

std::string action_kernel(const std::vector<LinearSpace>& orbit) {
  auto trivial = [&](const Perm& p) {
    for (auto& s : orbit)
      if (!(act_space(s, p) == s)) return false;
    return true;
  };
  Perm c3 = identity_perm();
  c3[0] = 2, c3[1] = 3, c3[2] = 1;
  if (!trivial(c3)) return "trivial";
  return trivial(transposition(1, 2)) ? "S8" : "A8";
}

}  // namespace h8
