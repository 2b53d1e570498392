#include "h8/charspace.hpp"

#include <algorithm>
#include <bit>
#include <map>
#include <set>
#include <stdexcept>

#include "h8/exactalg.hpp"

namespace h8 {

Char make_char(int a1, int a2, int a3, int b1, int b2, int b3) {
  return Char(a1 << 5 | a2 << 4 | a3 << 3 | b1 << 2 | b2 << 1 | b3);
}

std::string char_bits(Char m) {
  std::string s(6, '0');
  for (int k = 0; k < 6; ++k)
    if (m >> (5 - k) & 1) s[k] = '1';
  return s;
}

std::string char_to_string(Char m) {
  std::string b = char_bits(m), s = "(";
  for (int k = 0; k < 6; ++k) {
    s += b[k];
    s += k == 2 ? '|' : (k == 5 ? ')' : ',');
  }
  return s;
}

int q_form(Char m) { return std::popcount(unsigned((m >> 3) & m & 7)) & 1; }

int bilinear(Char m, Char n) { return std::popcount(unsigned((((m >> 3) & n) ^ (m & (n >> 3))) & 7)) & 1; }

int e_sign(Char m, Char n) { return bilinear(m, n) ? -1 : 1; }

std::vector<Char> even_chars() {
  std::vector<Char> v;
  for (int m = 0; m < 64; ++m)
    if (!q_form(Char(m))) v.push_back(Char(m));
  return v;
}

std::vector<Char> odd_chars() {
  std::vector<Char> v;
  for (int m = 0; m < 64; ++m)
    if (q_form(Char(m))) v.push_back(Char(m));
  return v;
}

std::vector<Char> members(CharSet s) {
  std::vector<Char> v;
  for (int m = 0; m < 64; ++m)
    if (s >> m & 1) v.push_back(Char(m));
  return v;
}

int set_size(CharSet s) { return std::popcount(s); }

Subspace span(const std::vector<Char>& gens) {
  std::vector<Char> basis;
  for (Char g : gens) {
    for (Char b : basis)
      if ((g ^ b) < g) g ^= b;
    if (!g) continue;
    for (Char& b : basis)
      if ((b ^ g) < b) b ^= g;
    basis.push_back(g);
    std::sort(basis.rbegin(), basis.rend());
  }
  Subspace s;
  s.dim = int(basis.size());
  s.basis = basis;
  s.members = 1;
  for (Char b : basis) {
    CharSet add = 0;
    for (Char m : members(s.members)) add |= CharSet(1) << (m ^ b);
    s.members |= add;
  }
  for (Char m : members(s.members)) s.singular = s.singular && !q_form(m);
  return s;
}

std::vector<Subspace> singular_subspaces(int d) {
  if (d < 1 || d > 3) throw std::invalid_argument("dimension must be 1, 2 or 3");
  std::vector<Char> ev;
  for (Char m : even_chars())
    if (m) ev.push_back(m);
  std::set<CharSet> seen;
  std::vector<Subspace> out;
  std::vector<int> idx(d);
  auto rec = [&](auto&& self, int pos, int from) -> void {
    if (pos == d) {
      std::vector<Char> g;
      for (int i : idx) g.push_back(ev[i]);
      Subspace s = span(g);
      if (s.dim == d && s.singular && seen.insert(s.members).second) out.push_back(s);
      return;
    }
    for (int i = from; i < int(ev.size()); ++i) {
      idx[pos] = i;
      self(self, pos + 1, i + 1);
    }
  };
  rec(rec, 0, 0);
  std::sort(out.begin(), out.end(), [](const Subspace& a, const Subspace& b) { return a.members < b.members; });
  return out;
}

static int dim_of(CharSet s) { return std::countr_zero(unsigned(set_size(s))); }

OrbitSplit so_orbit_split(const std::vector<Subspace>& maximals, CharSet reference) {
  OrbitSplit out;
  // same class iff the intersection has odd vector dimension (even projective dimension)
  for (auto& s : maximals) (dim_of(s.members & reference) % 2 ? out.class_a : out.class_b).push_back(s);
  auto same = [](const Subspace& a, const Subspace& b) { return dim_of(a.members & b.members) % 2 == 1; };
  for (auto* cls : {&out.class_a, &out.class_b})
    for (auto& a : *cls)
      for (auto& b : *cls)
        if (!same(a, b)) throw std::logic_error("intersection-parity relation is not an equivalence");
  for (auto& a : out.class_a)
    for (auto& b : out.class_b)
      if (same(a, b)) throw std::logic_error("intersection-parity relation is not an equivalence");
  return out;
}

std::vector<Star> enumerate_stars() {
  auto od = odd_chars();
  std::vector<Star> out;
  int n = int(od.size());
  for (int a = 0; a < n; ++a)
    for (int b = a + 1; b < n; ++b)
      for (int c = b + 1; c < n; ++c)
        for (int d = c + 1; d < n; ++d) {
          Star s{od[a], od[b], od[c], od[d]};
          if (s[0] ^ s[1] ^ s[2] ^ s[3]) continue;
          bool ok = true;
          for (int i = 0; i < 4 && ok; ++i)
            for (int j = i + 1; j < 4; ++j) ok = ok && !q_form(Char(s[i] ^ s[j]));
          if (ok) out.push_back(s);
        }
  return out;
}

std::vector<Triplet> enumerate_odd_triplets() {
  auto od = odd_chars();
  std::vector<Triplet> out;
  for (std::size_t a = 0; a < od.size(); ++a)
    for (std::size_t b = a + 1; b < od.size(); ++b) {
      Char c = od[a] ^ od[b];
      if (q_form(c) && c > od[b]) out.push_back({od[a], od[b], c});
    }
  return out;
}

CharSet orthogonal_even_set(const std::vector<Char>& chars) {
  CharSet s = 0;
  for (Char m : even_chars()) {
    if (!m) continue;
    bool ok = true;
    for (Char a : chars) ok = ok && !bilinear(m, a);
    if (ok) s |= CharSet(1) << m;
  }
  return s;
}

std::array<Char, 6> example_sextuplet() {
  return {0, make_char(1, 1, 1, 1, 0, 1), make_char(0, 0, 0, 1, 1, 1), make_char(1, 0, 0, 0, 0, 0),
          make_char(0, 1, 0, 1, 0, 0), make_char(0, 0, 1, 1, 1, 0)};
}

BoundaryDictionaries boundary_dictionaries() {
  BoundaryDictionaries d;
  std::vector<Char> ev;
  for (Char m : even_chars())
    if (m) ev.push_back(m);
  auto od = odd_chars();

  auto ex = example_sextuplet();
  std::sort(ex.begin(), ex.end());
  std::array<int, 5> ix{};
  auto rec = [&](auto&& self, int pos, int from) -> void {
    if (pos == 5) {
      std::array<Char, 6> s{0};
      for (int k = 0; k < 5; ++k) s[k + 1] = ev[ix[k]];
      for (int a = 0; a < 6; ++a)
        for (int b = a + 1; b < 6; ++b)
          for (int c = b + 1; c < 6; ++c)
            if (!q_form(Char(s[a] ^ s[b] ^ s[c]))) return;
      d.sextuplets.push_back(s);
      if (s == ex) d.example_sextuplet_present = true;
      return;
    }
    for (int i = from; i < int(ev.size()); ++i) {
      ix[pos] = i;
      self(self, pos + 1, i + 1);
    }
  };
  rec(rec, 0, 0);

  for (std::size_t a = 0; a < od.size(); ++a)
    for (std::size_t b = a + 1; b < od.size(); ++b)
      if (!q_form(Char(od[a] ^ od[b])))
        d.even_sum_pairs.push_back(
            {od[a], od[b], orthogonal_even_set({od[a]}) | orthogonal_even_set({od[b]})});

  auto stars = enumerate_stars();
  for (Char m : ev) {
    EvenCharData e;
    e.m = m;
    CharSet orth = 0;
    for (Char a : od)
      if (!bilinear(a, m)) {
        e.orthogonal_odds.push_back(a);
        orth |= CharSet(1) << a;
      }
    std::vector<int> inside;
    std::vector<CharSet> masks(stars.size());
    for (std::size_t i = 0; i < stars.size(); ++i) {
      for (Char a : stars[i]) masks[i] |= CharSet(1) << a;
      if ((masks[i] & orth) == masks[i]) inside.push_back(int(i));
    }
    for (std::size_t x = 0; x < inside.size(); ++x)
      for (std::size_t y = x + 1; y < inside.size(); ++y)
        for (std::size_t z = y + 1; z < inside.size(); ++z)
          if ((masks[inside[x]] | masks[inside[y]] | masks[inside[z]]) == orth &&
              set_size(orth) == 12 && !(masks[inside[x]] & masks[inside[y]]))
            e.star_partitions.push_back({inside[x], inside[y], inside[z]});
    for (Char n : even_chars())
      if (q_form(Char(m ^ n))) e.odd_sum_evens.push_back(n);
    d.per_even.push_back(std::move(e));
  }

  std::map<CharSet, int> star_index;
  for (std::size_t i = 0; i < stars.size(); ++i) {
    CharSet s = 0;
    for (Char a : stars[i]) s |= CharSet(1) << a;
    star_index[s] = int(i);
  }
  d.triples_per_star.assign(stars.size(), 0);
  d.triples_partition_stars = true;
  for (std::size_t a = 0; a < od.size(); ++a)
    for (std::size_t b = a + 1; b < od.size(); ++b)
      for (std::size_t c = b + 1; c < od.size(); ++c) {
        if (q_form(Char(od[a] ^ od[b])) || q_form(Char(od[a] ^ od[c])) || q_form(Char(od[b] ^ od[c]))) continue;
        d.pairwise_even_triples.push_back({od[a], od[b], od[c]});
        Char fourth = od[a] ^ od[b] ^ od[c];
        CharSet s = CharSet(1) << od[a] | CharSet(1) << od[b] | CharSet(1) << od[c] | CharSet(1) << fourth;
        auto it = star_index.find(s);
        if (it == star_index.end()) d.triples_partition_stars = false;
        else ++d.triples_per_star[it->second];
      }
  for (int k : d.triples_per_star) d.triples_partition_stars = d.triples_partition_stars && k == 4;
  return d;
}

// ---- Mumford dictionary ----

Subset8 circ(Subset8 a, Subset8 b) { return Subset8(a ^ b); }

Subset8 canonical_subset(Subset8 t) { return (t & 0x80) ? Subset8(~t) : t; }

std::vector<Subset8> even_subsets() {
  std::vector<Subset8> v;
  for (int t = 0; t < 256; ++t)
    if (popcount8(Subset8(t)) % 2 == 0) v.push_back(Subset8(t));
  return v;
}

std::string subset_to_string(Subset8 t) {
  std::string s = "{";
  for (int i = 0; i < 8; ++i)
    if (t >> i & 1) {
      if (s.size() > 1) s += ',';
      s += char('1' + i);
    }
  return s + "}";
}

static Char pair_char(int i, int j) {
  if (i == j) throw std::invalid_argument("pair needs distinct elements");
  if (i > j) std::swap(i, j);
  if (i == 1) return kBaseTable[j - 2];
  return Char(kBaseTable[i - 2] ^ kBaseTable[j - 2] ^ kMEmpty);
}

Char char_of_pairing(const std::vector<std::pair<int, int>>& pairs) {
  Char m = pairs.size() % 2 ? 0 : kMEmpty;  // (k-1) copies of m(emptyset)
  for (auto [i, j] : pairs) m ^= pair_char(i, j);
  return m;
}

Char char_of_subset(Subset8 t) {
  if (popcount8(t) % 2) throw std::invalid_argument("subset must have even cardinality");
  std::vector<int> el;
  for (int i = 0; i < 8; ++i)
    if (t >> i & 1) el.push_back(i + 1);
  std::vector<std::pair<int, int>> pairs;
  for (std::size_t k = 0; k < el.size(); k += 2) pairs.push_back({el[k], el[k + 1]});
  return char_of_pairing(pairs);
}

Subset8 subset_of_char(Char m) {
  static const std::array<Subset8, 64> table = [] {
    std::array<Subset8, 64> t{};
    std::array<bool, 64> set{};
    for (Subset8 s : even_subsets())
      if (!(s & 0x80)) {
        Char c = char_of_subset(s);
        if (set[c]) throw std::logic_error("Mumford map is not injective on classes");
        set[c] = true;
        t[c] = s;
      }
    return t;
  }();
  return table.at(m & 63);
}

// All perfect matchings of the elements of t.
static void matchings(std::vector<int> el, std::vector<std::pair<int, int>>& cur,
                      std::vector<std::vector<std::pair<int, int>>>& out) {
  if (el.empty()) {
    out.push_back(cur);
    return;
  }
  int a = el[0];
  for (std::size_t k = 1; k < el.size(); ++k) {
    std::vector<int> rest;
    for (std::size_t r = 1; r < el.size(); ++r)
      if (r != k) rest.push_back(el[r]);
    cur.push_back({a, el[k]});
    matchings(rest, cur, out);
    cur.pop_back();
  }
}

MumfordReport verify_mumford_properties() {
  MumfordReport r;
  auto subs = even_subsets();
  std::map<Char, std::vector<Subset8>> fib;
  for (Subset8 t : subs) fib[char_of_subset(t)].push_back(t);
  if (fib.size() != 64) r.a_fibers = false;
  for (auto& [m, ts] : fib)
    if (ts.size() != 2 || Subset8(~ts[0]) != ts[1]) {
      r.a_fibers = false;
      r.witness = "fiber of " + char_to_string(m);
    }
  for (Subset8 t : subs) {
    Char m = char_of_subset(t);
    bool even = !q_form(m);
    if (even != (popcount8(circ(t, kU)) % 4 == 0)) {
      r.c_parity = false;
      r.witness = "c) fails at " + subset_to_string(t);
    }
    std::vector<int> el;
    for (int i = 0; i < 8; ++i)
      if (t >> i & 1) el.push_back(i + 1);
    std::vector<std::pair<int, int>> cur;
    std::vector<std::vector<std::pair<int, int>>> all;
    matchings(el, cur, all);
    for (auto& mt : all)
      if (char_of_pairing(mt) != m) {
        r.decomposition_independent = false;
        r.witness = "pairing dependence at " + subset_to_string(t);
      }
  }
  for (Subset8 a : subs)
    for (Subset8 b : subs) {
      ++r.pairs_checked;
      Char ma = char_of_subset(a), mb = char_of_subset(b), mc = char_of_subset(circ(a, b));
      if (mc != (ma ^ mb ^ kMEmpty)) {
        r.b_composition = false;
        r.witness = "b) fails at " + subset_to_string(a) + "," + subset_to_string(b);
      }
      int lhs = (q_form(ma) + q_form(mb) + q_form(mc)) % 2;
      if (lhs != popcount8(Subset8(a & b)) % 2) {
        r.d_sign = false;
        r.witness = "d) fails at " + subset_to_string(a) + "," + subset_to_string(b);
      }
    }
  return r;
}

// ---- S8 -> O(F2^6) ----

Char F2Mat::apply(Char m) const {
  Char r = 0;
  for (int k = 0; k < 6; ++k)
    if (m >> k & 1) r ^= col[k];
  return r;
}

F2Mat f2_identity() {
  F2Mat m;
  for (int k = 0; k < 6; ++k) m.col[k] = Char(1 << k);
  return m;
}

F2Mat f2_mul(const F2Mat& a, const F2Mat& b) {
  F2Mat r;
  for (int k = 0; k < 6; ++k) r.col[k] = a.apply(b.col[k]);
  return r;
}

F2Mat perm_to_orthogonal(const Perm& sigma) {
  F2Mat m;
  Char shift = char_of_subset(apply(sigma, kU));
  for (int k = 0; k < 6; ++k) m.col[k] = char_of_subset(apply(sigma, subset_of_char(Char(1 << k)))) ^ shift;
  return m;
}

Char act(const Perm& sigma, Char m) { return perm_to_orthogonal(sigma).apply(m); }

bool literal_action_is_linear(const Perm& sigma, std::string* witness) {
  auto f = [&](Char m) { return char_of_subset(apply(sigma, subset_of_char(m))); };
  for (int a = 0; a < 64; ++a)
    for (int b = 0; b < 64; ++b)
      if (f(Char(a ^ b)) != (f(Char(a)) ^ f(Char(b)))) {
        if (witness)
          *witness = "m(sigma T) is not additive at " + char_to_string(Char(a)) + " + " + char_to_string(Char(b));
        return false;
      }
  return true;
}

bool preserves_q(const F2Mat& m) {
  for (int a = 0; a < 64; ++a)
    if (q_form(m.apply(Char(a))) != q_form(Char(a))) return false;
  return true;
}

Char t_ij_char(int i, int j) {
  if (i == j || i < 1 || j < 1 || i > 8 || j > 8) throw std::invalid_argument("t_ij needs distinct indices in 1..8");
  return char_of_subset(circ(kU, Subset8(1u << (i - 1) | 1u << (j - 1))));
}

// ---- chi layer ----

ChiLayerReport chi_layer() {
  ChiLayerReport r;
  auto maxs = singular_subspaces(3);
  MatQ diffs;
  for (std::size_t i = 1; i < maxs.size(); ++i) {
    std::vector<mpq_class> v(64);
    for (int x = 0; x < 64; ++x) v[x] = int(maxs[i].members >> x & 1) - int(maxs[0].members >> x & 1);
    diffs.push_back(v);
  }
  r.span_dim = rank_q(diffs);
  for (auto& line : singular_subspaces(1)) {
    ++r.lines_tested;
    std::vector<CharSet> I;
    for (auto& s : maxs)
      if ((s.members & line.members) == line.members) I.push_back(s.members);
    if (I.size() != 6) {
      r.six_through_each = false;
      r.offending = char_to_string(line.basis[0]);
      continue;
    }
    std::array<int, 6> p{0, 1, 2, 3, 4, 5};
    bool lin = false, quad = false;
    auto chi = [&](int k, int x) { return int(I[p[k]] >> x & 1); };
    do {
      bool l = true, q = true;
      for (int x = 0; x < 64; ++x) {
        l = l && chi(0, x) - chi(1, x) + chi(2, x) - chi(3, x) + chi(4, x) - chi(5, x) == 0;
        q = q && (chi(0, x) - chi(1, x)) * (chi(0, x) - chi(3, x)) ==
                     (chi(2, x) - chi(5, x)) * (chi(4, x) - chi(5, x));
      }
      lin = lin || l;
      quad = quad || q;
    } while (!(lin && quad) && std::next_permutation(p.begin(), p.end()));
    r.linear_orderings_found += lin;
    r.quadratic_orderings_found += quad;
    if ((!lin || !quad) && r.offending.empty()) r.offending = char_to_string(line.basis[0]);
  }
  return r;
}

}  // namespace h8
