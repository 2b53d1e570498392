#include "h8/perm.hpp"

#include <algorithm>
#include <bit>
#include <numeric>

namespace h8 {

Perm identity_perm() {
  Perm p;
  std::iota(p.begin(), p.end(), 1);
  return p;
}

Perm compose(const Perm& a, const Perm& b) {
  Perm r;
  for (int i = 0; i < 8; ++i) r[i] = a[b[i] - 1];
  return r;
}

Perm inverse(const Perm& a) {
  Perm r;
  for (int i = 0; i < 8; ++i) r[a[i] - 1] = i + 1;
  return r;
}

int perm_sign(const Perm& a) {
  int inv = 0;
  for (int i = 0; i < 8; ++i)
    for (int j = i + 1; j < 8; ++j) inv += a[i] > a[j];
  return inv % 2 ? -1 : 1;
}

Perm transposition(int i, int j) {
  Perm p = identity_perm();
  std::swap(p[i - 1], p[j - 1]);
  return p;
}

Perm eight_cycle() {
  Perm p;
  for (int i = 0; i < 8; ++i) p[i] = (i + 1) % 8 + 1;
  return p;
}

Perm random_perm(std::mt19937_64& rng) {
  Perm p = identity_perm();
  for (int i = 7; i > 0; --i) {
    std::uniform_int_distribution<int> d(0, i);
    std::swap(p[i], p[d(rng)]);
  }
  return p;
}

std::vector<Perm> all_perms() {
  std::vector<Perm> out;
  Perm p = identity_perm();
  do out.push_back(p);
  while (std::next_permutation(p.begin(), p.end()));
  return out;
}

std::string perm_to_string(const Perm& a) {
  std::string s = "[";
  for (int i = 0; i < 8; ++i) s += char('0' + a[i]);
  return s + "]";
}

Subset8 apply(const Perm& p, Subset8 s) {
  Subset8 r = 0;
  for (int i = 0; i < 8; ++i)
    if (s >> i & 1) r |= Subset8(1u << (p[i] - 1));
  return r;
}

int popcount8(Subset8 s) { return std::popcount(unsigned(s)); }

}  // namespace h8
