#pragma once

#include <array>
#include <cstdint>
#include <random>
#include <string>
#include <vector>

namespace h8 {

// Permutation of {1..8}: p[i-1] = p(i).
using Perm = std::array<int, 8>;

Perm identity_perm();
Perm compose(const Perm& a, const Perm& b);  // (a*b)(x) = a(b(x))
Perm inverse(const Perm& a);
int perm_sign(const Perm& a);
Perm transposition(int i, int j);
Perm eight_cycle();  // 1->2->...->8->1
Perm random_perm(std::mt19937_64& rng);
std::vector<Perm> all_perms();
std::string perm_to_string(const Perm& a);  // one-line notation

// Subsets of {1..8}: bit i-1 marks element i.
using Subset8 = std::uint8_t;
Subset8 apply(const Perm& p, Subset8 s);
int popcount8(Subset8 s);

}  // namespace h8
