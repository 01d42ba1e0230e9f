#pragma once

#include <cstdint>
#include <vector>

namespace hc {

// Permutations of {1..n} in one-line notation, 1-based: w[i-1] = w(i).
using Perm = std::vector<int>;

Perm perm_identity(int n);
bool perm_is_identity(const Perm& w);
Perm perm_compose(const Perm& u, const Perm& v); // (u*v)(i) = u(v(i))
Perm perm_inverse(const Perm& w);
Perm perm_transposition(int n, int i); // s_i
int perm_length(const Perm& w);        // inversion count

// Lexicographically smallest reduced word [k1,...,kp] with w = s_{k1}...s_{kp}.
std::vector<int> reduced_word(const Perm& w);

// All reduced words of w (desk scale only).
std::vector<std::vector<int>> all_reduced_words(const Perm& w);

// Bitmask helpers for Z_2^n vectors; bit (k-1) encodes coordinate k.
inline uint32_t bit_of(int k) { return 1u << (k - 1); }
inline bool has_bit(uint32_t m, int k) { return (m >> (k - 1)) & 1u; }
int popcount_below(uint32_t mask, int i);  // |beta|_{<i}
int popcount_upto(uint32_t mask, int i);   // |beta|_{<=i}
int popcount_above(uint32_t mask, int i);  // |beta|_{>i}
int popcount_from(uint32_t mask, int i);   // |beta|_{>=i}
uint32_t perm_apply_mask(const Perm& w, uint32_t mask);

} // namespace hc
