#include "hc/perm.hpp"

#include <bit>
#include <functional>

namespace hc {

Perm perm_identity(int n) {
    Perm w(static_cast<size_t>(n));
    for (int i = 1; i <= n; ++i) w[static_cast<size_t>(i - 1)] = i;
    return w;
}

bool perm_is_identity(const Perm& w) {
    for (size_t i = 0; i < w.size(); ++i)
        if (w[i] != static_cast<int>(i) + 1) return false;
    return true;
}

Perm perm_compose(const Perm& u, const Perm& v) {
    Perm r(v.size());
    for (size_t i = 0; i < v.size(); ++i) r[i] = u[static_cast<size_t>(v[i] - 1)];
    return r;
}

Perm perm_inverse(const Perm& w) {
    Perm r(w.size());
    for (size_t i = 0; i < w.size(); ++i) r[static_cast<size_t>(w[i] - 1)] = static_cast<int>(i) + 1;
    return r;
}

Perm perm_transposition(int n, int i) {
    Perm w = perm_identity(n);
    std::swap(w[static_cast<size_t>(i - 1)], w[static_cast<size_t>(i)]);
    return w;
}

int perm_length(const Perm& w) {
    int inv = 0;
    for (size_t i = 0; i < w.size(); ++i)
        for (size_t j = i + 1; j < w.size(); ++j)
            if (w[i] > w[j]) ++inv;
    return inv;
}

std::vector<int> reduced_word(const Perm& w) {
    // First letter s_i of a reduced word of w exists iff w^{-1}(i) > w^{-1}(i+1).
    std::vector<int> word;
    Perm cur = w;
    int n = static_cast<int>(w.size());
    while (!perm_is_identity(cur)) {
        Perm inv = perm_inverse(cur);
        for (int i = 1; i < n; ++i) {
            if (inv[static_cast<size_t>(i - 1)] > inv[static_cast<size_t>(i)]) {
                word.push_back(i);
                cur = perm_compose(perm_transposition(n, i), cur);
                break;
            }
        }
    }
    return word;
}

std::vector<std::vector<int>> all_reduced_words(const Perm& w) {
    std::vector<std::vector<int>> out;
    int n = static_cast<int>(w.size());
    std::vector<int> word;
    std::function<void(const Perm&)> go = [&](const Perm& cur) {
        if (perm_is_identity(cur)) {
            out.push_back(word);
            return;
        }
        Perm inv = perm_inverse(cur);
        for (int i = 1; i < n; ++i) {
            if (inv[static_cast<size_t>(i - 1)] > inv[static_cast<size_t>(i)]) {
                word.push_back(i);
                go(perm_compose(perm_transposition(n, i), cur));
                word.pop_back();
            }
        }
    };
    go(w);
    return out;
}

int popcount_below(uint32_t mask, int i) {
    if (i <= 1) return 0;
    return std::popcount(mask & ((1u << (i - 1)) - 1u));
}

int popcount_upto(uint32_t mask, int i) {
    if (i <= 0) return 0;
    return std::popcount(mask & ((i >= 32) ? ~0u : ((1u << i) - 1u)));
}

int popcount_above(uint32_t mask, int i) { return std::popcount(mask) - popcount_upto(mask, i); }

int popcount_from(uint32_t mask, int i) { return std::popcount(mask) - popcount_below(mask, i); }

uint32_t perm_apply_mask(const Perm& w, uint32_t mask) {
    uint32_t r = 0;
    for (int k = 1; k <= static_cast<int>(w.size()); ++k)
        if (has_bit(mask, k)) r |= bit_of(w[static_cast<size_t>(k - 1)]);
    return r;
}

} // namespace hc
