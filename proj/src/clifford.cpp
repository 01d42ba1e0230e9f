#include "hc/clifford.hpp"

#include <bit>
#include <sstream>

namespace hc {

std::pair<uint32_t, int> mono_mul_mask(uint32_t a, uint32_t b) {
    // Insert generators of b (ascending) into a, counting transpositions.
    int swaps = 0;
    uint32_t cur = a;
    for (uint32_t rest = b; rest;) {
        uint32_t low = rest & (~rest + 1);
        rest ^= low;
        // C_low passes every generator of cur with index greater than low.
        uint32_t above = cur & ~((low << 1) - 1);
        swaps += std::popcount(above);
        cur ^= low; // annihilates (C^2=1) or inserts
    }
    return {cur, (swaps % 2) ? -1 : 1};
}

CliffordElement CliffordElement::monomial(uint32_t mask, const Scalar& c) {
    CliffordElement e;
    if (!c.is_zero()) e.terms_[mask] = c;
    return e;
}

Scalar CliffordElement::coeff(uint32_t mask) const {
    auto it = terms_.find(mask);
    return it == terms_.end() ? Scalar(0) : it->second;
}

void CliffordElement::add_term(uint32_t mask, const Scalar& c) {
    auto it = terms_.find(mask);
    if (it == terms_.end()) {
        if (!c.is_zero()) terms_[mask] = c;
        return;
    }
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
}

CliffordElement CliffordElement::operator+(const CliffordElement& o) const {
    CliffordElement r = *this;
    for (const auto& [m, c] : o.terms_) r.add_term(m, c);
    return r;
}

CliffordElement CliffordElement::operator-(const CliffordElement& o) const {
    CliffordElement r = *this;
    for (const auto& [m, c] : o.terms_) r.add_term(m, -c);
    return r;
}

CliffordElement CliffordElement::operator*(const CliffordElement& o) const {
    CliffordElement r;
    for (const auto& [ma, ca] : terms_)
        for (const auto& [mb, cb] : o.terms_) {
            auto [m, s] = mono_mul_mask(ma, mb);
            r.add_term(m, s > 0 ? ca * cb : -(ca * cb));
        }
    return r;
}

CliffordElement CliffordElement::operator*(const Scalar& c) const {
    CliffordElement r;
    if (c.is_zero()) return r;
    for (const auto& [m, x] : terms_) r.terms_[m] = x * c;
    return r;
}

bool CliffordElement::near(const CliffordElement& o, const Real& eps) const {
    CliffordElement d = *this - o;
    for (const auto& [m, c] : d.terms_)
        if (!c.is_zero(eps)) return false;
    return true;
}

std::string CliffordElement::str() const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [m, c] : terms_) {
        if (!first) os << " + ";
        first = false;
        os << "(" << c.str(6) << ")";
        for (int k = 1; k <= 32; ++k)
            if (has_bit(m, k)) os << "C" << k;
    }
    return os.str();
}

CliffordElement mono_inverse(uint32_t mask) {
    int k = std::popcount(mask);
    int sign = ((k * (k - 1) / 2) % 2) ? -1 : 1;
    return CliffordElement::monomial(mask, Scalar(sign));
}

std::vector<CliffordElement> primitive_idempotents(int n) {
    if (n < 1) throw std::invalid_argument("primitive_idempotents: n >= 1");
    if (n == 1) return {CliffordElement::one()};
    std::vector<CliffordElement> out{CliffordElement::one()};
    Scalar half = Scalar(1) / Scalar(2);
    for (int k = 1; k <= n / 2; ++k) {
        CliffordElement cc =
            CliffordElement::generator(2 * k - 1) * CliffordElement::generator(2 * k);
        std::vector<CliffordElement> next;
        for (const auto& e : out)
            for (int a : {0, 1}) {
                Scalar s = (a == 0) ? Scalar::i() : -Scalar::i();
                next.push_back(e * ((CliffordElement::one() + cc * s) * half));
            }
        out = std::move(next);
    }
    return out;
}

CliffordElement gamma_of(const DiagonalData& dd) {
    CliffordElement g = CliffordElement::one();
    Scalar half = Scalar(1) / Scalar(2);
    for (int k = 1; k <= dd.t_count / 2; ++k) {
        int a = dd.diag_entries[static_cast<size_t>(2 * k - 2)];
        int b = dd.diag_entries[static_cast<size_t>(2 * k - 1)];
        CliffordElement cc = CliffordElement::generator(a) * CliffordElement::generator(b);
        g = g * ((CliffordElement::one() + cc * Scalar::i()) * half);
    }
    return g;
}

CliffordElement conjugator(const CliffordElement& g1, const CliffordElement& g2, int n) {
    // Candidates per Lemma: odd-index monomials, optionally times the last
    // odd generator when n is odd.
    uint32_t odd_support = 0;
    for (int k = 1; k <= n / 2; ++k) odd_support |= bit_of(2 * k - 1);
    for (uint32_t base : subsets_of(odd_support)) {
        for (uint32_t mask : {base, base | bit_of(n)}) {
            if (mask != base && n % 2 == 0) continue;
            CliffordElement M = CliffordElement::monomial(mask);
            if ((M * g1 * mono_inverse(mask)).near(g2)) return M;
        }
    }
    throw std::runtime_error("conjugator: no odd-index monomial conjugates g1 to g2");
}

} // namespace hc
