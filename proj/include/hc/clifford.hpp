#pragma once

#include "hc/combinatorics.hpp"
#include "hc/scalar.hpp"

#include <map>

namespace hc {

// Element of the Clifford algebra C_n. Monomials are kept in normal form
// C^beta with strictly increasing generator indices, keyed by bitmask.
class CliffordElement {
public:
    CliffordElement() = default;
    explicit CliffordElement(const Scalar& c) { if (!c.is_zero()) terms_[0] = c; }

    static CliffordElement one() { return CliffordElement(Scalar(1)); }
    static CliffordElement monomial(uint32_t mask, const Scalar& c = Scalar(1));
    static CliffordElement generator(int i) { return monomial(bit_of(i)); }

    const std::map<uint32_t, Scalar>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    Scalar coeff(uint32_t mask) const;

    CliffordElement operator+(const CliffordElement& o) const;
    CliffordElement operator-(const CliffordElement& o) const;
    CliffordElement operator*(const CliffordElement& o) const;
    CliffordElement operator*(const Scalar& c) const;

    bool near(const CliffordElement& o, const Real& eps) const;
    bool near(const CliffordElement& o) const { return near(o, tol()); }

    std::string str() const;

private:
    std::map<uint32_t, Scalar> terms_;
    void add_term(uint32_t mask, const Scalar& c);
    friend CliffordElement mono_mul(uint32_t a, uint32_t b, Scalar c);
};

// Product C^a * C^b in normal form (sign from anticommutation, C_i^2 = 1).
std::pair<uint32_t, int> mono_mul_mask(uint32_t a, uint32_t b);

// Inverse of the monomial C^mask: reversal sign times the same monomial.
CliffordElement mono_inverse(uint32_t mask);

// The complete set I_n of super primitive idempotents of C_n.
std::vector<CliffordElement> primitive_idempotents(int n);

// gamma for a tableau: product of (1 + i C_{d(i_{2k-1})} C_{d(i_{2k})}) / 2.
CliffordElement gamma_of(const DiagonalData& dd);

// The unique odd-index monomial conjugating g1 into g2: M g1 M^{-1} = g2.
CliffordElement conjugator(const CliffordElement& g1, const CliffordElement& g2, int n);

} // namespace hc
