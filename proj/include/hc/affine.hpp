#pragma once

#include "hc/params.hpp"
#include "hc/perm.hpp"

#include <map>
#include <string>
#include <vector>

namespace hc {

// PBW monomial X^alpha C^beta T_w (nondegenerate) or x^alpha c^beta w
// (degenerate, alpha >= 0).
struct PBWKey {
    std::vector<int> alpha;
    uint32_t beta = 0;
    Perm w;

    bool operator<(const PBWKey& o) const {
        if (alpha != o.alpha) return alpha < o.alpha;
        if (beta != o.beta) return beta < o.beta;
        return w < o.w;
    }
    bool operator==(const PBWKey& o) const {
        return alpha == o.alpha && beta == o.beta && w == o.w;
    }
};

// Normal-form linear combination of PBW monomials in the affine algebra.
class AffineElement {
public:
    AffineElement() = default;
    AffineElement(Flavor f, int n) : flavor_(f), n_(n) {}

    static AffineElement zero(Flavor f, int n) { return AffineElement(f, n); }
    static AffineElement scalar(Flavor f, int n, const Scalar& c);
    static AffineElement one(Flavor f, int n) { return scalar(f, n, Scalar(1)); }
    static AffineElement gen_X(Flavor f, int n, int i, int power = 1);
    static AffineElement gen_C(Flavor f, int n, int i);
    static AffineElement gen_T(Flavor f, int n, int i);
    static AffineElement monomial(Flavor f, int n, const PBWKey& key, const Scalar& c);

    Flavor flavor() const { return flavor_; }
    int n() const { return n_; }
    const std::map<PBWKey, Scalar>& terms() const { return terms_; }
    bool is_zero(const Real& eps) const;
    bool is_zero() const { return is_zero(tol()); }

    AffineElement operator+(const AffineElement& o) const;
    AffineElement operator-(const AffineElement& o) const;
    AffineElement operator-() const;
    AffineElement operator*(const Scalar& c) const;
    void add_term(const PBWKey& key, const Scalar& c);

    bool near(const AffineElement& o, const Real& eps) const { return (*this - o).is_zero(eps); }
    bool near(const AffineElement& o) const { return near(o, tol()); }

    std::string str() const;

private:
    Flavor flavor_ = Flavor::NonDegenerate;
    int n_ = 0;
    std::map<PBWKey, Scalar> terms_;
};

// Normal-form product, straightening via the defining relations. eps is
// q - q^{-1}; the degenerate flavor ignores it.
AffineElement mul(const AffineElement& a, const AffineElement& b, const Params& p);

// The anti-involution *: T_i -> T_i + eps C_i C_{i+1}, X and C fixed
// (degenerate: all generators fixed), products reversed.
AffineElement star(const AffineElement& a, const Params& p);

// Intertwining elements.
AffineElement intertwiner_tilde(int i, const Params& p);
AffineElement intertwiner_fn(int i, const Scalar& x, const Scalar& y, const Params& p);

// The cyclotomic polynomial f(X_1) resp. g(x_1) as an affine element.
AffineElement cyclotomic_poly(const Params& p);

} // namespace hc
