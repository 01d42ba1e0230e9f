#pragma once

#include "hc/scalar.hpp"

#include <string>
#include <vector>

namespace hc {

enum class Flavor { NonDegenerate, Degenerate };
enum class Bullet { Zero, S, SS };

std::string to_string(Flavor f);
std::string to_string(Bullet b);

// Defining data of one cyclotomic Hecke-Clifford / Sergeev algebra instance.
// Component labels l: -1 and 0 are the strict components (SS), 0 the strict
// component (S), 1..m the ordinary ones carrying user parameters Q_1..Q_m.
struct Params {
    Flavor flavor = Flavor::NonDegenerate;
    Bullet bullet = Bullet::S;
    int m = 0;
    Scalar q;                // NonDegenerate only
    std::vector<Scalar> Q;   // Q_1..Q_m
    int n = 1;

    int level() const;       // degree r of the cyclotomic polynomial
    Scalar epsilon() const;  // q - q^{-1}
    Scalar q_label(int l) const; // Q_l including the fixed labels -1, 0

    // Throws std::invalid_argument naming the violated invariant.
    void validate() const;
};

// Spectral scalar functions.
Scalar q_of(const Scalar& iota, const Params& p);
Scalar b_pm(const Scalar& iota, int sign, const Params& p);
Scalar u_pm(const Scalar& iota, int sign);
Scalar deformed_qint(long k, int l, const Params& p);
bool idempotency_condition(const Scalar& x, const Scalar& y, const Params& p);

} // namespace hc
