#include "hc/params.hpp"

namespace hc {

std::string to_string(Flavor f) {
    return f == Flavor::NonDegenerate ? "nondegenerate" : "degenerate";
}

std::string to_string(Bullet b) {
    switch (b) {
        case Bullet::Zero: return "0";
        case Bullet::S: return "s";
        default: return "ss";
    }
}

int Params::level() const {
    switch (bullet) {
        case Bullet::Zero: return 2 * m;
        case Bullet::S: return 2 * m + 1;
        default: return 2 * m + 2;
    }
}

Scalar Params::epsilon() const { return q - q.inv(); }

Scalar Params::q_label(int l) const {
    if (l >= 1) return Q.at(static_cast<size_t>(l - 1));
    if (flavor == Flavor::Degenerate) return Scalar(0); // Q_0 = 0
    if (l == -1) return Scalar(-1);                     // Q_{0-} = -1
    return Scalar(1);                                   // Q_0 = Q_{0+} = 1
}

void Params::validate() const {
    if (n < 1) throw std::invalid_argument("n must be >= 1");
    if (m < 0) throw std::invalid_argument("m must be >= 0");
    if (static_cast<int>(Q.size()) != m)
        throw std::invalid_argument("Q must have exactly m entries");
    if (flavor == Flavor::Degenerate) {
        if (bullet == Bullet::SS)
            throw std::invalid_argument("type ss is not defined in the degenerate flavor");
    } else {
        Scalar q2 = q * q;
        if (q.is_zero() || q2.near(Scalar(1)) || q2.near(Scalar(-1)))
            throw std::invalid_argument("q must satisfy q^2 not in {0, +1, -1}");
        for (const auto& Ql : Q)
            if (Ql.is_zero())
                throw std::invalid_argument("Q parameters must be nonzero (nondegenerate)");
    }
}

Scalar q_of(const Scalar& iota, const Params& p) {
    if (p.flavor == Flavor::Degenerate) return iota * (iota + Scalar(1));
    if (iota.is_zero()) throw std::domain_error("q_of: iota must be invertible");
    Scalar qi = p.q * iota;
    return Scalar(2) * (qi + qi.inv()) / (p.q + p.q.inv());
}

Scalar b_pm(const Scalar& iota, int sign, const Params& p) {
    if (p.flavor != Flavor::NonDegenerate) throw std::domain_error("b_pm: nondegenerate only");
    Scalar h = q_of(iota, p) / Scalar(2);
    Scalar root = sqrt_principal(h * h - Scalar(1));
    return sign >= 0 ? h + root : h - root;
}

Scalar u_pm(const Scalar& iota, int sign) {
    Scalar root = sqrt_principal(iota * (iota + Scalar(1)));
    return sign >= 0 ? root : -root;
}

Scalar deformed_qint(long k, int l, const Params& p) {
    if (p.flavor != Flavor::NonDegenerate)
        throw std::domain_error("deformed_qint: nondegenerate only");
    Scalar Ql = p.q_label(l);
    Scalar q2 = p.q * p.q;
    return (Ql * q2.pow(k) - Ql.inv() * q2.pow(-k)) / (q2 - q2.inv());
}

bool idempotency_condition(const Scalar& x, const Scalar& y, const Params& p) {
    if (p.flavor == Flavor::NonDegenerate) {
        if (y.near(x) || y.near(x.inv()))
            throw std::domain_error("idempotency_condition: y in {x, x^-1}");
        Scalar a = x.inv() * y, b = x * y;
        Scalar lhs = a / ((a - Scalar(1)) * (a - Scalar(1))) + b / ((b - Scalar(1)) * (b - Scalar(1)));
        Scalar eps = p.epsilon();
        return lhs.near((eps * eps).inv());
    }
    if (y.near(x) || y.near(-x))
        throw std::domain_error("idempotency_condition: y in {x, -x}");
    Scalar d = x - y, s = x + y;
    Scalar lhs = (d * d).inv() + (s * s).inv();
    return lhs.near(Scalar(1));
}

} // namespace hc
