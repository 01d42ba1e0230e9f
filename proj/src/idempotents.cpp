#include "hc/idempotents.hpp"

namespace hc {

namespace {
int nu(uint32_t mask, int k) { return has_bit(mask, k) ? -1 : 1; }
} // namespace

Idempotents::Idempotents(const Rep& rep) : rep_(rep) {
    const Params& p = rep_.params();
    bsets_.resize(static_cast<size_t>(p.n));
    for (int k = 1; k <= p.n; ++k) {
        std::vector<Scalar>& set = bsets_[static_cast<size_t>(k - 1)];
        for (int b = 0; b < rep_.num_blocks(); ++b) {
            const auto& mod = rep_.module(b);
            for (int t = 0; t < static_cast<int>(mod.tabs().size()); ++t) {
                const Scalar& e = mod.eig(t, k);
                Scalar other = p.flavor == Flavor::NonDegenerate ? e.inv() : -e;
                for (const Scalar& cand : {e, other}) {
                    bool found = false;
                    for (const auto& x : set)
                        if (x.near(cand)) { found = true; break; }
                    if (!found) set.push_back(cand);
                }
            }
        }
    }
}

Scalar Idempotents::plus_eigen(int block, int tab, int k) const {
    const Scalar& e = rep_.module(block).eig(tab, k);
    // eig stores b_- in the nondegenerate flavor and u_+ in the degenerate one.
    return rep_.params().flavor == Flavor::NonDegenerate ? e.inv() : e;
}

std::vector<Triple> Idempotents::tri0(int block) const {
    std::vector<Triple> out;
    const auto& mod = rep_.module(block);
    for (int t = 0; t < static_cast<int>(mod.tabs().size()); ++t) {
        auto z = z2_sets(mod.diag()[static_cast<size_t>(t)], rep_.params().n);
        for (uint32_t alpha : z.alpha_even)
            for (uint32_t beta : z.beta) out.push_back(Triple{block, t, alpha, beta});
    }
    return out;
}

std::vector<Triple> Idempotents::tri(int block) const {
    std::vector<Triple> out;
    const auto& mod = rep_.module(block);
    for (int t = 0; t < static_cast<int>(mod.tabs().size()); ++t) {
        auto z = z2_sets(mod.diag()[static_cast<size_t>(t)], rep_.params().n);
        for (uint32_t alpha : z.alpha)
            for (uint32_t beta : z.beta) out.push_back(Triple{block, t, alpha, beta});
    }
    return out;
}

std::vector<Triple> Idempotents::tri0_all() const {
    std::vector<Triple> out;
    for (int b = 0; b < rep_.num_blocks(); ++b)
        for (const auto& T : tri0(b)) out.push_back(T);
    return out;
}

int Idempotents::sector(const Triple& T) const {
    return sector_of(T.alpha, rep_.module(T.block).diag()[static_cast<size_t>(T.tab)]);
}

Triple Idempotents::shift(const Triple& T, int a) const {
    const auto& dd = rep_.module(T.block).diag()[static_cast<size_t>(T.tab)];
    if (dd.d_lambda != 1) throw std::logic_error("shift: d_lambda must be 1");
    Triple r = T;
    uint32_t base = T.alpha & ~bit_of(dd.last_entry());
    r.alpha = (a % 2) ? (base | bit_of(dd.last_entry())) : base;
    return r;
}

Triple Idempotents::hat_triple(const Triple& T) const {
    const auto& dd = rep_.module(T.block).diag()[static_cast<size_t>(T.tab)];
    Triple r = T;
    r.alpha = hat(T.alpha, dd, sector_of(T.alpha, dd));
    return r;
}

const BlockOp& Idempotents::x_product(int block, int tab, uint32_t beta) const {
    auto key = std::make_tuple(block, tab, beta);
    auto it = xprod_cache_.find(key);
    if (it != xprod_cache_.end()) return it->second;
    const Params& p = rep_.params();
    BlockOp acc = rep_.identity();
    for (int k = 1; k <= p.n; ++k) {
        Scalar sel = plus_eigen(block, tab, k);
        BlockOp xk = rep_.zero();
        if (p.flavor == Flavor::NonDegenerate) {
            xk = nu(beta, k) > 0 ? rep_.gen_X(k) : rep_.gen_Xinv(k);
        } else {
            xk = rep_.gen_X(k) * Scalar(nu(beta, k));
        }
        for (const auto& b : eigen_set(k)) {
            if (b.near(sel)) continue;
            Scalar denom = sel - b;
            if (denom.is_zero())
                throw std::runtime_error("idempotent denominator vanished: separateness violation");
            acc = acc * ((xk - rep_.identity() * b) * denom.inv());
        }
    }
    return xprod_cache_.emplace(key, std::move(acc)).first->second;
}

const BlockOp& Idempotents::F(const Triple& T) const {
    auto it = cache_.find(T);
    if (it != cache_.end()) return it->second;
    const auto& mod = rep_.module(T.block);
    const auto& dd = mod.diag()[static_cast<size_t>(T.tab)];
    CliffordElement cf = CliffordElement::monomial(T.alpha) * gamma_of(dd) * mono_inverse(T.alpha);
    BlockOp op = rep_.clifford_op(cf) * x_product(T.block, T.tab, T.beta);
    return cache_.emplace(T, std::move(op)).first->second;
}

BlockOp Idempotents::F_lambda(int block) const {
    BlockOp acc = rep_.zero();
    for (const auto& T : tri0(block)) acc = acc + F(T);
    return acc;
}

IsoClass Idempotents::iso_class(const Triple& T, const Triple& S) const {
    if (T.block != S.block) return IsoClass::DifferentBlock;
    const auto& dd = rep_.module(T.block).diag()[static_cast<size_t>(T.tab)];
    if (dd.d_lambda == 1) return IsoClass::EvenlyIsomorphic;
    int pt = (popcount_upto(T.alpha, rep_.params().n) + popcount_upto(T.beta, rep_.params().n)) % 2;
    int ps = (popcount_upto(S.alpha, rep_.params().n) + popcount_upto(S.beta, rep_.params().n)) % 2;
    return pt == ps ? IsoClass::EvenlyIsomorphic : IsoClass::PiShifted;
}

BlockOp Idempotents::F_tab_beta(int block, int tab, uint32_t beta) const {
    BlockOp acc = rep_.zero();
    const auto& mod = rep_.module(block);
    auto z = z2_sets(mod.diag()[static_cast<size_t>(tab)], rep_.params().n);
    for (uint32_t alpha : z.alpha_even) acc = acc + F(Triple{block, tab, alpha, beta});
    return acc;
}

BlockOp Idempotents::kms_E(int block, int tab, uint32_t beta) const {
    const Params& p = rep_.params();
    if (p.flavor != Flavor::Degenerate)
        throw std::logic_error("kms_E is defined for the degenerate flavor");
    const auto& mod = rep_.module(block);
    const auto& t = mod.tabs()[static_cast<size_t>(tab)];
    BlockOp acc = rep_.identity();
    for (int k = 1; k <= p.n; ++k) {
        Scalar sel = plus_eigen(block, tab, k);
        std::vector<Scalar> uset;
        auto partial = partial_shape_rows(t, k - 1);
        for (const auto& gamma : addable_boxes(t.shape, partial)) {
            Scalar r = residue(gamma, t.shape, p);
            for (int sgn : {+1, -1}) {
                Scalar cand = u_pm(r, sgn);
                bool found = false;
                for (const auto& x : uset)
                    if (x.near(cand)) { found = true; break; }
                if (!found) uset.push_back(cand);
            }
        }
        BlockOp xk = rep_.gen_X(k) * Scalar(nu(beta, k));
        for (const auto& u : uset) {
            if (u.near(sel)) continue;
            acc = acc * ((xk - rep_.identity() * u) * (sel - u).inv());
        }
    }
    return acc;
}

long Idempotents::expected_count(int block) const {
    const auto& mod = rep_.module(block);
    int tprime = static_cast<int>(mod.shape().diagonal_boxes().size());
    long nstd = static_cast<long>(mod.tabs().size());
    return (1L << (rep_.params().n - (tprime + 1) / 2)) * nstd;
}

} // namespace hc
