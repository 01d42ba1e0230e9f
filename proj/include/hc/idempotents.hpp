#pragma once

#include "hc/rep.hpp"

#include <map>

namespace hc {

// (tableau, alpha, beta) index of a primitive idempotent / module vector.
struct Triple {
    int block = 0;
    int tab = 0;
    uint32_t alpha = 0;
    uint32_t beta = 0;

    bool operator==(const Triple& o) const {
        return block == o.block && tab == o.tab && alpha == o.alpha && beta == o.beta;
    }
    bool operator<(const Triple& o) const {
        if (block != o.block) return block < o.block;
        if (tab != o.tab) return tab < o.tab;
        if (alpha != o.alpha) return alpha < o.alpha;
        return beta < o.beta;
    }
};

enum class IsoClass { EvenlyIsomorphic, PiShifted, DifferentBlock };

class Idempotents {
public:
    explicit Idempotents(const Rep& rep);

    const Rep& rep() const { return rep_; }

    // Eigenvalue sets B(k) resp. U(k), deduplicated; 1-based k.
    const std::vector<Scalar>& eigen_set(int k) const { return bsets_[static_cast<size_t>(k - 1)]; }

    std::vector<Triple> tri0(int block) const;
    std::vector<Triple> tri(int block) const;
    std::vector<Triple> tri0_all() const;
    int sector(const Triple& T) const;
    Triple shift(const Triple& T, int a) const; // T_a, requires d_lambda = 1
    Triple hat_triple(const Triple& T) const;

    const BlockOp& F(const Triple& T) const;
    BlockOp F_lambda(int block) const;
    int block_of(const Triple& T) const { return T.block; }
    IsoClass iso_class(const Triple& T, const Triple& S) const;

    // Sum over alpha in sector 0 of F_{(t,alpha,beta)}; equals the bare
    // eigenvalue product without any Clifford factor.
    BlockOp F_tab_beta(int block, int tab, uint32_t beta) const;
    // Addable-box eigenvalue product (degenerate Sergeev comparison).
    BlockOp kms_E(int block, int tab, uint32_t beta) const;

    long expected_count(int block) const; // 2^{n - ceil(t'/2)} |Std|

private:
    const Rep& rep_;
    std::vector<std::vector<Scalar>> bsets_;
    mutable std::map<Triple, BlockOp> cache_;
    mutable std::map<std::tuple<int, int, uint32_t>, BlockOp> xprod_cache_;

    const BlockOp& x_product(int block, int tab, uint32_t beta) const;
    Scalar plus_eigen(int block, int tab, int k) const; // b_+ resp. u_+
};

} // namespace hc
