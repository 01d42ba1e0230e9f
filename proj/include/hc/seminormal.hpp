#pragma once

#include "hc/idempotents.hpp"

namespace hc {

// Intertwiner walks, seminormal basis elements, their laws, and the
// subalgebra machinery built on top of them.
class Seminormal {
public:
    Seminormal(const Rep& rep, Idempotents& idem);

    const Rep& rep() const { return rep_; }
    Idempotents& idem() const { return idem_; }

    // One intertwiner factor Phi_i(x,y) resp. phi_i(x,y) as an operator.
    BlockOp phi_factor(int i, const Scalar& x, const Scalar& y) const;

    // Ordered intertwiner product along d(s,t) and its coefficient; both
    // are reduced-word independent (tested), the chooser is deterministic.
    BlockOp phi_st(int block, int s_tab, int t_tab) const;
    Scalar c_st(int block, int s_tab, int t_tab) const;

    // Seminormal basis elements. The column index is the base triple T in
    // sector 0 shifted by a (a is ignored for d_lambda = 0 blocks).
    BlockOp f_w(const Triple& S, const Triple& T, int a, int w_tab) const;
    BlockOp f(const Triple& S, const Triple& T, int a) const;
    Scalar c_T_w(const Triple& T, int w_tab) const;
    int typeq_sign(const Triple& S, const Triple& T, int a) const;

    // Predicted expansion of a generator acting on the left of f_{T,S_a}:
    // terms (coeff, T', a') with g . f_{T,S_a} = sum coeff * f_{T',S_{a'}}.
    struct FTerm {
        Scalar coeff;
        Triple T;
        int a;
    };
    std::vector<FTerm> predict_X(int i, const Triple& T, const Triple& S, int a) const;
    std::vector<FTerm> predict_C(int i, const Triple& T, const Triple& S, int a) const;
    std::vector<FTerm> predict_T(int i, const Triple& T, const Triple& S, int a) const;

    // Star duality data: (f_{S,T_a})^* = sign * f_{hat(T), hat(S_a)}.
    struct StarImage {
        Triple left;  // hat(T), sector-0 base
        Triple right; // hat(S_a) base
        int a;
        int sign;
    };
    StarImage star_image(const Triple& S, const Triple& T, int a) const;

private:
    const Rep& rep_;
    Idempotents& idem_;

    const SimpleModule& mod(int block) const { return rep_.module(block); }
    const DiagonalData& dd(int block, int tab) const {
        return mod(block).diag()[static_cast<size_t>(tab)];
    }
};

struct SubalgebraReport {
    long dim_G = 0, dim_P = 0, dim_A = 0, dim_CP = 0;
    long exp_G = 0, exp_P = 0, exp_A = 0, exp_CP = 0;
    bool g_basis_ok = false, p_basis_ok = false;
    bool a_eq_centralizer_g = false;
    bool g_eq_even_centralizer_a = false;
    bool double_centralizer_p = false;
    long gap = 0; // dim_CP - dim_P

    bool ok() const {
        return dim_G == exp_G && dim_P == exp_P && dim_A == exp_A && dim_CP == exp_CP &&
               g_basis_ok && p_basis_ok && a_eq_centralizer_g && g_eq_even_centralizer_a &&
               double_centralizer_p;
    }
};

SubalgebraReport subalgebra_report(const Rep& rep, Idempotents& idem, Seminormal& sn,
                                   const PBWFrame& frame);

} // namespace hc
