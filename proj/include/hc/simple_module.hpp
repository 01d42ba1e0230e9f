#pragma once

#include "hc/combinatorics.hpp"
#include "hc/params.hpp"

#include <map>

namespace hc {

// One simple module D(lambda): basis C^beta C^alpha v_t over standard
// tableaux t of the shape, with the closed-form generator actions.
class SimpleModule {
public:
    struct BasisVector {
        int tab = 0;        // index into tabs()
        uint32_t beta = 0;  // in Z_2([n] \ D_t)
        uint32_t alpha = 0; // in Z_2(OD_t)
    };

    struct Term {
        Scalar coeff;
        int index; // global basis index within this module
    };

    SimpleModule(const MultiPartition& shape, const Params& params);

    const MultiPartition& shape() const { return shape_; }
    const Params& params() const { return params_; }
    const std::vector<StandardTableau>& tabs() const { return tabs_; }
    const std::vector<DiagonalData>& diag() const { return diag_; }
    int dim() const { return static_cast<int>(basis_.size()); }
    const std::vector<BasisVector>& basis() const { return basis_; }
    int index_of(int tab, uint32_t beta, uint32_t alpha) const;
    int tab_index(const StandardTableau& t) const;

    // Eigenvalues b_{t,i} (nondegenerate) / u_{t,i} (degenerate).
    const Scalar& eig(int tab, int i) const;
    // c_t(i) and the shared square root branch; the memo key is the
    // unordered pair {t, s_i t} so every consumer sees the same root.
    Scalar c_of(int tab, int i) const;
    Scalar sqrt_c(int tab, int i) const;

    int s_tab(int tab, int i) const; // index of s_i t, -1 if not standard

    // Generator actions on one basis vector.
    std::vector<Term> act_X(int i, int power, int index) const; // X_i^{power}
    std::vector<Term> act_C(int i, int index) const;
    std::vector<Term> act_T(int i, int index) const;

    int parity(int index) const; // |alpha| + |beta| mod 2

private:
    MultiPartition shape_;
    Params params_;
    std::vector<StandardTableau> tabs_;
    std::vector<DiagonalData> diag_;
    std::vector<std::vector<Scalar>> eig_;
    std::vector<BasisVector> basis_;
    std::vector<int> tab_offset_;
    std::map<std::pair<int, uint32_t>, int> index_lookup_; // (tab, beta<<16|...) -> index
    std::vector<std::vector<int>> s_tab_;
    mutable std::map<std::pair<int, int>, Scalar> sqrt_c_memo_;

    struct RTerm {
        Scalar coeff;
        uint32_t beta;
        uint32_t alpha;
    };
    RTerm r_element(int i, const BasisVector& v) const;
};

} // namespace hc
