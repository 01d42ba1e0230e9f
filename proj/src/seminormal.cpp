#include "hc/seminormal.hpp"

#include <bit>

namespace hc {

namespace {
int nu(uint32_t mask, int k) { return has_bit(mask, k) ? -1 : 1; }
int db(uint32_t mask, int k) { return has_bit(mask, k) ? 1 : 0; }
int popc(uint32_t m) { return std::popcount(m); }
Scalar sign_pm(int e) { return (e % 2) ? Scalar(-1) : Scalar(1); }
} // namespace

Seminormal::Seminormal(const Rep& rep, Idempotents& idem) : rep_(rep), idem_(idem) {}

BlockOp Seminormal::phi_factor(int i, const Scalar& x, const Scalar& y) const {
    const Params& p = rep_.params();
    if (p.flavor == Flavor::NonDegenerate) {
        Scalar eps = p.epsilon();
        Scalar a = eps / (x.inv() * y - Scalar(1));
        Scalar d = -(eps / (x * y - Scalar(1)));
        return rep_.gen_T(i) + rep_.identity() * a + rep_.gen_C(i) * rep_.gen_C(i + 1) * d;
    }
    return rep_.gen_T(i) + rep_.identity() * (x - y).inv() +
           rep_.gen_C(i) * rep_.gen_C(i + 1) * (x + y).inv();
}

BlockOp Seminormal::phi_st(int block, int s_tab, int t_tab) const {
    const auto& m = mod(block);
    auto d = d_perm(m.tabs()[static_cast<size_t>(s_tab)], m.tabs()[static_cast<size_t>(t_tab)]);
    BlockOp op = rep_.identity();
    int u = t_tab;
    for (int k : d.word) {
        op = phi_factor(k, m.eig(u, k), m.eig(u, k + 1)) * op;
        u = m.s_tab(u, k);
        if (u < 0) throw std::logic_error("phi_st: non-admissible step in reduced word");
    }
    if (u != s_tab) throw std::logic_error("phi_st: walk did not reach target tableau");
    return op;
}

Scalar Seminormal::c_st(int block, int s_tab, int t_tab) const {
    const auto& m = mod(block);
    auto d = d_perm(m.tabs()[static_cast<size_t>(s_tab)], m.tabs()[static_cast<size_t>(t_tab)]);
    Scalar c(1);
    int u = t_tab;
    for (int k : d.word) {
        c = c * m.sqrt_c(u, k);
        u = m.s_tab(u, k);
    }
    return c;
}

int Seminormal::typeq_sign(const Triple& S, const Triple& T, int a) const {
    const auto& dds = dd(S.block, S.tab);
    const auto& ddt = dd(T.block, T.tab);
    int e = popcount_above(S.alpha, dds.last_entry()) +
            (a % 2) * popcount_above(T.alpha, ddt.last_entry());
    return (e % 2) ? -1 : 1;
}

BlockOp Seminormal::f_w(const Triple& S, const Triple& T, int a, int w_tab) const {
    if (S.block != T.block) throw std::invalid_argument("f_w: mixed blocks");
    const auto& ddt = dd(T.block, T.tab);
    uint32_t alpha_ta = (ddt.d_lambda == 1 && a % 2) ? (T.alpha | bit_of(ddt.last_entry())) : T.alpha;
    CliffordElement left = CliffordElement::monomial(S.beta) * CliffordElement::monomial(S.alpha);
    CliffordElement right = mono_inverse(alpha_ta) * mono_inverse(T.beta);
    BlockOp op = idem_.F(S) * rep_.clifford_op(left) * phi_st(S.block, S.tab, w_tab) *
                 phi_st(S.block, w_tab, T.tab) * rep_.clifford_op(right) * idem_.F(T);
    if (ddt.d_lambda == 1) op = op * Scalar(typeq_sign(S, T, a));
    return op;
}

BlockOp Seminormal::f(const Triple& S, const Triple& T, int a) const {
    if (S.block != T.block) throw std::invalid_argument("f: mixed blocks");
    const auto& ddt = dd(T.block, T.tab);
    uint32_t alpha_ta = (ddt.d_lambda == 1 && a % 2) ? (T.alpha | bit_of(ddt.last_entry())) : T.alpha;
    CliffordElement left = CliffordElement::monomial(S.beta) * CliffordElement::monomial(S.alpha);
    CliffordElement right = mono_inverse(alpha_ta) * mono_inverse(T.beta);
    BlockOp op = idem_.F(S) * rep_.clifford_op(left) * phi_st(S.block, S.tab, T.tab) *
                 rep_.clifford_op(right) * idem_.F(T);
    if (ddt.d_lambda == 1) op = op * Scalar(typeq_sign(S, T, a));
    return op;
}

Scalar Seminormal::c_T_w(const Triple& T, int w_tab) const {
    Scalar c = c_st(T.block, T.tab, w_tab);
    return c * c;
}

std::vector<Seminormal::FTerm> Seminormal::predict_X(int i, const Triple& T, const Triple& S,
                                                     int a) const {
    const auto& m = mod(T.block);
    Scalar lam;
    if (rep_.params().flavor == Flavor::NonDegenerate)
        lam = m.eig(T.tab, i).pow(-nu(T.beta, i));
    else
        lam = m.eig(T.tab, i) * Scalar(nu(T.beta, i));
    return {FTerm{lam, T, a}};
}

std::vector<Seminormal::FTerm> Seminormal::predict_C(int i, const Triple& T, const Triple& S,
                                                     int a) const {
    (void)S;
    const auto& ddt = dd(T.block, T.tab);
    uint32_t al = T.alpha, be = T.beta;
    if (!ddt.in_d(i)) {
        Triple nt = T;
        nt.beta = be ^ bit_of(i);
        return {FTerm{sign_pm(popcount_below(be, i)), nt, a}};
    }
    int p = ddt.p_of(i);
    if (ddt.d_lambda == 0) {
        if (p % 2 == 1) {
            Triple nt = T;
            nt.alpha = al ^ bit_of(i);
            return {FTerm{sign_pm(popc(be) + popcount_below(al, i)), nt, a}};
        }
        int prev = ddt.diag_entries[static_cast<size_t>(p - 2)];
        Triple nt = T;
        nt.alpha = al ^ bit_of(prev);
        return {FTerm{-Scalar::i() * sign_pm(popc(be) + popcount_upto(al, prev)), nt, a}};
    }
    uint32_t al1 = al | bit_of(ddt.last_entry());
    if (p == ddt.t_count) {
        return {FTerm{sign_pm(popc(be) + popc(al)), T, a + 1}};
    }
    if (p % 2 == 1) {
        Triple nt = T;
        nt.alpha = al ^ bit_of(i);
        return {FTerm{sign_pm(popc(be) + popcount_below(al1, i)), nt, a}};
    }
    int prev = ddt.diag_entries[static_cast<size_t>(p - 2)];
    Triple nt = T;
    nt.alpha = al ^ bit_of(prev);
    return {FTerm{-Scalar::i() * sign_pm(popc(be) + popcount_upto(al1, prev)), nt, a}};
}

std::vector<Seminormal::FTerm> Seminormal::predict_T(int i, const Triple& T, const Triple& S,
                                                     int a) const {
    const auto& m = mod(T.block);
    const auto& ddt = dd(T.block, T.tab);
    const Params& p = rep_.params();
    std::vector<FTerm> out;
    int ni = nu(T.beta, i), ni1 = nu(T.beta, i + 1);
    Scalar one(1);
    Scalar diag_c, r_c;
    if (p.flavor == Flavor::NonDegenerate) {
        Scalar eps = p.epsilon();
        Scalar b = m.eig(T.tab, i), b1 = m.eig(T.tab, i + 1);
        diag_c = -eps / (b.pow(-ni) * b1.pow(ni1) - one);
        r_c = eps / (b.pow(ni) * b1.pow(ni1) - one);
    } else {
        Scalar u = m.eig(T.tab, i) * Scalar(ni), u1 = m.eig(T.tab, i + 1) * Scalar(ni1);
        diag_c = -(u - u1).inv();
        r_c = -(u + u1).inv();
    }
    out.push_back(FTerm{diag_c, T, a});
    // middle term: C_i C_{i+1} acting on the left of f_{T,S_a}, composed
    // from the C-action table
    for (const auto& t1 : predict_C(i + 1, T, S, a))
        for (const auto& t2 : predict_C(i, t1.T, S, t1.a))
            out.push_back(FTerm{r_c * t1.coeff * t2.coeff, t2.T, t2.a});
    int other = m.s_tab(T.tab, i);
    if (other >= 0) {
        int e;
        int last = ddt.last_entry();
        if (p.flavor == Flavor::Degenerate) {
            e = db(T.beta, i) * db(T.beta, i + 1);
        } else if (ddt.d_lambda == 1 && i == last) {
            e = db(T.alpha, i + 1);
        } else if (ddt.d_lambda == 1 && i + 1 == last) {
            e = db(T.alpha, i);
        } else {
            e = db(T.beta, i) * db(T.beta, i + 1) + db(T.alpha, i) * db(T.alpha, i + 1);
        }
        Scalar ratio = c_st(T.block, T.tab, S.tab) / c_st(T.block, other, S.tab);
        Scalar c = m.sqrt_c(T.tab, i) * ratio * sign_pm(e);
        Perm si = perm_transposition(p.n, i);
        Triple nt;
        nt.block = T.block;
        nt.tab = other;
        nt.alpha = perm_apply_mask(si, T.alpha);
        nt.beta = perm_apply_mask(si, T.beta);
        out.push_back(FTerm{c, nt, a});
    }
    return out;
}

Seminormal::StarImage Seminormal::star_image(const Triple& S, const Triple& T, int a) const {
    const auto& dds = dd(S.block, S.tab);
    const auto& ddt = dd(T.block, T.tab);
    StarImage img;
    img.left = T;
    img.left.alpha = hat(T.alpha, ddt, 0);
    img.right = S;
    img.right.alpha = hat(S.alpha, dds, 0);
    img.a = a;
    if (ddt.d_lambda == 0) {
        img.sign = sgn(dds, hat(S.alpha, dds, 0)) * sgn(ddt, hat(T.alpha, ddt, 0));
        return img;
    }
    uint32_t hs1 = hat(S.alpha | bit_of(dds.last_entry()), dds, 1);
    uint32_t hta1;
    if (a % 2 == 0)
        hta1 = hat(T.alpha | bit_of(ddt.last_entry()), ddt, 1);
    else
        hta1 = hat(T.alpha, ddt, 0);
    img.sign = sgn_a(dds, hs1, 0) * sgn_a(ddt, hta1, a + 1);
    return img;
}

namespace {

std::vector<Scalar> op_vec(const BlockOp& op) { return op.vec(); }

struct DiagClasses {
    std::vector<std::vector<int>> classes; // (block, local) pairs flattened by global index
    std::vector<int> class_of;
};

// Partition basis coordinates by the joint diagonal of the given commuting
// diagonal operators.
DiagClasses diag_classes(const Rep& rep, const std::vector<BlockOp>& diags) {
    DiagClasses out;
    std::vector<std::vector<Scalar>> sigs;
    int global = 0;
    for (int b = 0; b < rep.num_blocks(); ++b) {
        int dim = rep.module(b).dim();
        for (int j = 0; j < dim; ++j) {
            std::vector<Scalar> sig;
            for (const auto& d : diags) sig.push_back(d.blocks[static_cast<size_t>(b)].at(j, j));
            int cls = -1;
            for (size_t c = 0; c < sigs.size() && cls < 0; c += 1) {
                bool eq = true;
                for (size_t k = 0; k < sig.size(); ++k)
                    if (!sig[k].near(sigs[c][k])) { eq = false; break; }
                if (eq) cls = static_cast<int>(c);
            }
            if (cls < 0) {
                cls = static_cast<int>(sigs.size());
                sigs.push_back(sig);
                out.classes.emplace_back();
            }
            out.classes[static_cast<size_t>(cls)].push_back(global);
            out.class_of.push_back(cls);
            ++global;
        }
    }
    return out;
}

BlockOp indicator_op(const Rep& rep, const std::vector<int>& members) {
    BlockOp op = rep.zero();
    int global = 0;
    for (int b = 0; b < rep.num_blocks(); ++b) {
        int dim = rep.module(b).dim();
        for (int j = 0; j < dim; ++j, ++global)
            if (std::find(members.begin(), members.end(), global) != members.end())
                op.blocks[static_cast<size_t>(b)].at(j, j) = Scalar(1);
    }
    return op;
}

// Commutant of the given generator list inside the span of the frame
// columns listed in cols; returns coordinate kernel vectors.
std::vector<std::vector<Scalar>> commutant(const PBWFrame& frame, const std::vector<int>& cols,
                                           const std::vector<BlockOp>& gens) {
    int veclen = frame.op(0).vec_len();
    Matrix M(static_cast<int>(gens.size()) * veclen, static_cast<int>(cols.size()));
    for (int j = 0; j < static_cast<int>(cols.size()); ++j) {
        const BlockOp& fop = frame.op(cols[static_cast<size_t>(j)]);
        int row0 = 0;
        for (const auto& g : gens) {
            auto comm = (fop * g - g * fop).vec();
            for (int i = 0; i < veclen; ++i) M.at(row0 + i, j) = comm[static_cast<size_t>(i)];
            row0 += veclen;
        }
    }
    return LinearSolver(std::move(M)).kernel();
}

BlockOp combine(const PBWFrame& frame, const std::vector<int>& cols,
                const std::vector<Scalar>& coords, const Rep& rep) {
    BlockOp op = rep.zero();
    for (size_t j = 0; j < cols.size(); ++j)
        if (!coords[j].is_zero()) op = op + frame.op(cols[j]) * coords[j];
    return op;
}

bool spans_match(const std::vector<BlockOp>& a, const std::vector<BlockOp>& b) {
    std::vector<std::vector<Scalar>> va, vall;
    for (const auto& op : a) va.push_back(op_vec(op));
    vall = va;
    for (const auto& op : b) vall.push_back(op_vec(op));
    int ra = matrix_rank(va);
    std::vector<std::vector<Scalar>> vb;
    for (const auto& op : b) vb.push_back(op_vec(op));
    int rb = matrix_rank(vb);
    int rall = matrix_rank(vall);
    return ra == rb && rb == rall;
}

} // namespace

SubalgebraReport subalgebra_report(const Rep& rep, Idempotents& idem, Seminormal& sn,
                                   const PBWFrame& frame) {
    SubalgebraReport rep_out;
    const Params& p = rep.params();
    int n = p.n;

    for (const auto& shape : enumerate_multipartitions(p)) {
        long nstd = static_cast<long>(enumerate_std(shape).size());
        int tprime = static_cast<int>(shape.diagonal_boxes().size());
        rep_out.exp_G += nstd;
        rep_out.exp_P += (1L << (n - tprime)) * nstd;
        rep_out.exp_A += (1L << (2 * n - tprime)) * nstd;
        rep_out.exp_CP += (1L << n) * nstd;
    }

    // G and P are commutative algebras of diagonal operators: their
    // dimension is the number of joint-eigenvalue classes.
    std::vector<BlockOp> g_gens, p_gens;
    for (int k = 1; k <= n; ++k) {
        if (p.flavor == Flavor::NonDegenerate) {
            g_gens.push_back(rep.gen_X(k) + rep.gen_Xinv(k));
            p_gens.push_back(rep.gen_X(k));
        } else {
            g_gens.push_back(rep.gen_X(k) * rep.gen_X(k));
            p_gens.push_back(rep.gen_X(k));
        }
    }
    auto gcls = diag_classes(rep, g_gens);
    auto pcls = diag_classes(rep, p_gens);
    rep_out.dim_G = static_cast<long>(gcls.classes.size());
    rep_out.dim_P = static_cast<long>(pcls.classes.size());

    // Claimed bases: F_t and F_{(t,beta)} must be the class indicators.
    rep_out.g_basis_ok = true;
    std::vector<BlockOp> ft_ops;
    {
        int global0 = 0;
        for (int b = 0; b < rep.num_blocks(); ++b) {
            const auto& mod = rep.module(b);
            for (int t = 0; t < static_cast<int>(mod.tabs().size()); ++t) {
                BlockOp ft = rep.zero();
                for (const auto& T : idem.tri0(b))
                    if (T.tab == t) ft = ft + idem.F(T);
                ft_ops.push_back(ft);
                // locate the class of this tableau's first basis vector
                int gidx = global0;
                for (int j = 0; j < mod.dim(); ++j)
                    if (mod.basis()[static_cast<size_t>(j)].tab == t) { gidx = global0 + j; break; }
                auto& members = gcls.classes[static_cast<size_t>(gcls.class_of[static_cast<size_t>(gidx)])];
                if (!ft.near(indicator_op(rep, members))) rep_out.g_basis_ok = false;
            }
            global0 += mod.dim();
        }
    }
    rep_out.p_basis_ok = true;
    std::vector<BlockOp> ftb_ops;
    {
        int global0 = 0;
        for (int b = 0; b < rep.num_blocks(); ++b) {
            const auto& mod = rep.module(b);
            for (int t = 0; t < static_cast<int>(mod.tabs().size()); ++t) {
                auto z = z2_sets(mod.diag()[static_cast<size_t>(t)], n);
                for (uint32_t beta : z.beta) {
                    BlockOp op = idem.F_tab_beta(b, t, beta);
                    ftb_ops.push_back(op);
                    int gidx = -1;
                    for (int j = 0; j < mod.dim(); ++j) {
                        const auto& bv = mod.basis()[static_cast<size_t>(j)];
                        if (bv.tab == t && bv.beta == beta) { gidx = global0 + j; break; }
                    }
                    auto& members = pcls.classes[static_cast<size_t>(pcls.class_of[static_cast<size_t>(gidx)])];
                    if (!op.near(indicator_op(rep, members))) rep_out.p_basis_ok = false;
                }
            }
            global0 += mod.dim();
        }
    }

    // A spanned by f_{T,S} with equal tableaux.
    std::vector<BlockOp> a_ops;
    for (int b = 0; b < rep.num_blocks(); ++b) {
        const auto& mod = rep.module(b);
        int dl = mod.diag().empty() ? 0 : mod.diag()[0].d_lambda;
        for (const auto& T : idem.tri0(b))
            for (const auto& S : idem.tri0(b)) {
                if (S.tab != T.tab) continue;
                a_ops.push_back(sn.f(T, S, 0));
                if (dl == 1) a_ops.push_back(sn.f(T, S, 1));
            }
    }
    {
        std::vector<std::vector<Scalar>> va;
        for (const auto& op : a_ops) va.push_back(op_vec(op));
        rep_out.dim_A = matrix_rank(va);
    }

    std::vector<int> all_cols, even_cols;
    for (int j = 0; j < frame.size(); ++j) {
        all_cols.push_back(j);
        if (popcount_upto(frame.keys()[static_cast<size_t>(j)].beta, n) % 2 == 0)
            even_cols.push_back(j);
    }

    // C_H(P)
    auto k_cp = commutant(frame, all_cols, p_gens);
    rep_out.dim_CP = static_cast<long>(k_cp.size());
    rep_out.gap = rep_out.dim_CP - rep_out.dim_P;

    // A = C_H(G)
    auto k_cg = commutant(frame, all_cols, g_gens);
    {
        std::vector<BlockOp> cg_ops;
        for (const auto& coords : k_cg) cg_ops.push_back(combine(frame, all_cols, coords, rep));
        rep_out.a_eq_centralizer_g =
            (static_cast<long>(k_cg.size()) == rep_out.dim_A) && spans_match(a_ops, cg_ops);
    }

    // G = (C_H(A))_even
    std::vector<BlockOp> a_gens = p_gens;
    for (int k = 1; k <= n; ++k) a_gens.push_back(rep.gen_C(k));
    auto k_ca = commutant(frame, even_cols, a_gens);
    {
        std::vector<BlockOp> ca_ops;
        for (const auto& coords : k_ca) ca_ops.push_back(combine(frame, even_cols, coords, rep));
        rep_out.g_eq_even_centralizer_a =
            (static_cast<long>(k_ca.size()) == rep_out.dim_G) && spans_match(ft_ops, ca_ops);
    }

    // (C_H C_H(P))_even = P
    {
        std::vector<BlockOp> cp_ops;
        for (const auto& coords : k_cp) cp_ops.push_back(combine(frame, all_cols, coords, rep));
        auto k_ccp = commutant(frame, even_cols, cp_ops);
        std::vector<BlockOp> ccp_ops;
        for (const auto& coords : k_ccp) ccp_ops.push_back(combine(frame, even_cols, coords, rep));
        rep_out.double_centralizer_p =
            (static_cast<long>(k_ccp.size()) == rep_out.dim_P) && spans_match(ftb_ops, ccp_ops);
    }

    return rep_out;
}

} // namespace hc
