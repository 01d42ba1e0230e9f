#include "testutil.hpp"

#include "hc/seminormal.hpp"

#include <random>

using namespace hc;
using namespace hc::testing;

namespace {

struct Setup {
    Params p;
    Rep rep;
    Idempotents idem;
    Seminormal sn;
    explicit Setup(const Params& params) : p(params), rep(p), idem(rep), sn(rep, idem) {}
};

int d_lambda_of(const Rep& rep, int block) { return rep.module(block).diag()[0].d_lambda; }

// (T, a) pairs indexing Tri(lambda) with T in sector 0
std::vector<std::pair<Triple, int>> tri_pairs(Setup& s, int block) {
    std::vector<std::pair<Triple, int>> out;
    int dl = d_lambda_of(s.rep, block);
    for (const auto& T : s.idem.tri0(block)) {
        out.push_back({T, 0});
        if (dl == 1) out.push_back({T, 1});
    }
    return out;
}

} // namespace

TEST_CASE("Phi_st and c_st basics") {
    for (const auto& params : {nd_s(3), nd_ss(2), deg_s(3)}) {
        Setup s(params);
        for (int b = 0; b < s.rep.num_blocks(); ++b) {
            const auto& mod = s.rep.module(b);
            int nt = static_cast<int>(mod.tabs().size());
            for (int t = 0; t < nt; ++t) {
                CHECK(s.sn.phi_st(b, t, t).near(s.rep.identity()));
                CHECK(close(s.sn.c_st(b, t, t), Scalar(1)));
            }
            for (int t = 0; t < nt; ++t)
                for (int u = 0; u < nt; ++u) {
                    // Phi_{s,t} v_t = c_{s,t} v_s
                    BlockOp op = s.sn.phi_st(b, u, t);
                    int col = mod.index_of(t, 0, 0);
                    const Matrix& m = op.blocks[static_cast<size_t>(b)];
                    for (int row = 0; row < mod.dim(); ++row) {
                        Scalar expect(0);
                        if (row == mod.index_of(u, 0, 0)) expect = s.sn.c_st(b, u, t);
                        CHECK(m.at(row, col).near(expect));
                    }
                    // symmetry and the square law
                    CHECK(close(s.sn.c_st(b, u, t), s.sn.c_st(b, t, u)));
                    Scalar c = s.sn.c_st(b, u, t);
                    CHECK((s.sn.phi_st(b, u, t) * s.sn.phi_st(b, t, u))
                              .near(s.rep.identity() * (c * c)));
                }
        }
    }
}

TEST_CASE("reduced-word independence of Phi_st and c_st") {
    for (const auto& params : {nd_s(4), deg_s(4)}) {
        Setup s(params);
        for (int b = 0; b < s.rep.num_blocks(); ++b) {
            const auto& mod = s.rep.module(b);
            int nt = static_cast<int>(mod.tabs().size());
            for (int ti = 0; ti < nt; ++ti)
                for (int tj = 0; tj < nt; ++tj) {
                    auto d = d_perm(mod.tabs()[static_cast<size_t>(ti)],
                                    mod.tabs()[static_cast<size_t>(tj)]);
                    auto words = all_reduced_words(d.perm);
                    if (words.size() < 2) continue;
                    BlockOp ref = s.sn.phi_st(b, ti, tj);
                    Scalar cref = s.sn.c_st(b, ti, tj);
                    for (const auto& w : words) {
                        // walk this word explicitly
                        BlockOp op = s.rep.identity();
                        Scalar c(1);
                        int u = tj;
                        for (auto it = w.rbegin(); it != w.rend(); ++it) {
                            op = s.sn.phi_factor(*it, mod.eig(u, *it), mod.eig(u, *it + 1)) * op;
                            c = c * mod.sqrt_c(u, *it);
                            u = mod.s_tab(u, *it);
                            REQUIRE(u >= 0);
                        }
                        CHECK(u == ti);
                        CHECK(op.near(ref));
                        CHECK(close(c, cref));
                    }
                }
        }
    }
}

TEST_CASE("Phi_st conjugates diagonal Clifford generators") {
    // Phi_{s,t} C_{d(t,t^lambda)(a)} = C_{d(s,t^lambda)(a)} Phi_{s,t}
    for (const auto& params : {nd_s(3), deg_s(3)}) {
        Setup s(params);
        for (int b = 0; b < s.rep.num_blocks(); ++b) {
            const auto& mod = s.rep.module(b);
            int nt = static_cast<int>(mod.tabs().size());
            for (int ti = 0; ti < nt; ++ti)
                for (int tj = 0; tj < nt; ++tj) {
                    const auto& ddt = mod.diag()[static_cast<size_t>(tj)];
                    const auto& dds = mod.diag()[static_cast<size_t>(ti)];
                    BlockOp phi = s.sn.phi_st(b, ti, tj);
                    for (size_t a = 0; a < ddt.diag_entries.size(); ++a) {
                        int ct = ddt.diag_entries[a];
                        int cs = dds.diag_entries[a];
                        CHECK((phi * s.rep.gen_C(ct)).near(s.rep.gen_C(cs) * phi));
                    }
                }
        }
    }
}

TEST_CASE("f_TT recovers the idempotent") {
    for (const auto& params : {nd_s(3), nd_ss(2), deg_s(3)}) {
        Setup s(params);
        for (int b = 0; b < s.rep.num_blocks(); ++b) {
            int dl = d_lambda_of(s.rep, b);
            for (const auto& T : s.idem.tri0(b)) {
                if (dl == 0) {
                    CHECK(s.sn.f(T, T, 0).near(s.idem.F(T)));
                    // f^w_{T,T} = c_T^w F_T for any w
                    for (int w = 0; w < static_cast<int>(s.rep.module(b).tabs().size()); ++w)
                        CHECK(s.sn.f_w(T, T, 0, w).near(s.idem.F(T) * s.sn.c_T_w(T, w)));
                } else {
                    const auto& dd = s.rep.module(b).diag()[static_cast<size_t>(T.tab)];
                    int e = popcount_above(T.alpha, dd.last_entry());
                    Scalar sign = (e % 2) ? Scalar(-1) : Scalar(1);
                    CHECK(s.sn.f(T, T, 0).near(s.idem.F(T) * sign));
                }
            }
        }
    }
}

TEST_CASE("seminormal families are bases of each block") {
    for (const auto& params : {nd_s(3), deg_s(3), nd_ss(2)}) {
        Setup s(params);
        for (int b = 0; b < s.rep.num_blocks(); ++b) {
            auto pairs = tri_pairs(s, b);
            auto tri0 = s.idem.tri0(b);
            long dim_expected = static_cast<long>(tri0.size()) * static_cast<long>(pairs.size());
            // two reference tableaux: t^lambda is index of t_row, and t_lambda
            const auto& mod = s.rep.module(b);
            int w_row = mod.tab_index(t_row(mod.shape()));
            int w_col = mod.tab_index(t_col(mod.shape()));
            REQUIRE(w_row >= 0);
            REQUIRE(w_col >= 0);
            for (int w : {w_row, w_col}) {
                std::vector<std::vector<Scalar>> vecs;
                for (const auto& S : tri0)
                    for (const auto& [T, a] : pairs) vecs.push_back(s.sn.f_w(S, T, a, w).vec());
                CHECK(matrix_rank(vecs) == dim_expected);
            }
            {
                std::vector<std::vector<Scalar>> vecs;
                for (const auto& S : tri0)
                    for (const auto& [T, a] : pairs) vecs.push_back(s.sn.f(S, T, a).vec());
                CHECK(matrix_rank(vecs) == dim_expected);
            }
        }
    }
}

TEST_CASE("f vs f^w rescaling") {
    for (const auto& params : {nd_s(3), deg_s(3)}) {
        Setup s(params);
        for (int b = 0; b < s.rep.num_blocks(); ++b) {
            const auto& mod = s.rep.module(b);
            int w = mod.tab_index(t_row(mod.shape()));
            auto tri0 = s.idem.tri0(b);
            auto pairs = tri_pairs(s, b);
            for (const auto& S : tri0)
                for (const auto& [T, a] : pairs) {
                    Scalar ratio = s.sn.c_st(b, S.tab, T.tab) /
                                   (s.sn.c_st(b, S.tab, w) * s.sn.c_st(b, w, T.tab));
                    CHECK(s.sn.f(S, T, a).near(s.sn.f_w(S, T, a, w) * ratio));
                }
        }
    }
}

TEST_CASE("multiplication laws") {
    for (const auto& params : {nd_s(3), deg_s(3), nd_ss(2)}) {
        Setup s(params);
        for (int b = 0; b < s.rep.num_blocks(); ++b) {
            const auto& mod = s.rep.module(b);
            int dl = d_lambda_of(s.rep, b);
            int w = mod.tab_index(t_row(mod.shape()));
            auto tri0 = s.idem.tri0(b);
            auto pairs = tri_pairs(s, b);
            // cache the f^w elements
            std::map<std::pair<int, int>, BlockOp> cache;
            auto fw = [&](int si, int ti, int a) {
                auto key = std::make_pair(si * 8 + a, ti);
                auto it = cache.find(key);
                if (it != cache.end()) return it->second;
                BlockOp op = s.sn.f_w(tri0[static_cast<size_t>(si)], tri0[static_cast<size_t>(ti)],
                                      a, w);
                cache.emplace(key, op);
                return op;
            };
            for (size_t si = 0; si < tri0.size(); ++si)
                for (size_t ti = 0; ti < tri0.size(); ++ti)
                    for (size_t ui = 0; ui < tri0.size(); ++ui)
                        for (size_t vi = 0; vi < tri0.size(); ++vi)
                            for (int a = 0; a <= dl; ++a)
                                for (int bb = 0; bb <= dl; ++bb) {
                                    BlockOp prod = fw(static_cast<int>(si), static_cast<int>(ti), a) *
                                                   fw(static_cast<int>(ui), static_cast<int>(vi), bb);
                                    BlockOp expect = s.rep.zero();
                                    if (tri0[ti] == tri0[ui]) {
                                        Scalar c = s.sn.c_T_w(tri0[ti], w);
                                        if (dl == 1) {
                                            const auto& dd =
                                                mod.diag()[static_cast<size_t>(tri0[ti].tab)];
                                            if (popcount_above(tri0[ti].alpha, dd.last_entry()) % 2)
                                                c = -c;
                                        }
                                        expect = fw(static_cast<int>(si), static_cast<int>(vi),
                                                    (a + bb) % 2) * c;
                                    }
                                    CHECK(prod.near(expect));
                                }
        }
    }
}

TEST_CASE("remark coefficient for products of the plain f family") {
    // f_ST f_UV = delta_TU (c_st c_tv / c_sv) f_SV in d_lambda = 0 blocks
    Setup s(nd_s(3));
    for (int b = 0; b < s.rep.num_blocks(); ++b) {
        if (d_lambda_of(s.rep, b) != 0) continue;
        auto tri0 = s.idem.tri0(b);
        for (const auto& S : tri0)
            for (const auto& T : tri0)
                for (const auto& V : tri0) {
                    BlockOp prod = s.sn.f(S, T, 0) * s.sn.f(T, V, 0);
                    Scalar c = s.sn.c_st(b, S.tab, T.tab) * s.sn.c_st(b, T.tab, V.tab) /
                               s.sn.c_st(b, S.tab, V.tab);
                    CHECK(prod.near(s.sn.f(S, V, 0) * c));
                }
    }
}

TEST_CASE("star duality for the seminormal basis") {
    for (const auto& params : {nd_s(3), deg_s(3), nd_ss(2)}) {
        Setup s(params);
        PBWFrame frame(s.rep);
        for (int b = 0; b < s.rep.num_blocks(); ++b) {
            const auto& mod = s.rep.module(b);
            int w = mod.tab_index(t_row(mod.shape()));
            auto tri0 = s.idem.tri0(b);
            auto pairs = tri_pairs(s, b);
            for (const auto& S : tri0)
                for (const auto& [T, a] : pairs) {
                    auto img = s.sn.star_image(S, T, a);
                    CHECK(frame.star_op(s.sn.f(S, T, a))
                              .near(s.sn.f(img.left, img.right, img.a) * Scalar(img.sign)));
                    CHECK(frame.star_op(s.sn.f_w(S, T, a, w))
                              .near(s.sn.f_w(img.left, img.right, img.a, w) * Scalar(img.sign)));
                }
        }
    }
}

TEST_CASE("generator actions on the seminormal basis") {
    for (const auto& params : {nd_s(3), deg_s(3), nd_ss(2)}) {
        Setup s(params);
        for (int b = 0; b < s.rep.num_blocks(); ++b) {
            auto tri0 = s.idem.tri0(b);
            auto pairs = tri_pairs(s, b);
            int dl = d_lambda_of(s.rep, b);
            for (const auto& [T, dummy] : pairs) {
                (void)dummy;
                for (const auto& S : tri0)
                    for (int a = 0; a <= dl; ++a) {
                        BlockOp f = s.sn.f(T, S, a);
                        for (int i = 1; i <= s.p.n; ++i) {
                            BlockOp lhs = s.rep.gen_X(i) * f;
                            BlockOp rhs = s.rep.zero();
                            for (const auto& term : s.sn.predict_X(i, T, S, a))
                                rhs = rhs + s.sn.f(term.T, S, term.a) * term.coeff;
                            CHECK(lhs.near(rhs));
                            lhs = s.rep.gen_C(i) * f;
                            rhs = s.rep.zero();
                            for (const auto& term : s.sn.predict_C(i, T, S, a))
                                rhs = rhs + s.sn.f(term.T, S, term.a) * term.coeff;
                            CHECK(lhs.near(rhs));
                        }
                        for (int i = 1; i < s.p.n; ++i) {
                            BlockOp lhs = s.rep.gen_T(i) * f;
                            BlockOp rhs = s.rep.zero();
                            for (const auto& term : s.sn.predict_T(i, T, S, a))
                                rhs = rhs + s.sn.f(term.T, S, term.a) * term.coeff;
                            CHECK(lhs.near(rhs));
                        }
                    }
            }
        }
    }
}

TEST_CASE("laurent evaluation identity") {
    Setup s(nd_s(3));
    std::mt19937 rng(5);
    std::uniform_int_distribution<int> expo(-2, 2);
    for (int iter = 0; iter < 4; ++iter) {
        std::vector<int> alpha(3);
        for (auto& a : alpha) a = expo(rng);
        BlockOp lhs = s.rep.identity();
        for (int k = 1; k <= 3; ++k)
            for (int c = 0; c < std::abs(alpha[static_cast<size_t>(k - 1)]); ++c)
                lhs = lhs * (alpha[static_cast<size_t>(k - 1)] > 0 ? s.rep.gen_X(k)
                                                                   : s.rep.gen_Xinv(k));
        BlockOp rhs = s.rep.zero();
        for (int b = 0; b < s.rep.num_blocks(); ++b) {
            const auto& mod = s.rep.module(b);
            for (int t = 0; t < static_cast<int>(mod.tabs().size()); ++t) {
                auto z = z2_sets(mod.diag()[static_cast<size_t>(t)], 3);
                for (uint32_t beta : z.beta) {
                    Scalar val(1);
                    for (int k = 1; k <= 3; ++k) {
                        int nu = has_bit(beta, k) ? -1 : 1;
                        val = val * mod.eig(t, k).pow(-nu * alpha[static_cast<size_t>(k - 1)]);
                    }
                    rhs = rhs + s.idem.F_tab_beta(b, t, beta) * val;
                }
            }
        }
        CHECK(lhs.near(rhs));
    }
}

TEST_CASE("subalgebra report, both flavors") {
    for (const auto& params : {nd_s(3), deg_s(3)}) {
        Setup s(params);
        PBWFrame frame(s.rep);
        auto report = subalgebra_report(s.rep, s.idem, s.sn, frame);
        CHECK(report.dim_G == report.exp_G);
        CHECK(report.dim_P == report.exp_P);
        CHECK(report.dim_A == report.exp_A);
        CHECK(report.dim_CP == report.exp_CP);
        CHECK(report.g_basis_ok);
        CHECK(report.p_basis_ok);
        CHECK(report.a_eq_centralizer_g);
        CHECK(report.g_eq_even_centralizer_a);
        CHECK(report.double_centralizer_p);
        CHECK(report.gap > 0); // some t' > 0 in type s
    }
}

TEST_CASE("worked example: shape (3,1) at n = 4") {
    Setup s(nd_s(4));
    int block = -1;
    for (int b = 0; b < s.rep.num_blocks(); ++b)
        if (s.rep.module(b).shape().comps[0].rows == std::vector<int>{3, 1}) block = b;
    REQUIRE(block >= 0);
    const auto& mod = s.rep.module(block);
    int s_idx = mod.tab_index(t_row(mod.shape()));
    StandardTableau t_tab = apply_perm(perm_transposition(4, 3), t_row(mod.shape()));
    int t_idx = mod.tab_index(t_tab);
    REQUIRE(s_idx >= 0);
    REQUIRE(t_idx >= 0);
    CHECK(d_perm(t_tab, t_row(mod.shape())).word == std::vector<int>{3});
    // b_{t,3} = b_{s,4} = 1
    CHECK(close(mod.eig(t_idx, 3), Scalar(1)));
    CHECK(close(mod.eig(s_idx, 4), Scalar(1)));
    // b_{t,4} = [3] - [2] - eps sqrt([3][2]) at q = 2
    Scalar q2 = deformed_qint(2, 0, s.p), q3 = deformed_qint(3, 0, s.p);
    Scalar expect = q3 - q2 - s.p.epsilon() * sqrt_principal(q3 * q2);
    CHECK(close(mod.eig(t_idx, 4), expect));
    CHECK(close(mod.eig(s_idx, 3), expect));
    // c_st c_ts = c_t(3) differs from 1
    Scalar prod = s.sn.c_st(block, s_idx, t_idx) * s.sn.c_st(block, t_idx, s_idx);
    CHECK(!prod.near(Scalar(1)));
    // and equals 1 - eps^2 2b/(b-1)^2 per the square identity at x = 1
    Scalar bb = mod.eig(t_idx, 4);
    Scalar denom = (bb - Scalar(1)) * (bb - Scalar(1));
    CHECK(close(prod, Scalar(1) - s.p.epsilon() * s.p.epsilon() * Scalar(2) * bb / denom));
}
