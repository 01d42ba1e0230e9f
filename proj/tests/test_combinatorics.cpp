#include "testutil.hpp"

#include "hc/combinatorics.hpp"

#include <algorithm>
#include <set>

using namespace hc;
using namespace hc::testing;

namespace {

// Oracle: standard tableaux by filtering all n! fillings of the box list.
std::vector<StandardTableau> std_oracle(const MultiPartition& shape) {
    auto boxes = shape.boxes();
    std::vector<int> perm(boxes.size());
    for (size_t i = 0; i < boxes.size(); ++i) perm[i] = static_cast<int>(i);
    std::sort(perm.begin(), perm.end());
    std::vector<StandardTableau> out;
    do {
        StandardTableau t;
        t.shape = shape;
        t.entry_box.resize(boxes.size());
        for (size_t k = 0; k < boxes.size(); ++k)
            t.entry_box[k] = boxes[static_cast<size_t>(perm[k])];
        if (t.is_standard()) out.push_back(t);
    } while (std::next_permutation(perm.begin(), perm.end()));
    return out;
}

// Oracle: strict partitions of n by direct recursion.
int count_strict(int n, int maxpart) {
    if (n == 0) return 1;
    int c = 0;
    for (int part = std::min(n, maxpart); part >= 1; --part) c += count_strict(n - part, part - 1);
    return c;
}

MultiPartition shape_of(const Params& p, const std::vector<std::vector<int>>& comps) {
    auto all = enumerate_multipartitions(p);
    for (const auto& mp : all) {
        bool match = mp.comps.size() == comps.size();
        for (size_t c = 0; match && c < comps.size(); ++c)
            if (mp.comps[c].rows != comps[c]) match = false;
        if (match) return mp;
    }
    throw std::runtime_error("shape not found");
}

} // namespace

TEST_CASE("enumerate multipartitions") {
    // bullet=s, m=0, n=3: strict partitions of 3
    auto s3 = enumerate_multipartitions(nd_s(3));
    CHECK(s3.size() == 2);
    CHECK(shape_of(nd_s(3), {{3}}).comps[0].strict);
    CHECK_NOTHROW(shape_of(nd_s(3), {{2, 1}}));

    // bullet=0, m=1, n=3: partitions of 3
    auto z3 = enumerate_multipartitions(nd_zero(3));
    CHECK(z3.size() == 3);

    // bullet=ss, m=0, n=2: pairs of strict partitions
    auto ss2 = enumerate_multipartitions(nd_ss(2));
    CHECK(ss2.size() == 3);

    // count strict components against the oracle across sizes
    for (int n = 1; n <= 5; ++n) {
        Params p = nd_s(n);
        CHECK(static_cast<int>(enumerate_multipartitions(p).size()) == count_strict(n, n));
    }
}

TEST_CASE("standard tableaux enumeration vs oracle") {
    for (int n = 1; n <= 4; ++n)
        for (const auto& p : default_configs(n))
            for (const auto& shape : enumerate_multipartitions(p)) {
                auto fast = enumerate_std(shape);
                auto slow = std_oracle(shape);
                CHECK(fast.size() == slow.size());
                // t^lambda is standard and in the list
                StandardTableau tl = t_row(shape);
                CHECK(tl.is_standard());
                CHECK(std::find(fast.begin(), fast.end(), tl) != fast.end());
                StandardTableau tc = t_col(shape);
                CHECK(tc.is_standard());
                CHECK(std::find(fast.begin(), fast.end(), tc) != fast.end());
            }
    // single row has one tableau; ordinary (2,1) has two
    MultiPartition row3 = shape_of(nd_s(3), {{3}});
    CHECK(enumerate_std(row3).size() == 1);
    MultiPartition ord21 = shape_of(nd_zero(3), {{2, 1}});
    CHECK(enumerate_std(ord21).size() == 2);
    // strict (2,1) is shifted: only one standard filling
    MultiPartition s21 = shape_of(nd_s(3), {{2, 1}});
    CHECK(enumerate_std(s21).size() == 1);
}

TEST_CASE("the displayed s,1 example: shape ((2,1),(1,1)) in P^{s,1}_5") {
    Params p = nd_s(5);
    p.m = 1;
    p.Q = {Scalar(3)};
    MultiPartition shape = shape_of(p, {{2, 1}, {1, 1}});
    auto tabs = enumerate_std(shape);
    // t^lambda = rows (1 2 / . 3), (4 / 5)
    StandardTableau tl = t_row(shape);
    CHECK(tl.value_at(Box{1, 1, 0}) == 1);
    CHECK(tl.value_at(Box{1, 2, 0}) == 2);
    CHECK(tl.value_at(Box{2, 2, 0}) == 3);
    CHECK(tl.value_at(Box{1, 1, 1}) == 4);
    CHECK(tl.value_at(Box{2, 1, 1}) == 5);
    // the displayed tableau: rows (1 3 / . 5), (2 / 4) with D_t = {1,5}
    StandardTableau disp;
    disp.shape = shape;
    disp.entry_box = {Box{1, 1, 0}, Box{1, 1, 1}, Box{1, 2, 0}, Box{2, 1, 1}, Box{2, 2, 0}};
    CHECK(disp.is_standard());
    CHECK(std::find(tabs.begin(), tabs.end(), disp) != tabs.end());
    auto dd = diagonal_data(disp);
    CHECK(dd.t_count == 2);
    CHECK(dd.d_mask == (bit_of(1) | bit_of(5)));
    CHECK(dd.diag_entries == std::vector<int>{1, 5});
    CHECK(dd.od_mask == bit_of(1));
}

TEST_CASE("d_perm") {
    Params p = nd_s(4);
    for (const auto& shape : enumerate_multipartitions(p)) {
        auto tabs = enumerate_std(shape);
        for (const auto& s : tabs)
            for (const auto& t : tabs) {
                auto d = d_perm(s, t);
                // s = d * t and the word is admissible step by step
                CHECK(apply_perm(d.perm, t) == s);
                StandardTableau cur = t;
                for (int k : d.word) {
                    cur = apply_perm(perm_transposition(p.n, k), cur);
                    CHECK(cur.is_standard());
                }
                CHECK(cur == s);
                CHECK(static_cast<int>(d.word.size()) == perm_length(d.perm));
            }
        // identity case
        CHECK(d_perm(tabs[0], tabs[0]).word.empty());
    }
    // the (3,1) example: t = s_3 s with s = t^lambda
    MultiPartition s31 = shape_of(nd_s(4), {{3, 1}});
    StandardTableau s = t_row(s31);
    StandardTableau t = apply_perm(perm_transposition(4, 3), s);
    CHECK(t.is_standard());
    auto d = d_perm(t, s);
    CHECK(d.word == std::vector<int>{3});
}

TEST_CASE("P(lambda) bijection with Std(lambda)") {
    // reachable set under stepwise-admissible words equals Std, and the
    // map tau -> tau t^lambda is injective
    for (const auto& p : {nd_s(4), nd_ss(3), deg_s(4)}) {
        for (const auto& shape : enumerate_multipartitions(p)) {
            auto tabs = enumerate_std(shape);
            std::set<Perm> seen;
            std::vector<StandardTableau> frontier{t_row(shape)};
            std::set<std::string> reached{t_row(shape).str()};
            seen.insert(perm_identity(p.n));
            while (!frontier.empty()) {
                StandardTableau cur = frontier.back();
                frontier.pop_back();
                for (int i = 1; i < p.n; ++i) {
                    StandardTableau nxt = apply_perm(perm_transposition(p.n, i), cur);
                    if (!nxt.is_standard()) continue;
                    if (reached.insert(nxt.str()).second) frontier.push_back(nxt);
                    seen.insert(d_perm(nxt, t_row(shape)).perm);
                }
            }
            CHECK(reached.size() == tabs.size());
            CHECK(seen.size() == tabs.size());
        }
    }
}

TEST_CASE("diagonal data") {
    // bullet = 0: no diagonal boxes at all
    for (const auto& shape : enumerate_multipartitions(nd_zero(3)))
        for (const auto& t : enumerate_std(shape)) {
            auto dd = diagonal_data(t);
            CHECK(dd.t_count == 0);
            CHECK(dd.d_mask == 0);
            CHECK(dd.od_mask == 0);
            CHECK(dd.d_lambda == 0);
        }
    // single strict row (3): D = {1}, OD = {1}, d_lambda = 1
    MultiPartition row3 = shape_of(nd_s(3), {{3}});
    auto dd = diagonal_data(t_row(row3));
    CHECK(dd.t_count == 1);
    CHECK(dd.d_mask == bit_of(1));
    CHECK(dd.od_mask == bit_of(1));
    CHECK(dd.d_lambda == 1);
    // strict (2,1): t' = 2, d_lambda = 0
    MultiPartition s21 = shape_of(nd_s(3), {{2, 1}});
    auto dd2 = diagonal_data(t_row(s21));
    CHECK(dd2.t_count == 2);
    CHECK(dd2.d_lambda == 0);
    CHECK(dd2.diag_entries == std::vector<int>{1, 3});
}

TEST_CASE("residues") {
    Params p = nd_s(3);
    MultiPartition row3 = shape_of(p, {{3}});
    // box (1,1,comp0) has residue Q_0 = 1; (1,2,0) has q^2
    CHECK(close(residue(Box{1, 1, 0}, row3, p), Scalar(1)));
    CHECK(close(residue(Box{1, 2, 0}, row3, p), p.q * p.q));
    Params d = deg_zero(3);
    MultiPartition ord = shape_of(d, {{2, 1}});
    CHECK(close(residue(Box{2, 1, 0}, ord, d), d.q_label(1) - Scalar(1)));
    // degenerate type s: box (2,1) would have residue -1 in an ordinary
    // component with Q = 0; use an ordinary component of a type-s config
    Params ds = deg_s(3);
    ds.m = 1;
    ds.Q = {Scalar(0)};
    MultiPartition mixed = shape_of(ds, {{1}, {2}});
    CHECK(close(residue(Box{1, 2, 1}, mixed, ds), Scalar(1)));

    // res_seq indexes by entries
    auto t = t_row(row3);
    auto rs = res_seq(t, p);
    CHECK(close(rs[0], Scalar(1)));
    CHECK(close(rs[2], (p.q * p.q).pow(2)));
    auto qs = q_seq(t, p);
    CHECK(close(qs[0], Scalar(2)));
}

TEST_CASE("separate check") {
    for (const auto& p : default_configs(3)) CHECK(separate_check(p));
    for (const auto& p : default_configs(2)) CHECK(separate_check(p));
    // a collision: degenerate type 0 with Q = 1/2 makes q(res) collide
    // (residues 1/2 and -1/2 have equal iota(iota+1) shifted); find some
    // failing parameter to prove the check can fail
    Params bad = deg_zero(3);
    bad.Q = {Scalar::parse("-1/2")};
    // residues -1/2 + (j-i); q(iota) = iota(iota+1): iota and -1-iota collide;
    // -1/2+d vs -1/2-d' : collision when d + d' = 0 i.e. boxes on equal diagonals
    // appear adjacent in some tableau of size 4 via different rows
    std::string why;
    bool ok = separate_check(bad, &why);
    CHECK_FALSE(ok);
    CHECK(!why.empty());
}

TEST_CASE("z2 sets and sectors") {
    Params p = nd_s(3);
    MultiPartition row3 = shape_of(p, {{3}});
    auto dd = diagonal_data(t_row(row3));
    auto z = z2_sets(dd, 3);
    CHECK(z.beta.size() == 4);        // 2^{n-t'} = 4
    CHECK(z.alpha.size() == 2);       // 2^{ceil(1/2)} = 2
    CHECK(z.alpha_even.size() == 1);  // 2^{floor(1/2)} = 1
    CHECK(z.alpha_odd.size() == 1);
    MultiPartition s21 = shape_of(p, {{2, 1}});
    auto dd2 = diagonal_data(t_row(s21));
    auto z2 = z2_sets(dd2, 3);
    CHECK(z2.beta.size() == 2);
    CHECK(z2.alpha.size() == 2);
    CHECK(z2.alpha_even.size() == 2); // d_lambda = 0: all even
    CHECK(z2.alpha_odd.empty());
    // bullet 0: everything empty diagonal
    auto dd0 = diagonal_data(t_row(shape_of(nd_zero(3), {{3}})));
    auto z0 = z2_sets(dd0, 3);
    CHECK(z0.beta.size() == 8);
    CHECK(z0.alpha.size() == 1);
    CHECK(z0.alpha_odd.empty());
}

TEST_CASE("hat involution") {
    for (const auto& p : {nd_s(4), nd_ss(3)}) {
        for (const auto& shape : enumerate_multipartitions(p))
            for (const auto& t : enumerate_std(shape)) {
                auto dd = diagonal_data(t);
                auto z = z2_sets(dd, p.n);
                for (uint32_t a : z.alpha_even) {
                    uint32_t h = hat(a, dd, 0);
                    CHECK(sector_of(h, dd) == 0);
                    CHECK(hat(h, dd, 0) == a);
                    // disjoint union support property
                    CHECK((h & a) == 0u);
                    CHECK((h | a) == dd.hat_mask_floor);
                }
                for (uint32_t a : z.alpha_odd) {
                    uint32_t h = hat(a, dd, 1);
                    CHECK(sector_of(h, dd) == 1);
                    CHECK(hat(h, dd, 1) == a);
                }
            }
    }
    // n=3 single row: alpha = 0 has odd-sector hat with support {d(i_1)}
    Params p = nd_s(3);
    auto dd = diagonal_data(t_row(shape_of(p, {{3}})));
    CHECK(hat(bit_of(dd.last_entry()), dd, 1) == bit_of(dd.diag_entries[0]));
}

TEST_CASE("sgn values are signs") {
    for (const auto& p : {nd_s(4), nd_ss(4)}) {
        for (const auto& shape : enumerate_multipartitions(p))
            for (const auto& t : enumerate_std(shape)) {
                auto dd = diagonal_data(t);
                auto z = z2_sets(dd, p.n);
                for (uint32_t a : z.alpha) {
                    if (dd.d_lambda == 0) {
                        int s = sgn(dd, a);
                        CHECK((s == 1 || s == -1));
                    } else {
                        CHECK((sgn_a(dd, a, 0) == 1 || sgn_a(dd, a, 0) == -1));
                        CHECK((sgn_a(dd, a, 1) == 1 || sgn_a(dd, a, 1) == -1));
                    }
                }
            }
    }
}

TEST_CASE("addable boxes") {
    Params p = deg_s(3);
    MultiPartition row3 = shape_of(p, {{3}});
    StandardTableau t = t_row(row3);
    // after entries {1}: partial shape (1); addable: extend row 1 or new row 2
    auto add1 = addable_boxes(row3, partial_shape_rows(t, 1));
    CHECK(add1.size() == 1); // strict: new row needs previous part > 1
    CHECK(add1[0] == Box{1, 2, 0});
    auto add2 = addable_boxes(row3, partial_shape_rows(t, 2));
    CHECK(add2.size() == 2); // (1,3) and the new shifted row (2,2)
    // empty partial shape: only (1,1)
    auto add0 = addable_boxes(row3, partial_shape_rows(t, 0));
    CHECK(add0.size() == 1);
    CHECK(add0[0] == Box{1, 1, 0});
}
