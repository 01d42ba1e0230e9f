#pragma once

#include "hc/params.hpp"
#include "hc/perm.hpp"

#include <optional>
#include <vector>

namespace hc {

struct Box {
    int row = 0; // 1-based
    int col = 0; // 1-based; col >= row inside strict (shifted) components
    int comp = 0; // index into MultiPartition::comps

    bool operator==(const Box& o) const { return row == o.row && col == o.col && comp == o.comp; }
};

struct Component {
    bool strict = false;
    int label = 0; // l: -1, 0, or 1..m; selects Q_l
    std::vector<int> rows; // part sizes, nonincreasing (strictly for strict)
};

struct MultiPartition {
    Bullet bullet = Bullet::S;
    std::vector<Component> comps;
    int n = 0;

    std::vector<Box> boxes() const;   // in t^lambda filling order (rows, first comp first)
    bool contains(int row, int col, int comp) const;
    std::vector<Box> diagonal_boxes() const; // D_lambda, in t^lambda order
    std::string str() const;
    bool operator==(const MultiPartition& o) const;
};

struct StandardTableau {
    MultiPartition shape;
    std::vector<Box> entry_box; // entry_box[k-1] = box holding k

    int n() const { return shape.n; }
    int value_at(const Box& b) const;
    bool is_standard() const;
    std::string str() const;
    bool operator==(const StandardTableau& o) const { return shape == o.shape && entry_box == o.entry_box; }
};

// Diagonal bookkeeping for one standard tableau. diag_entries[p-1] is the
// entry of t on the p-th diagonal box (ordered by the t^lambda filling, i.e.
// d(t,t^lambda)(i_p)); D/OD are bitmasks over entries.
struct DiagonalData {
    std::vector<int> diag_entries;
    uint32_t d_mask = 0;        // D_t
    uint32_t od_mask = 0;       // OD_t = odd-p entries
    uint32_t hat_mask_floor = 0; // entries at p = 1,3,...,2*floor(t/2)-1
    uint32_t hat_mask_ceil = 0;  // entries at p = 1,3,...,2*ceil(t/2)-1
    int t_count = 0;            // t' = |D_lambda|
    int d_lambda = 0;           // 1 iff t' odd

    bool in_d(int k) const { return has_bit(d_mask, k); }
    int p_of(int k) const; // 1-based position of entry k in diag_entries, 0 if absent
    int last_entry() const { return diag_entries.empty() ? 0 : diag_entries.back(); }
};

std::vector<MultiPartition> enumerate_multipartitions(const Params& p);
std::vector<MultiPartition> enumerate_multipartitions(const Params& p, int size);

std::vector<StandardTableau> enumerate_std(const MultiPartition& shape);
StandardTableau t_row(const MultiPartition& shape); // t^lambda
StandardTableau t_col(const MultiPartition& shape); // t_lambda

StandardTableau apply_perm(const Perm& w, const StandardTableau& t);
bool same_shape(const StandardTableau& s, const StandardTableau& t);

// The unique d with s = d * t, plus a reduced word in application order:
// word[0] acts first on t. Every prefix keeps the tableau standard.
struct DPerm {
    Perm perm;
    std::vector<int> word;
};
DPerm d_perm(const StandardTableau& s, const StandardTableau& t);

DiagonalData diagonal_data(const StandardTableau& t);

Scalar residue(const Box& b, const MultiPartition& shape, const Params& p);
std::vector<Scalar> res_seq(const StandardTableau& t, const Params& p);
std::vector<Scalar> q_seq(const StandardTableau& t, const Params& p);

// True iff the q-sequence of every standard tableau of every shape in
// P^{bullet,m}_{n+1} has distinct adjacent values. Offending pair reported
// through *why when given.
bool separate_check(const Params& p, std::string* why = nullptr);

struct Z2Sets {
    std::vector<uint32_t> beta;       // Z_2([n] \ D_t)
    std::vector<uint32_t> alpha;      // Z_2(OD_t)
    std::vector<uint32_t> alpha_even; // sector 0: no bit at d(i_t)
    std::vector<uint32_t> alpha_odd;  // sector 1
};
Z2Sets z2_sets(const DiagonalData& dd, int n);
std::vector<uint32_t> subsets_of(uint32_t support);

// Support-complement involution inside the given sector.
uint32_t hat(uint32_t alpha, const DiagonalData& dd, int sector);
int sector_of(uint32_t alpha, const DiagonalData& dd);

int sgn(const DiagonalData& dd, uint32_t alpha);             // d_lambda = 0
int sgn_a(const DiagonalData& dd, uint32_t alpha, int a);    // d_lambda = 1

// Addable boxes of a partial shape given by per-component row lengths.
std::vector<Box> addable_boxes(const MultiPartition& full, const std::vector<std::vector<int>>& partial_rows);
std::vector<std::vector<int>> partial_shape_rows(const StandardTableau& t, int k); // shape of t restricted to 1..k

} // namespace hc
