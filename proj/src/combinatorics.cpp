#include "hc/combinatorics.hpp"

#include <algorithm>
#include <functional>
#include <sstream>

namespace hc {

namespace {

int start_col(const Component& c, int row) { return c.strict ? row : 1; }

std::vector<std::vector<int>> partitions_of(int k) {
    std::vector<std::vector<int>> out;
    std::vector<int> cur;
    std::function<void(int, int)> go = [&](int rem, int maxpart) {
        if (rem == 0) { out.push_back(cur); return; }
        for (int part = std::min(rem, maxpart); part >= 1; --part) {
            cur.push_back(part);
            go(rem - part, part);
            cur.pop_back();
        }
    };
    go(k, k);
    return out;
}

std::vector<std::vector<int>> strict_partitions_of(int k) {
    std::vector<std::vector<int>> out;
    std::vector<int> cur;
    std::function<void(int, int)> go = [&](int rem, int maxpart) {
        if (rem == 0) { out.push_back(cur); return; }
        for (int part = std::min(rem, maxpart); part >= 1; --part) {
            cur.push_back(part);
            go(rem - part, part - 1);
            cur.pop_back();
        }
    };
    go(k, k);
    return out;
}

// All m-tuples of ordinary partitions with total size k.
std::vector<std::vector<std::vector<int>>> multi_of(int m, int k) {
    std::vector<std::vector<std::vector<int>>> out;
    if (m == 0) {
        if (k == 0) out.push_back({});
        return out;
    }
    for (int a = 0; a <= k; ++a) {
        auto heads = partitions_of(a);
        auto tails = multi_of(m - 1, k - a);
        for (const auto& h : heads)
            for (const auto& t : tails) {
                std::vector<std::vector<int>> tuple;
                tuple.push_back(h);
                for (const auto& x : t) tuple.push_back(x);
                out.push_back(std::move(tuple));
            }
    }
    return out;
}

bool valid_rows(const std::vector<int>& rows, bool strict) {
    for (size_t i = 0; i < rows.size(); ++i) {
        if (rows[i] <= 0) return false;
        if (i + 1 < rows.size()) {
            if (strict ? rows[i] <= rows[i + 1] : rows[i] < rows[i + 1]) return false;
        }
    }
    return true;
}

} // namespace

std::vector<Box> MultiPartition::boxes() const {
    std::vector<Box> out;
    for (int c = 0; c < static_cast<int>(comps.size()); ++c) {
        const auto& comp = comps[static_cast<size_t>(c)];
        for (int i = 1; i <= static_cast<int>(comp.rows.size()); ++i) {
            int s = start_col(comp, i);
            for (int j = s; j < s + comp.rows[static_cast<size_t>(i - 1)]; ++j)
                out.push_back(Box{i, j, c});
        }
    }
    return out;
}

bool MultiPartition::contains(int row, int col, int comp) const {
    if (comp < 0 || comp >= static_cast<int>(comps.size())) return false;
    const auto& c = comps[static_cast<size_t>(comp)];
    if (row < 1 || row > static_cast<int>(c.rows.size())) return false;
    int s = start_col(c, row);
    return col >= s && col < s + c.rows[static_cast<size_t>(row - 1)];
}

std::vector<Box> MultiPartition::diagonal_boxes() const {
    std::vector<Box> out;
    for (const auto& b : boxes())
        if (b.row == b.col && comps[static_cast<size_t>(b.comp)].strict) out.push_back(b);
    return out;
}

std::string MultiPartition::str() const {
    std::ostringstream os;
    for (size_t c = 0; c < comps.size(); ++c) {
        if (c) os << "|";
        os << comps[c].label << ":(";
        for (size_t i = 0; i < comps[c].rows.size(); ++i) {
            if (i) os << ",";
            os << comps[c].rows[i];
        }
        os << ")";
    }
    return os.str();
}

bool MultiPartition::operator==(const MultiPartition& o) const {
    if (bullet != o.bullet || n != o.n || comps.size() != o.comps.size()) return false;
    for (size_t c = 0; c < comps.size(); ++c)
        if (comps[c].strict != o.comps[c].strict || comps[c].label != o.comps[c].label ||
            comps[c].rows != o.comps[c].rows)
            return false;
    return true;
}

int StandardTableau::value_at(const Box& b) const {
    for (int k = 1; k <= n(); ++k)
        if (entry_box[static_cast<size_t>(k - 1)] == b) return k;
    throw std::logic_error("box not in tableau");
}

bool StandardTableau::is_standard() const {
    for (int k = 1; k <= n(); ++k) {
        const Box& b = entry_box[static_cast<size_t>(k - 1)];
        Box left{b.row, b.col - 1, b.comp}, up{b.row - 1, b.col, b.comp};
        if (shape.contains(left.row, left.col, left.comp) && value_at(left) > k) return false;
        if (shape.contains(up.row, up.col, up.comp) && value_at(up) > k) return false;
    }
    return true;
}

std::string StandardTableau::str() const {
    std::ostringstream os;
    os << shape.str() << " [";
    for (int k = 1; k <= n(); ++k) {
        const Box& b = entry_box[static_cast<size_t>(k - 1)];
        if (k > 1) os << " ";
        os << k << "@(" << b.row << "," << b.col << "," << b.comp << ")";
    }
    os << "]";
    return os.str();
}

std::vector<MultiPartition> enumerate_multipartitions(const Params& p) {
    return enumerate_multipartitions(p, p.n);
}

std::vector<MultiPartition> enumerate_multipartitions(const Params& p, int size) {
    std::vector<MultiPartition> out;
    auto emit = [&](std::vector<Component> comps) {
        MultiPartition mp;
        mp.bullet = p.bullet;
        mp.comps = std::move(comps);
        mp.n = size;
        out.push_back(std::move(mp));
    };
    auto ordinary_tail = [&](int k) { return multi_of(p.m, k); };

    if (p.bullet == Bullet::Zero) {
        for (auto& tuple : ordinary_tail(size)) {
            std::vector<Component> comps;
            for (int l = 1; l <= p.m; ++l)
                comps.push_back(Component{false, l, tuple[static_cast<size_t>(l - 1)]});
            emit(std::move(comps));
        }
    } else if (p.bullet == Bullet::S) {
        for (int a = 0; a <= size; ++a)
            for (auto& s0 : strict_partitions_of(a))
                for (auto& tuple : ordinary_tail(size - a)) {
                    std::vector<Component> comps;
                    comps.push_back(Component{true, 0, s0});
                    for (int l = 1; l <= p.m; ++l)
                        comps.push_back(Component{false, l, tuple[static_cast<size_t>(l - 1)]});
                    emit(std::move(comps));
                }
    } else {
        for (int a = 0; a <= size; ++a)
            for (int b = 0; a + b <= size; ++b)
                for (auto& sm : strict_partitions_of(a))
                    for (auto& sp : strict_partitions_of(b))
                        for (auto& tuple : ordinary_tail(size - a - b)) {
                            std::vector<Component> comps;
                            comps.push_back(Component{true, -1, sm});
                            comps.push_back(Component{true, 0, sp});
                            for (int l = 1; l <= p.m; ++l)
                                comps.push_back(Component{false, l, tuple[static_cast<size_t>(l - 1)]});
                            emit(std::move(comps));
                        }
    }
    return out;
}

std::vector<StandardTableau> enumerate_std(const MultiPartition& shape) {
    std::vector<StandardTableau> out;
    auto all = shape.boxes();
    int n = static_cast<int>(all.size());
    std::vector<bool> used(all.size(), false);
    std::vector<Box> entry(static_cast<size_t>(n));
    auto filled = [&](int row, int col, int comp) {
        if (!shape.contains(row, col, comp)) return true; // no constraint
        for (size_t idx = 0; idx < all.size(); ++idx)
            if (all[idx] == Box{row, col, comp}) return static_cast<bool>(used[idx]);
        return true;
    };
    std::function<void(int)> place = [&](int k) {
        if (k > n) {
            StandardTableau t;
            t.shape = shape;
            t.entry_box = entry;
            out.push_back(std::move(t));
            return;
        }
        for (size_t idx = 0; idx < all.size(); ++idx) {
            if (used[idx]) continue;
            const Box& b = all[idx];
            if (!filled(b.row, b.col - 1, b.comp) || !filled(b.row - 1, b.col, b.comp)) continue;
            used[idx] = true;
            entry[static_cast<size_t>(k - 1)] = b;
            place(k + 1);
            used[idx] = false;
        }
    };
    place(1);
    return out;
}

StandardTableau t_row(const MultiPartition& shape) {
    StandardTableau t;
    t.shape = shape;
    t.entry_box = shape.boxes();
    return t;
}

StandardTableau t_col(const MultiPartition& shape) {
    StandardTableau t;
    t.shape = shape;
    for (int c = static_cast<int>(shape.comps.size()) - 1; c >= 0; --c) {
        const auto& comp = shape.comps[static_cast<size_t>(c)];
        int maxcol = 0;
        for (int i = 1; i <= static_cast<int>(comp.rows.size()); ++i)
            maxcol = std::max(maxcol, start_col(comp, i) + comp.rows[static_cast<size_t>(i - 1)] - 1);
        for (int j = 1; j <= maxcol; ++j)
            for (int i = 1; i <= static_cast<int>(comp.rows.size()); ++i)
                if (shape.contains(i, j, c)) t.entry_box.push_back(Box{i, j, c});
    }
    return t;
}

StandardTableau apply_perm(const Perm& w, const StandardTableau& t) {
    StandardTableau r;
    r.shape = t.shape;
    r.entry_box.resize(t.entry_box.size());
    for (int k = 1; k <= t.n(); ++k)
        r.entry_box[static_cast<size_t>(w[static_cast<size_t>(k - 1)] - 1)] =
            t.entry_box[static_cast<size_t>(k - 1)];
    return r;
}

bool same_shape(const StandardTableau& s, const StandardTableau& t) { return s.shape == t.shape; }

DPerm d_perm(const StandardTableau& s, const StandardTableau& t) {
    if (!same_shape(s, t)) throw std::invalid_argument("d_perm: shapes differ");
    int n = s.n();
    Perm d(static_cast<size_t>(n));
    for (int k = 1; k <= n; ++k)
        d[static_cast<size_t>(k - 1)] = s.value_at(t.entry_box[static_cast<size_t>(k - 1)]);
    DPerm out;
    out.perm = d;
    out.word = reduced_word(d);
    std::reverse(out.word.begin(), out.word.end());
    return out;
}

DiagonalData diagonal_data(const StandardTableau& t) {
    DiagonalData dd;
    auto diag = t.shape.diagonal_boxes();
    dd.t_count = static_cast<int>(diag.size());
    dd.d_lambda = dd.t_count % 2;
    for (const auto& b : diag) {
        int k = t.value_at(b);
        dd.diag_entries.push_back(k);
        dd.d_mask |= bit_of(k);
    }
    int tt = dd.t_count;
    for (int p = 1; p <= tt; p += 2) {
        int e = dd.diag_entries[static_cast<size_t>(p - 1)];
        dd.od_mask |= bit_of(e);
        if (p <= 2 * (tt / 2) - 1) dd.hat_mask_floor |= bit_of(e);
        dd.hat_mask_ceil |= bit_of(e);
    }
    return dd;
}

int DiagonalData::p_of(int k) const {
    for (size_t i = 0; i < diag_entries.size(); ++i)
        if (diag_entries[i] == k) return static_cast<int>(i) + 1;
    return 0;
}

Scalar residue(const Box& b, const MultiPartition& shape, const Params& p) {
    int label = shape.comps[static_cast<size_t>(b.comp)].label;
    Scalar Ql = p.q_label(label);
    long d = b.col - b.row;
    if (p.flavor == Flavor::Degenerate) return Ql + Scalar(d);
    return Ql * (p.q * p.q).pow(d);
}

std::vector<Scalar> res_seq(const StandardTableau& t, const Params& p) {
    std::vector<Scalar> out;
    for (int k = 1; k <= t.n(); ++k)
        out.push_back(residue(t.entry_box[static_cast<size_t>(k - 1)], t.shape, p));
    return out;
}

std::vector<Scalar> q_seq(const StandardTableau& t, const Params& p) {
    std::vector<Scalar> out;
    for (auto& r : res_seq(t, p)) out.push_back(q_of(r, p));
    return out;
}

bool separate_check(const Params& p, std::string* why) {
    Params up = p;
    up.n = p.n + 1;
    for (const auto& mu : enumerate_multipartitions(up)) {
        for (const auto& t : enumerate_std(mu)) {
            auto qs = q_seq(t, up);
            for (size_t k = 0; k + 1 < qs.size(); ++k) {
                if (qs[k].near(qs[k + 1])) {
                    if (why) {
                        std::ostringstream os;
                        os << "q-sequence collision at entries " << (k + 1) << "," << (k + 2)
                           << " of tableau " << t.str();
                        *why = os.str();
                    }
                    return false;
                }
            }
        }
    }
    return true;
}

std::vector<uint32_t> subsets_of(uint32_t support) {
    std::vector<uint32_t> out;
    for (uint32_t x = support;; x = (x - 1) & support) {
        out.push_back(x);
        if (x == 0) break;
    }
    std::sort(out.begin(), out.end());
    return out;
}

Z2Sets z2_sets(const DiagonalData& dd, int n) {
    Z2Sets z;
    uint32_t full = (n >= 32) ? ~0u : ((1u << n) - 1u);
    z.beta = subsets_of(full & ~dd.d_mask);
    z.alpha = subsets_of(dd.od_mask);
    int last = dd.last_entry();
    for (uint32_t a : z.alpha) {
        if (dd.d_lambda == 1 && has_bit(a, last))
            z.alpha_odd.push_back(a);
        else
            z.alpha_even.push_back(a);
    }
    if (dd.d_lambda == 0) z.alpha_odd.clear();
    return z;
}

int sector_of(uint32_t alpha, const DiagonalData& dd) {
    if (dd.d_lambda == 0) return 0;
    return has_bit(alpha, dd.last_entry()) ? 1 : 0;
}

uint32_t hat(uint32_t alpha, const DiagonalData& dd, int sector) {
    uint32_t base = alpha;
    if (sector == 1) base &= ~bit_of(dd.last_entry());
    return sector == 1 ? (dd.hat_mask_ceil ^ base) : (dd.hat_mask_floor ^ base);
}

namespace {
int sgn_exponent(const DiagonalData& dd, uint32_t alpha, int first_count, int pair_count) {
    int e = 0;
    for (int j = 1; j <= first_count; ++j) {
        int ej = dd.diag_entries[static_cast<size_t>(2 * j - 2)];
        e += popcount_above(alpha, ej);
    }
    for (int j2 = 2; j2 <= pair_count; ++j2)
        for (int j1 = 1; j1 < j2; ++j1) {
            int a = dd.diag_entries[static_cast<size_t>(2 * j1 - 2)];
            int b = dd.diag_entries[static_cast<size_t>(2 * j2 - 2)];
            if (a > b) ++e;
        }
    return e;
}
} // namespace

int sgn(const DiagonalData& dd, uint32_t alpha) {
    int half = dd.t_count / 2;
    return (sgn_exponent(dd, alpha, half, half) % 2) ? -1 : 1;
}

int sgn_a(const DiagonalData& dd, uint32_t alpha, int a) {
    int ceil_half = (dd.t_count + 1) / 2;
    int floor_half = dd.t_count / 2;
    int pairs = (a % 2 == 0) ? floor_half : ceil_half;
    return (sgn_exponent(dd, alpha, ceil_half, pairs) % 2) ? -1 : 1;
}

std::vector<std::vector<int>> partial_shape_rows(const StandardTableau& t, int k) {
    std::vector<std::vector<int>> rows(t.shape.comps.size());
    for (size_t c = 0; c < t.shape.comps.size(); ++c)
        rows[c].assign(t.shape.comps[c].rows.size(), 0);
    for (int e = 1; e <= k; ++e) {
        const Box& b = t.entry_box[static_cast<size_t>(e - 1)];
        rows[static_cast<size_t>(b.comp)][static_cast<size_t>(b.row - 1)]++;
    }
    for (auto& r : rows)
        while (!r.empty() && r.back() == 0) r.pop_back();
    return rows;
}

std::vector<Box> addable_boxes(const MultiPartition& full,
                               const std::vector<std::vector<int>>& partial_rows) {
    std::vector<Box> out;
    for (int c = 0; c < static_cast<int>(full.comps.size()); ++c) {
        const auto& comp = full.comps[static_cast<size_t>(c)];
        const auto& rows = partial_rows[static_cast<size_t>(c)];
        int nrows = static_cast<int>(rows.size());
        for (int i = 1; i <= nrows + 1; ++i) {
            std::vector<int> cand(rows);
            if (i > nrows) cand.push_back(1);
            else cand[static_cast<size_t>(i - 1)]++;
            if (!valid_rows(cand, comp.strict)) continue;
            int len = (i > nrows) ? 0 : rows[static_cast<size_t>(i - 1)];
            out.push_back(Box{i, start_col(comp, i) + len, c});
        }
    }
    return out;
}

} // namespace hc
