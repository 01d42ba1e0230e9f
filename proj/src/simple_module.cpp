#include "hc/simple_module.hpp"

#include <bit>

namespace hc {

namespace {
int nu(uint32_t mask, int k) { return has_bit(mask, k) ? -1 : 1; }
int delta_bit(uint32_t mask, int k) { return has_bit(mask, k) ? 1 : 0; }
int popc(uint32_t m) { return std::popcount(m); }
} // namespace

SimpleModule::SimpleModule(const MultiPartition& shape, const Params& params)
    : shape_(shape), params_(params) {
    tabs_ = enumerate_std(shape_);
    int n = params_.n;
    for (const auto& t : tabs_) {
        diag_.push_back(diagonal_data(t));
        std::vector<Scalar> row;
        row.push_back(Scalar(0)); // 1-based slot
        auto rs = res_seq(t, params_);
        for (int i = 1; i <= n; ++i) {
            const Scalar& r = rs[static_cast<size_t>(i - 1)];
            row.push_back(params_.flavor == Flavor::NonDegenerate ? b_pm(r, -1, params_)
                                                                  : u_pm(r, +1));
        }
        eig_.push_back(std::move(row));
    }
    for (int ti = 0; ti < static_cast<int>(tabs_.size()); ++ti) {
        tab_offset_.push_back(static_cast<int>(basis_.size()));
        auto z = z2_sets(diag_[static_cast<size_t>(ti)], n);
        for (uint32_t beta : z.beta)
            for (uint32_t alpha : z.alpha) {
                index_lookup_[{ti, (beta << 16) | alpha}] = static_cast<int>(basis_.size());
                basis_.push_back(BasisVector{ti, beta, alpha});
            }
    }
    // s_i neighbours
    s_tab_.assign(tabs_.size(), std::vector<int>(static_cast<size_t>(n), -1));
    for (int ti = 0; ti < static_cast<int>(tabs_.size()); ++ti)
        for (int i = 1; i < n; ++i) {
            StandardTableau st = apply_perm(perm_transposition(n, i), tabs_[static_cast<size_t>(ti)]);
            if (!st.is_standard()) continue;
            for (int tj = 0; tj < static_cast<int>(tabs_.size()); ++tj)
                if (tabs_[static_cast<size_t>(tj)] == st) {
                    s_tab_[static_cast<size_t>(ti)][static_cast<size_t>(i - 1)] = tj;
                    break;
                }
        }
}

int SimpleModule::index_of(int tab, uint32_t beta, uint32_t alpha) const {
    auto it = index_lookup_.find({tab, (beta << 16) | alpha});
    if (it == index_lookup_.end()) throw std::logic_error("basis vector out of supports");
    return it->second;
}

int SimpleModule::tab_index(const StandardTableau& t) const {
    for (int ti = 0; ti < static_cast<int>(tabs_.size()); ++ti)
        if (tabs_[static_cast<size_t>(ti)] == t) return ti;
    return -1;
}

const Scalar& SimpleModule::eig(int tab, int i) const {
    return eig_[static_cast<size_t>(tab)][static_cast<size_t>(i)];
}

int SimpleModule::s_tab(int tab, int i) const {
    return s_tab_[static_cast<size_t>(tab)][static_cast<size_t>(i - 1)];
}

Scalar SimpleModule::c_of(int tab, int i) const {
    const Scalar& a = eig(tab, i);
    const Scalar& b = eig(tab, i + 1);
    Scalar one(1);
    if (params_.flavor == Flavor::NonDegenerate) {
        Scalar eps = params_.epsilon();
        Scalar u = a.inv() * b, v = a * b;
        return one - eps * eps * (u / ((u - one) * (u - one)) + v / ((v - one) * (v - one)));
    }
    Scalar d = a - b, s = a + b;
    return one - (d * d).inv() - (s * s).inv();
}

Scalar SimpleModule::sqrt_c(int tab, int i) const {
    int other = s_tab(tab, i);
    int key_tab = (other >= 0 && other < tab) ? other : tab;
    auto key = std::make_pair(key_tab, i);
    auto it = sqrt_c_memo_.find(key);
    if (it != sqrt_c_memo_.end()) return it->second;
    Scalar r = sqrt_principal(c_of(key_tab, i));
    return sqrt_c_memo_.emplace(key, r).first->second;
}

int SimpleModule::parity(int index) const {
    const auto& v = basis_[static_cast<size_t>(index)];
    return (popc(v.alpha) + popc(v.beta)) % 2;
}

std::vector<SimpleModule::Term> SimpleModule::act_X(int i, int power, int index) const {
    const auto& v = basis_[static_cast<size_t>(index)];
    if (params_.flavor == Flavor::NonDegenerate) {
        Scalar lam = eig(v.tab, i).pow(-nu(v.beta, i));
        return {Term{lam.pow(power), index}};
    }
    if (power != 1) throw std::invalid_argument("degenerate x has no inverse");
    Scalar lam = eig(v.tab, i) * Scalar(nu(v.beta, i));
    return {Term{lam, index}};
}

std::vector<SimpleModule::Term> SimpleModule::act_C(int i, int index) const {
    const auto& v = basis_[static_cast<size_t>(index)];
    const auto& dd = diag_[static_cast<size_t>(v.tab)];
    if (!dd.in_d(i)) {
        Scalar c = (popcount_below(v.beta, i) % 2) ? Scalar(-1) : Scalar(1);
        return {Term{c, index_of(v.tab, v.beta ^ bit_of(i), v.alpha)}};
    }
    int p = dd.p_of(i);
    if (p % 2 == 1) {
        int e = popc(v.beta) + popcount_below(v.alpha, i);
        Scalar c = (e % 2) ? Scalar(-1) : Scalar(1);
        return {Term{c, index_of(v.tab, v.beta, v.alpha ^ bit_of(i))}};
    }
    int prev = dd.diag_entries[static_cast<size_t>(p - 2)];
    int e = popc(v.beta) + popcount_upto(v.alpha, prev);
    Scalar c = -Scalar::i();
    if (e % 2) c = -c;
    return {Term{c, index_of(v.tab, v.beta, v.alpha ^ bit_of(prev))}};
}

SimpleModule::RTerm SimpleModule::r_element(int i, const BasisVector& v) const {
    // R(i, beta, alpha, t) = C_i C_{i+1} . C^beta C^alpha v_t, composed from
    // the proven C action.
    int start = index_of(v.tab, v.beta, v.alpha);
    auto first = act_C(i + 1, start);
    auto second = act_C(i, first[0].index);
    const auto& target = basis_[static_cast<size_t>(second[0].index)];
    return {first[0].coeff * second[0].coeff, target.beta, target.alpha};
}

std::vector<SimpleModule::Term> SimpleModule::act_T(int i, int index) const {
    const auto& v = basis_[static_cast<size_t>(index)];
    std::vector<Term> out;
    Scalar one(1);
    int ni = nu(v.beta, i), ni1 = nu(v.beta, i + 1);
    if (params_.flavor == Flavor::NonDegenerate) {
        Scalar eps = params_.epsilon();
        Scalar b = eig(v.tab, i), b1 = eig(v.tab, i + 1);
        Scalar diag = -eps / (b.pow(-ni) * b1.pow(ni1) - one);
        out.push_back(Term{diag, index});
        Scalar rc = eps / (b.pow(ni) * b1.pow(ni1) - one);
        RTerm r = r_element(i, v);
        out.push_back(Term{rc * r.coeff, index_of(v.tab, r.beta, r.alpha)});
    } else {
        Scalar u = eig(v.tab, i) * Scalar(ni), u1 = eig(v.tab, i + 1) * Scalar(ni1);
        out.push_back(Term{-(u - u1).inv(), index});
        RTerm r = r_element(i, v);
        out.push_back(Term{-(u + u1).inv() * r.coeff, index_of(v.tab, r.beta, r.alpha)});
    }
    int other = s_tab(v.tab, i);
    if (other >= 0) {
        int e = delta_bit(v.beta, i) * delta_bit(v.beta, i + 1);
        if (params_.flavor == Flavor::NonDegenerate)
            e += delta_bit(v.alpha, i) * delta_bit(v.alpha, i + 1);
        Scalar c = sqrt_c(v.tab, i);
        if (e % 2) c = -c;
        Perm si = perm_transposition(params_.n, i);
        out.push_back(Term{c, index_of(other, perm_apply_mask(si, v.beta), perm_apply_mask(si, v.alpha))});
    }
    // merge duplicate targets
    std::vector<Term> merged;
    for (auto& t : out) {
        bool done = false;
        for (auto& m : merged)
            if (m.index == t.index) { m.coeff += t.coeff; done = true; break; }
        if (!done) merged.push_back(t);
    }
    std::vector<Term> result;
    for (auto& t : merged)
        if (!t.coeff.is_zero()) result.push_back(t);
    return result;
}

} // namespace hc
