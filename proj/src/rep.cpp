#include "hc/rep.hpp"

#include <bit>
#include <sstream>

namespace hc {

BlockOp BlockOp::operator+(const BlockOp& o) const {
    BlockOp r;
    for (size_t b = 0; b < blocks.size(); ++b) r.blocks.push_back(blocks[b] + o.blocks[b]);
    return r;
}

BlockOp BlockOp::operator-(const BlockOp& o) const {
    BlockOp r;
    for (size_t b = 0; b < blocks.size(); ++b) r.blocks.push_back(blocks[b] - o.blocks[b]);
    return r;
}

BlockOp BlockOp::operator*(const BlockOp& o) const {
    BlockOp r;
    for (size_t b = 0; b < blocks.size(); ++b) r.blocks.push_back(blocks[b] * o.blocks[b]);
    return r;
}

BlockOp BlockOp::operator*(const Scalar& c) const {
    BlockOp r;
    for (const auto& m : blocks) r.blocks.push_back(m * c);
    return r;
}

Real BlockOp::residual(const BlockOp& o) const {
    Real mx(0);
    for (size_t b = 0; b < blocks.size(); ++b) {
        Real v = blocks[b].residual(o.blocks[b]);
        if (v > mx) mx = v;
    }
    return mx;
}

Real BlockOp::max_abs() const {
    Real mx(0);
    for (const auto& m : blocks) {
        Real v = m.max_abs();
        if (v > mx) mx = v;
    }
    return mx;
}

std::vector<Scalar> BlockOp::vec() const {
    std::vector<Scalar> v;
    for (const auto& m : blocks)
        for (int i = 0; i < m.rows(); ++i)
            for (int j = 0; j < m.cols(); ++j) v.push_back(m.at(i, j));
    return v;
}

int BlockOp::vec_len() const {
    int n = 0;
    for (const auto& m : blocks) n += m.rows() * m.cols();
    return n;
}

Rep::Rep(const Params& params) : params_(params) {
    params_.validate();
    std::string why;
    if (!separate_check(params_, &why))
        throw std::runtime_error("separateness fails: " + why);
    for (const auto& shape : enumerate_multipartitions(params_))
        modules_.push_back(std::make_shared<SimpleModule>(shape, params_));
    for (const auto& m : modules_) total_dim_ += m->dim();

    int n = params_.n;
    auto assemble = [&](auto&& action) {
        BlockOp op;
        for (const auto& mod : modules_) {
            Matrix mat(mod->dim(), mod->dim());
            for (int col = 0; col < mod->dim(); ++col)
                for (const auto& t : action(*mod, col)) mat.at(t.index, col) += t.coeff;
            op.blocks.push_back(std::move(mat));
        }
        return op;
    };
    for (int i = 1; i <= n; ++i) {
        genX_.push_back(assemble([i](const SimpleModule& m, int col) { return m.act_X(i, 1, col); }));
        if (params_.flavor == Flavor::NonDegenerate)
            genXinv_.push_back(
                assemble([i](const SimpleModule& m, int col) { return m.act_X(i, -1, col); }));
        genC_.push_back(assemble([i](const SimpleModule& m, int col) { return m.act_C(i, col); }));
    }
    for (int i = 1; i < n; ++i)
        genT_.push_back(assemble([i](const SimpleModule& m, int col) { return m.act_T(i, col); }));
}

const BlockOp& Rep::gen_Xinv(int i) const {
    if (params_.flavor != Flavor::NonDegenerate)
        throw std::logic_error("x_i has no inverse in the degenerate flavor");
    return genXinv_[static_cast<size_t>(i - 1)];
}

BlockOp Rep::identity() const {
    BlockOp op;
    for (const auto& m : modules_) op.blocks.push_back(Matrix::identity(m->dim()));
    return op;
}

BlockOp Rep::zero() const {
    BlockOp op;
    for (const auto& m : modules_) op.blocks.push_back(Matrix(m->dim(), m->dim()));
    return op;
}

BlockOp Rep::perm_op(const Perm& w) const {
    BlockOp op = identity();
    for (int k : reduced_word(w)) op = op * gen_T(k);
    return op;
}

BlockOp Rep::represent(const AffineElement& e) const {
    if (e.flavor() != params_.flavor || e.n() != params_.n)
        throw std::invalid_argument("represent: flavor/n mismatch");
    BlockOp out = zero();
    for (const auto& [key, coeff] : e.terms()) {
        BlockOp m = identity();
        for (int j = 1; j <= params_.n; ++j) {
            int a = key.alpha[static_cast<size_t>(j - 1)];
            for (int s = 0; s < std::abs(a); ++s) m = m * (a > 0 ? gen_X(j) : gen_Xinv(j));
        }
        for (int j = 1; j <= params_.n; ++j)
            if (has_bit(key.beta, j)) m = m * gen_C(j);
        for (int k : reduced_word(key.w)) m = m * gen_T(k);
        out = out + m * coeff;
    }
    return out;
}

BlockOp Rep::clifford_op(const CliffordElement& e) const {
    BlockOp out = zero();
    for (const auto& [mask, coeff] : e.terms()) {
        BlockOp m = identity();
        for (int j = 1; j <= params_.n; ++j)
            if (has_bit(mask, j)) m = m * gen_C(j);
        out = out + m * coeff;
    }
    return out;
}

PBWFrame::PBWFrame(const Rep& rep) : rep_(rep) {
    const Params& p = rep.params();
    int n = p.n, r = p.level();
    std::vector<Perm> perms;
    {
        Perm w = perm_identity(n);
        std::vector<int> idx(static_cast<size_t>(n));
        for (int i = 0; i < n; ++i) idx[static_cast<size_t>(i)] = i + 1;
        do {
            perms.push_back(idx);
        } while (std::next_permutation(idx.begin(), idx.end()));
    }
    std::vector<int> alpha(static_cast<size_t>(n), 0);
    std::function<void(int)> rec = [&](int pos) {
        if (pos == n) {
            for (uint32_t beta = 0; beta < (1u << n); ++beta)
                for (const auto& w : perms) keys_.push_back(PBWKey{alpha, beta, w});
            return;
        }
        for (int a = 0; a < r; ++a) {
            alpha[static_cast<size_t>(pos)] = a;
            rec(pos + 1);
        }
        alpha[static_cast<size_t>(pos)] = 0;
    };
    rec(0);

    for (const auto& key : keys_) {
        AffineElement mono = AffineElement::monomial(p.flavor, n, key, Scalar(1));
        ops_.push_back(rep.represent(mono));
        star_ops_.push_back(rep.represent(star(mono, p)));
    }
    int len = ops_.front().vec_len();
    Matrix A(len, static_cast<int>(ops_.size()));
    for (int j = 0; j < static_cast<int>(ops_.size()); ++j) {
        auto v = ops_[static_cast<size_t>(j)].vec();
        for (int i = 0; i < len; ++i) A.at(i, j) = v[static_cast<size_t>(i)];
    }
    solver_ = std::make_unique<LinearSolver>(std::move(A));
}

std::vector<Scalar> PBWFrame::extract(const BlockOp& op, Real* residual) const {
    return solver_->solve(op.vec(), residual);
}

AffineElement PBWFrame::to_affine(const std::vector<Scalar>& coords) const {
    AffineElement e(rep_.params().flavor, rep_.params().n);
    for (size_t i = 0; i < keys_.size(); ++i)
        if (!coords[i].is_zero()) e.add_term(keys_[i], coords[i]);
    return e;
}

BlockOp PBWFrame::star_op(const BlockOp& op) const {
    Real resid(0);
    auto coords = extract(op, &resid);
    if (resid > tol())
        throw std::runtime_error("star_op: operator not in algebra image");
    BlockOp out = rep_.zero();
    for (size_t i = 0; i < keys_.size(); ++i)
        if (!coords[i].is_zero()) out = out + star_ops_[i] * coords[i];
    return out;
}

DimensionLedger dimension_ledger(const Params& p) {
    DimensionLedger led;
    long fact = 1;
    for (int i = 2; i <= p.n; ++i) fact *= i;
    long rn = 1;
    for (int i = 0; i < p.n; ++i) rn *= p.level();
    led.pbw_dim = rn * (1L << p.n) * fact;
    for (const auto& shape : enumerate_multipartitions(p)) {
        long nstd = static_cast<long>(enumerate_std(shape).size());
        int tprime = static_cast<int>(shape.diagonal_boxes().size());
        long contrib = (1L << (2 * p.n - tprime)) * nstd * nstd;
        led.block_sum += contrib;
        led.total_module_dim += static_cast<int>((1L << (p.n - tprime / 2)) * nstd);
        std::ostringstream os;
        os << shape.str() << " t'=" << tprime << " |Std|=" << nstd << " dim-contrib=" << contrib;
        led.lines.push_back(os.str());
    }
    led.balanced = (led.pbw_dim == led.block_sum);
    return led;
}

} // namespace hc
