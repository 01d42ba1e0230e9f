#pragma once

#include "hc/affine.hpp"
#include "hc/clifford.hpp"
#include "hc/matrix.hpp"
#include "hc/simple_module.hpp"

#include <memory>

namespace hc {

// Block-diagonal operator on V = (+)_lambda D(lambda); one dense block per
// simple module.
struct BlockOp {
    std::vector<Matrix> blocks;

    BlockOp operator+(const BlockOp& o) const;
    BlockOp operator-(const BlockOp& o) const;
    BlockOp operator*(const BlockOp& o) const;
    BlockOp operator*(const Scalar& c) const;
    Real residual(const BlockOp& o) const;
    Real max_abs() const;
    bool near(const BlockOp& o, const Real& eps) const { return residual(o) <= eps; }
    bool near(const BlockOp& o) const { return near(o, tol()); }
    std::vector<Scalar> vec() const; // concatenated entries
    int vec_len() const;
};

// The faithful representation of the cyclotomic quotient on one copy of
// each simple module; the equality oracle for algebra elements.
class Rep {
public:
    explicit Rep(const Params& params);

    const Params& params() const { return params_; }
    const std::vector<std::shared_ptr<SimpleModule>>& modules() const { return modules_; }
    const SimpleModule& module(int b) const { return *modules_[static_cast<size_t>(b)]; }
    int num_blocks() const { return static_cast<int>(modules_.size()); }
    int total_dim() const { return total_dim_; } // N = sum of block dims

    BlockOp identity() const;
    BlockOp zero() const;
    const BlockOp& gen_X(int i) const { return genX_[static_cast<size_t>(i - 1)]; }
    const BlockOp& gen_Xinv(int i) const; // nondegenerate only
    const BlockOp& gen_C(int i) const { return genC_[static_cast<size_t>(i - 1)]; }
    const BlockOp& gen_T(int i) const { return genT_[static_cast<size_t>(i - 1)]; }

    BlockOp represent(const AffineElement& e) const;
    BlockOp clifford_op(const CliffordElement& e) const;
    BlockOp perm_op(const Perm& w) const; // T_w via a reduced word

    // Parity of each basis coordinate of block b.
    int parity(int block, int index) const { return module(block).parity(index); }

private:
    Params params_;
    std::vector<std::shared_ptr<SimpleModule>> modules_;
    std::vector<BlockOp> genX_, genXinv_, genC_, genT_;
    int total_dim_ = 0;

    BlockOp build(int i, int kind) const; // helpers at construction
};

// The cyclotomic PBW frame X^a C^b T_w, a in {0..r-1}^n, with precomputed
// operator images and a shared solver for coordinate extraction.
class PBWFrame {
public:
    explicit PBWFrame(const Rep& rep);

    int size() const { return static_cast<int>(keys_.size()); }
    const std::vector<PBWKey>& keys() const { return keys_; }
    const BlockOp& op(int i) const { return ops_[static_cast<size_t>(i)]; }
    int rank() const { return solver_->rank(); }

    // Coordinates of op over the frame; residual above tolerance means the
    // operator is not in the image of the algebra.
    std::vector<Scalar> extract(const BlockOp& op, Real* residual = nullptr) const;
    AffineElement to_affine(const std::vector<Scalar>& coords) const;

    // Operator-level star: extract, star each frame monomial, recombine.
    BlockOp star_op(const BlockOp& op) const;

private:
    const Rep& rep_;
    std::vector<PBWKey> keys_;
    std::vector<BlockOp> ops_;
    std::vector<BlockOp> star_ops_;
    std::unique_ptr<LinearSolver> solver_;
};

struct DimensionLedger {
    long pbw_dim = 0;        // r^n 2^n n!
    long block_sum = 0;      // sum over shapes of 2^{2n-t'} |Std|^2
    int total_module_dim = 0; // N
    bool balanced = false;
    std::vector<std::string> lines;
};

DimensionLedger dimension_ledger(const Params& p);

} // namespace hc
