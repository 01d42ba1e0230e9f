#include "hc/matrix.hpp"

#include <stdexcept>

namespace hc {

Matrix Matrix::identity(int n) {
    Matrix m(n, n);
    for (int i = 0; i < n; ++i) m.at(i, i) = Scalar(1);
    return m;
}

Matrix Matrix::operator+(const Matrix& o) const {
    if (r_ != o.r_ || c_ != o.c_) throw std::invalid_argument("matrix add: shape mismatch");
    Matrix m(r_, c_);
    for (size_t i = 0; i < a_.size(); ++i) m.a_[i] = a_[i] + o.a_[i];
    return m;
}

Matrix Matrix::operator-(const Matrix& o) const {
    if (r_ != o.r_ || c_ != o.c_) throw std::invalid_argument("matrix sub: shape mismatch");
    Matrix m(r_, c_);
    for (size_t i = 0; i < a_.size(); ++i) m.a_[i] = a_[i] - o.a_[i];
    return m;
}

Matrix Matrix::operator*(const Matrix& o) const {
    if (c_ != o.r_) throw std::invalid_argument("matrix mul: shape mismatch");
    Matrix m(r_, o.c_);
    for (int i = 0; i < r_; ++i)
        for (int k = 0; k < c_; ++k) {
            const Scalar& f = at(i, k);
            if (f.is_zero()) continue;
            for (int j = 0; j < o.c_; ++j) {
                const Scalar& g = o.at(k, j);
                if (!g.is_zero()) m.at(i, j) += f * g;
            }
        }
    return m;
}

Matrix Matrix::operator*(const Scalar& c) const {
    Matrix m(r_, c_);
    for (size_t i = 0; i < a_.size(); ++i) m.a_[i] = a_[i] * c;
    return m;
}

Real Matrix::max_abs() const {
    Real mx(0);
    for (const auto& x : a_) {
        Real v = x.abs1();
        if (v > mx) mx = v;
    }
    return mx;
}

Real Matrix::residual(const Matrix& o) const {
    if (r_ != o.r_ || c_ != o.c_) throw std::invalid_argument("residual: shape mismatch");
    Real mx(0);
    for (size_t i = 0; i < a_.size(); ++i) {
        Real v = (a_[i] - o.a_[i]).abs1();
        if (v > mx) mx = v;
    }
    return mx;
}

LinearSolver::LinearSolver(Matrix A, Real pivot_eps) : lu_(std::move(A)), eps_(std::move(pivot_eps)) {
    int m = lu_.rows(), n = lu_.cols();
    row_perm_.resize(static_cast<size_t>(m));
    col_perm_.resize(static_cast<size_t>(n));
    for (int i = 0; i < m; ++i) row_perm_[static_cast<size_t>(i)] = i;
    for (int j = 0; j < n; ++j) col_perm_[static_cast<size_t>(j)] = j;
    int steps = std::min(m, n);
    for (int s = 0; s < steps; ++s) {
        int pi = -1, pj = -1;
        Real best(0);
        for (int i = s; i < m; ++i)
            for (int j = s; j < n; ++j) {
                Real v = lu_.at(i, j).abs1();
                if (v > best) { best = v; pi = i; pj = j; }
            }
        if (pi < 0 || best <= eps_) break;
        if (pi != s) {
            for (int j = 0; j < n; ++j) std::swap(lu_.at(pi, j), lu_.at(s, j));
            std::swap(row_perm_[static_cast<size_t>(pi)], row_perm_[static_cast<size_t>(s)]);
        }
        if (pj != s) {
            for (int i = 0; i < m; ++i) std::swap(lu_.at(i, pj), lu_.at(i, s));
            std::swap(col_perm_[static_cast<size_t>(pj)], col_perm_[static_cast<size_t>(s)]);
        }
        Scalar inv = lu_.at(s, s).inv();
        for (int i = s + 1; i < m; ++i) {
            Scalar f = lu_.at(i, s) * inv;
            lu_.at(i, s) = f;
            if (f.is_zero()) continue;
            for (int j = s + 1; j < n; ++j) lu_.at(i, j).submul(f, lu_.at(s, j));
        }
        rank_ = s + 1;
    }
}

std::vector<Scalar> LinearSolver::solve(const std::vector<Scalar>& b, Real* residual) const {
    int m = lu_.rows(), n = lu_.cols();
    if (static_cast<int>(b.size()) != m) throw std::invalid_argument("solve: rhs size mismatch");
    // forward: y = L^{-1} P b
    std::vector<Scalar> y(static_cast<size_t>(m));
    for (int i = 0; i < m; ++i) y[static_cast<size_t>(i)] = b[static_cast<size_t>(row_perm_[static_cast<size_t>(i)])];
    for (int i = 0; i < m; ++i)
        for (int s = 0; s < std::min(i, rank_); ++s)
            y[static_cast<size_t>(i)].submul(lu_.at(i, s), y[static_cast<size_t>(s)]);
    // back substitution on the rank x rank block
    std::vector<Scalar> z(static_cast<size_t>(n));
    for (int s = rank_ - 1; s >= 0; --s) {
        Scalar acc = y[static_cast<size_t>(s)];
        for (int j = s + 1; j < rank_; ++j) acc.submul(lu_.at(s, j), z[static_cast<size_t>(j)]);
        z[static_cast<size_t>(s)] = acc / lu_.at(s, s);
    }
    if (residual) {
        Real mx(0);
        for (int i = rank_; i < m; ++i) {
            Real v = y[static_cast<size_t>(i)].abs1();
            if (v > mx) mx = v;
        }
        *residual = mx;
    }
    std::vector<Scalar> x(static_cast<size_t>(n));
    for (int j = 0; j < n; ++j) x[static_cast<size_t>(col_perm_[static_cast<size_t>(j)])] = z[static_cast<size_t>(j)];
    return x;
}

std::vector<std::vector<Scalar>> LinearSolver::kernel() const {
    int n = lu_.cols();
    std::vector<std::vector<Scalar>> out;
    for (int f = rank_; f < n; ++f) {
        std::vector<Scalar> z(static_cast<size_t>(n));
        z[static_cast<size_t>(f)] = Scalar(1);
        for (int s = rank_ - 1; s >= 0; --s) {
            Scalar acc(0);
            for (int j = s + 1; j < n; ++j)
                if (!z[static_cast<size_t>(j)].is_zero()) acc += lu_.at(s, j) * z[static_cast<size_t>(j)];
            z[static_cast<size_t>(s)] = -(acc / lu_.at(s, s));
        }
        std::vector<Scalar> x(static_cast<size_t>(n));
        for (int j = 0; j < n; ++j) x[static_cast<size_t>(col_perm_[static_cast<size_t>(j)])] = z[static_cast<size_t>(j)];
        out.push_back(std::move(x));
    }
    return out;
}

int matrix_rank(const std::vector<std::vector<Scalar>>& vectors, const Real& eps) {
    if (vectors.empty()) return 0;
    int rows = static_cast<int>(vectors.size());
    int cols = static_cast<int>(vectors[0].size());
    Matrix A(rows, cols);
    for (int i = 0; i < rows; ++i)
        for (int j = 0; j < cols; ++j) A.at(i, j) = vectors[static_cast<size_t>(i)][static_cast<size_t>(j)];
    return LinearSolver(std::move(A), eps).rank();
}

} // namespace hc
