#pragma once

#include "hc/scalar.hpp"

#include <vector>

namespace hc {

class Matrix {
public:
    Matrix() = default;
    Matrix(int rows, int cols) : r_(rows), c_(cols), a_(static_cast<size_t>(rows) * cols) {}

    static Matrix identity(int n);

    int rows() const { return r_; }
    int cols() const { return c_; }
    Scalar& at(int i, int j) { return a_[static_cast<size_t>(i) * c_ + j]; }
    const Scalar& at(int i, int j) const { return a_[static_cast<size_t>(i) * c_ + j]; }

    Matrix operator+(const Matrix& o) const;
    Matrix operator-(const Matrix& o) const;
    Matrix operator*(const Matrix& o) const;
    Matrix operator*(const Scalar& c) const;

    Real max_abs() const;
    Real residual(const Matrix& o) const; // max |this - o| entrywise
    bool near(const Matrix& o, const Real& eps) const { return residual(o) <= eps; }
    bool near(const Matrix& o) const { return near(o, tol()); }
    bool is_zero(const Real& eps) const { return max_abs() <= eps; }

private:
    int r_ = 0, c_ = 0;
    std::vector<Scalar> a_;
};

// Dense full-pivot LU with tolerance-scaled pivot threshold; rank and
// repeated solves against the same factor.
class LinearSolver {
public:
    explicit LinearSolver(Matrix A, Real pivot_eps = tol());

    int rank() const { return rank_; }

    // Least-structure solve of A x = b. Returns coordinates (size cols) and
    // stores the residual max-norm in *residual when given; inconsistency
    // shows up there, not as an exception.
    std::vector<Scalar> solve(const std::vector<Scalar>& b, Real* residual = nullptr) const;

    // Basis of the nullspace of A.
    std::vector<std::vector<Scalar>> kernel() const;

private:
    Matrix lu_;
    std::vector<int> row_perm_, col_perm_;
    int rank_ = 0;
    Real eps_;
};

int matrix_rank(const std::vector<std::vector<Scalar>>& vectors, const Real& eps = tol());

} // namespace hc
