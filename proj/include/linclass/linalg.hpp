#pragma once

// Minimal dense linear algebra backing the normal-equation solvers:
// row-major matrices, Gram products, Cholesky factorization and SPD solves.
// Everything here is a pure function on immutable inputs.

#include <cstddef>
#include <string>
#include <vector>

#include "linclass/errors.hpp"

namespace linclass {

using Vector = std::vector<double>;

class DenseMatrix {
public:
    DenseMatrix() = default;

    DenseMatrix(std::size_t rows, std::size_t cols, double fill = 0.0)
        : rows_(rows), cols_(cols), data_(rows * cols, fill) {}

    // Row-major entries; throws DimensionMismatch if the count is off.
    DenseMatrix(std::size_t rows, std::size_t cols, std::vector<double> entries);

    static DenseMatrix identity(std::size_t n);

    double& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
    double operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }

    const std::vector<double>& data() const { return data_; }

    bool operator==(const DenseMatrix& other) const = default;

private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<double> data_;
};

// Throw NonFiniteValue if any entry is NaN or infinite.
void ensure_finite(const Vector& v, const std::string& what);
void ensure_finite(const DenseMatrix& m, const std::string& what);

// A^T A, exactly symmetric: the upper triangle is computed and mirrored.
DenseMatrix gram(const DenseMatrix& a);

// Lower-triangular L with L L^T = m. Requires m square and symmetric to
// within 1e-12 relative; throws NotPositiveDefinite when a pivot drops to
// or below 1e-14 * max|m|.
DenseMatrix cholesky(const DenseMatrix& m);

// Solve m x = b for symmetric positive definite m via Cholesky plus
// forward/back substitution.
Vector solve_spd(const DenseMatrix& m, const Vector& b);

// True iff cholesky(m) succeeds.
bool is_positive_definite(const DenseMatrix& m);

DenseMatrix multiply(const DenseMatrix& a, const DenseMatrix& b);
DenseMatrix transpose(const DenseMatrix& a);
Vector matvec(const DenseMatrix& a, const Vector& x);
Vector transpose_matvec(const DenseMatrix& a, const Vector& x);

double dot(const Vector& a, const Vector& b);
double norm2(const Vector& v);
double norm_inf(const Vector& v);
double frobenius_norm(const DenseMatrix& m);
double max_abs(const DenseMatrix& m);

Vector add(const Vector& a, const Vector& b);
Vector subtract(const Vector& a, const Vector& b);
Vector scale(double s, const Vector& v);

}  // namespace linclass
