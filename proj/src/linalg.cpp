#include "linclass/linalg.hpp"

#include <cmath>
#include <cstddef>

namespace linclass {

namespace {

constexpr double kPivotEps = 1e-14;
constexpr double kSymmetryTol = 1e-12;

}  // namespace

DenseMatrix::DenseMatrix(std::size_t rows, std::size_t cols, std::vector<double> entries)
    : rows_(rows), cols_(cols), data_(std::move(entries)) {
    if (data_.size() != rows_ * cols_) {
        throw DimensionMismatch("DenseMatrix: " + std::to_string(data_.size()) +
                                " entries for a " + std::to_string(rows_) + "x" +
                                std::to_string(cols_) + " matrix");
    }
}

DenseMatrix DenseMatrix::identity(std::size_t n) {
    DenseMatrix m(n, n, 0.0);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = 1.0;
    return m;
}

void ensure_finite(const Vector& v, const std::string& what) {
    for (double x : v) {
        if (!std::isfinite(x)) throw NonFiniteValue(what + ": non-finite entry");
    }
}

void ensure_finite(const DenseMatrix& m, const std::string& what) {
    for (double x : m.data()) {
        if (!std::isfinite(x)) throw NonFiniteValue(what + ": non-finite entry");
    }
}

DenseMatrix gram(const DenseMatrix& a) {
    if (a.rows() < 1 || a.cols() < 1) throw DimensionMismatch("gram: empty matrix");
    ensure_finite(a, "gram");
    const std::size_t n = a.rows();
    const std::size_t m = a.cols();
    DenseMatrix g(m, m, 0.0);
    for (std::size_t i = 0; i < m; ++i) {
        for (std::size_t j = i; j < m; ++j) {
            double s = 0.0;
            for (std::size_t k = 0; k < n; ++k) s += a(k, i) * a(k, j);
            g(i, j) = s;
            g(j, i) = s;  // mirror: symmetric by construction
        }
    }
    return g;
}

DenseMatrix cholesky(const DenseMatrix& m) {
    if (m.rows() != m.cols()) throw DimensionMismatch("cholesky: matrix not square");
    ensure_finite(m, "cholesky");
    const std::size_t n = m.rows();
    const double scale = max_abs(m);
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = i + 1; j < n; ++j) {
            if (std::abs(m(i, j) - m(j, i)) > kSymmetryTol * (scale > 0.0 ? scale : 1.0)) {
                throw NotSymmetric("cholesky: matrix not symmetric at (" +
                                   std::to_string(i) + "," + std::to_string(j) + ")");
            }
        }
    }

    DenseMatrix l(n, n, 0.0);
    const double pivot_floor = kPivotEps * scale;
    for (std::size_t j = 0; j < n; ++j) {
        double diag = m(j, j);
        for (std::size_t k = 0; k < j; ++k) diag -= l(j, k) * l(j, k);
        if (diag <= pivot_floor) {
            throw NotPositiveDefinite("cholesky: pivot " + std::to_string(diag) +
                                      " at column " + std::to_string(j));
        }
        l(j, j) = std::sqrt(diag);
        for (std::size_t i = j + 1; i < n; ++i) {
            double s = m(i, j);
            for (std::size_t k = 0; k < j; ++k) s -= l(i, k) * l(j, k);
            l(i, j) = s / l(j, j);
        }
    }
    return l;
}

Vector solve_spd(const DenseMatrix& m, const Vector& b) {
    if (b.size() != m.cols()) throw DimensionMismatch("solve_spd: rhs length mismatch");
    ensure_finite(b, "solve_spd");
    const DenseMatrix l = cholesky(m);
    const std::size_t n = b.size();

    // L y = b
    Vector y(n);
    for (std::size_t i = 0; i < n; ++i) {
        double s = b[i];
        for (std::size_t j = 0; j < i; ++j) s -= l(i, j) * y[j];
        y[i] = s / l(i, i);
    }
    // L^T x = y
    Vector x(n);
    for (std::size_t ip = n; ip > 0; --ip) {
        const std::size_t i = ip - 1;
        double s = y[i];
        for (std::size_t j = i + 1; j < n; ++j) s -= l(j, i) * x[j];
        x[i] = s / l(i, i);
    }
    return x;
}

bool is_positive_definite(const DenseMatrix& m) {
    try {
        cholesky(m);
        return true;
    } catch (const NotPositiveDefinite&) {
        return false;
    }
}

DenseMatrix multiply(const DenseMatrix& a, const DenseMatrix& b) {
    if (a.cols() != b.rows()) throw DimensionMismatch("multiply: inner dimensions differ");
    DenseMatrix c(a.rows(), b.cols(), 0.0);
    for (std::size_t i = 0; i < a.rows(); ++i) {
        for (std::size_t k = 0; k < a.cols(); ++k) {
            const double aik = a(i, k);
            for (std::size_t j = 0; j < b.cols(); ++j) c(i, j) += aik * b(k, j);
        }
    }
    return c;
}

DenseMatrix transpose(const DenseMatrix& a) {
    DenseMatrix t(a.cols(), a.rows());
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t j = 0; j < a.cols(); ++j) t(j, i) = a(i, j);
    return t;
}

Vector matvec(const DenseMatrix& a, const Vector& x) {
    if (x.size() != a.cols()) throw DimensionMismatch("matvec: length mismatch");
    Vector y(a.rows(), 0.0);
    for (std::size_t i = 0; i < a.rows(); ++i) {
        double s = 0.0;
        for (std::size_t j = 0; j < a.cols(); ++j) s += a(i, j) * x[j];
        y[i] = s;
    }
    return y;
}

Vector transpose_matvec(const DenseMatrix& a, const Vector& x) {
    if (x.size() != a.rows()) throw DimensionMismatch("transpose_matvec: length mismatch");
    Vector y(a.cols(), 0.0);
    for (std::size_t i = 0; i < a.rows(); ++i) {
        const double xi = x[i];
        for (std::size_t j = 0; j < a.cols(); ++j) y[j] += a(i, j) * xi;
    }
    return y;
}

double dot(const Vector& a, const Vector& b) {
    if (a.size() != b.size()) throw DimensionMismatch("dot: length mismatch");
    double s = 0.0;
    for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
    return s;
}

double norm2(const Vector& v) { return std::sqrt(dot(v, v)); }

double norm_inf(const Vector& v) {
    double m = 0.0;
    for (double x : v) m = std::max(m, std::abs(x));
    return m;
}

double frobenius_norm(const DenseMatrix& m) {
    double s = 0.0;
    for (double x : m.data()) s += x * x;
    return std::sqrt(s);
}

double max_abs(const DenseMatrix& m) {
    double r = 0.0;
    for (double x : m.data()) r = std::max(r, std::abs(x));
    return r;
}

Vector add(const Vector& a, const Vector& b) {
    if (a.size() != b.size()) throw DimensionMismatch("add: length mismatch");
    Vector c(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) c[i] = a[i] + b[i];
    return c;
}

Vector subtract(const Vector& a, const Vector& b) {
    if (a.size() != b.size()) throw DimensionMismatch("subtract: length mismatch");
    Vector c(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) c[i] = a[i] - b[i];
    return c;
}

Vector scale(double s, const Vector& v) {
    Vector c(v.size());
    for (std::size_t i = 0; i < v.size(); ++i) c[i] = s * v[i];
    return c;
}

}  // namespace linclass
