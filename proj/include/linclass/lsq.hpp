#pragma once

// Least-squares classification: normal-equation fits (plain and ridge),
// the pseudo-inverse route, prediction, and the loss/gradient pair of the
// regularized functional  1/2 ||t - A w||^2 + (gamma/2) ||w||^2.

#include <utility>

#include "linclass/features.hpp"
#include "linclass/linalg.hpp"

namespace linclass {

struct LinearModel {
    Vector weights;  // bias-first, length = basis.column_count()
    BasisSpec basis = BasisSpec::linear2d();
};

struct FitDiagnostics {
    double residual_norm = 0.0;  // ||A w - t||_2
    double weight_norm = 0.0;    // ||w||_2
    double gamma = 0.0;
};

struct FitResult {
    LinearModel model;
    FitDiagnostics diagnostics;
};

// Solve A^T A w = A^T t. Throws RankDeficient when the columns of A are
// linearly dependent.
FitResult fit_ls(const DesignMatrix& a, const Vector& t);

// Solve (A^T A + gamma I) w = A^T t, gamma > 0. Always solvable: the shift
// makes the system positive definite even for rank-deficient A.
FitResult fit_ridge(const DesignMatrix& a, const Vector& t, double gamma);

// w = (A^T A)^{-1} A^T t with the inverse formed explicitly, column by
// column. Kept as an independent check on fit_ls.
LinearModel pseudo_inverse_fit(const DesignMatrix& a, const Vector& t);

// w^T phi(x) for a raw input point.
double predict(const LinearModel& model, const Vector& raw_point);

// 1 if predict >= threshold, else 0. Ties go to class 1.
int classify(const LinearModel& model, const Vector& raw_point, double threshold);

// loss = 1/2 ||t - A w||^2 + (gamma/2) ||w||^2
// gradient = -A^T (t - A w) + gamma w
std::pair<double, Vector> loss_and_gradient(const DesignMatrix& a, const Vector& t,
                                            const Vector& omega, double gamma);

}  // namespace linclass
