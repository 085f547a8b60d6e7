#include "linclass/lsq.hpp"

#include <cmath>
#include <string>

namespace linclass {

namespace {

void check_target_length(const DesignMatrix& a, const Vector& t, const char* who) {
    if (t.size() != a.matrix.rows()) {
        throw DimensionMismatch(std::string(who) + ": " + std::to_string(t.size()) +
                                " targets for " + std::to_string(a.matrix.rows()) + " rows");
    }
}

FitDiagnostics diagnostics_for(const DesignMatrix& a, const Vector& t, const Vector& w,
                               double gamma) {
    const Vector r = subtract(matvec(a.matrix, w), t);
    return FitDiagnostics{norm2(r), norm2(w), gamma};
}

}  // namespace

FitResult fit_ls(const DesignMatrix& a, const Vector& t) {
    check_target_length(a, t, "fit_ls");
    ensure_finite(t, "fit_ls");
    const DenseMatrix g = gram(a.matrix);
    const Vector rhs = transpose_matvec(a.matrix, t);
    Vector w;
    try {
        w = solve_spd(g, rhs);
    } catch (const NotPositiveDefinite& e) {
        throw RankDeficient(std::string("fit_ls: columns of the design matrix are linearly "
                                        "dependent (") + e.what() + ")");
    }
    FitDiagnostics d = diagnostics_for(a, t, w, 0.0);
    return FitResult{LinearModel{std::move(w), a.basis}, d};
}

FitResult fit_ridge(const DesignMatrix& a, const Vector& t, double gamma) {
    check_target_length(a, t, "fit_ridge");
    ensure_finite(t, "fit_ridge");
    if (!(gamma > 0.0)) throw NonPositiveGamma("fit_ridge: gamma must be > 0");
    DenseMatrix g = gram(a.matrix);
    for (std::size_t i = 0; i < g.rows(); ++i) g(i, i) += gamma;
    Vector w = solve_spd(g, transpose_matvec(a.matrix, t));
    FitDiagnostics d = diagnostics_for(a, t, w, gamma);
    return FitResult{LinearModel{std::move(w), a.basis}, d};
}

LinearModel pseudo_inverse_fit(const DesignMatrix& a, const Vector& t) {
    check_target_length(a, t, "pseudo_inverse_fit");
    ensure_finite(t, "pseudo_inverse_fit");
    const DenseMatrix g = gram(a.matrix);
    const std::size_t m = g.rows();

    // Invert A^T A by solving against identity columns.
    DenseMatrix inv(m, m);
    try {
        for (std::size_t j = 0; j < m; ++j) {
            Vector e(m, 0.0);
            e[j] = 1.0;
            const Vector col = solve_spd(g, e);
            for (std::size_t i = 0; i < m; ++i) inv(i, j) = col[i];
        }
    } catch (const NotPositiveDefinite& e) {
        throw RankDeficient(std::string("pseudo_inverse_fit: design matrix is rank "
                                        "deficient (") + e.what() + ")");
    }

    // w = (A^T A)^{-1} A^T t
    const DenseMatrix pseudo = multiply(inv, transpose(a.matrix));
    return LinearModel{matvec(pseudo, t), a.basis};
}

double predict(const LinearModel& model, const Vector& raw_point) {
    const Vector phi = features_for(model.basis, raw_point);
    if (model.weights.size() != phi.size()) {
        throw DimensionMismatch("predict: model has " + std::to_string(model.weights.size()) +
                                " weights for " + std::to_string(phi.size()) + " features");
    }
    return dot(model.weights, phi);
}

int classify(const LinearModel& model, const Vector& raw_point, double threshold) {
    return predict(model, raw_point) >= threshold ? 1 : 0;
}

std::pair<double, Vector> loss_and_gradient(const DesignMatrix& a, const Vector& t,
                                            const Vector& omega, double gamma) {
    check_target_length(a, t, "loss_and_gradient");
    if (omega.size() != a.matrix.cols()) {
        throw DimensionMismatch("loss_and_gradient: weight length mismatch");
    }
    if (gamma < 0.0) throw OutOfRange("loss_and_gradient: gamma must be >= 0");
    ensure_finite(t, "loss_and_gradient");
    ensure_finite(omega, "loss_and_gradient");

    const Vector r = subtract(t, matvec(a.matrix, omega));  // t - A w
    const double loss = 0.5 * dot(r, r) + 0.5 * gamma * dot(omega, omega);

    Vector grad = transpose_matvec(a.matrix, r);  // A^T (t - A w)
    for (std::size_t i = 0; i < grad.size(); ++i) grad[i] = -grad[i] + gamma * omega[i];
    return {loss, std::move(grad)};
}

}  // namespace linclass
