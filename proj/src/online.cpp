#include "linclass/online.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <ostream>
#include <random>
#include <string>

namespace linclass {

namespace {

constexpr double kDegenerateQuadratic = 1e-12;
constexpr double kExplosionFactor = 1e3;

void validate_config(const TrainConfig& cfg) {
    if (!(cfg.eta > 0.0)) throw OutOfRange("train: eta must be > 0");
    if (!(cfg.theta > 0.0 && cfg.theta < 1.0)) throw OutOfRange("train: theta must be in (0,1)");
    if (cfg.max_iter < 1) throw OutOfRange("train: max_iter must be >= 1");
    if (cfg.gamma < 0.0) throw OutOfRange("train: gamma must be >= 0");
}

void validate_binary_targets(const Vector& t) {
    for (double v : t) {
        if (v != 0.0 && v != 1.0) throw OutOfRange("train: targets must be 0 or 1");
    }
}

void check_shapes(const DesignMatrix& a, const Vector& t) {
    if (t.size() != a.matrix.rows()) {
        throw DimensionMismatch("train: " + std::to_string(t.size()) + " targets for " +
                                std::to_string(a.matrix.rows()) + " rows");
    }
    ensure_finite(a.matrix, "train");
}

int sign_at_row(const Vector& w, const DenseMatrix& m, std::size_t i) {
    double s = 0.0;
    for (std::size_t j = 0; j < m.cols(); ++j) s += w[j] * m(i, j);
    return s > 0.0 ? 1 : 0;
}

std::size_t count_sign_errors(const Vector& w, const DenseMatrix& m, const Vector& t) {
    std::size_t errors = 0;
    for (std::size_t i = 0; i < m.rows(); ++i) {
        if (sign_at_row(w, m, i) != static_cast<int>(t[i])) ++errors;
    }
    return errors;
}

// 1/2 sum (t_i - h_i)^2 + (gamma/2) ||w||^2 with h the thresholded prediction;
// for 0/1 targets the misfit term is exactly the misclassification count.
double sign_loss(std::size_t errors, const Vector& w, double gamma) {
    return 0.5 * static_cast<double>(errors) + 0.5 * gamma * dot(w, w);
}

void record_iteration(TrainReport& report, const TrainConfig& cfg, std::ostream* stream,
                      std::size_t iteration, double loss, std::size_t misclassified) {
    if (report.loss_history.size() < cfg.history_limit) report.loss_history.push_back(loss);
    if (stream != nullptr) {
        (*stream) << iteration << ',' << loss << ',' << misclassified << '\n';
    }
}

}  // namespace

const char* to_string(StopReason reason) {
    switch (reason) {
        case StopReason::GradientSmall: return "gradient_small";
        case StopReason::AllCorrect: return "all_correct";
        case StopReason::GradExploded: return "grad_exploded";
        case StopReason::WeightsStabilized: return "weights_stabilized";
        case StopReason::MaxIter: return "max_iter";
    }
    return "unknown";
}

const char* to_string(RegSign sign) {
    return sign == RegSign::Descent ? "descent" : "paper-literal";
}

RegSign parse_reg_sign(const std::string& name) {
    if (name == "descent") return RegSign::Descent;
    if (name == "paper-literal" || name == "paper_literal") return RegSign::PaperLiteral;
    throw ParseError("unknown reg-sign '" + name + "'");
}

Vector init_weights(std::size_t m, std::uint64_t seed) {
    if (m < 1) throw OutOfRange("init_weights: m must be >= 1");
    std::mt19937_64 rng(seed);
    std::uniform_real_distribution<double> small(-0.05, 0.05);
    Vector w(m);
    for (double& wi : w) wi = small(rng);
    return w;
}

int predict_sign(const Vector& omega, const Vector& features) {
    if (omega.size() != features.size()) {
        throw DimensionMismatch("predict_sign: length mismatch");
    }
    return dot(omega, features) > 0.0 ? 1 : 0;
}

TrainResult perceptron_train(const DesignMatrix& a, const Vector& t, const TrainConfig& cfg,
                             std::ostream* loss_stream) {
    validate_config(cfg);
    check_shapes(a, t);
    validate_binary_targets(t);

    const DenseMatrix& m = a.matrix;
    Vector w = init_weights(m.cols(), cfg.seed);

    TrainReport report;
    for (std::size_t pass = 0; pass < cfg.max_iter; ++pass) {
        std::size_t disagreements = 0;
        for (std::size_t i = 0; i < m.rows(); ++i) {
            const int h = sign_at_row(w, m, i);
            const double c = t[i];
            if (h != static_cast<int>(c)) ++disagreements;
            const double mismatch = c - h;
            if (mismatch == 0.0 && cfg.gamma == 0.0) continue;  // update is identically zero
            for (std::size_t j = 0; j < m.cols(); ++j) {
                const double reg = cfg.gamma * w[j];
                const double update = cfg.reg_sign == RegSign::Descent ? mismatch * m(i, j) - reg
                                                                       : mismatch * m(i, j) + reg;
                w[j] += cfg.eta * update;
            }
        }
        report.iterations = pass + 1;
        const std::size_t errors = count_sign_errors(w, m, t);
        record_iteration(report, cfg, loss_stream, report.iterations,
                         sign_loss(errors, w, cfg.gamma), errors);
        if (disagreements == 0) {
            report.converged = true;
            report.stop_reason = StopReason::AllCorrect;
            break;
        }
    }
    report.final_misclassified = count_sign_errors(w, m, t);
    return TrainResult{LinearModel{std::move(w), a.basis}, std::move(report)};
}

TrainResult gradient_train(const DesignMatrix& a, const Vector& t, const TrainConfig& cfg,
                           std::ostream* loss_stream) {
    validate_config(cfg);
    check_shapes(a, t);
    return gradient_train_from(a, t, init_weights(a.matrix.cols(), cfg.seed), cfg, loss_stream);
}

TrainResult gradient_train_from(const DesignMatrix& a, const Vector& t, const Vector& omega0,
                                const TrainConfig& cfg, std::ostream* loss_stream) {
    validate_config(cfg);
    check_shapes(a, t);
    if (omega0.size() != a.matrix.cols()) {
        throw DimensionMismatch("gradient_train: initial weight length mismatch");
    }

    Vector w = omega0;
    TrainReport report;
    double min_grad_norm = std::numeric_limits<double>::infinity();

    // Misclassification for the report uses the least-squares decision rule
    // (prediction >= 1/2) since the model fits 0/1 targets directly.
    const auto half_errors = [&](const Vector& weights) {
        std::size_t errors = 0;
        const Vector y = matvec(a.matrix, weights);
        for (std::size_t i = 0; i < y.size(); ++i) {
            const int c = y[i] >= 0.5 ? 1 : 0;
            if (c != static_cast<int>(t[i])) ++errors;
        }
        return errors;
    };

    for (std::size_t k = 0; k < cfg.max_iter; ++k) {
        const auto [loss, grad] = loss_and_gradient(a, t, w, cfg.gamma);
        const double gnorm = norm2(grad);
        record_iteration(report, cfg, loss_stream, k, loss, half_errors(w));

        if (gnorm <= cfg.theta) {
            report.converged = true;
            report.stop_reason = StopReason::GradientSmall;
            break;
        }
        if (gnorm > kExplosionFactor * min_grad_norm) {
            report.stop_reason = StopReason::GradExploded;
            break;
        }
        min_grad_norm = std::min(min_grad_norm, gnorm);

        Vector w_next = w;
        for (std::size_t j = 0; j < w.size(); ++j) {
            w_next[j] += cfg.reg_sign == RegSign::Descent ? -cfg.eta * grad[j]
                                                          : cfg.eta * grad[j];
        }
        report.iterations = k + 1;
        const double step = norm2(subtract(w_next, w));
        w = std::move(w_next);
        if (step <= cfg.theta * norm2(w)) {
            report.converged = true;
            report.stop_reason = StopReason::WeightsStabilized;
            break;
        }
    }
    report.final_misclassified = half_errors(w);
    return TrainResult{LinearModel{std::move(w), a.basis}, std::move(report)};
}

TrainResult winnow_train(const DesignMatrix& a, const Vector& t, double alpha,
                         const TrainConfig& cfg, std::ostream* loss_stream) {
    validate_config(cfg);
    check_shapes(a, t);
    validate_binary_targets(t);
    if (!(alpha > 1.0)) throw OutOfRange("winnow_train: alpha must be > 1");

    const DenseMatrix& m = a.matrix;
    for (double x : m.data()) {
        if (x < 0.0) throw NegativeFeature("winnow_train: features must be nonnegative");
    }

    Vector w(m.cols(), 1.0);
    if (cfg.winnow_random_init) {
        // Paper-literal variant: small random magnitudes, kept positive so the
        // multiplicative rule stays meaningful.
        w = init_weights(m.cols(), cfg.seed);
        for (double& wi : w) wi = std::abs(wi) + 1e-3;
    }

    TrainReport report;
    for (std::size_t pass = 0; pass < cfg.max_iter; ++pass) {
        std::size_t disagreements = 0;
        for (std::size_t i = 0; i < m.rows(); ++i) {
            const int h = sign_at_row(w, m, i);
            const double mismatch = t[i] - h;
            if (mismatch != 0.0) {
                ++disagreements;
                for (std::size_t j = 0; j < m.cols(); ++j) {
                    w[j] *= std::pow(alpha, mismatch * m(i, j));
                    // repeated demotion must not underflow to an exact zero:
                    // the weights stay strictly positive throughout
                    if (w[j] == 0.0) w[j] = std::numeric_limits<double>::min();
                }
            }
        }
        report.iterations = pass + 1;
        const std::size_t errors = count_sign_errors(w, m, t);
        record_iteration(report, cfg, loss_stream, report.iterations, sign_loss(errors, w, 0.0),
                         errors);
        if (disagreements == 0) {
            report.converged = true;
            report.stop_reason = StopReason::AllCorrect;
            break;
        }
    }
    report.final_misclassified = count_sign_errors(w, m, t);
    return TrainResult{LinearModel{std::move(w), a.basis}, std::move(report)};
}

double misclassified_residual(const Vector& omega, const DesignMatrix& a, const Vector& t_pm) {
    if (t_pm.size() != a.matrix.rows()) {
        throw DimensionMismatch("misclassified_residual: target length mismatch");
    }
    if (omega.size() != a.matrix.cols()) {
        throw DimensionMismatch("misclassified_residual: weight length mismatch");
    }
    for (double v : t_pm) {
        if (v != 1.0 && v != -1.0) {
            throw OutOfRange("misclassified_residual: targets must be -1 or +1");
        }
    }
    double r = 0.0;
    for (std::size_t i = 0; i < a.matrix.rows(); ++i) {
        double y = 0.0;
        for (std::size_t j = 0; j < a.matrix.cols(); ++j) y += omega[j] * a.matrix(i, j);
        const int predicted = y > 0.0 ? 1 : -1;  // zero maps to the negative class
        if (predicted != static_cast<int>(t_pm[i])) r -= t_pm[i] * y;
    }
    return r;
}

double boundary_eval(const QuadraticBoundary& qb, double x1, double x2) {
    const auto& w = qb.w;
    return w[0] + w[1] * x1 + w[2] * x2 + w[3] * x1 * x1 + w[4] * x1 * x2 + w[5] * x2 * x2;
}

std::vector<double> boundary_roots(const QuadraticBoundary& qb, double x1) {
    const auto& w = qb.w;
    const double a = w[5];
    const double b = w[2] + w[4] * x1;
    const double c = w[0] + w[1] * x1 + w[3] * x1 * x1;

    if (std::abs(a) < kDegenerateQuadratic) {
        if (std::abs(b) < kDegenerateQuadratic) return {};
        return {-c / b};
    }
    const double disc = b * b - 4.0 * a * c;
    if (disc < 0.0) return {};
    if (disc == 0.0) return {-b / (2.0 * a)};

    // Stable form: compute the larger-magnitude root first.
    const double q = -0.5 * (b + std::copysign(std::sqrt(disc), b == 0.0 ? 1.0 : b));
    double r1 = q / a;
    double r2 = std::abs(q) > 0.0 ? c / q : -b / (2.0 * a);
    if (r1 > r2) std::swap(r1, r2);
    return {r1, r2};
}

}  // namespace linclass
