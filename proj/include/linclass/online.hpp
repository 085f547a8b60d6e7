#pragma once

// Iterative trainers: full-batch gradient descent on the regularized
// least-squares functional, the online perceptron rule, and the WINNOW
// multiplicative rule, plus quadratic decision-boundary root extraction.

#include <array>
#include <cstdint>
#include <iosfwd>
#include <vector>

#include "linclass/features.hpp"
#include "linclass/lsq.hpp"

namespace linclass {

// Sign of the regularization term inside the updates. Descent subtracts the
// gradient (weight decay), which actually minimizes the regularized
// functional; PaperLiteral keeps the classical textbook sign (an added
// gradient step, +gamma*w in the perceptron rule) for comparison runs.
enum class RegSign { Descent, PaperLiteral };

enum class StopReason { GradientSmall, AllCorrect, GradExploded, WeightsStabilized, MaxIter };

const char* to_string(StopReason reason);
const char* to_string(RegSign sign);
RegSign parse_reg_sign(const std::string& name);

struct TrainConfig {
    double eta = 0.5;              // learning rate
    double gamma = 0.0;            // regularization parameter
    double theta = 1e-6;           // stopping tolerance, in (0, 1)
    std::size_t max_iter = 100000; // passes (perceptron/WINNOW) or steps (gradient)
    std::uint64_t seed = 1;        // weight-init RNG seed
    RegSign reg_sign = RegSign::Descent;
    bool winnow_random_init = false;      // WINNOW: small random init instead of ones
    std::size_t history_limit = 1000000;  // in-memory loss history cap; stream for more
};

struct TrainReport {
    bool converged = false;
    std::size_t iterations = 0;
    std::size_t final_misclassified = 0;
    std::vector<double> loss_history;
    StopReason stop_reason = StopReason::MaxIter;
};

struct TrainResult {
    LinearModel model;
    TrainReport report;
};

// Coefficients w0..w5 of  w0 + w1 x1 + w2 x2 + w3 x1^2 + w4 x1 x2 + w5 x2^2.
struct QuadraticBoundary {
    std::array<double, 6> w{};
};

// Uniform samples in [-0.05, 0.05], deterministic per seed.
Vector init_weights(std::size_t m, std::uint64_t seed);

// 1 if w.x > 0 else 0; an exact zero maps to class 0.
int predict_sign(const Vector& omega, const Vector& features);

// Online perceptron: cycles the examples in dataset order, updating every
// weight per example by  eta * ((c - h) x_i -/+ gamma w_i)  (sign per
// cfg.reg_sign). Stops after a pass with no disagreement, or max_iter passes.
// Non-convergence is reported, not thrown. If loss_stream is given, rows
// "iteration,loss,misclassified" are appended per pass.
TrainResult perceptron_train(const DesignMatrix& a, const Vector& t, const TrainConfig& cfg,
                             std::ostream* loss_stream = nullptr);

// Full-batch gradient iteration on the regularized least-squares functional,
// starting from init_weights(seed). Stops when ||G|| <= theta, when ||G||
// exceeds 1000x its running minimum, when the weights stabilize to relative
// theta, or at max_iter.
TrainResult gradient_train(const DesignMatrix& a, const Vector& t, const TrainConfig& cfg,
                           std::ostream* loss_stream = nullptr);

// Same, from an explicit starting point.
TrainResult gradient_train_from(const DesignMatrix& a, const Vector& t, const Vector& omega0,
                                const TrainConfig& cfg, std::ostream* loss_stream = nullptr);

// WINNOW: multiplicative updates w_i *= alpha^((c - h) x_i), weights started
// at 1, pass/stop structure as the perceptron. Requires alpha > 1 and
// nonnegative features (throws NegativeFeature otherwise).
TrainResult winnow_train(const DesignMatrix& a, const Vector& t, double alpha,
                         const TrainConfig& cfg, std::ostream* loss_stream = nullptr);

// -sum over misclassified examples of t_i * (w.x_i), for +/-1 targets.
// Nonnegative by construction; a diagnostic only.
double misclassified_residual(const Vector& omega, const DesignMatrix& a, const Vector& t_pm);

double boundary_eval(const QuadraticBoundary& qb, double x1, double x2);

// x2 roots of the boundary at fixed x1, ascending; zero, one or two values.
// Falls back to the linear equation when |w5| < 1e-12.
std::vector<double> boundary_roots(const QuadraticBoundary& qb, double x1);

}  // namespace linclass
