#pragma once

// Regularization-parameter selection for the ridge classifier: the a-priori
// rule gamma = C delta^mu, Morozov's discrepancy principle (bisection on the
// closed-form discrepancy), and the balancing-principle fixed point.
//
// Everything is built on the value function of the shifted Tikhonov
// functional  J_gamma(w) = 1/2 ||A w - t||^2 + (gamma/2) ||w - w0||^2.

#include <cstddef>
#include <string>
#include <vector>

#include "linclass/features.hpp"
#include "linclass/linalg.hpp"

namespace linclass {

struct ValuePoint {
    double gamma = 0.0;
    double F = 0.0;        // value function, = phi_bar + gamma * psi_bar
    double phi_bar = 0.0;  // 1/2 ||A w_gamma - t||^2
    double psi_bar = 0.0;  // 1/2 ||w_gamma - w0||^2
};

enum class SelectionRule { APriori, Morozov, Balancing };

const char* to_string(SelectionRule rule);

struct RegSelection {
    SelectionRule rule = SelectionRule::APriori;
    double gamma_star = 0.0;
    std::vector<double> iterates;  // never empty
    // Morozov: achieved discrepancy ||A w - t||; Balancing: final
    // |gamma_k - gamma_{k-1}|; APriori: 0.
    double achieved = 0.0;
};

// C * delta^mu for delta in (0,1), mu in (0,2), C > 0.
double apriori_gamma(double delta, double C, double mu);

// gamma0 / (k+1)^p for p in (0,1].
double gamma_schedule(double gamma0, double p, std::size_t k);

// Minimize J_gamma by solving (A^T A + gamma I) w = A^T t + gamma w0,
// then report phi_bar, psi_bar and F at the minimizer.
ValuePoint value_function(const DesignMatrix& a, const Vector& t, const Vector& omega0,
                          double gamma);
// Same with w0 = 0.
ValuePoint value_function(const DesignMatrix& a, const Vector& t, double gamma);

// Also hand back the minimizer, for callers that need the weights.
ValuePoint value_function_with_weights(const DesignMatrix& a, const Vector& t,
                                       const Vector& omega0, double gamma, Vector& weights_out);

// Find gamma with ||A w_gamma - t|| = c_m * delta to within tol, by bisection
// over [gamma_lo, gamma_hi]. The discrepancy is monotone in gamma, so the
// bracket must straddle the target; otherwise throws BracketInvalid.
RegSelection morozov_select(const DesignMatrix& a, const Vector& t, double delta, double c_m,
                            double gamma_lo, double gamma_hi, double tol);

// Fixed-point iteration gamma_{k+1} = phi_bar(gamma_k) / (C psi_bar(gamma_k)),
// stopping when |gamma_{k+1} - gamma_k| <= theta * gamma_k or at max_iter.
// C = 1 reproduces the zero-crossing configuration. Throws DegenerateIterate
// when psi_bar vanishes (the minimizer equals the first guess).
RegSelection balancing_fixed_point(const DesignMatrix& a, const Vector& t, double gamma0,
                                   double C, double theta, std::size_t max_iter);

}  // namespace linclass
