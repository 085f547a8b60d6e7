#include "linclass/regsel.hpp"

#include <cmath>
#include <cstdio>
#include <string>

namespace linclass {

namespace {

// Bisection refines the bracket until the discrepancy tolerance holds and the
// bracket itself is this tight (relative), so the reported gamma is pinned
// well below the discrepancy tolerance.
constexpr double kBracketRelTol = 1e-7;
constexpr std::size_t kMaxBisection = 400;

std::string short_num(double v) {
    char buf[32];
    std::snprintf(buf, sizeof(buf), "%.6g", v);
    return buf;
}

}  // namespace

const char* to_string(SelectionRule rule) {
    switch (rule) {
        case SelectionRule::APriori: return "apriori";
        case SelectionRule::Morozov: return "morozov";
        case SelectionRule::Balancing: return "balancing";
    }
    return "unknown";
}

double apriori_gamma(double delta, double C, double mu) {
    if (!(delta > 0.0 && delta < 1.0)) throw OutOfRange("apriori_gamma: delta must be in (0,1)");
    if (!(mu > 0.0 && mu < 2.0)) throw OutOfRange("apriori_gamma: mu must be in (0,2)");
    if (!(C > 0.0)) throw OutOfRange("apriori_gamma: C must be > 0");
    return C * std::pow(delta, mu);
}

double gamma_schedule(double gamma0, double p, std::size_t k) {
    if (!(gamma0 > 0.0)) throw OutOfRange("gamma_schedule: gamma0 must be > 0");
    if (!(p > 0.0 && p <= 1.0)) throw OutOfRange("gamma_schedule: p must be in (0,1]");
    return gamma0 / std::pow(static_cast<double>(k) + 1.0, p);
}

ValuePoint value_function_with_weights(const DesignMatrix& a, const Vector& t,
                                       const Vector& omega0, double gamma, Vector& weights_out) {
    if (!(gamma > 0.0)) throw NonPositiveGamma("value_function: gamma must be > 0");
    if (t.size() != a.matrix.rows()) {
        throw DimensionMismatch("value_function: target length mismatch");
    }
    if (omega0.size() != a.matrix.cols()) {
        throw DimensionMismatch("value_function: omega0 length mismatch");
    }
    ensure_finite(t, "value_function");
    ensure_finite(omega0, "value_function");

    DenseMatrix g = gram(a.matrix);
    for (std::size_t i = 0; i < g.rows(); ++i) g(i, i) += gamma;
    Vector rhs = transpose_matvec(a.matrix, t);
    for (std::size_t i = 0; i < rhs.size(); ++i) rhs[i] += gamma * omega0[i];
    Vector w = solve_spd(g, rhs);

    const Vector r = subtract(matvec(a.matrix, w), t);
    const Vector dw = subtract(w, omega0);
    ValuePoint vp;
    vp.gamma = gamma;
    vp.phi_bar = 0.5 * dot(r, r);
    vp.psi_bar = 0.5 * dot(dw, dw);
    vp.F = vp.phi_bar + gamma * vp.psi_bar;
    weights_out = std::move(w);
    return vp;
}

ValuePoint value_function(const DesignMatrix& a, const Vector& t, const Vector& omega0,
                          double gamma) {
    Vector unused;
    return value_function_with_weights(a, t, omega0, gamma, unused);
}

ValuePoint value_function(const DesignMatrix& a, const Vector& t, double gamma) {
    return value_function(a, t, Vector(a.matrix.cols(), 0.0), gamma);
}

RegSelection morozov_select(const DesignMatrix& a, const Vector& t, double delta, double c_m,
                            double gamma_lo, double gamma_hi, double tol) {
    if (!(delta > 0.0)) throw OutOfRange("morozov_select: delta must be > 0");
    if (!(c_m >= 1.0)) throw OutOfRange("morozov_select: c_m must be >= 1");
    if (!(tol > 0.0)) throw OutOfRange("morozov_select: tol must be > 0");
    if (!(gamma_lo > 0.0 && gamma_lo < gamma_hi)) {
        throw OutOfRange("morozov_select: need 0 < gamma_lo < gamma_hi");
    }

    const auto discrepancy = [&](double gamma) {
        return std::sqrt(2.0 * value_function(a, t, gamma).phi_bar);
    };

    const double target = c_m * delta;
    const double d_lo = discrepancy(gamma_lo);
    const double d_hi = discrepancy(gamma_hi);
    if (!(d_lo < target && target < d_hi)) {
        throw BracketInvalid("morozov_select: target discrepancy " + short_num(target) +
                             " not enclosed by [" + short_num(d_lo) + ", " +
                             short_num(d_hi) + "]");
    }

    RegSelection sel;
    sel.rule = SelectionRule::Morozov;
    double lo = gamma_lo;
    double hi = gamma_hi;
    double mid = lo;
    double d_mid = d_lo;
    for (std::size_t k = 0; k < kMaxBisection; ++k) {
        mid = std::sqrt(lo * hi);  // geometric midpoint; gamma spans decades
        d_mid = discrepancy(mid);
        sel.iterates.push_back(mid);
        if (std::abs(d_mid - target) <= tol && (hi - lo) <= kBracketRelTol * mid) break;
        if (d_mid < target) {
            lo = mid;
        } else {
            hi = mid;
        }
    }
    sel.gamma_star = mid;
    sel.achieved = d_mid;
    return sel;
}

RegSelection balancing_fixed_point(const DesignMatrix& a, const Vector& t, double gamma0,
                                   double C, double theta, std::size_t max_iter) {
    if (!(gamma0 > 0.0)) throw OutOfRange("balancing_fixed_point: gamma0 must be > 0");
    if (!(C > 0.0)) throw OutOfRange("balancing_fixed_point: C must be > 0");
    if (!(theta > 0.0 && theta < 1.0)) {
        throw OutOfRange("balancing_fixed_point: theta must be in (0,1)");
    }
    if (max_iter < 1) throw OutOfRange("balancing_fixed_point: max_iter must be >= 1");

    RegSelection sel;
    sel.rule = SelectionRule::Balancing;
    sel.iterates.push_back(gamma0);

    double gamma = gamma0;
    for (std::size_t k = 0; k < max_iter; ++k) {
        const ValuePoint vp = value_function(a, t, gamma);
        if (vp.psi_bar == 0.0) {
            throw DegenerateIterate("balancing_fixed_point: psi_bar vanished at gamma = " +
                                    short_num(gamma));
        }
        const double next = vp.phi_bar / (C * vp.psi_bar);
        sel.iterates.push_back(next);
        sel.achieved = std::abs(next - gamma);
        const bool stable = sel.achieved <= theta * gamma;
        gamma = next;
        if (stable) break;
    }
    sel.gamma_star = gamma;
    return sel;
}

}  // namespace linclass
