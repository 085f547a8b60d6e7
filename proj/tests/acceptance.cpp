// Acceptance suite: one line per criterion, nonzero exit if any fails.
//
//   acceptance <path-to-cli> <fixtures-dir>
//
// Each criterion pins its tolerances in code; the random instances use fixed
// seeds so every run checks the same systems.

#include <cmath>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iostream>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "linclass/datagen.hpp"
#include "linclass/lsq.hpp"
#include "linclass/online.hpp"
#include "linclass/regsel.hpp"

namespace {

namespace fs = std::filesystem;
using namespace linclass;

std::string g_cli;
std::string g_fixtures;
int g_failures = 0;

void report(int number, const std::string& name, bool ok, const std::string& detail = "") {
    std::cout << (ok ? "[PASS] " : "[FAIL] ") << number << ". " << name;
    if (!ok && !detail.empty()) std::cout << " -- " << detail;
    std::cout << '\n';
    if (!ok) ++g_failures;
}

void criterion(int number, const std::string& name, const std::function<void()>& body) {
    try {
        body();
        report(number, name, true);
    } catch (const std::exception& e) {
        report(number, name, false, e.what());
    }
}

void require(bool ok, const std::string& detail) {
    if (!ok) throw std::runtime_error(detail);
}

DesignMatrix wrap(DenseMatrix m) {
    const std::size_t cols = m.cols();
    return DesignMatrix{std::move(m), BasisSpec::raw(cols), cols};
}

DenseMatrix random_full_rank(std::size_t rows, std::size_t cols, std::mt19937_64& rng) {
    std::uniform_real_distribution<double> u(-1.0, 1.0);
    DenseMatrix m(rows, cols);
    for (std::size_t i = 0; i < rows; ++i)
        for (std::size_t j = 0; j < cols; ++j) m(i, j) = u(rng);
    for (std::size_t j = 0; j < cols && j < rows; ++j) m(j, j) += 2.0;
    return m;
}

Vector random_vector(std::size_t n, std::mt19937_64& rng) {
    std::uniform_real_distribution<double> u(-1.0, 1.0);
    Vector v(n);
    for (double& x : v) x = u(rng);
    return v;
}

DesignMatrix design_from(const Dataset& d, const BasisSpec& basis) {
    return build_design(basis, d.features);
}

// Tall noisy regression system used by the selection-rule criteria.
struct NoisyInstance {
    DesignMatrix a;
    Vector t;
};

NoisyInstance noisy_instance(std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    DesignMatrix a = wrap(random_full_rank(60, 5, rng));
    const Vector w_true = random_vector(5, rng);
    Vector t = matvec(a.matrix, w_true);
    std::normal_distribution<double> g(0.0, 0.1);
    for (double& ti : t) ti += g(rng);
    return {std::move(a), std::move(t)};
}

int run_cli(const std::string& args) {
    const std::string cmd = g_cli + " " + args + " > /dev/null 2>&1";
    return WEXITSTATUS(std::system(cmd.c_str()));
}

std::string slurp(const fs::path& path) {
    std::ifstream in(path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

// ---------------------------------------------------------------------------

void criterion_normal_equations() {
    std::mt19937_64 rng(20240101);
    for (int trial = 0; trial < 50; ++trial) {
        const std::size_t cols = 1 + trial % 10;
        const std::size_t rows = cols + 2 + trial % (101 - cols - 2);
        const DesignMatrix a = wrap(random_full_rank(rows, cols, rng));
        const Vector t = random_vector(rows, rng);

        const auto [model, diag] = fit_ls(a, t);
        const Vector residual = subtract(matvec(a.matrix, model.weights), t);
        const Vector normal_residual = transpose_matvec(a.matrix, residual);
        const Vector att = transpose_matvec(a.matrix, t);
        require(norm_inf(normal_residual) <= 1e-8 * (1.0 + norm_inf(att)),
                "normal-equation residual too large at trial " + std::to_string(trial));

        const LinearModel oracle = pseudo_inverse_fit(a, t);
        const double diff = norm_inf(subtract(model.weights, oracle.weights));
        require(diff <= 1e-9 * (1.0 + norm_inf(oracle.weights)),
                "pseudo-inverse route disagrees at trial " + std::to_string(trial));
    }
}

void criterion_lemma() {
    std::mt19937_64 rng(20240102);
    for (int trial = 0; trial < 20; ++trial) {
        const std::size_t cols = 2 + trial % 7;
        const std::size_t rows = cols + 1 + trial % 22;
        const DenseMatrix a = random_full_rank(rows, cols, rng);
        require(is_positive_definite(gram(a)),
                "full-rank gram not PD at trial " + std::to_string(trial));

        DenseMatrix dup = a;
        const std::size_t src = trial % cols;
        const std::size_t dst = (src + 1) % cols;
        for (std::size_t i = 0; i < rows; ++i) dup(i, dst) = dup(i, src);
        require(!is_positive_definite(gram(dup)),
                "duplicated-column gram PD at trial " + std::to_string(trial));
    }
}

void criterion_frechet() {
    std::mt19937_64 rng(20240103);
    std::uniform_real_distribution<double> u(-1.0, 1.0);
    for (int trial = 0; trial < 50; ++trial) {
        const std::size_t cols = 1 + trial % 6;
        const std::size_t rows = cols + 2 + trial % 12;
        DenseMatrix m(rows, cols);
        for (std::size_t i = 0; i < rows; ++i)
            for (std::size_t j = 0; j < cols; ++j) m(i, j) = u(rng);
        const DesignMatrix a = wrap(std::move(m));
        const Vector t = random_vector(rows, rng);
        Vector w = random_vector(cols, rng);
        for (double& wi : w) wi *= 2.0;
        const double gamma = trial % 4 == 0 ? 0.0 : (trial % 4) * 0.25;

        const auto [loss, grad] = loss_and_gradient(a, t, w, gamma);
        for (std::size_t j = 0; j < cols; ++j) {
            const double h = 1e-6 * (1.0 + std::abs(w[j]));
            Vector wp = w;
            Vector wm = w;
            wp[j] += h;
            wm[j] -= h;
            const double fd = (loss_and_gradient(a, t, wp, gamma).first -
                               loss_and_gradient(a, t, wm, gamma).first) /
                              (2.0 * h);
            require(std::abs(grad[j] - fd) <= 1e-5 * (1.0 + std::abs(grad[j])),
                    "gradient component off at trial " + std::to_string(trial));
        }
    }
}

void criterion_regularization_path() {
    std::mt19937_64 rng(20240104);
    for (int instance = 0; instance < 10; ++instance) {
        const std::size_t cols = 2 + instance % 5;
        const DesignMatrix a = wrap(random_full_rank(25 + instance, cols, rng));
        const Vector t = random_vector(a.matrix.rows(), rng);

        double prev_w = -1.0;
        double prev_r = -1.0;
        for (int k = 0; k < 50; ++k) {
            const double gamma = 1e-6 * std::pow(1e8, k / 49.0);
            const auto [model, diag] = fit_ridge(a, t, gamma);
            if (k > 0) {
                require(diag.weight_norm <= prev_w + 1e-10 * (1.0 + prev_w),
                        "||w|| increased along the path");
                require(diag.residual_norm >= prev_r - 1e-10 * (1.0 + prev_r),
                        "residual decreased along the path");
            }
            prev_w = diag.weight_norm;
            prev_r = diag.residual_norm;

            const ValuePoint vp = value_function(a, t, gamma);
            require(std::abs(vp.F - (vp.phi_bar + gamma * vp.psi_bar)) <=
                        1e-10 * std::abs(vp.F),
                    "F != phi_bar + gamma psi_bar");
        }
    }
}

void criterion_perceptron_tests() {
    // Test 1 generator, noiseless: separable by construction
    const Dataset linear = gen_linear_two_class(100, 0.0, 2.0, NoiseSpec{0.0, 42});
    TrainConfig cfg;
    cfg.max_iter = 10000;
    const auto sep = perceptron_train(design_from(linear, BasisSpec::linear2d()),
                                      linear.targets, cfg);
    require(sep.report.converged && sep.report.final_misclassified == 0,
            "perceptron failed on the noiseless linear generator");

    // Iris, setosa against the rest on two petal features
    const CsvLoadResult iris =
        load_csv(g_fixtures + "/iris.csv", {"petal_length", "petal_width"}, "species",
                 {{"setosa", 1}, {"versicolor", 0}, {"virginica", 0}});
    require(iris.dataset.targets.size() == 150, "iris fixture must have 150 rows");
    const auto iris_run = perceptron_train(design_from(iris.dataset, BasisSpec::linear2d()),
                                           iris.dataset.targets, cfg);
    require(iris_run.report.converged && iris_run.report.final_misclassified == 0,
            "perceptron failed on iris setosa-vs-rest");
    require(iris_run.report.iterations <= 10000, "iris run exceeded the pass budget");

    // overlapped two-Gaussian data: perceptron stalls, least squares succeeds
    std::mt19937_64 rng(20240105);
    std::normal_distribution<double> g(0.0, 1.0);
    Dataset overlap;
    overlap.features = DenseMatrix(200, 2);
    overlap.targets.resize(200);
    overlap.column_names = {"x", "y"};
    for (std::size_t i = 0; i < 200; ++i) {
        const double c = i % 2 == 0 ? 0.0 : 0.5;
        overlap.features(i, 0) = c + g(rng);
        overlap.features(i, 1) = c + g(rng);
        overlap.targets[i] = i % 2 == 0 ? 1.0 : 0.0;
    }
    TrainConfig capped;
    capped.max_iter = 1500;
    const DesignMatrix overlap_design = design_from(overlap, BasisSpec::linear2d());
    const auto stalled = perceptron_train(overlap_design, overlap.targets, capped);
    require(!stalled.report.converged, "perceptron converged on overlapping classes");
    require(stalled.report.stop_reason == StopReason::MaxIter, "expected a max_iter stop");
    const auto ls = fit_ls(overlap_design, overlap.targets);
    require(ls.model.weights.size() == 3, "least squares failed on the overlapped data");
}

void criterion_quadratic_lift() {
    const Dataset circle = gen_circle_two_class(200, 1.0, 3.0, 7);

    TrainConfig small;
    small.max_iter = 800;
    const auto linear = perceptron_train(design_from(circle, BasisSpec::linear2d()),
                                         circle.targets, small);
    require(!linear.report.converged, "linear perceptron separated the circle data");

    TrainConfig cfg;
    cfg.max_iter = 20000;
    const auto lifted = perceptron_train(design_from(circle, BasisSpec::quad2d()),
                                         circle.targets, cfg);
    require(lifted.report.converged && lifted.report.final_misclassified == 0,
            "quadratic-lift perceptron failed on the circle data");

    // every emitted root solves the boundary equation
    QuadraticBoundary learned;
    double max_w = 0.0;
    for (std::size_t j = 0; j < 6; ++j) {
        learned.w[j] = lifted.model.weights[j];
        max_w = std::max(max_w, std::abs(learned.w[j]));
    }
    std::size_t roots_seen = 0;
    for (int i = 0; i <= 140; ++i) {
        const double x1 = -3.5 + 7.0 * i / 140.0;
        for (double x2 : boundary_roots(learned, x1)) {
            ++roots_seen;
            const double bound = 1e-8 * (1.0 + max_w) * (1.0 + x1 * x1 + x2 * x2);
            require(std::abs(boundary_eval(learned, x1, x2)) <= bound,
                    "learned boundary root violates the equation");
        }
    }
    require(roots_seen > 0, "learned model produced no boundary points");

    // analytic circle x1^2 + x2^2 = 4
    QuadraticBoundary analytic{{-4.0, 0.0, 0.0, 1.0, 0.0, 1.0}};
    for (int i = 0; i <= 200; ++i) {
        const double x1 = -1.99 + 3.98 * i / 200.0;
        const auto roots = boundary_roots(analytic, x1);
        require(roots.size() == 2, "analytic circle lost a root");
        for (double x2 : roots) {
            require(std::abs(x1 * x1 + x2 * x2 - 4.0) <= 1e-8,
                    "analytic circle root off the radius");
        }
    }
}

void criterion_winnow() {
    // 64 boolean rows over 6 attributes; the label equals attribute 1 and
    // class-0 rows are all-zero, the concept class this decision rule admits
    DenseMatrix m(64, 6);
    Vector t(64);
    for (std::size_t r = 0; r < 32; ++r) {
        m(r, 0) = 1.0;
        for (std::size_t b = 0; b < 5; ++b) m(r, 1 + b) = static_cast<double>((r >> b) & 1u);
        t[r] = 1.0;
    }
    for (std::size_t r = 32; r < 64; ++r) t[r] = 0.0;
    const DesignMatrix a = wrap(std::move(m));

    TrainConfig cfg;
    const auto winnow = winnow_train(a, t, 2.0, cfg);
    require(winnow.report.converged && winnow.report.final_misclassified == 0,
            "winnow failed on the boolean set");

    // sample the weight trajectory through deterministic restarts
    for (std::size_t passes = 1; passes <= 8; ++passes) {
        TrainConfig probe;
        probe.max_iter = passes;
        for (double w : winnow_train(a, t, 2.0, probe).model.weights) {
            require(w > 0.0, "winnow weight hit zero during training");
        }
    }

    const auto perceptron = perceptron_train(a, t, cfg);
    require(perceptron.report.converged, "perceptron failed on the boolean set");
    for (std::size_t i = 0; i < a.matrix.rows(); ++i) {
        Vector row(a.matrix.cols());
        for (std::size_t j = 0; j < row.size(); ++j) row[j] = a.matrix(i, j);
        require(predict_sign(winnow.model.weights, row) ==
                    predict_sign(perceptron.model.weights, row),
                "winnow and perceptron disagree on a training point");
    }
}

void criterion_morozov() {
    for (std::uint64_t seed = 1; seed <= 5; ++seed) {
        const NoisyInstance inst = noisy_instance(9000 + seed);
        const double floor = fit_ls(inst.a, inst.t).diagnostics.residual_norm;
        const double delta = 1.5 * floor;
        const double gamma_lo = 1e-6;
        const double gamma_hi = 1e4;

        const RegSelection sel =
            morozov_select(inst.a, inst.t, delta, 1.0, gamma_lo, gamma_hi, 1e-6);
        const double disc = std::sqrt(2.0 * value_function(inst.a, inst.t, sel.gamma_star).phi_bar);
        require(std::abs(disc - delta) <= 1e-6,
                "discrepancy misses the target at seed " + std::to_string(seed));

        // brute-force oracle: coarse 1e4-point log sweep, then a refined
        // 1e4-point sweep around the coarse argmin
        const auto sweep = [&](double lo, double hi) {
            double best_gamma = lo;
            double best_err = 1e300;
            for (int k = 0; k < 10000; ++k) {
                const double gamma = lo * std::pow(hi / lo, k / 9999.0);
                const double d =
                    std::sqrt(2.0 * value_function(inst.a, inst.t, gamma).phi_bar);
                const double err = std::abs(d - delta);
                if (err < best_err) {
                    best_err = err;
                    best_gamma = gamma;
                }
            }
            return best_gamma;
        };
        const double coarse = sweep(gamma_lo, gamma_hi);
        const double step = std::pow(gamma_hi / gamma_lo, 1.0 / 9999.0);
        const double refined = sweep(coarse / (step * step), coarse * step * step);
        require(std::abs(sel.gamma_star - refined) <= 1e-4 * refined,
                "bisection and grid oracle disagree at seed " + std::to_string(seed));
    }

    const NoisyInstance inst = noisy_instance(9001);
    try {
        morozov_select(inst.a, inst.t, 2.0 * norm2(inst.t), 1.0, 1e-6, 1e4, 1e-6);
        require(false, "oversized delta did not raise BracketInvalid");
    } catch (const BracketInvalid&) {
    }
}

void criterion_balancing() {
    const double theta = 1e-3;
    for (std::uint64_t seed = 1; seed <= 5; ++seed) {
        const NoisyInstance inst = noisy_instance(7000 + seed);
        const RegSelection sel =
            balancing_fixed_point(inst.a, inst.t, 1.0, 1.0, theta, 100);

        const std::size_t n = sel.iterates.size();
        require(n >= 2 && n <= 101, "unexpected iterate count");
        const double last = sel.iterates[n - 1];
        const double prev = sel.iterates[n - 2];
        require(std::abs(last - prev) <= theta * prev,
                "did not stabilize within 100 iterations at seed " + std::to_string(seed));

        const ValuePoint vp = value_function(inst.a, inst.t, sel.gamma_star);
        require(std::abs(vp.phi_bar - sel.gamma_star * vp.psi_bar) <=
                    2.0 * theta * sel.gamma_star * vp.psi_bar,
                "fixed-point residual too large at seed " + std::to_string(seed));
    }
}

void criterion_apriori() {
    for (double mu : {0.5, 1.0, 1.5}) {
        double prev_gamma = 1e300;
        double prev_ratio = 1e300;
        double gamma = 0.0;
        double ratio = 0.0;
        for (int k = 1; k <= 20; ++k) {
            const double delta = std::pow(2.0, -k);
            gamma = apriori_gamma(delta, 1.0, mu);
            ratio = delta * delta / gamma;
            require(gamma < prev_gamma, "gamma(delta_k) not monotone");
            require(ratio < prev_ratio, "delta^2/gamma not monotone");
            prev_gamma = gamma;
            prev_ratio = ratio;
        }
        require(gamma <= std::pow(2.0, -10.0), "gamma(delta_k) does not vanish");
        require(ratio <= std::pow(2.0, -10.0), "delta^2/gamma does not vanish");
    }
}

void criterion_determinism() {
    require(!g_cli.empty(), "no CLI path supplied");
    const fs::path dir = fs::temp_directory_path() / "linclass_acceptance";
    fs::remove_all(dir);
    fs::create_directories(dir);

    const auto pipeline = [&](const std::string& tag) {
        const std::string data = (dir / (tag + ".csv")).string();
        require(run_cli("gen linear --n 80 --delta 0.2 --seed 9 --out " + data) == 0,
                "gen failed");
        require(run_cli("train --algo perceptron --data " + data +
                        " --seed 4 --max-iter 5000 --out " + (dir / tag).string()) == 0,
                "train failed");
        require(run_cli("boundary --model " + (dir / (tag + ".model.json")).string() +
                        " --x-lo 0 --x-hi 2 --out " + (dir / (tag + ".boundary.csv")).string()) ==
                    0,
                "boundary failed");
    };
    pipeline("first");
    pipeline("second");

    for (const std::string suffix :
         {".csv", ".model.json", ".report.json", ".boundary.csv"}) {
        require(slurp(dir / ("first" + suffix)) == slurp(dir / ("second" + suffix)),
                "reruns differ in *" + suffix);
    }
    fs::remove_all(dir);
}

}  // namespace

int main(int argc, char** argv) {
    g_cli = argc > 1 ? argv[1] : "";
    g_fixtures = argc > 2 ? argv[2] : "fixtures";

    criterion(1, "normal equations match the pseudo-inverse route", criterion_normal_equations);
    criterion(2, "positive definiteness tracks column independence", criterion_lemma);
    criterion(3, "analytic gradient matches finite differences", criterion_frechet);
    criterion(4, "regularization path is monotone and F decomposes", criterion_regularization_path);
    criterion(5, "perceptron separates separable data and stalls otherwise",
              criterion_perceptron_tests);
    criterion(6, "quadratic lift separates the circle and roots solve the boundary",
              criterion_quadratic_lift);
    criterion(7, "winnow converges on boolean data and agrees with the perceptron",
              criterion_winnow);
    criterion(8, "Morozov selection hits the target discrepancy and the grid oracle",
              criterion_morozov);
    criterion(9, "balancing fixed point stabilizes with a small residual", criterion_balancing);
    criterion(10, "a-priori rule satisfies both vanishing limits", criterion_apriori);
    criterion(11, "fixed-seed CLI pipeline is byte-identical across runs", criterion_determinism);

    if (g_failures > 0) {
        std::cout << g_failures << " criterion(s) failed\n";
        return 1;
    }
    std::cout << "all 11 criteria passed\n";
    return 0;
}
