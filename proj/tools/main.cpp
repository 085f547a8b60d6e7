// Command-line front end: dataset generation, training, regularization
// selection, decision-boundary emission and side-by-side comparison.
//
// Exit codes: 0 success, 2 usage or I/O failure, 3 trainer did not converge,
// 4 selection rule failed (target discrepancy not attainable).

#include <algorithm>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "linclass/datagen.hpp"
#include "linclass/model_io.hpp"
#include "linclass/online.hpp"
#include "linclass/regsel.hpp"

namespace {

namespace fs = std::filesystem;
using namespace linclass;

constexpr int kExitUsage = 2;
constexpr int kExitNotConverged = 3;
constexpr int kExitSelectionFailed = 4;

// ---------------------------------------------------------------------------
// dataset loading shared by train / select-gamma / compare

struct DataOptions {
    std::string path;
    std::vector<std::string> feature_columns;  // empty: all but the last column
    std::string label_column;                  // empty: the last column
    std::string label_map_text = "0=0,1=1";
    std::optional<double> label_threshold;
};

std::vector<std::string> read_header(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ParseError("cannot open '" + path + "'");
    std::string line;
    if (!std::getline(in, line)) throw ParseError("'" + path + "' is empty");
    if (!line.empty() && line.back() == '\r') line.pop_back();
    std::vector<std::string> names;
    std::string field;
    std::stringstream ss(line);
    while (std::getline(ss, field, ',')) names.push_back(field);
    return names;
}

std::map<std::string, int> parse_label_map(const std::string& text) {
    std::map<std::string, int> map;
    std::stringstream ss(text);
    std::string pair;
    while (std::getline(ss, pair, ',')) {
        const auto eq = pair.find('=');
        if (eq == std::string::npos || eq == 0) {
            throw ParseError("bad label map entry '" + pair + "' (want label=0 or label=1)");
        }
        const std::string value = pair.substr(eq + 1);
        if (value != "0" && value != "1") {
            throw ParseError("label '" + pair.substr(0, eq) + "' must map to 0 or 1");
        }
        map[pair.substr(0, eq)] = value == "1" ? 1 : 0;
    }
    if (map.empty()) throw ParseError("empty label map");
    return map;
}

Dataset load_dataset(const DataOptions& opts) {
    DataOptions resolved = opts;
    if (resolved.feature_columns.empty() || resolved.label_column.empty()) {
        const auto header = read_header(opts.path);
        if (header.size() < 2) {
            throw ParseError("'" + opts.path + "' needs at least one feature and a label column");
        }
        if (resolved.label_column.empty()) resolved.label_column = header.back();
        if (resolved.feature_columns.empty()) {
            resolved.feature_columns.assign(header.begin(), header.end() - 1);
            resolved.feature_columns.erase(
                std::remove(resolved.feature_columns.begin(), resolved.feature_columns.end(),
                            resolved.label_column),
                resolved.feature_columns.end());
        }
    }

    CsvLoadResult loaded =
        opts.label_threshold
            ? load_csv_threshold(opts.path, resolved.feature_columns, resolved.label_column,
                                 *opts.label_threshold)
            : load_csv(opts.path, resolved.feature_columns, resolved.label_column,
                       parse_label_map(resolved.label_map_text));
    if (loaded.skipped_rows > 0) {
        std::cerr << "note: skipped " << loaded.skipped_rows << " rows with unmapped labels\n";
    }
    if (loaded.dataset.features.rows() == 0) {
        throw ParseError("'" + opts.path + "': no usable rows");
    }
    return std::move(loaded.dataset);
}

// ---------------------------------------------------------------------------
// training plumbing

struct TrainOptions {
    std::string algo;
    std::string basis_name = "linear2d";
    TrainConfig cfg;
    double alpha = 2.0;      // WINNOW promotion factor
    double threshold = 0.5;  // least-squares decision level
    double gamma = 0.0;      // fixed ridge parameter
};

// The design matrix and target vector an algorithm actually trains on.
// The polynomial basis follows the curve-fitting setup: the design comes
// from the first coordinate, the fitted values are the second coordinate,
// and the class labels only grade the fitted curve.
struct Prepared {
    DesignMatrix design;
    Vector targets;       // regression targets (labels, or y values for poly)
    const Dataset* data = nullptr;
    bool curve_fit = false;
};

BasisSpec basis_for_algo(const std::string& algo, const std::string& basis_name,
                         std::size_t n_features) {
    if (algo == "perceptron2") return BasisSpec::quad2d();
    if (algo == "winnow") return BasisSpec::raw(n_features);
    return BasisSpec::parse(basis_name);
}

Prepared prepare(const Dataset& data, const BasisSpec& basis) {
    Prepared p;
    p.data = &data;
    if (basis.kind() == BasisSpec::Kind::Polynomial) {
        if (data.features.cols() < 2) {
            throw DimensionMismatch(
                "polynomial basis fits the second feature column as a function of the first; "
                "the dataset has only " + std::to_string(data.features.cols()) + " column(s)");
        }
        Vector xs(data.features.rows());
        Vector ys(data.features.rows());
        for (std::size_t i = 0; i < xs.size(); ++i) {
            xs[i] = data.features(i, 0);
            ys[i] = data.features(i, 1);
        }
        p.design = polynomial_design(xs, basis.degree());
        p.targets = std::move(ys);
        p.curve_fit = true;
    } else {
        p.design = build_design(basis, data.features);
        p.targets = data.targets;
    }
    return p;
}

// Count label disagreements under the model's own decision rule.
std::size_t count_misclassified(const LinearModel& model, const Prepared& p, double threshold,
                                bool sign_rule) {
    const Dataset& data = *p.data;
    std::size_t errors = 0;
    for (std::size_t i = 0; i < data.features.rows(); ++i) {
        int predicted = 0;
        if (p.curve_fit) {
            // class 1 above the fitted curve
            predicted = data.features(i, 1) - predict(model, {data.features(i, 0)}) > 0.0 ? 1 : 0;
        } else {
            Vector raw(data.features.cols());
            for (std::size_t j = 0; j < raw.size(); ++j) raw[j] = data.features(i, j);
            raw.resize(model.basis.raw_dim());
            predicted = sign_rule ? (predict(model, raw) > 0.0 ? 1 : 0)
                                  : classify(model, raw, threshold);
        }
        if (predicted != static_cast<int>(data.targets[i])) ++errors;
    }
    return errors;
}

struct TrainOutcome {
    SavedModel saved;
    TrainReport report;
    FitDiagnostics diagnostics;
};

TrainOutcome run_algo(const std::string& algo, const Prepared& p, const TrainOptions& opts,
                      std::ostream* loss_stream) {
    TrainOutcome out;
    const bool sign_rule = algo == "perceptron" || algo == "perceptron2" || algo == "winnow";
    if (sign_rule && p.curve_fit) {
        throw ParseError(algo + " classifies by sign and needs class labels; "
                         "the polynomial basis fits coordinates instead");
    }

    if (algo == "ls" || algo == "ls-reg") {
        FitResult fit = algo == "ls" ? fit_ls(p.design, p.targets)
                                     : fit_ridge(p.design, p.targets, opts.gamma);
        out.saved.model = std::move(fit.model);
        out.diagnostics = fit.diagnostics;
        out.report.converged = true;
        out.report.iterations = 0;
        out.report.stop_reason = StopReason::GradientSmall;  // normal equations solved exactly
    } else if (algo == "gradient") {
        TrainConfig cfg = opts.cfg;
        cfg.gamma = opts.gamma;
        TrainResult r = gradient_train(p.design, p.targets, cfg, loss_stream);
        out.saved.model = std::move(r.model);
        out.report = std::move(r.report);
    } else if (algo == "perceptron" || algo == "perceptron2") {
        TrainConfig cfg = opts.cfg;
        cfg.gamma = opts.gamma;
        TrainResult r = perceptron_train(p.design, p.targets, cfg, loss_stream);
        out.saved.model = std::move(r.model);
        out.report = std::move(r.report);
    } else if (algo == "winnow") {
        TrainResult r = winnow_train(p.design, p.targets, opts.alpha, opts.cfg, loss_stream);
        out.saved.model = std::move(r.model);
        out.report = std::move(r.report);
    } else {
        throw ParseError("unknown algorithm '" + algo + "'");
    }

    const double model_gamma = algo == "ls" || algo == "winnow" ? 0.0 : opts.gamma;
    if (algo != "ls" && algo != "ls-reg") {
        const Vector r = subtract(matvec(p.design.matrix, out.saved.model.weights), p.targets);
        out.diagnostics =
            FitDiagnostics{norm2(r), norm2(out.saved.model.weights), model_gamma};
    }
    out.saved.gamma = model_gamma;
    out.saved.threshold = sign_rule ? 0.0 : opts.threshold;
    out.report.final_misclassified =
        count_misclassified(out.saved.model, p, opts.threshold, sign_rule);
    return out;
}

// ---------------------------------------------------------------------------
// boundary emission

void emit_boundary(const SavedModel& saved, double x_lo, double x_hi, std::size_t samples,
                   const std::string& out_path) {
    if (!(x_lo < x_hi)) throw OutOfRange("boundary: need x-lo < x-hi");
    if (samples < 2) throw OutOfRange("boundary: need at least 2 samples");

    std::ofstream out(out_path);
    if (!out) throw ParseError("cannot open '" + out_path + "' for writing");

    const Vector& w = saved.model.weights;
    const BasisSpec& basis = saved.model.basis;

    switch (basis.kind()) {
        case BasisSpec::Kind::Polynomial: {
            out << "x,y\n";
            for (std::size_t i = 0; i < samples; ++i) {
                const double x =
                    x_lo + (x_hi - x_lo) * static_cast<double>(i) / (samples - 1);
                out << format_double(x) << ',' << format_double(predict(saved.model, {x}))
                    << '\n';
            }
            return;
        }
        case BasisSpec::Kind::Linear2D:
        case BasisSpec::Kind::Raw: {
            if (basis.kind() == BasisSpec::Kind::Raw && basis.raw_dim() != 2) {
                throw DimensionMismatch("boundary: only 2-D raw models have a plane boundary");
            }
            const double bias = basis.kind() == BasisSpec::Kind::Linear2D ? w[0] : 0.0;
            const double wx = basis.kind() == BasisSpec::Kind::Linear2D ? w[1] : w[0];
            const double wy = basis.kind() == BasisSpec::Kind::Linear2D ? w[2] : w[1];
            out << "x,y\n";
            if (std::abs(wy) >= 1e-12) {
                const auto level = [&](double x) {
                    return (saved.threshold - bias - wx * x) / wy;
                };
                out << format_double(x_lo) << ',' << format_double(level(x_lo)) << '\n';
                out << format_double(x_hi) << ',' << format_double(level(x_hi)) << '\n';
            } else if (std::abs(wx) >= 1e-12) {
                // vertical line x = const; span the requested range vertically
                const double x = (saved.threshold - bias) / wx;
                std::cerr << "note: boundary is the vertical line x = " << format_double(x)
                          << '\n';
                out << format_double(x) << ',' << format_double(x_lo) << '\n';
                out << format_double(x) << ',' << format_double(x_hi) << '\n';
            } else {
                std::cerr << "warning: degenerate weights, no boundary line exists\n";
            }
            return;
        }
        case BasisSpec::Kind::QuadraticLift2D: {
            QuadraticBoundary qb;
            for (std::size_t j = 0; j < 6; ++j) qb.w[j] = w[j];
            qb.w[0] -= saved.threshold;  // roots of the threshold level set
            out << "x1,x2_1,x2_2\n";
            std::size_t emitted = 0;
            for (std::size_t i = 0; i < samples; ++i) {
                const double x1 =
                    x_lo + (x_hi - x_lo) * static_cast<double>(i) / (samples - 1);
                const auto roots = boundary_roots(qb, x1);
                if (roots.empty()) continue;
                out << format_double(x1);
                for (double r : roots) out << ',' << format_double(r);
                out << '\n';
                ++emitted;
            }
            if (emitted == 0) {
                std::cerr << "warning: no real boundary points in [" << x_lo << ", " << x_hi
                          << "]\n";
            }
            return;
        }
    }
    throw Error("boundary: unreachable");
}

// ---------------------------------------------------------------------------
// commands

struct GenLinearOptions {
    std::size_t n = 100;
    double x_lo = 0.0;
    double x_hi = 2.0;
    double delta = 0.0;
    double jitter = 1.0;
    std::uint64_t seed = 1;
    std::string out;
};

struct GenCircleOptions {
    std::size_t n = 200;
    double r_inner = 1.0;
    double r_outer = 3.0;
    std::uint64_t seed = 1;
    std::string out;
};

struct GenFieldOptions {
    std::string in;
    double threshold = 4.0;
    std::string out;
};

void print_class_counts(const Dataset& d) {
    std::size_t ones = 0;
    for (double t : d.targets) ones += t == 1.0 ? 1 : 0;
    std::cout << d.targets.size() << " points: " << ones << " in class 1, "
              << d.targets.size() - ones << " in class 0\n";
}

int cmd_gen_linear(const GenLinearOptions& o) {
    const Dataset d =
        gen_linear_two_class(o.n, o.x_lo, o.x_hi, NoiseSpec{o.delta, o.seed}, o.jitter);
    save_csv(d, o.out);
    std::cout << "seed " << o.seed << ", delta " << format_double(o.delta) << " -> " << o.out
              << '\n';
    print_class_counts(d);
    return 0;
}

int cmd_gen_circle(const GenCircleOptions& o) {
    const Dataset d = gen_circle_two_class(o.n, o.r_inner, o.r_outer, o.seed);
    save_csv(d, o.out);
    std::cout << "seed " << o.seed << " -> " << o.out << '\n';
    print_class_counts(d);
    return 0;
}

int cmd_gen_field(const GenFieldOptions& o) {
    const DenseMatrix field = load_field_csv(o.in);
    const Dataset d = segment_field(field, o.threshold);
    save_csv(d, o.out);
    std::cout << field.rows() << "x" << field.cols() << " grid, threshold "
              << format_double(o.threshold) << " -> " << o.out << '\n';
    print_class_counts(d);
    return 0;
}

struct TrainCommand {
    DataOptions data;
    TrainOptions train;
    std::string out_prefix = "run";
    std::string loss_csv;
};

int cmd_train(const TrainCommand& c) {
    const Dataset data = load_dataset(c.data);
    const BasisSpec basis =
        basis_for_algo(c.train.algo, c.train.basis_name, data.features.cols());
    const Prepared p = prepare(data, basis);

    std::ofstream loss_stream;
    if (!c.loss_csv.empty()) {
        loss_stream.open(c.loss_csv);
        if (!loss_stream) throw ParseError("cannot open '" + c.loss_csv + "' for writing");
        loss_stream << "iteration,loss,misclassified\n";
    }

    const TrainOutcome out =
        run_algo(c.train.algo, p, c.train, c.loss_csv.empty() ? nullptr : &loss_stream);

    const std::string model_path = c.out_prefix + ".model.json";
    const std::string report_path = c.out_prefix + ".report.json";
    save_model(out.saved, model_path);
    save_report(c.train.algo, out.report, out.diagnostics, report_path);

    std::cout << c.train.algo << " on " << c.data.path << ": "
              << (out.report.converged ? "converged" : "did not converge") << " after "
              << out.report.iterations << " iterations, " << out.report.final_misclassified
              << " misclassified -> " << model_path << '\n';
    return out.report.converged ? 0 : kExitNotConverged;
}

struct SelectCommand {
    DataOptions data;
    std::string rule;
    std::string basis_name = "linear2d";
    double delta = 0.0;
    double c_big = 1.0;  // C in both the a-priori rule and the balancing rule
    double mu = 1.0;
    double p_exponent = 0.0;  // 0: no iterative schedule
    std::size_t k = 0;
    double c_m = 1.0;
    double gamma_lo = 1e-8;
    double gamma_hi = 1e8;
    double tol = 1e-6;
    double gamma0 = 1.0;
    double theta = 1e-3;
    std::size_t max_iter = 100;
    std::string out = "selection.json";
    std::string trace;
};

int cmd_select_gamma(const SelectCommand& c) {
    RegSelection sel;
    std::optional<Prepared> prepared;

    if (!c.data.path.empty()) {
        const Dataset data = load_dataset(c.data);
        prepared = prepare(data, BasisSpec::parse(c.basis_name));
    }

    if (c.rule == "apriori") {
        sel.rule = SelectionRule::APriori;
        const double gamma0 = apriori_gamma(c.delta, c.c_big, c.mu);
        sel.iterates.push_back(gamma0);
        sel.gamma_star = gamma0;
        if (c.p_exponent > 0.0) {
            sel.gamma_star = gamma_schedule(gamma0, c.p_exponent, c.k);
            sel.iterates.push_back(sel.gamma_star);
        }
        sel.achieved = 0.0;
    } else if (c.rule == "morozov") {
        if (!prepared) throw ParseError("--rule morozov needs --data");
        sel = morozov_select(prepared->design, prepared->targets, c.delta, c.c_m, c.gamma_lo,
                             c.gamma_hi, c.tol);
    } else if (c.rule == "balancing") {
        if (!prepared) throw ParseError("--rule balancing needs --data");
        sel = balancing_fixed_point(prepared->design, prepared->targets, c.gamma0, c.c_big,
                                    c.theta, c.max_iter);
    } else {
        throw ParseError("unknown rule '" + c.rule + "'");
    }

    save_selection(sel, c.out);
    std::cout << to_string(sel.rule) << ": gamma = " << format_double(sel.gamma_star) << " -> "
              << c.out << '\n';

    if (!c.trace.empty()) {
        if (!prepared) throw ParseError("--trace needs --data to evaluate the value function");
        std::ofstream trace(c.trace);
        if (!trace) throw ParseError("cannot open '" + c.trace + "' for writing");
        trace << "gamma,F,phi_bar,psi_bar\n";
        for (double gamma : sel.iterates) {
            const ValuePoint vp = value_function(prepared->design, prepared->targets, gamma);
            trace << format_double(vp.gamma) << ',' << format_double(vp.F) << ','
                  << format_double(vp.phi_bar) << ',' << format_double(vp.psi_bar) << '\n';
        }
    }
    return 0;
}

struct BoundaryCommand {
    std::string model_path;
    double x_lo = -1.0;
    double x_hi = 1.0;
    std::size_t samples = 200;
    std::string out = "boundary.csv";
};

int cmd_boundary(const BoundaryCommand& c) {
    const SavedModel saved = load_model(c.model_path);
    emit_boundary(saved, c.x_lo, c.x_hi, c.samples, c.out);
    std::cout << saved.model.basis.name() << " boundary over [" << format_double(c.x_lo) << ", "
              << format_double(c.x_hi) << "] -> " << c.out << '\n';
    return 0;
}

struct CompareCommand {
    DataOptions data;
    std::vector<std::string> algos;
    TrainOptions train;
    std::string out_dir = "compare";
    std::optional<double> x_lo;
    std::optional<double> x_hi;
    std::size_t samples = 200;
};

int cmd_compare(const CompareCommand& c) {
    const Dataset data = load_dataset(c.data);
    fs::create_directories(c.out_dir);

    double x_lo = c.x_lo.value_or(0.0);
    double x_hi = c.x_hi.value_or(1.0);
    if (!c.x_lo || !c.x_hi) {
        double lo = data.features(0, 0);
        double hi = lo;
        for (std::size_t i = 0; i < data.features.rows(); ++i) {
            lo = std::min(lo, data.features(i, 0));
            hi = std::max(hi, data.features(i, 0));
        }
        if (!c.x_lo) x_lo = lo;
        if (!c.x_hi) x_hi = hi;
    }

    std::ofstream summary(fs::path(c.out_dir) / "summary.csv");
    if (!summary) throw ParseError("cannot write to '" + c.out_dir + "'");
    summary << "algo,converged,iterations,misclassified,weights,note\n";

    for (const std::string& algo : c.algos) {
        std::string note;
        try {
            const BasisSpec basis =
                basis_for_algo(algo, c.train.basis_name, data.features.cols());
            const Prepared p = prepare(data, basis);
            const TrainOutcome out = run_algo(algo, p, c.train, nullptr);

            const std::string model_path =
                (fs::path(c.out_dir) / ("model_" + algo + ".json")).string();
            save_model(out.saved, model_path);
            try {
                emit_boundary(out.saved, x_lo, x_hi, c.samples,
                              (fs::path(c.out_dir) / ("boundary_" + algo + ".csv")).string());
            } catch (const Error& e) {
                note = e.what();
            }

            summary << algo << ',' << (out.report.converged ? "true" : "false") << ','
                    << out.report.iterations << ',' << out.report.final_misclassified << ',';
            for (std::size_t j = 0; j < out.saved.model.weights.size(); ++j) {
                if (j > 0) summary << ';';
                summary << format_double(out.saved.model.weights[j]);
            }
        } catch (const Error& e) {
            note = e.what();
            summary << algo << ",error,,,";
        }
        std::replace(note.begin(), note.end(), ',', ';');
        summary << ',' << note << '\n';
    }
    std::cout << "summary -> " << (fs::path(c.out_dir) / "summary.csv").string() << '\n';
    return 0;
}

void add_data_options(CLI::App* cmd, DataOptions& data, bool required = true) {
    auto* opt = cmd->add_option("--data", data.path, "input dataset CSV");
    if (required) opt->required();
    cmd->add_option("--features", data.feature_columns,
                    "feature column names (default: all but the label column)")
        ->delimiter(',');
    cmd->add_option("--label", data.label_column, "label column (default: last column)");
    auto* map_opt = cmd->add_option("--label-map", data.label_map_text,
                                    "label=class pairs, e.g. setosa=1,versicolor=0 "
                                    "(default 0=0,1=1)");
    cmd->add_option("--label-threshold", data.label_threshold,
                    "numeric rule: class 1 where the label column exceeds this")
        ->excludes(map_opt);
}

void add_train_options(CLI::App* cmd, TrainOptions& train) {
    cmd->add_option("--basis", train.basis_name,
                    "feature basis: linear2d, quad2d or poly:<d> "
                    "(perceptron2 forces quad2d, winnow forces raw attributes)");
    cmd->add_option("--eta", train.cfg.eta, "learning rate (default 0.5)");
    cmd->add_option("--gamma", train.gamma, "regularization parameter");
    cmd->add_option("--theta", train.cfg.theta, "stopping tolerance in (0,1)");
    cmd->add_option("--max-iter", train.cfg.max_iter, "iteration/pass cap (default 1e5)");
    cmd->add_option("--seed", train.cfg.seed, "weight init seed");
    cmd->add_option("--threshold", train.threshold,
                    "least-squares decision level (default 0.5)");
    cmd->add_option("--alpha", train.alpha, "WINNOW promotion factor (default 2)");
    cmd->add_option_function<std::string>(
           "--reg-sign",
           [&train](const std::string& name) { train.cfg.reg_sign = parse_reg_sign(name); },
           "descent or paper-literal regularization sign")
        ->check(CLI::IsMember({"descent", "paper-literal"}));
    cmd->add_flag("--winnow-random-init", train.cfg.winnow_random_init,
                  "start WINNOW from small random weights instead of ones");
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"two-class classifiers: least squares, gradient, perceptron, WINNOW"};
    app.require_subcommand(1);

    // gen
    auto* gen = app.add_subcommand("gen", "generate or segment a dataset");
    gen->require_subcommand(1);

    GenLinearOptions gl;
    auto* gen_linear = gen->add_subcommand("linear", "two classes split by y = 1.2 - 0.5x");
    gen_linear->add_option("--n", gl.n, "number of points");
    gen_linear->add_option("--x-lo", gl.x_lo, "input interval start");
    gen_linear->add_option("--x-hi", gl.x_hi, "input interval end");
    gen_linear->add_option("--delta", gl.delta, "noise level in [0,1]");
    gen_linear->add_option("--jitter", gl.jitter, "vertical scatter amplitude");
    gen_linear->add_option("--seed", gl.seed, "RNG seed");
    gen_linear->add_option("--out", gl.out, "output CSV")->required();

    GenCircleOptions gc;
    auto* gen_circle = gen->add_subcommand("circle", "disk class inside an annulus class");
    gen_circle->add_option("--n", gc.n, "number of points");
    gen_circle->add_option("--r-inner", gc.r_inner, "disk radius");
    gen_circle->add_option("--r-outer", gc.r_outer, "annulus radius");
    gen_circle->add_option("--seed", gc.seed, "RNG seed");
    gen_circle->add_option("--out", gc.out, "output CSV")->required();

    GenFieldOptions gf;
    auto* gen_field = gen->add_subcommand("field", "threshold a grid of values on the unit square");
    gen_field->add_option("--in", gf.in, "grid CSV (no header)")->required();
    gen_field->add_option("--threshold", gf.threshold, "class-1 level (default 4)");
    gen_field->add_option("--out", gf.out, "output CSV")->required();

    // train
    TrainCommand tc;
    auto* train = app.add_subcommand("train", "fit a model and write model/report JSON");
    train->add_option("--algo", tc.train.algo,
                      "ls, ls-reg, gradient, perceptron, perceptron2 or winnow")
        ->required()
        ->check(CLI::IsMember({"ls", "ls-reg", "gradient", "perceptron", "perceptron2",
                               "winnow"}));
    add_data_options(train, tc.data);
    add_train_options(train, tc.train);
    train->add_option("--out", tc.out_prefix,
                      "output prefix; writes <prefix>.model.json and <prefix>.report.json");
    train->add_option("--loss-csv", tc.loss_csv, "stream per-iteration loss rows here");

    // select-gamma
    SelectCommand sc;
    auto* select = app.add_subcommand("select-gamma", "choose a regularization parameter");
    select->add_option("--rule", sc.rule, "apriori, morozov or balancing")
        ->required()
        ->check(CLI::IsMember({"apriori", "morozov", "balancing"}));
    add_data_options(select, sc.data, /*required=*/false);
    select->add_option("--basis", sc.basis_name, "feature basis for the design matrix");
    select->add_option("--delta", sc.delta, "noise level");
    select->add_option("--C", sc.c_big, "constant in gamma = C delta^mu / the balancing rule");
    select->add_option("--mu", sc.mu, "a-priori exponent in (0,2)");
    select->add_option("--p", sc.p_exponent, "iterative schedule exponent in (0,1]");
    select->add_option("--k", sc.k, "iteration index for the schedule");
    select->add_option("--c-m", sc.c_m, "discrepancy constant >= 1");
    select->add_option("--gamma-lo", sc.gamma_lo, "bisection bracket start");
    select->add_option("--gamma-hi", sc.gamma_hi, "bisection bracket end");
    select->add_option("--tol", sc.tol, "discrepancy tolerance");
    select->add_option("--gamma0", sc.gamma0, "fixed-point start");
    select->add_option("--theta", sc.theta, "fixed-point stopping tolerance");
    select->add_option("--max-iter", sc.max_iter, "fixed-point iteration cap");
    select->add_option("--out", sc.out, "selection JSON path");
    select->add_option("--trace", sc.trace, "write gamma,F,phi_bar,psi_bar rows here");

    // boundary
    BoundaryCommand bc;
    auto* boundary = app.add_subcommand("boundary", "emit the decision boundary as CSV");
    boundary->add_option("--model", bc.model_path, "model JSON")->required();
    boundary->add_option("--x-lo", bc.x_lo, "range start");
    boundary->add_option("--x-hi", bc.x_hi, "range end");
    boundary->add_option("--samples", bc.samples, "grid points (default 200)");
    boundary->add_option("--out", bc.out, "output CSV");

    // compare
    CompareCommand cc;
    auto* compare = app.add_subcommand("compare", "train several algorithms side by side");
    compare->add_option("--algos", cc.algos, "two or more algorithm names")
        ->required()
        ->delimiter(',');
    add_data_options(compare, cc.data);
    add_train_options(compare, cc.train);
    compare->add_option("--out-dir", cc.out_dir, "output directory");
    compare->add_option("--x-lo", cc.x_lo, "boundary range start (default: data extent)");
    compare->add_option("--x-hi", cc.x_hi, "boundary range end (default: data extent)");
    compare->add_option("--samples", cc.samples, "boundary grid points");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kExitUsage;
    }

    try {
        if (gen_linear->parsed()) return cmd_gen_linear(gl);
        if (gen_circle->parsed()) return cmd_gen_circle(gc);
        if (gen_field->parsed()) return cmd_gen_field(gf);
        if (train->parsed()) {
            if (tc.train.algo == "ls-reg" && !(tc.train.gamma > 0.0)) {
                std::cerr << "error: --algo ls-reg needs --gamma > 0 "
                             "(or use select-gamma first)\n";
                return kExitUsage;
            }
            return cmd_train(tc);
        }
        if (select->parsed()) return cmd_select_gamma(sc);
        if (boundary->parsed()) return cmd_boundary(bc);
        if (compare->parsed()) {
            if (cc.algos.size() < 2) {
                std::cerr << "error: compare needs at least two algorithms\n";
                return kExitUsage;
            }
            return cmd_compare(cc);
        }
    } catch (const BracketInvalid& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitSelectionFailed;
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitUsage;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitUsage;
    }
    return kExitUsage;
}
