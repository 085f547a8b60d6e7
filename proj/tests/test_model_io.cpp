#include "doctest.h"

#include <filesystem>
#include <fstream>
#include <sstream>

#include "linclass/model_io.hpp"

using namespace linclass;

namespace {

namespace fs = std::filesystem;

struct TempFile {
    fs::path path;
    explicit TempFile(const std::string& name)
        : path(fs::temp_directory_path() / ("linclass_io_" + name)) {}
    ~TempFile() { std::error_code ec; fs::remove(path, ec); }
    std::string slurp() const {
        std::ifstream in(path);
        std::ostringstream ss;
        ss << in.rdbuf();
        return ss.str();
    }
};

}  // namespace

TEST_CASE("model JSON round-trips and keeps its field order") {
    SavedModel saved;
    saved.model.weights = {0.25, -1.5, 3.0};
    saved.model.basis = BasisSpec::linear2d();
    saved.gamma = 0.125;
    saved.threshold = 0.5;

    TempFile f("model.json");
    save_model(saved, f.path.string());

    const SavedModel back = load_model(f.path.string());
    CHECK(back.model.weights == saved.model.weights);
    CHECK(back.model.basis == saved.model.basis);
    CHECK(back.gamma == saved.gamma);
    CHECK(back.threshold == saved.threshold);

    const std::string text = f.slurp();
    const auto pos_basis = text.find("\"basis\"");
    const auto pos_weights = text.find("\"weights\"");
    const auto pos_gamma = text.find("\"gamma\"");
    const auto pos_threshold = text.find("\"threshold\"");
    REQUIRE(pos_basis != std::string::npos);
    CHECK(pos_basis < pos_weights);
    CHECK(pos_weights < pos_gamma);
    CHECK(pos_gamma < pos_threshold);
}

TEST_CASE("model JSON validates weight counts against the basis") {
    TempFile f("bad_model.json");
    {
        std::ofstream out(f.path);
        out << R"({"basis": "linear2d", "weights": [1.0], "gamma": 0.0, "threshold": 0.5})";
    }
    CHECK_THROWS_AS(load_model(f.path.string()), ParseError);

    TempFile g("not_json.json");
    {
        std::ofstream out(g.path);
        out << "not json at all";
    }
    CHECK_THROWS_AS(load_model(g.path.string()), ParseError);
    CHECK_THROWS_AS(load_model("/nonexistent/model.json"), ParseError);
}

TEST_CASE("train report JSON carries the outcome fields in order") {
    TrainReport report;
    report.converged = true;
    report.iterations = 12;
    report.final_misclassified = 0;
    report.loss_history = {3.0, 1.0, 0.0};
    report.stop_reason = StopReason::AllCorrect;

    TempFile f("report.json");
    save_report("perceptron", report, FitDiagnostics{1.25, 2.5, 0.0}, f.path.string());

    const std::string text = f.slurp();
    CHECK(text.find("\"algo\": \"perceptron\"") != std::string::npos);
    CHECK(text.find("\"converged\": true") != std::string::npos);
    CHECK(text.find("\"stop_reason\": \"all_correct\"") != std::string::npos);
    CHECK(text.find("\"iterations\": 12") != std::string::npos);
    CHECK(text.find("\"algo\"") < text.find("\"converged\""));
    CHECK(text.find("\"converged\"") < text.find("\"loss_history\""));
}

TEST_CASE("selection JSON matches the documented shape") {
    RegSelection sel;
    sel.rule = SelectionRule::Balancing;
    sel.gamma_star = 0.75;
    sel.iterates = {1.0, 0.8, 0.75};
    sel.achieved = 0.05;

    TempFile f("selection.json");
    save_selection(sel, f.path.string());
    const std::string text = f.slurp();
    CHECK(text.find("\"rule\": \"balancing\"") != std::string::npos);
    CHECK(text.find("\"gamma\": 0.75") != std::string::npos);
    CHECK(text.find("\"iterates\"") != std::string::npos);
    CHECK(text.find("\"achieved\"") != std::string::npos);
    CHECK(text.find("\"rule\"") < text.find("\"gamma\""));
    CHECK(text.find("\"gamma\"") < text.find("\"iterates\""));
    CHECK(text.find("\"iterates\"") < text.find("\"achieved\""));
}
