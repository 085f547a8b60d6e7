#include "linclass/model_io.hpp"

#include <fstream>

#include "json.hpp"

namespace linclass {

namespace {

using ordered_json = nlohmann::ordered_json;

void write_json(const ordered_json& doc, const std::string& path) {
    std::ofstream out(path);
    if (!out) throw ParseError("cannot open '" + path + "' for writing");
    out << doc.dump(2) << '\n';
}

ordered_json read_json(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ParseError("cannot open '" + path + "'");
    try {
        return ordered_json::parse(in);
    } catch (const nlohmann::json::exception& e) {
        throw ParseError("'" + path + "': " + e.what());
    }
}

}  // namespace

void save_model(const SavedModel& saved, const std::string& path) {
    ordered_json doc;
    doc["basis"] = saved.model.basis.name();
    doc["weights"] = saved.model.weights;
    doc["gamma"] = saved.gamma;
    doc["threshold"] = saved.threshold;
    write_json(doc, path);
}

SavedModel load_model(const std::string& path) {
    const ordered_json doc = read_json(path);
    try {
        SavedModel saved;
        saved.model.basis = BasisSpec::parse(doc.at("basis").get<std::string>());
        saved.model.weights = doc.at("weights").get<Vector>();
        saved.gamma = doc.at("gamma").get<double>();
        saved.threshold = doc.at("threshold").get<double>();
        if (saved.model.weights.size() != saved.model.basis.column_count()) {
            throw ParseError("'" + path + "': " + std::to_string(saved.model.weights.size()) +
                             " weights for basis " + saved.model.basis.name());
        }
        return saved;
    } catch (const nlohmann::json::exception& e) {
        throw ParseError("'" + path + "': " + e.what());
    }
}

void save_report(const std::string& algo, const TrainReport& report,
                 const FitDiagnostics& diagnostics, const std::string& path) {
    ordered_json doc;
    doc["algo"] = algo;
    doc["converged"] = report.converged;
    doc["iterations"] = report.iterations;
    doc["final_misclassified"] = report.final_misclassified;
    doc["stop_reason"] = to_string(report.stop_reason);
    doc["residual_norm"] = diagnostics.residual_norm;
    doc["weight_norm"] = diagnostics.weight_norm;
    doc["gamma"] = diagnostics.gamma;
    doc["loss_history"] = report.loss_history;
    write_json(doc, path);
}

void save_selection(const RegSelection& selection, const std::string& path) {
    ordered_json doc;
    doc["rule"] = to_string(selection.rule);
    doc["gamma"] = selection.gamma_star;
    doc["iterates"] = selection.iterates;
    doc["achieved"] = selection.achieved;
    write_json(doc, path);
}

}  // namespace linclass
