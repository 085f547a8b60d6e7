#pragma once

// JSON serialization for models, training reports and selection results.
// Field order is part of the file contract, so everything goes through
// nlohmann::ordered_json.

#include <string>

#include "linclass/lsq.hpp"
#include "linclass/online.hpp"
#include "linclass/regsel.hpp"

namespace linclass {

// A fitted model plus the decision convention it was trained under.
struct SavedModel {
    LinearModel model;
    double gamma = 0.0;
    double threshold = 0.5;
};

// { "basis": ..., "weights": [...], "gamma": ..., "threshold": ... }
void save_model(const SavedModel& saved, const std::string& path);
SavedModel load_model(const std::string& path);

// { "algo", "converged", "iterations", "final_misclassified", "stop_reason",
//   "residual_norm", "weight_norm", "gamma", "loss_history" }
// Direct fits report zero iterations and omit nothing; loss_history may be
// truncated to the trainer's in-memory cap.
void save_report(const std::string& algo, const TrainReport& report,
                 const FitDiagnostics& diagnostics, const std::string& path);

// { "rule", "gamma", "iterates": [...], "achieved" }
void save_selection(const RegSelection& selection, const std::string& path);

}  // namespace linclass
