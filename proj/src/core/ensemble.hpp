#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "core/boosting.hpp"
#include "core/forest.hpp"

namespace haorcast {

// Blend weights renormalized after dropping the excluded sequence model:
// 0.45/0.80 and 0.35/0.80.
inline constexpr double kWeightForest = 0.5625;
inline constexpr double kWeightBoost = 0.4375;

struct EnsembleHyper {
    ForestHyper forest;
    BoostHyper boost;

    // 100-tree/100-stage profile for CI; full runs use 500/500.
    static EnsembleHyper full() { return {}; }
    static EnsembleHyper fast() {
        EnsembleHyper h;
        h.forest.n_trees = 100;
        h.boost.n_stages = 100;
        return h;
    }
};

struct EnsembleModel {
    ForestModel forest;
    BoostModel boost;
    double w_forest = kWeightForest;
    double w_boost = kWeightBoost;

    bool trained() const { return forest.trained() && boost.trained(); }
};

EnsembleModel train_ensemble(const std::vector<EventRecord>& events, const EnsembleHyper& hyper,
                             std::uint64_t seed, const std::vector<int>& allowed_features = {});

double predict_proba(const EnsembleModel& model, const FeatureVector& x);

// Weighted blend of the two gain-importance vectors, renormalized to sum 1.
std::array<double, kFeatureCount> merged_importance(const EnsembleModel& model);

// Versioned structured-text model file; loading reproduces identical
// predictions bit for bit.
std::string render_model(const EnsembleModel& model);
EnsembleModel parse_model(const std::string& text, const std::string& origin);
void save_model(const EnsembleModel& model, const std::string& path);
EnsembleModel load_model(const std::string& path);

}  // namespace haorcast
