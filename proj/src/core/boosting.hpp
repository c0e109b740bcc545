#pragma once

#include <array>
#include <cstdint>
#include <vector>

#include "core/features.hpp"
#include "core/tree.hpp"

namespace haorcast {

struct BoostHyper {
    std::size_t n_stages = 500;
    double learning_rate = 0.05;
    int max_depth = 8;
    double subsample = 0.8;
    double colsample = 0.8;
    double lambda = 1.0;            // L2 on leaf weights
    double min_child_weight = 1.0;  // minimum hessian sum per child

    void validate() const;
};

struct BoostModel {
    BoostHyper hyper;
    std::uint64_t seed = 0;
    double base_score = 0.0;  // log-odds of the training prior
    std::vector<Tree> trees;
    std::array<double, kFeatureCount> importance{};

    bool fitted = false;

    bool trained() const { return fitted; }
    // sigmoid(base_score + lr * sum of stage outputs)
    double predict_proba(const FeatureVector& x) const;
};

double sigmoid(double z);

// Second-order (Newton) boosting on logistic loss with per-stage row and
// column subsampling; stages are inherently sequential.
BoostModel train_boost(const std::vector<EventRecord>& events, const BoostHyper& hyper,
                       std::uint64_t seed, const std::vector<int>& allowed_features = {});

}  // namespace haorcast
