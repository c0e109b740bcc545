#pragma once

#include <array>
#include <vector>

#include "core/features.hpp"

namespace haorcast {

// Plain logistic-regression baseline: full-batch gradient descent on
// standardized features, no regularization. Deterministic (zero init).
struct LogisticModel {
    std::array<double, kFeatureCount> weights{};
    double bias = 0.0;
    std::array<double, kFeatureCount> feat_mean{};
    std::array<double, kFeatureCount> feat_sd{};
    bool fitted = false;

    double predict_proba(const FeatureVector& x) const;
};

struct LogisticHyper {
    std::size_t steps = 5000;
    double step_size = 0.1;
};

LogisticModel train_logistic(const std::vector<EventRecord>& events,
                             const LogisticHyper& hyper = {});

}  // namespace haorcast
