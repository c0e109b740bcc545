#pragma once

#include <array>
#include <cstdint>
#include <vector>

#include "core/features.hpp"
#include "core/tree.hpp"

namespace haorcast {

struct ForestHyper {
    std::size_t n_trees = 500;
    int max_depth = 12;
    std::size_t min_samples_split = 5;

    void validate() const;
};

struct ForestModel {
    ForestHyper hyper;
    std::uint64_t seed = 0;
    std::vector<Tree> trees;
    std::array<double, kFeatureCount> importance{};  // normalized gain, sums to 1

    bool trained() const { return !trees.empty(); }
    // Mean of per-tree leaf class-1 fractions.
    double predict_proba(const FeatureVector& x) const;
};

// Bagged Gini-split trees; sqrt(n_features) candidate features per split,
// deterministic per seed. allowed_features empty means all features.
ForestModel train_forest(const std::vector<EventRecord>& events, const ForestHyper& hyper,
                         std::uint64_t seed, const std::vector<int>& allowed_features = {});

}  // namespace haorcast
