#include "core/forest.hpp"

#include <algorithm>
#include <cmath>

#include "core/error.hpp"
#include "core/rng.hpp"

namespace haorcast {

namespace {

struct SplitChoice {
    bool found = false;
    int feature = -1;
    double threshold = 0.0;
    double gain = 0.0;
};

struct TreeBuilder {
    const std::vector<const EventRecord*>& rows;
    const std::vector<int>& features;
    const ForestHyper& hyper;
    std::size_t mtry;
    Rng& rng;
    Tree tree;
    std::array<double, kFeatureCount>& gain_acc;
    double n_total;

    // indices into `rows` for the current node, reordered in place
    std::vector<std::size_t> order;
    std::vector<std::pair<double, int>> scratch;  // (value, label) sorted per feature

    static double gini(std::size_t pos, std::size_t total) {
        if (total == 0) return 0.0;
        const double p = static_cast<double>(pos) / static_cast<double>(total);
        return 2.0 * p * (1.0 - p);
    }

    SplitChoice best_split(std::size_t begin, std::size_t end, std::size_t node_pos) {
        const std::size_t n = end - begin;
        const double parent_imp = gini(node_pos, n);
        SplitChoice best;

        // Candidate features drawn per node, without replacement; the draw
        // order is part of the deterministic stream, so candidates are
        // evaluated in ascending feature index to keep tie-breaking stable.
        std::vector<std::size_t> cand = rng.sample_without_replacement(features.size(), mtry);
        std::vector<int> feats;
        feats.reserve(cand.size());
        for (std::size_t c : cand) feats.push_back(features[c]);
        std::sort(feats.begin(), feats.end());

        for (int f : feats) {
            scratch.clear();
            for (std::size_t i = begin; i < end; ++i) {
                const EventRecord* r = rows[order[i]];
                scratch.emplace_back(r->features[static_cast<std::size_t>(f)],
                                     r->label == Label::flood ? 1 : 0);
            }
            std::sort(scratch.begin(), scratch.end());
            if (scratch.front().first == scratch.back().first) continue;

            std::size_t left_n = 0, left_pos = 0;
            for (std::size_t i = 0; i + 1 < scratch.size(); ++i) {
                left_n += 1;
                left_pos += static_cast<std::size_t>(scratch[i].second);
                if (scratch[i].first == scratch[i + 1].first) continue;
                double mid;
                if (!split_midpoint(scratch[i].first, scratch[i + 1].first, mid)) continue;
                const std::size_t right_n = n - left_n;
                const std::size_t right_pos = node_pos - left_pos;
                const double child_imp =
                    (static_cast<double>(left_n) * gini(left_pos, left_n) +
                     static_cast<double>(right_n) * gini(right_pos, right_n)) /
                    static_cast<double>(n);
                const double gain = parent_imp - child_imp;
                if (gain <= 0.0) continue;
                // ties keep the first candidate: the scan visits features and
                // thresholds in ascending order
                if (!best.found || gain > best.gain) {
                    best.found = true;
                    best.feature = f;
                    best.threshold = mid;
                    best.gain = gain;
                }
            }
        }
        return best;
    }

    int build(std::size_t begin, std::size_t end, int depth) {
        const std::size_t n = end - begin;
        std::size_t pos = 0;
        for (std::size_t i = begin; i < end; ++i)
            pos += rows[order[i]]->label == Label::flood ? 1 : 0;

        const int node_id = static_cast<int>(tree.nodes.size());
        tree.nodes.emplace_back();

        const bool stop = depth >= hyper.max_depth || n < hyper.min_samples_split || pos == 0 ||
                          pos == n;
        SplitChoice split;
        if (!stop) split = best_split(begin, end, pos);

        if (stop || !split.found) {
            tree.nodes[node_id].value = static_cast<double>(pos) / static_cast<double>(n);
            return node_id;
        }

        gain_acc[static_cast<std::size_t>(split.feature)] +=
            (static_cast<double>(n) / n_total) * split.gain;

        const auto invalid = std::stable_partition(
            order.begin() + static_cast<std::ptrdiff_t>(begin),
            order.begin() + static_cast<std::ptrdiff_t>(end), [&](std::size_t idx) {
                return rows[idx]->features[static_cast<std::size_t>(split.feature)] <=
                       split.threshold;
            });
        const std::size_t cut = static_cast<std::size_t>(invalid - order.begin());

        tree.nodes[node_id].feature = split.feature;
        tree.nodes[node_id].threshold = split.threshold;
        const int left = build(begin, cut, depth + 1);
        const int right = build(cut, end, depth + 1);
        tree.nodes[node_id].left = left;
        tree.nodes[node_id].right = right;
        return node_id;
    }
};

}  // namespace

void ForestHyper::validate() const {
    if (n_trees == 0) fail(Errc::invalid_config, "forest needs at least one tree");
    if (max_depth < 1) fail(Errc::invalid_config, "max_depth must be >= 1");
    if (min_samples_split < 2) fail(Errc::invalid_config, "min_samples_split must be >= 2");
}

double ForestModel::predict_proba(const FeatureVector& x) const {
    if (!trained()) fail(Errc::untrained_model, "forest has no trees");
    double sum = 0.0;
    for (const Tree& t : trees) sum += t.predict(x.v.data());
    return sum / static_cast<double>(trees.size());
}

ForestModel train_forest(const std::vector<EventRecord>& events, const ForestHyper& hyper,
                         std::uint64_t seed, const std::vector<int>& allowed_features) {
    hyper.validate();
    if (events.size() < hyper.min_samples_split)
        fail(Errc::too_few_samples, "forest training needs >= " +
                                        std::to_string(hyper.min_samples_split) + " events");
    std::size_t pos = 0;
    for (const auto& e : events) pos += e.label == Label::flood ? 1 : 0;
    if (pos == 0 || pos == events.size())
        fail(Errc::single_class, "forest training needs both classes");

    std::vector<int> features = allowed_features;
    if (features.empty())
        for (std::size_t f = 0; f < kFeatureCount; ++f) features.push_back(static_cast<int>(f));
    std::sort(features.begin(), features.end());

    std::vector<const EventRecord*> rows;
    rows.reserve(events.size());
    for (const auto& e : events) rows.push_back(&e);

    const std::size_t mtry = std::max<std::size_t>(
        1, static_cast<std::size_t>(std::sqrt(static_cast<double>(features.size()))));

    ForestModel model;
    model.hyper = hyper;
    model.seed = seed;
    model.trees.resize(hyper.n_trees);
    std::array<double, kFeatureCount> gains{};

    for (std::size_t t = 0; t < hyper.n_trees; ++t) {
        Rng rng(derive_seed(seed, t));
        TreeBuilder builder{rows, features, hyper, mtry, rng, Tree{}, gains,
                            static_cast<double>(events.size()), {}, {}};
        builder.order.resize(events.size());
        for (std::size_t i = 0; i < events.size(); ++i)
            builder.order[i] = static_cast<std::size_t>(rng.uniform_int(events.size()));
        builder.build(0, events.size(), 0);
        model.trees[t] = std::move(builder.tree);
    }

    double total_gain = 0.0;
    for (double g : gains) total_gain += g;
    if (total_gain > 0.0)
        for (std::size_t f = 0; f < kFeatureCount; ++f) model.importance[f] = gains[f] / total_gain;
    return model;
}

}  // namespace haorcast
