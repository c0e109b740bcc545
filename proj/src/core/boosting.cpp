#include "core/boosting.hpp"

#include <algorithm>
#include <cmath>

#include "core/error.hpp"
#include "core/rng.hpp"

namespace haorcast {

double sigmoid(double z) { return 1.0 / (1.0 + std::exp(-z)); }

void BoostHyper::validate() const {
    if (n_stages == 0) fail(Errc::invalid_config, "boosting needs at least one stage");
    if (learning_rate <= 0.0) fail(Errc::invalid_config, "learning rate must be > 0");
    if (max_depth < 1) fail(Errc::invalid_config, "max_depth must be >= 1");
    if (subsample <= 0.0 || subsample > 1.0) fail(Errc::invalid_config, "subsample outside (0, 1]");
    if (colsample <= 0.0 || colsample > 1.0) fail(Errc::invalid_config, "colsample outside (0, 1]");
    if (lambda < 0.0) fail(Errc::invalid_config, "lambda must be >= 0");
}

double BoostModel::predict_proba(const FeatureVector& x) const {
    if (!trained()) fail(Errc::untrained_model, "boosting model is not fitted");
    double score = base_score;
    for (const Tree& t : trees) score += hyper.learning_rate * t.predict(x.v.data());
    return sigmoid(score);
}

namespace {

struct StageBuilder {
    const std::vector<const EventRecord*>& rows;
    const std::vector<double>& grad;
    const std::vector<double>& hess;
    const BoostHyper& hyper;
    const std::vector<int>& stage_features;  // column subsample, ascending
    Tree tree;
    std::array<double, kFeatureCount>& gain_acc;

    std::vector<std::size_t> order;  // indices into rows for the current node
    std::vector<std::pair<double, std::size_t>> scratch;

    double leaf_weight(double g, double h) const { return -g / (h + hyper.lambda); }

    // XGBoost-style gain, gamma = 0.
    double split_gain(double gl, double hl, double gr, double hr) const {
        const double parent = (gl + gr) * (gl + gr) / (hl + hr + hyper.lambda);
        const double left = gl * gl / (hl + hyper.lambda);
        const double right = gr * gr / (hr + hyper.lambda);
        return 0.5 * (left + right - parent);
    }

    int build(std::size_t begin, std::size_t end, int depth) {
        double g_sum = 0.0, h_sum = 0.0;
        for (std::size_t i = begin; i < end; ++i) {
            g_sum += grad[order[i]];
            h_sum += hess[order[i]];
        }

        const int node_id = static_cast<int>(tree.nodes.size());
        tree.nodes.emplace_back();

        bool found = false;
        int best_feature = -1;
        double best_threshold = 0.0, best_gain = 0.0;
        if (depth < hyper.max_depth) {
            for (int f : stage_features) {
                scratch.clear();
                for (std::size_t i = begin; i < end; ++i)
                    scratch.emplace_back(
                        rows[order[i]]->features[static_cast<std::size_t>(f)], order[i]);
                std::sort(scratch.begin(), scratch.end(),
                          [](const auto& a, const auto& b) { return a.first < b.first; });
                if (scratch.empty() || scratch.front().first == scratch.back().first) continue;

                double gl = 0.0, hl = 0.0;
                for (std::size_t i = 0; i + 1 < scratch.size(); ++i) {
                    gl += grad[scratch[i].second];
                    hl += hess[scratch[i].second];
                    if (scratch[i].first == scratch[i + 1].first) continue;
                    const double hr = h_sum - hl;
                    if (hl < hyper.min_child_weight || hr < hyper.min_child_weight) continue;
                    double mid;
                    if (!split_midpoint(scratch[i].first, scratch[i + 1].first, mid)) continue;
                    const double gain = split_gain(gl, hl, g_sum - gl, hr);
                    if (gain <= 0.0) continue;
                    if (!found || gain > best_gain) {
                        found = true;
                        best_feature = f;
                        best_threshold = mid;
                        best_gain = gain;
                    }
                }
            }
        }

        if (!found) {
            tree.nodes[node_id].value = leaf_weight(g_sum, h_sum);
            return node_id;
        }

        gain_acc[static_cast<std::size_t>(best_feature)] += best_gain;

        const auto pivot = std::stable_partition(
            order.begin() + static_cast<std::ptrdiff_t>(begin),
            order.begin() + static_cast<std::ptrdiff_t>(end), [&](std::size_t idx) {
                return rows[idx]->features[static_cast<std::size_t>(best_feature)] <=
                       best_threshold;
            });
        const std::size_t cut = static_cast<std::size_t>(pivot - order.begin());

        tree.nodes[node_id].feature = best_feature;
        tree.nodes[node_id].threshold = best_threshold;
        const int left = build(begin, cut, depth + 1);
        const int right = build(cut, end, depth + 1);
        tree.nodes[node_id].left = left;
        tree.nodes[node_id].right = right;
        return node_id;
    }
};

}  // namespace

BoostModel train_boost(const std::vector<EventRecord>& events, const BoostHyper& hyper,
                       std::uint64_t seed, const std::vector<int>& allowed_features) {
    hyper.validate();
    if (events.size() < 2) fail(Errc::too_few_samples, "boosting needs >= 2 events");
    std::size_t pos = 0;
    for (const auto& e : events) pos += e.label == Label::flood ? 1 : 0;
    if (pos == 0 || pos == events.size())
        fail(Errc::single_class, "boosting training needs both classes");

    std::vector<int> features = allowed_features;
    if (features.empty())
        for (std::size_t f = 0; f < kFeatureCount; ++f) features.push_back(static_cast<int>(f));
    std::sort(features.begin(), features.end());

    std::vector<const EventRecord*> rows;
    rows.reserve(events.size());
    for (const auto& e : events) rows.push_back(&e);
    const std::size_t n = events.size();

    BoostModel model;
    model.hyper = hyper;
    model.seed = seed;
    const double prior = static_cast<double>(pos) / static_cast<double>(n);
    model.base_score = std::log(prior / (1.0 - prior));
    model.trees.reserve(hyper.n_stages);

    std::vector<double> score(n, model.base_score);
    std::vector<double> grad(n), hess(n);
    std::array<double, kFeatureCount> gains{};

    const std::size_t n_rows =
        std::max<std::size_t>(1, static_cast<std::size_t>(hyper.subsample * static_cast<double>(n)));
    const std::size_t n_cols = std::max<std::size_t>(
        1, static_cast<std::size_t>(hyper.colsample * static_cast<double>(features.size())));

    for (std::size_t stage = 0; stage < hyper.n_stages; ++stage) {
        Rng rng(derive_seed(seed, stage));

        for (std::size_t i = 0; i < n; ++i) {
            const double p = sigmoid(score[i]);
            const double y = rows[i]->label == Label::flood ? 1.0 : 0.0;
            grad[i] = p - y;
            hess[i] = p * (1.0 - p);
        }

        std::vector<std::size_t> row_take = rng.sample_without_replacement(n, n_rows);
        std::sort(row_take.begin(), row_take.end());
        std::vector<std::size_t> col_take =
            rng.sample_without_replacement(features.size(), n_cols);
        std::vector<int> stage_features;
        stage_features.reserve(col_take.size());
        for (std::size_t c : col_take) stage_features.push_back(features[c]);
        std::sort(stage_features.begin(), stage_features.end());

        StageBuilder builder{rows, grad, hess, hyper, stage_features, Tree{}, gains, {}, {}};
        builder.order = std::move(row_take);
        builder.build(0, builder.order.size(), 0);

        // A stage with no admissible split contributes nothing; predictions
        // on constant features stay at the training prior.
        if (builder.tree.nodes.size() == 1) builder.tree.nodes[0].value = 0.0;

        for (std::size_t i = 0; i < n; ++i)
            score[i] += hyper.learning_rate * builder.tree.predict(rows[i]->features.v.data());
        model.trees.push_back(std::move(builder.tree));
    }

    double total_gain = 0.0;
    for (double g : gains) total_gain += g;
    if (total_gain > 0.0)
        for (std::size_t f = 0; f < kFeatureCount; ++f) model.importance[f] = gains[f] / total_gain;
    model.fitted = true;
    return model;
}

}  // namespace haorcast
