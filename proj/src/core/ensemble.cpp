#include "core/ensemble.hpp"

#include <cmath>
#include <sstream>

#include "core/error.hpp"
#include "core/rng.hpp"
#include "core/textio.hpp"

namespace haorcast {

namespace {
constexpr const char* kMagic = "haorcast-model";
constexpr int kSchemaVersion = 1;
}  // namespace

EnsembleModel train_ensemble(const std::vector<EventRecord>& events, const EnsembleHyper& hyper,
                             std::uint64_t seed, const std::vector<int>& allowed_features) {
    EnsembleModel model;
    model.forest = train_forest(events, hyper.forest, derive_seed(seed, 101), allowed_features);
    model.boost = train_boost(events, hyper.boost, derive_seed(seed, 202), allowed_features);
    return model;
}

double predict_proba(const EnsembleModel& model, const FeatureVector& x) {
    if (!model.trained()) fail(Errc::untrained_model, "ensemble is not trained");
    x.validate();
    return model.w_forest * model.forest.predict_proba(x) +
           model.w_boost * model.boost.predict_proba(x);
}

std::array<double, kFeatureCount> merged_importance(const EnsembleModel& model) {
    if (!model.trained()) fail(Errc::untrained_model, "ensemble is not trained");
    std::array<double, kFeatureCount> merged{};
    double total = 0.0;
    for (std::size_t f = 0; f < kFeatureCount; ++f) {
        merged[f] = model.w_forest * model.forest.importance[f] +
                    model.w_boost * model.boost.importance[f];
        total += merged[f];
    }
    if (total > 0.0)
        for (auto& v : merged) v /= total;
    return merged;
}

namespace {

void render_trees(std::ostringstream& out, const std::vector<Tree>& trees) {
    for (std::size_t t = 0; t < trees.size(); ++t) {
        out << "tree " << t << ' ' << trees[t].nodes.size() << '\n';
        for (const TreeNode& n : trees[t].nodes)
            out << n.feature << ' ' << format_double(n.threshold) << ' ' << n.left << ' '
                << n.right << ' ' << format_double(n.value) << '\n';
    }
}

std::vector<Tree> parse_trees(std::istringstream& in, std::size_t count, const std::string& origin) {
    std::vector<Tree> trees(count);
    for (std::size_t t = 0; t < count; ++t) {
        std::string tag;
        std::size_t idx = 0, n_nodes = 0;
        if (!(in >> tag >> idx >> n_nodes) || tag != "tree" || idx != t)
            fail(Errc::parse_error, origin + ": malformed tree header");
        trees[t].nodes.resize(n_nodes);
        for (TreeNode& node : trees[t].nodes) {
            std::string thr, val;
            if (!(in >> node.feature >> thr >> node.left >> node.right >> val))
                fail(Errc::parse_error, origin + ": malformed tree node");
            node.threshold = parse_double(thr, "node threshold");
            node.value = parse_double(val, "node value");
            if (node.feature >= static_cast<int>(kFeatureCount))
                fail(Errc::parse_error, origin + ": node feature out of range");
            if (!node.is_leaf() &&
                (node.left < 0 || node.right < 0 || node.left >= static_cast<int>(n_nodes) ||
                 node.right >= static_cast<int>(n_nodes)))
                fail(Errc::parse_error, origin + ": node child out of range");
        }
    }
    return trees;
}

}  // namespace

std::string render_model(const EnsembleModel& model) {
    if (!model.trained()) fail(Errc::untrained_model, "cannot save an untrained ensemble");
    std::ostringstream out;
    out << kMagic << '\n';
    out << "schema " << kSchemaVersion << '\n';
    out << "features " << kFeatureCount << '\n';
    out << "w_forest " << format_double(model.w_forest) << '\n';
    out << "w_boost " << format_double(model.w_boost) << '\n';

    out << "forest trees " << model.forest.trees.size() << " max_depth "
        << model.forest.hyper.max_depth << " min_samples_split "
        << model.forest.hyper.min_samples_split << " seed " << model.forest.seed << '\n';
    out << "forest_importance";
    for (double v : model.forest.importance) out << ' ' << format_double(v);
    out << '\n';
    render_trees(out, model.forest.trees);

    out << "boost stages " << model.boost.trees.size() << " max_depth "
        << model.boost.hyper.max_depth << " learning_rate "
        << format_double(model.boost.hyper.learning_rate) << " subsample "
        << format_double(model.boost.hyper.subsample) << " colsample "
        << format_double(model.boost.hyper.colsample) << " lambda "
        << format_double(model.boost.hyper.lambda) << " min_child_weight "
        << format_double(model.boost.hyper.min_child_weight) << " base_score "
        << format_double(model.boost.base_score) << " seed " << model.boost.seed << '\n';
    out << "boost_importance";
    for (double v : model.boost.importance) out << ' ' << format_double(v);
    out << '\n';
    render_trees(out, model.boost.trees);
    return out.str();
}

EnsembleModel parse_model(const std::string& text, const std::string& origin) {
    std::istringstream in(text);
    std::string token;
    if (!(in >> token) || token != kMagic)
        fail(Errc::parse_error, origin + ": not a haorcast model file");
    int schema = 0;
    if (!(in >> token >> schema) || token != "schema" || schema != kSchemaVersion)
        fail(Errc::parse_error, origin + ": unsupported model schema");
    std::size_t features = 0;
    if (!(in >> token >> features) || token != "features" || features != kFeatureCount)
        fail(Errc::parse_error, origin + ": feature count mismatch");

    EnsembleModel model;
    std::string num;
    if (!(in >> token >> num) || token != "w_forest")
        fail(Errc::parse_error, origin + ": missing w_forest");
    model.w_forest = parse_double(num, "w_forest");
    if (!(in >> token >> num) || token != "w_boost")
        fail(Errc::parse_error, origin + ": missing w_boost");
    model.w_boost = parse_double(num, "w_boost");

    std::size_t n_trees = 0;
    if (!(in >> token) || token != "forest") fail(Errc::parse_error, origin + ": missing forest");
    in >> token >> n_trees;
    in >> token >> model.forest.hyper.max_depth;
    in >> token >> model.forest.hyper.min_samples_split;
    in >> token >> model.forest.seed;
    model.forest.hyper.n_trees = n_trees;
    if (!(in >> token) || token != "forest_importance")
        fail(Errc::parse_error, origin + ": missing forest importance");
    for (auto& v : model.forest.importance) {
        in >> num;
        v = parse_double(num, "forest importance");
    }
    model.forest.trees = parse_trees(in, n_trees, origin);

    std::size_t n_stages = 0;
    if (!(in >> token) || token != "boost") fail(Errc::parse_error, origin + ": missing boost");
    in >> token >> n_stages;
    in >> token >> model.boost.hyper.max_depth;
    in >> token >> num;
    model.boost.hyper.learning_rate = parse_double(num, "learning_rate");
    in >> token >> num;
    model.boost.hyper.subsample = parse_double(num, "subsample");
    in >> token >> num;
    model.boost.hyper.colsample = parse_double(num, "colsample");
    in >> token >> num;
    model.boost.hyper.lambda = parse_double(num, "lambda");
    in >> token >> num;
    model.boost.hyper.min_child_weight = parse_double(num, "min_child_weight");
    in >> token >> num;
    model.boost.base_score = parse_double(num, "base_score");
    in >> token >> model.boost.seed;
    model.boost.hyper.n_stages = n_stages;
    if (!(in >> token) || token != "boost_importance")
        fail(Errc::parse_error, origin + ": missing boost importance");
    for (auto& v : model.boost.importance) {
        in >> num;
        v = parse_double(num, "boost importance");
    }
    model.boost.trees = parse_trees(in, n_stages, origin);
    model.boost.fitted = true;

    if (!in) fail(Errc::parse_error, origin + ": truncated model file");
    return model;
}

void save_model(const EnsembleModel& model, const std::string& path) {
    write_text_file(path, render_model(model));
}

EnsembleModel load_model(const std::string& path) {
    return parse_model(read_text_file(path), path);
}

}  // namespace haorcast
