#include "core/logistic.hpp"

#include <cmath>

#include "core/boosting.hpp"  // sigmoid
#include "core/error.hpp"

namespace haorcast {

double LogisticModel::predict_proba(const FeatureVector& x) const {
    if (!fitted) fail(Errc::untrained_model, "logistic model is not fitted");
    double z = bias;
    for (std::size_t f = 0; f < kFeatureCount; ++f) {
        const double sd = feat_sd[f];
        const double standardized = sd > 0.0 ? (x[f] - feat_mean[f]) / sd : 0.0;
        z += weights[f] * standardized;
    }
    return sigmoid(z);
}

LogisticModel train_logistic(const std::vector<EventRecord>& events, const LogisticHyper& hyper) {
    if (events.size() < 2) fail(Errc::too_few_samples, "logistic training needs >= 2 events");
    std::size_t pos = 0;
    for (const auto& e : events) pos += e.label == Label::flood ? 1 : 0;
    if (pos == 0 || pos == events.size())
        fail(Errc::single_class, "logistic training needs both classes");

    const std::size_t n = events.size();
    LogisticModel m;
    for (const auto& e : events)
        for (std::size_t f = 0; f < kFeatureCount; ++f) m.feat_mean[f] += e.features[f];
    for (auto& v : m.feat_mean) v /= static_cast<double>(n);
    for (const auto& e : events)
        for (std::size_t f = 0; f < kFeatureCount; ++f) {
            const double d = e.features[f] - m.feat_mean[f];
            m.feat_sd[f] += d * d;
        }
    for (auto& v : m.feat_sd) v = std::sqrt(v / static_cast<double>(n));

    std::vector<std::array<double, kFeatureCount>> x(n);
    std::vector<double> y(n);
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t f = 0; f < kFeatureCount; ++f)
            x[i][f] = m.feat_sd[f] > 0.0 ? (events[i].features[f] - m.feat_mean[f]) / m.feat_sd[f]
                                         : 0.0;
        y[i] = events[i].label == Label::flood ? 1.0 : 0.0;
    }

    for (std::size_t step = 0; step < hyper.steps; ++step) {
        std::array<double, kFeatureCount> grad_w{};
        double grad_b = 0.0;
        for (std::size_t i = 0; i < n; ++i) {
            double z = m.bias;
            for (std::size_t f = 0; f < kFeatureCount; ++f) z += m.weights[f] * x[i][f];
            const double err = sigmoid(z) - y[i];
            for (std::size_t f = 0; f < kFeatureCount; ++f) grad_w[f] += err * x[i][f];
            grad_b += err;
        }
        for (std::size_t f = 0; f < kFeatureCount; ++f)
            m.weights[f] -= hyper.step_size * grad_w[f] / static_cast<double>(n);
        m.bias -= hyper.step_size * grad_b / static_cast<double>(n);
    }
    m.fitted = true;
    return m;
}

}  // namespace haorcast
