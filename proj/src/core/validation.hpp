#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "core/ensemble.hpp"
#include "core/synth.hpp"

namespace haorcast {

struct ConfusionMatrix {
    std::size_t tn = 0;
    std::size_t fp = 0;
    std::size_t fn = 0;
    std::size_t tp = 0;

    std::size_t total() const { return tn + fp + fn + tp; }
};

// Divisions by zero surface as missing values, never as NaN.
struct Metrics {
    double accuracy = 0.0;
    std::optional<double> recall;
    std::optional<double> precision;
    std::optional<double> f1;
    std::optional<double> specificity;
};

Metrics metrics_from_matrix(const ConfusionMatrix& m);

// Rank-based AUC with ties counted half: the Mann-Whitney statistic.
double auc_roc(const std::vector<double>& scores, const std::vector<int>& labels);

struct McNemarResult {
    std::size_t b = 0;  // first correct, second wrong
    std::size_t c = 0;  // first wrong, second correct
    double chi2 = 0.0;
    double p = 1.0;
};

// Continuity-corrected McNemar on matched per-event correctness vectors.
McNemarResult mcnemar(const std::vector<bool>& correct_a, const std::vector<bool>& correct_b);

// ---------------------------------------------------------------------------
// Cross-validation harness
// ---------------------------------------------------------------------------

enum class ModelKind : int { ensemble = 0, forest_only, boost_only, logistic };
const char* model_kind_name(ModelKind k);

struct FoldOutcome {
    std::string event_id;
    double p_base = 0.0;
    double p_final = 0.0;
    Label label = Label::dry;
    Label predicted = Label::dry;
    bool correct = false;
};

struct ValidationReport {
    std::string protocol;
    std::uint64_t seed = 0;
    bool layers = false;
    ModelKind kind = ModelKind::ensemble;
    ConfusionMatrix matrix;
    Metrics metrics;
    std::optional<double> auc;
    std::vector<FoldOutcome> per_fold;

    // kfold / holdout extras
    std::vector<double> fold_accuracies;
    std::optional<double> fold_accuracy_sd;
    bool uncertain = false;  // fold spread above the operational bound
};

// Called once per fold with the held-out ids and the augmented training
// split actually used; lets callers audit the leakage guarantee.
using FoldObserver = std::function<void(std::size_t fold_index,
                                        const std::vector<std::string>& held_out_ids,
                                        const std::vector<EventRecord>& augmented_train)>;

struct ValidationOptions {
    EnsembleHyper hyper = EnsembleHyper::full();
    AugmentConfig augment;
    bool with_layers = false;
    ModelKind kind = ModelKind::ensemble;
    std::vector<int> allowed_features;  // empty = all
    std::uint64_t seed = 0;
    unsigned threads = 0;  // 0 = hardware concurrency
    std::size_t kfold_k = 5;
    std::size_t holdout_seeds = 5;
    double holdout_test_fraction = 0.35;
    double uncertain_sd_bound = 0.08;
    FoldObserver observer;
};

// One model per event, trained on the rest with within-fold augmentation;
// classification at 0.40.
ValidationReport loocv(const std::vector<EventRecord>& events, const ValidationOptions& opts);

// Stratified k-fold with per-fold accuracies and their standard deviation.
ValidationReport kfold(const std::vector<EventRecord>& events, const ValidationOptions& opts);

// Stratified holdout (test fraction per class, floored) repeated across
// holdout_seeds derived seeds; matrix and AUC pool all test predictions.
ValidationReport holdout(const std::vector<EventRecord>& events, const ValidationOptions& opts);

// Dispatch on "loocv" | "kfold:K" | "holdout".
ValidationReport validate_protocol(const std::string& protocol,
                                   const std::vector<EventRecord>& events,
                                   const ValidationOptions& opts);

std::string render_report(const ValidationReport& report);

// ---------------------------------------------------------------------------
// Ablation
// ---------------------------------------------------------------------------

struct AblationSpec {
    std::string name;
    std::vector<int> removed_features;  // canonical indices, proper subset
};

// Lines "name: feature,feature,..."; '#' comments allowed.
std::vector<AblationSpec> parse_ablation_specs(const std::string& text, const std::string& origin);

struct AblationResult {
    AblationSpec spec;
    ValidationReport report;
    double accuracy_delta = 0.0;  // vs baseline
};

// Baseline (all features) plus one LOOCV per spec, with removed features
// zeroed and excluded from split candidates.
std::vector<AblationResult> run_ablation(const std::vector<EventRecord>& events,
                                         const std::vector<AblationSpec>& specs,
                                         const ValidationOptions& opts);

std::string render_ablation(const std::vector<AblationResult>& results);

// ---------------------------------------------------------------------------
// Baseline comparison
// ---------------------------------------------------------------------------

struct BaselineRow {
    ModelKind kind;
    ValidationReport report;
    std::optional<McNemarResult> vs_ensemble;
};

// LOOCV for logistic regression, forest-only, boost-only and the ensemble on
// matched folds, with McNemar against the ensemble.
std::vector<BaselineRow> baseline_compare(const std::vector<EventRecord>& events,
                                          const ValidationOptions& opts);

std::string render_baseline_comparison(const std::vector<BaselineRow>& rows);

}  // namespace haorcast
