#pragma once

#include <cstdint>
#include <map>
#include <vector>

#include "crf/core.hpp"

namespace crf::boost {

struct BoostParams {
    std::size_t trees = 200;  // boosting rounds; each round adds one tree per class
    std::size_t depth = 6;
    double learning_rate = 0.1;
    std::size_t patience = 20;  // rounds without a validation-accuracy gain before stopping
    double lambda = 1.0;        // L2 penalty on leaf weights
    double min_child_weight = 1.0;
    double gamma = 0.0;  // minimum gain to split
    double colsample = 1.0;
    std::uint64_t seed = 0;
    std::size_t threads = 0;  // 0: hardware concurrency (results do not depend on it)
};

struct TreeNode {
    int feature = -1;  // -1 marks a leaf
    double threshold = 0.0;
    int left = -1;
    int right = -1;
    double value = 0.0;
    double gain = 0.0;
};

struct Tree {
    std::vector<TreeNode> nodes;
    double predict(const std::vector<double>& row) const;
};

class BoostModel {
public:
    const FeatureSchema& schema() const noexcept { return schema_; }
    const BoostParams& params() const noexcept { return params_; }
    std::size_t rounds() const noexcept { return rounds_.size(); }
    const std::vector<double>& val_accuracy_history() const noexcept { return val_history_; }
    double best_val_accuracy() const noexcept { return best_val_; }

    // Raw class scores before the softmax.
    LabelProbs margins(const std::vector<double>& row) const;

    // Total split gain per feature, normalized to sum 1.
    std::vector<double> feature_importance() const;

    friend BoostModel train_boost(const FeatureTable&, const FeatureTable&, const BoostParams&);
    friend void to_json(Json& j, const BoostModel& m);
    friend BoostModel boost_from_json(const Json& j);

private:
    FeatureSchema schema_;
    BoostParams params_;
    std::vector<std::array<Tree, 3>> rounds_;
    std::vector<double> val_history_;
    double best_val_ = 0.0;
};

// Multiclass softmax boosting with exact greedy splits and second-order gain.
// Training stops early once validation accuracy has not improved for
// `patience` rounds; the model keeps the best round prefix.
BoostModel train_boost(const FeatureTable& train, const FeatureTable& val, const BoostParams& params = {});

Prediction predict_boost(const BoostModel& model, const FeatureVector& row);
std::vector<Prediction> predict_boost(const BoostModel& model, const FeatureTable& table);

void to_json(Json& j, const BoostModel& m);
BoostModel boost_from_json(const Json& j);

void to_json(Json& j, const BoostParams& p);
void from_json(const Json& j, BoostParams& p);

// Strips a trailing `_l<digits>` lag suffix.
std::string base_feature_name(std::string_view name);

struct ImportanceReport {
    std::map<std::string, double> features;  // keyed by base feature name
    std::map<Modality, double> groups;       // every modality present, zero if unused
    std::size_t models = 0;
};

// Per-model importances normalized to 1, then summed per base feature and per
// modality and averaged over models. All schemas must describe the same base
// features with the same groups.
ImportanceReport importance_report(const std::vector<std::pair<FeatureSchema, std::vector<double>>>& models);
ImportanceReport importance_report(const std::vector<const BoostModel*>& models);

void to_json(Json& j, const ImportanceReport& r);

}  // namespace crf::boost
