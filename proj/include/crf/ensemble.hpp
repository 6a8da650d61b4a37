#pragma once

#include <functional>
#include <map>
#include <string>
#include <vector>

#include "crf/boost.hpp"
#include "crf/core.hpp"
#include "crf/gen.hpp"

namespace crf::ensemble {

// One model's estimates for a keyed set of samples.
struct EstimateColumn {
    std::string source;
    std::vector<SampleKey> keys;
    std::vector<MovementLabel> labels;
    std::vector<double> probability;  // probability of the chosen label

    std::size_t size() const noexcept { return labels.size(); }
    // Throws on length mismatch or a probability outside [0,1].
    void validate() const;

    static EstimateColumn from_predictions(std::string source, std::vector<SampleKey> keys,
                                           const std::vector<Prediction>& predictions);
    // Rows reordered to `keys`; AlignmentError when a key is missing.
    EstimateColumn aligned_to(const std::vector<SampleKey>& keys) const;
};

void to_json(Json& j, const EstimateColumn& c);
void from_json(const Json& j, EstimateColumn& c);

// Appends <source>_est_down, <source>_est_same, <source>_est_up (one-hot) and
// <source>_est_prob under the estimate group. Existing columns are untouched.
FeatureTable augment_features(const FeatureTable& features, const EstimateColumn& estimate);

// The 8 estimate columns of two sources side by side.
FeatureTable estimate_table(const EstimateColumn& a, const EstimateColumn& b, const std::vector<MovementLabel>& labels);

// Meta boosted-tree model over the two estimate sets only.
boost::BoostModel stack_estimates(const EstimateColumn& train_a, const EstimateColumn& train_b,
                                  const std::vector<MovementLabel>& train_labels, const EstimateColumn& val_a,
                                  const EstimateColumn& val_b, const std::vector<MovementLabel>& val_labels,
                                  const boost::BoostParams& params = {});

// Fold id per row: distinct target quarters sorted and cut into `folds`
// contiguous blocks of near-equal size.
std::vector<std::size_t> temporal_folds(const std::vector<SampleKey>& keys, std::size_t folds = 5);

// Out-of-fold predictions: for each fold, fit on the other folds and predict
// the held-out rows. fit_predict(train_rows, heldout_rows) returns one
// prediction per held-out row.
using FitPredict = std::function<std::vector<Prediction>(const std::vector<std::size_t>& train_rows,
                                                         const std::vector<std::size_t>& heldout_rows)>;
std::vector<Prediction> cross_fit(const std::vector<SampleKey>& keys, const FitPredict& fit_predict,
                                  std::size_t folds = 5);

// Cross-fitted boosted-tree estimates for the train rows; each fold model
// early-stops on `val`.
std::vector<Prediction> oof_boost(const FeatureTable& train, const FeatureTable& val, const boost::BoostParams& params,
                                  std::size_t folds = 5);

FeatureTable select_rows(const FeatureTable& table, const std::vector<std::size_t>& rows);

// Estimates keyed for prompt injection.
std::map<SampleKey, gen::InjectedEstimate> injection_map(const EstimateColumn& column);

}  // namespace crf::ensemble
