#pragma once

#include <filesystem>
#include <functional>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "crf/boost.hpp"
#include "crf/core.hpp"

namespace crf::eval {

// Throws AlignmentError on a length mismatch or empty input.
double accuracy(const std::vector<MovementLabel>& predicted, const std::vector<MovementLabel>& labels);
double accuracy(const std::vector<Prediction>& predicted, const std::vector<MovementLabel>& labels);

struct ConfigId {
    std::string model;      // e.g. "boost", "gen:mock:lexicon", "union"
    std::string data_type;  // e.g. "numeric", "all", "text_only"
    std::string encoder;    // empty when no text encoder is involved
    int p = 1;

    std::string str() const;
    friend auto operator<=>(const ConfigId&, const ConfigId&) = default;
};

struct EvalRecord {
    ConfigId id;
    std::vector<SampleKey> keys;
    std::vector<std::uint8_t> correct;
    double accuracy = 0.0;

    static EvalRecord make(ConfigId id, std::vector<SampleKey> keys, const std::vector<Prediction>& predicted,
                           const std::vector<MovementLabel>& labels);
};

// Fraction of positions where at least one vector holds a 1.
double union_correct(const std::vector<std::vector<std::uint8_t>>& correct);
// Needs at least two records over the same sample keys in the same order.
double union_correct(const std::vector<EvalRecord>& records);
EvalRecord union_record(ConfigId id, const std::vector<EvalRecord>& records);

struct PDPCurve {
    std::string model;  // config the curve was computed for; names the plot file
    std::string feature;
    MovementLabel target = MovementLabel::up;
    std::vector<double> grid;
    std::vector<double> values;
};

using ProbModel = std::function<LabelProbs(const std::vector<double>& row)>;

// For each grid value: set the feature on every row, average the model's
// probability of `target`. Throws SchemaError for an unknown feature.
PDPCurve pdp_compute(const ProbModel& model, const FeatureTable& data, const std::string& feature,
                     const std::vector<double>& grid, MovementLabel target = MovementLabel::up);
PDPCurve pdp_compute(const boost::BoostModel& model, const FeatureTable& data, const std::string& feature,
                     const std::vector<double>& grid, MovementLabel target = MovementLabel::up);

// `points` quantile-spaced values of the column (duplicates removed).
std::vector<double> quantile_grid(std::vector<double> values, std::size_t points = 20);

struct Report {
    std::vector<EvalRecord> records;
    std::map<std::string, boost::ImportanceReport> importances;
    std::vector<PDPCurve> curves;
    Json extra = Json::object();  // free-form, must itself be deterministic
};

// Rows per (model, data type, encoder); columns "Av." then one per lag.
std::string render_table(const std::vector<EvalRecord>& records);
// Deterministic results.json content (records sorted by id, no timestamps).
std::string results_json(const Report& report);
// Writes results.json, tables.md and, when curves exist, pdp/<name>.svg and .csv.
void emit_report(const Report& report, const std::filesystem::path& dir);

void to_json(Json& j, const ConfigId& c);
void from_json(const Json& j, ConfigId& c);
void to_json(Json& j, const PDPCurve& c);

}  // namespace crf::eval
