#pragma once

#include <filesystem>
#include <functional>
#include <map>
#include <memory>
#include <string>
#include <vector>

#include "crf/core.hpp"
#include "crf/ingestion.hpp"

namespace crf::dataset {

struct SplitSpec {
    Date start;
    Date train_end;
    Date val_end;
    Date test_end;

    // Throws ConfigError unless start < train_end < val_end < test_end.
    void validate() const;
    // 1994-01-01 .. 2012-12-31 train, .. 2014-12-31 val, .. 2016-12-31 test.
    static SplitSpec standard();
};

void to_json(Json& j, const SplitSpec& s);
void from_json(const Json& j, SplitSpec& s);

struct WindowStats {
    std::size_t candidates = 0;  // rated company-quarters considered as targets
    std::size_t built = 0;
    std::map<std::string, std::size_t> excluded;  // reason -> count
};

// One sample per (company, t) whose t-1..t-p quarters are complete in all four
// sources and which has a rating at t. Output is sorted by (company, quarter).
std::vector<Sample> build_windows(const ingest::AlignedSources& sources, int p, WindowStats* stats = nullptr);

struct Splits {
    std::vector<Sample> train;
    std::vector<Sample> val;
    std::vector<Sample> test;
};

// Assigns by the last day of the target quarter; targets outside [start, test_end] are dropped.
Splits temporal_split(const std::vector<Sample>& samples, const SplitSpec& spec);

std::map<MovementLabel, std::size_t> class_counts(const std::vector<Sample>& samples);

// Undersamples every class to the minority count. Throws EmptyClass when a label is absent.
std::vector<Sample> balance_classes(const std::vector<Sample>& samples, std::uint64_t seed);

// ---------------------------------------------------------------------------
// Min-max normalization of fundamentals and macro series
// ---------------------------------------------------------------------------

struct MinMax {
    double min = 0.0;
    double max = 0.0;
};

struct NormalizationParams {
    std::map<std::string, MinMax> fundamental;
    std::map<std::string, MinMax> macro;

    static double apply(const MinMax& mm, double x) {
        const double range = mm.max - mm.min;
        return range > 0.0 ? (x - mm.min) / range : 0.0;
    }
};

void to_json(Json& j, const NormalizationParams& n);
void from_json(const Json& j, NormalizationParams& n);

// Pools every lag of every train sample per feature.
NormalizationParams fit_normalizer(const std::vector<Sample>& train);
// Out-of-range values on held-out samples are kept, not clipped.
std::vector<Sample> apply_normalizer(const NormalizationParams& params, std::vector<Sample> samples);

// ---------------------------------------------------------------------------
// Truncation
// ---------------------------------------------------------------------------

struct TokenSpan {
    std::size_t offset = 0;
    std::size_t length = 0;
};

class Tokenizer {
public:
    virtual ~Tokenizer() = default;
    virtual std::vector<TokenSpan> tokenize(std::string_view text) const = 0;
    std::size_t count(std::string_view text) const { return tokenize(text).size(); }
};

// Maximal runs of non-whitespace bytes.
class WhitespaceTokenizer final : public Tokenizer {
public:
    std::vector<TokenSpan> tokenize(std::string_view text) const override;
};

const Tokenizer& default_tokenizer();

enum class TruncateUnit { tokens, chars };

// Prefix of at most `max_units` tokens (per `tokenizer`) or UTF-8 code points.
std::string truncate_text(std::string_view doc, std::size_t max_units, TruncateUnit unit,
                          const Tokenizer& tokenizer = default_tokenizer());

// ---------------------------------------------------------------------------
// Bundles
// ---------------------------------------------------------------------------

struct SplitStats {
    std::map<MovementLabel, std::size_t> before_balance;
    std::map<MovementLabel, std::size_t> after_balance;
};

struct SameScoreStats {
    double per_company = 0.0;  // share of companies whose rating never changes
    double per_quarter = 0.0;  // share of consecutive rated quarter pairs labelled "same"
};

struct DatasetBundle {
    int p = 1;
    std::uint64_t seed = 0;
    Splits splits;
    NormalizationParams norm;
    WindowStats windows;
    std::map<std::string, SplitStats> split_stats;
    SameScoreStats same_score;
};

SameScoreStats same_score_stats(const std::map<ingest::CompanyQuarter, Rating>& ratings);

// windows -> temporal split -> per-split balancing -> train-fitted normalization.
DatasetBundle build_dataset(const ingest::AlignedSources& sources, int p, const SplitSpec& spec, std::uint64_t seed);

// train.jsonl, val.jsonl, test.jsonl and stats.json in `dir`.
void write_bundle(const DatasetBundle& bundle, const std::filesystem::path& dir);
DatasetBundle read_bundle(const std::filesystem::path& dir);

std::vector<Sample> read_samples(const std::filesystem::path& path);
void write_samples(const std::vector<Sample>& samples, const std::filesystem::path& path);

// ---------------------------------------------------------------------------
// Feature assembly
// ---------------------------------------------------------------------------

// Data-type configurations of the ablation grid.
enum class DataType { numeric, ratings_only, all, text_only };

std::string_view to_string(DataType t) noexcept;
DataType parse_data_type(std::string_view s);

// Text features of one document (the filing of `company` in `quarter`).
using TextFeatureFn = std::function<std::vector<double>(const std::string& company, const QuarterId& quarter,
                                                         const std::string& text)>;

struct TextFeatureSource {
    std::string prefix;  // feature name prefix, e.g. "lm"
    std::size_t dim = 0;
    TextFeatureFn features;
};

// Lagged feature columns named "<base>_l<i>", i = 1 for the most recent quarter.
FeatureTable assemble_features(const std::vector<Sample>& samples, DataType type,
                               const TextFeatureSource* text = nullptr);

// Numeric value used for a categorical industry code.
double code_value(const std::string& code);

}  // namespace crf::dataset
