#pragma once

#include <filesystem>
#include <optional>
#include <string>
#include <vector>

#include "crf/boost.hpp"
#include "crf/dataset.hpp"
#include "crf/encoders.hpp"
#include "crf/evaluation.hpp"
#include "crf/ingestion.hpp"
#include "crf/synthetic.hpp"

namespace crf::pipeline {

// A flat "key = value" experiment file. Values are JSON; a bare word is read
// as a string. '#' starts a comment line. Relative paths resolve against the
// file's directory.
//
// Model choices: "boost", "gen:<client>", "ensemble:augment|stack|inject".
struct ExperimentConfig {
    ingest::SourcePaths sources;
    std::optional<synth::SyntheticParams> synthetic;  // generate the sources instead of reading them
    std::vector<int> p{1};
    std::uint64_t seed = 7;
    std::optional<dataset::SplitSpec> split;  // default: standard, or the synthetic layout
    std::vector<enc::EncoderConfig> encoders;
    std::string model = "boost";
    std::vector<std::string> data_types{"numeric", "all", "text_only"};
    std::string gen_client = "mock";  // auxiliary client for ensemble modes
    std::filesystem::path prompt_template;
    std::size_t gen_context = 0;  // 0: the client's own context size
    boost::BoostParams boost;
    std::size_t folds = 5;
    std::vector<std::string> pdp_features{"auto"};
    std::size_t pdp_grid = 20;
    std::filesystem::path out = "out";
    bool cache = true;
    std::size_t threads = 0;

    // Throws ConfigError: p outside 1..4, missing source files, unknown model...
    void validate() const;
    Json to_json() const;
};

ExperimentConfig parse_config(std::string_view text, const std::filesystem::path& base_dir = ".");
ExperimentConfig load_config(const std::filesystem::path& path);

struct RunSummary {
    std::size_t cache_hits = 0;
    std::size_t cache_misses = 0;
    std::vector<std::string> stages;  // "<stage>:<hit|miss>" in execution order
    std::filesystem::path report_dir;
};

// ingest -> build -> featurize -> train/predict -> evaluate. Each stage's
// output lives under out/cache/<stage>-<hash of its inputs>; an unchanged
// rerun hits every stage. The report is copied to out/report.
RunSummary run_pipeline(const ExperimentConfig& config);

// ---------------------------------------------------------------------------
// Shared artifact helpers (also used by the CLI)
// ---------------------------------------------------------------------------

struct KeyedPredictions {
    std::vector<SampleKey> keys;
    std::vector<Prediction> predictions;
};

void write_predictions(const std::filesystem::path& path, const KeyedPredictions& preds);
KeyedPredictions read_predictions(const std::filesystem::path& path);

// Train-only encoder fit over the distinct filings in the train windows.
std::unique_ptr<enc::TextEncoder> fit_encoder(const enc::EncoderConfig& config, const std::vector<Sample>& train,
                                              std::uint64_t seed);

// Text features for every distinct (company, quarter) filing in the samples.
using TextCache = std::map<ingest::CompanyQuarter, std::vector<double>>;
TextCache encode_texts(const enc::TextEncoder& encoder, const std::vector<std::vector<Sample>*>& splits,
                       std::size_t threads = 0);
void write_text_cache(const std::filesystem::path& path, const TextCache& cache);
TextCache read_text_cache(const std::filesystem::path& path);
dataset::TextFeatureSource text_source(const std::string& prefix, const TextCache& cache);

void write_table(const std::filesystem::path& path, const FeatureTable& table);
FeatureTable read_table(const std::filesystem::path& path);

}  // namespace crf::pipeline
