#pragma once

#include <cstdint>
#include <filesystem>
#include <string>
#include <vector>

#include "crf/core.hpp"
#include "crf/dataset.hpp"
#include "crf/ingestion.hpp"

namespace crf::synth {

struct SyntheticParams {
    std::uint64_t seed = 1;
    std::size_t n_companies = 100;
    std::size_t n_quarters = 48;
    QuarterId start{2005, 1};
    // Probability that a filing's signal sentences reflect the next quarter's
    // true movement (otherwise the signal class is drawn uniformly).
    double strength = 1.0;
    double p_up = 0.2;
    double p_down = 0.2;
    std::size_t topics = 150;
    std::size_t filler_sentences = 12;
    std::size_t signal_sentences = 3;
    double missing_fundamentals = 0.02;
    std::vector<std::string> macro_series = {"unemployment_rate", "fed_funds_rate", "usd_eur"};
};

struct SyntheticCorpus {
    std::string ratings_csv;
    std::string filings_csv;
    std::string fundamentals_csv;
    std::string macro_csv;
};

// Self-consistent ratings, filings, fundamentals and monthly macro series. A
// hidden per-quarter movement drives both the next rating change and the
// signal sentences of the preceding filing.
SyntheticCorpus generate_synthetic_corpus(const SyntheticParams& params);

// Writes ratings.csv, filings.csv, fundamentals.csv and macro.csv.
ingest::SourcePaths write_corpus(const SyntheticCorpus& corpus, const std::filesystem::path& dir);

// First two thirds of the quarters train, then a sixth each for val and test.
dataset::SplitSpec synthetic_split_spec(const SyntheticParams& params);

}  // namespace crf::synth
