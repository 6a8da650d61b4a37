#pragma once

#include <filesystem>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "crf/core.hpp"

namespace crf::ingest {

// Strips HTML tags and URLs, collapses whitespace runs, trims. Idempotent.
std::string clean_text(std::string_view raw);

// ---------------------------------------------------------------------------
// Delimited-text reading
// ---------------------------------------------------------------------------

struct CsvRow {
    std::size_t line = 0;  // 1-based physical line where the row starts
    std::vector<std::string> fields;
};

struct CsvTable {
    std::vector<std::string> header;
    std::vector<CsvRow> rows;
};

// RFC 4180 style: quoted fields may contain delimiters, doubled quotes and newlines.
CsvTable parse_csv(std::string_view text, char delim = ',');
std::string csv_escape(std::string_view field, char delim = ',');

// ---------------------------------------------------------------------------
// Record types
// ---------------------------------------------------------------------------

enum class FilingType { q10, k10 };

struct RatingsRecord {
    std::string company_id;
    Date date;
    QuarterId quarter;
    Rating rating;
};

struct RawFiling {
    std::string company_id;
    Date period_end;
    Date filed;
    QuarterId filing_quarter;
    FilingType filing_type = FilingType::q10;
    std::string mda_text;  // cleaned
};

inline const std::vector<std::string> kFundamentalFloats = {"niq", "ltq", "piq", "atq"};
inline const std::vector<std::string> kFundamentalCodes = {"ggroup", "gind", "gsector", "gsubind"};

struct FundamentalsRecord {
    std::string company_id;
    Date date;
    QuarterId quarter;
    std::map<std::string, double> values;        // niq, ltq, piq, atq
    std::map<std::string, std::string> codes;    // ggroup, gind, gsector, gsubind
};

struct MacroRecord {
    Date date;
    QuarterId quarter;
    std::map<std::string, double> series;
};

struct Reject {
    std::string source;
    std::size_t line = 0;
    std::string reason;
};

template <class Record>
struct LoadResult {
    std::vector<Record> records;
    std::vector<Reject> rejects;
    std::size_t rows_read = 0;
};

struct LoadOptions {
    // Macro series expected in the macro file. Empty means every non-date column.
    std::vector<std::string> macro_columns;
    // Fraction of rejected rows above which the file is assumed to be the wrong one.
    double max_reject_fraction = 0.5;
};

LoadResult<RatingsRecord> load_ratings(const std::filesystem::path& path, const LoadOptions& opts = {});
LoadResult<RawFiling> load_filings(const std::filesystem::path& path, const LoadOptions& opts = {});
LoadResult<FundamentalsRecord> load_fundamentals(const std::filesystem::path& path, const LoadOptions& opts = {});
LoadResult<MacroRecord> load_macro(const std::filesystem::path& path, const LoadOptions& opts = {});

// The same loaders over in-memory text; `source` names the origin in rejects.
LoadResult<RatingsRecord> parse_ratings(std::string_view text, const std::string& source, const LoadOptions& opts = {});
LoadResult<RawFiling> parse_filings(std::string_view text, const std::string& source, const LoadOptions& opts = {});
LoadResult<FundamentalsRecord> parse_fundamentals(std::string_view text, const std::string& source, const LoadOptions& opts = {});
LoadResult<MacroRecord> parse_macro(std::string_view text, const std::string& source, const LoadOptions& opts = {});

// ---------------------------------------------------------------------------
// Quarterly alignment
// ---------------------------------------------------------------------------

using CompanyQuarter = std::pair<std::string, QuarterId>;

struct AlignStats {
    std::size_t input = 0;
    std::size_t output = 0;
    std::size_t merged = 0;  // duplicates dropped or sub-quarterly rows folded into a mean
};

// Quarter-aligned view of all four sources: one record per key.
struct AlignedSources {
    std::map<CompanyQuarter, Rating> ratings;
    std::map<CompanyQuarter, RawFiling> filings;
    std::map<CompanyQuarter, FundamentalsRecord> fundamentals;
    std::map<QuarterId, std::map<std::string, double>> macro;
};

// Latest-dated record wins per (company, quarter).
std::map<CompanyQuarter, Rating> align_quarterly(const std::vector<RatingsRecord>& records, AlignStats* stats = nullptr);
// Latest-filed document wins per (company, quarter).
std::map<CompanyQuarter, RawFiling> align_quarterly(const std::vector<RawFiling>& records, AlignStats* stats = nullptr);
std::map<CompanyQuarter, FundamentalsRecord> align_quarterly(const std::vector<FundamentalsRecord>& records, AlignStats* stats = nullptr);
// Sub-quarterly observations are averaged per series.
std::map<QuarterId, std::map<std::string, double>> align_quarterly(const std::vector<MacroRecord>& records, AlignStats* stats = nullptr);

struct IngestReport {
    std::map<std::string, std::size_t> rows_read;
    std::map<std::string, std::size_t> accepted;
    std::map<std::string, AlignStats> aligned;
    std::vector<Reject> rejects;
};

struct SourcePaths {
    std::filesystem::path ratings;
    std::filesystem::path filings;
    std::filesystem::path fundamentals;
    std::filesystem::path macro;
};

// Loads and aligns all four sources.
AlignedSources ingest(const SourcePaths& paths, const LoadOptions& opts, IngestReport* report = nullptr);

// Normalized record files (JSON lines, one per source) plus rejects.jsonl.
void write_aligned(const AlignedSources& sources, const IngestReport& report, const std::filesystem::path& dir);
AlignedSources read_aligned(const std::filesystem::path& dir);

Json to_json(const Reject& r);

}  // namespace crf::ingest
