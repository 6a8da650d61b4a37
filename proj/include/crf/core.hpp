#pragma once

#include <array>
#include <chrono>
#include <compare>
#include <cstdint>
#include <map>
#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "crf/errors.hpp"

namespace crf {

using Json = nlohmann::json;

// ---------------------------------------------------------------------------
// Rating scale
// ---------------------------------------------------------------------------

// S&P long-term scale, least risky first.
inline constexpr std::array<std::string_view, 21> kRatingCodes = {
    "AAA", "AA+", "AA", "AA-", "A+",  "A",  "A-",   "BBB+", "BBB", "BBB-", "BB+",
    "BB",  "BB-", "B+", "B",   "B-",  "CCC", "CCC-", "CC",   "C",   "SD"};

inline constexpr int kRatingLevels = static_cast<int>(kRatingCodes.size());

class Rating;

class RatingScale {
public:
    static const RatingScale& sp() noexcept;

    std::size_t size() const noexcept { return kRatingCodes.size(); }
    std::string_view code(int rank) const;
    // Trims surrounding whitespace, then matches case-sensitively.
    int rank(std::string_view code) const;
    Rating parse(std::string_view code) const;
    const std::array<std::string_view, 21>& levels() const noexcept { return kRatingCodes; }
};

// A position on the scale. 0 = AAA, 20 = SD.
class Rating {
public:
    constexpr Rating() = default;
    static Rating from_rank(int rank);
    static Rating parse(std::string_view code) { return RatingScale::sp().parse(code); }

    constexpr int rank() const noexcept { return rank_; }
    std::string_view code() const noexcept { return kRatingCodes[static_cast<std::size_t>(rank_)]; }

    friend constexpr bool operator==(Rating, Rating) = default;

private:
    constexpr explicit Rating(int rank) : rank_(rank) {}
    int rank_ = 0;
};

int rating_rank(std::string_view code, const RatingScale& scale = RatingScale::sp());

// Returns the less risky of the two codes; `a` on a tie. Codes are returned trimmed.
std::string compare_ratings(std::string_view a, std::string_view b);

// ---------------------------------------------------------------------------
// Movement labels
// ---------------------------------------------------------------------------

// Declaration order is the argmax tie-break order.
enum class MovementLabel : std::uint8_t { down = 0, same = 1, up = 2 };

inline constexpr std::array<MovementLabel, 3> kLabels = {MovementLabel::down, MovementLabel::same,
                                                         MovementLabel::up};

std::string_view to_string(MovementLabel label) noexcept;
MovementLabel parse_label(std::string_view word);
inline std::size_t index_of(MovementLabel label) noexcept { return static_cast<std::size_t>(label); }

MovementLabel movement_label(Rating prev, Rating curr) noexcept;
MovementLabel movement_label(std::string_view prev, std::string_view curr);

// ---------------------------------------------------------------------------
// Quarters and dates
// ---------------------------------------------------------------------------

using Date = std::chrono::year_month_day;

Date parse_date(std::string_view text);
std::string format_date(Date date);

struct QuarterId {
    int year = 0;
    int quarter = 1;

    QuarterId() = default;
    QuarterId(int y, int q);

    static QuarterId of(Date date);
    // Accepts "2012Q4".
    static QuarterId parse(std::string_view text);

    QuarterId next() const noexcept;
    QuarterId prev() const noexcept;
    QuarterId minus(int quarters) const noexcept;
    Date first_day() const;
    Date last_day() const;
    std::string str() const;

    friend auto operator<=>(const QuarterId&, const QuarterId&) = default;
};

// ---------------------------------------------------------------------------
// Samples
// ---------------------------------------------------------------------------

// Numeric data N_{t-i} for one quarter: fundamentals and macro series are
// real-valued; industry classification codes stay categorical.
struct NumericRecord {
    std::map<std::string, double> fundamental;
    std::map<std::string, double> macro;
    std::map<std::string, std::string> categorical;

    friend bool operator==(const NumericRecord&, const NumericRecord&) = default;
};

struct SampleKey {
    std::string company_id;
    QuarterId target_quarter;

    friend auto operator<=>(const SampleKey&, const SampleKey&) = default;
    std::string str() const { return company_id + "@" + target_quarter.str(); }
};

// One prediction instance. Every window has length p and is ordered
// most recent first: index 0 holds quarter t-1.
struct Sample {
    std::string company_id;
    QuarterId target_quarter;
    int p = 1;
    std::vector<std::string> text_window;
    std::vector<Rating> rating_window;
    std::vector<NumericRecord> numeric_window;
    MovementLabel label = MovementLabel::same;

    SampleKey key() const { return {company_id, target_quarter}; }
    // Throws SchemaError when the windows are not all of length p.
    void validate() const;

    friend bool operator==(const Sample&, const Sample&) = default;
};

// ---------------------------------------------------------------------------
// Features
// ---------------------------------------------------------------------------

enum class Modality : std::uint8_t { macro, fundamental, text, credit_rating, estimate };

inline constexpr std::array<Modality, 5> kModalities = {Modality::macro, Modality::fundamental,
                                                        Modality::text, Modality::credit_rating,
                                                        Modality::estimate};

std::string_view to_string(Modality m) noexcept;
Modality parse_modality(std::string_view s);

struct FeatureSpec {
    std::string name;
    Modality group = Modality::text;

    friend bool operator==(const FeatureSpec&, const FeatureSpec&) = default;
};

using FeatureSchema = std::vector<FeatureSpec>;

// Named real-valued features for one instance.
struct FeatureVector {
    FeatureSchema schema;
    std::vector<double> values;

    double at(std::string_view name) const;
};

// A dataset of feature rows sharing one schema, keyed and labelled.
struct FeatureTable {
    FeatureSchema schema;
    std::vector<SampleKey> keys;
    std::vector<std::vector<double>> rows;
    std::vector<MovementLabel> labels;

    std::size_t size() const noexcept { return rows.size(); }
    std::size_t width() const noexcept { return schema.size(); }
    std::vector<std::string> names() const;
    // Throws SchemaError on ragged rows or mismatched key/label counts (keys may be empty).
    void validate() const;
    FeatureVector row(std::size_t i) const { return {schema, rows.at(i)}; }
};

// ---------------------------------------------------------------------------
// Predictions
// ---------------------------------------------------------------------------

using LabelProbs = std::array<double, 3>;

// Index of the largest entry; the earliest label wins ties.
MovementLabel argmax_label(const LabelProbs& values) noexcept;

class Prediction {
public:
    // Throws Error unless probs is a simplex (entries >= 0, sum 1 +- 1e-9).
    static Prediction from_probs(const LabelProbs& probs);

    MovementLabel label() const noexcept { return label_; }
    const LabelProbs& probs() const noexcept { return probs_; }
    double prob(MovementLabel l) const noexcept { return probs_[index_of(l)]; }
    double confidence() const noexcept { return prob(label_); }

    friend bool operator==(const Prediction&, const Prediction&) = default;

private:
    Prediction(MovementLabel label, const LabelProbs& probs) : label_(label), probs_(probs) {}
    MovementLabel label_;
    LabelProbs probs_;
};

// ---------------------------------------------------------------------------
// JSON
// ---------------------------------------------------------------------------

void to_json(Json& j, const QuarterId& q);
void from_json(const Json& j, QuarterId& q);
void to_json(Json& j, const Rating& r);
void from_json(const Json& j, Rating& r);
void to_json(Json& j, const MovementLabel& l);
void from_json(const Json& j, MovementLabel& l);
void to_json(Json& j, const NumericRecord& r);
void from_json(const Json& j, NumericRecord& r);
void to_json(Json& j, const SampleKey& k);
void from_json(const Json& j, SampleKey& k);
void to_json(Json& j, const Sample& s);
void from_json(const Json& j, Sample& s);
void to_json(Json& j, const Prediction& p);
Prediction prediction_from_json(const Json& j);
void to_json(Json& j, const FeatureSpec& f);
void from_json(const Json& j, FeatureSpec& f);
void to_json(Json& j, const FeatureTable& t);
void from_json(const Json& j, FeatureTable& t);

std::string trim(std::string_view s);

}  // namespace crf
