#pragma once

#include <chrono>
#include <filesystem>
#include <functional>
#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include <Eigen/Dense>

#include "crf/core.hpp"

namespace crf::gen {

// ---------------------------------------------------------------------------
// Clients
// ---------------------------------------------------------------------------

// Rough token count used for context budgeting: one token per four bytes,
// never fewer than the whitespace-separated word count.
std::size_t approx_tokens(std::string_view text);

class LLMClient {
public:
    virtual ~LLMClient() = default;
    virtual std::string id() const = 0;
    virtual std::size_t context_tokens() const { return 16384; }

    // One log-probability per candidate: the summed token log-probabilities of
    // the candidate appended to the prompt. Must be thread-safe.
    virtual std::vector<double> score_continuations(const std::string& prompt,
                                                    const std::vector<std::string>& candidates) const = 0;

    // Greedy free-text completion. Optional; the default throws ClientError.
    virtual std::string complete(const std::string& prompt, std::size_t max_tokens) const;
};

// Deterministic pseudo-random scores derived from (seed, prompt, candidate).
class HashMockClient final : public LLMClient {
public:
    explicit HashMockClient(std::uint64_t seed = 0) : seed_(seed) {}
    std::string id() const override { return "mock:hash:" + std::to_string(seed_); }
    std::vector<double> score_continuations(const std::string& prompt,
                                            const std::vector<std::string>& candidates) const override;

private:
    std::uint64_t seed_;
};

// Scores whatever a callback returns; handy for tests.
class ScriptedClient final : public LLMClient {
public:
    using Fn = std::function<std::vector<double>(const std::string&, const std::vector<std::string>&)>;
    ScriptedClient(std::string id, Fn fn, std::size_t context = 16384)
        : id_(std::move(id)), fn_(std::move(fn)), context_(context) {}
    std::string id() const override { return id_; }
    std::size_t context_tokens() const override { return context_; }
    std::vector<double> score_continuations(const std::string& prompt,
                                            const std::vector<std::string>& candidates) const override;

private:
    std::string id_;
    Fn fn_;
    std::size_t context_;
};

// Knows the rating scale: on a ranking prompt it prefers the less risky code,
// except on the listed pairs where it prefers the riskier one. Other prompts
// fall back to hash scores.
class RankOracleClient final : public LLMClient {
public:
    explicit RankOracleClient(std::set<std::pair<std::string, std::string>> wrong_pairs = {});
    std::string id() const override;
    std::vector<double> score_continuations(const std::string& prompt,
                                            const std::vector<std::string>& candidates) const override;

private:
    std::set<std::pair<std::string, std::string>> wrong_;  // stored with the less risky code first
    HashMockClient fallback_;
};

// A small stand-in for a language model reading the prompt: counts
// positive/negative lexicon words in the filing text, leans on the most recent
// rating move and honours an injected estimate. Gives the generative baseline
// something real to find in the synthetic corpus.
class LexiconMockClient final : public LLMClient {
public:
    std::string id() const override { return "mock:lexicon"; }
    std::vector<double> score_continuations(const std::string& prompt,
                                            const std::vector<std::string>& candidates) const override;
};

struct ApiClientOptions {
    std::string base_url;        // scheme://host[:port]
    std::string model;           // model name sent in the request
    std::string api_key_env;     // environment variable holding the credential; empty for none
    std::size_t context = 16384;
    std::size_t max_retries = 4;
    std::chrono::milliseconds backoff{500};  // doubled after each failed attempt
    std::size_t max_concurrency = 4;
    std::chrono::milliseconds min_interval{0};  // rate limit between request starts
    std::chrono::seconds timeout{60};
};

// OpenAI-compatible completions endpoint. Candidates are scored with
// echo + logprobs on prompt+candidate at temperature 0.
class ApiClient final : public LLMClient {
public:
    explicit ApiClient(ApiClientOptions options);
    ~ApiClient() override;
    std::string id() const override { return "api:" + opts_.model; }
    std::size_t context_tokens() const override { return opts_.context; }
    std::vector<double> score_continuations(const std::string& prompt,
                                            const std::vector<std::string>& candidates) const override;
    std::string complete(const std::string& prompt, std::size_t max_tokens) const override;

private:
    Json post(const std::string& path, const Json& body) const;

    ApiClientOptions opts_;
    std::string key_;
    struct Gate;
    std::unique_ptr<Gate> gate_;
};

// Memoizes another client in a JSONL file keyed by (model id, prompt hash,
// candidates). Safe for concurrent readers; writes are serialized.
class CachedClient final : public LLMClient {
public:
    CachedClient(std::shared_ptr<const LLMClient> inner, std::filesystem::path cache_file);
    std::string id() const override { return inner_->id(); }
    std::size_t context_tokens() const override { return inner_->context_tokens(); }
    std::vector<double> score_continuations(const std::string& prompt,
                                            const std::vector<std::string>& candidates) const override;
    std::size_t hits() const;
    std::size_t misses() const;

private:
    std::string key(const std::string& prompt, const std::vector<std::string>& candidates) const;

    std::shared_ptr<const LLMClient> inner_;
    std::filesystem::path path_;
    mutable std::mutex mu_;
    mutable std::map<std::string, std::vector<double>> memo_;
    mutable std::size_t hits_ = 0;
    mutable std::size_t misses_ = 0;
};

// "mock" | "mock:hash:<seed>" | "mock:lexicon" | "mock:rank" | "api:<model>" | "local:<model>".
// api: reads CRF_API_BASE (default https://api.openai.com) and the key from CRF_API_KEY.
// local: reads CRF_LOCAL_URL (default http://127.0.0.1:8000) and sends no key.
std::shared_ptr<const LLMClient> make_client(const std::string& spec);

// ---------------------------------------------------------------------------
// Prompts
// ---------------------------------------------------------------------------

enum class Ablation { numeric_only, text_only, all };
std::string_view to_string(Ablation a) noexcept;
Ablation parse_ablation(std::string_view s);

struct InjectedEstimate {
    MovementLabel label = MovementLabel::same;
    double probability = 0.0;
};

// Named sections read from a plain-text file. A line "[[name]]" opens a
// section; its body runs to the next marker. Placeholders in braces are
// substituted at render time: {scale}, {fundamental_definitions},
// {macro_definitions}, {label}, {probability}, {x}, {y}.
struct PromptTemplate {
    std::map<std::string, std::string> sections;

    static const PromptTemplate& builtin();
    static PromptTemplate parse(std::string_view text);
    static PromptTemplate load(const std::filesystem::path& path);
    std::string dump() const;
    const std::string& section(const std::string& name) const;
};

// Ratings as codes, then one line per numeric feature; all most recent first.
std::string serialize_numeric(const Sample& sample);

struct PromptOptions {
    Ablation ablation = Ablation::all;
    std::optional<InjectedEstimate> estimate;
    std::size_t budget_tokens = 0;  // 0: no budget check
};

// Throws ContextOverflow when the rendered prompt exceeds budget_tokens.
std::string build_prompt(const PromptTemplate& tmpl, const Sample& sample, const PromptOptions& options);

// Like build_prompt, but first truncates the filing texts (evenly across lags)
// so the prompt fits the budget. Still throws when even empty texts overflow.
std::string build_prompt_fitted(const PromptTemplate& tmpl, const Sample& sample, const PromptOptions& options);

// ---------------------------------------------------------------------------
// Decoding
// ---------------------------------------------------------------------------

inline const std::vector<std::string>& label_words() {
    static const std::vector<std::string> words{"down", "same", "up"};
    return words;
}

// Softmax over raw scores (max-shifted); throws on non-finite input.
std::vector<double> softmax_scores(const std::vector<double>& scores);

// Scores the three label words, softmaxes the summed log-probabilities and
// returns the argmax (earliest label wins ties). ClientError propagates.
Prediction constrained_decode(const LLMClient& client, const std::string& prompt);

struct GenPredictions {
    std::vector<SampleKey> keys;
    std::vector<Prediction> predictions;
};

// Runs constrained_decode over samples on a bounded pool; output keeps input order.
GenPredictions predict_gen(const LLMClient& client, const PromptTemplate& tmpl, const std::vector<Sample>& samples,
                           const PromptOptions& options, std::size_t threads = 4,
                           const std::map<SampleKey, InjectedEstimate>* estimates = nullptr);

// ---------------------------------------------------------------------------
// Rating-ranking probe
// ---------------------------------------------------------------------------

struct ProbeReport {
    std::size_t pairs = 0;
    std::size_t correct = 0;
    std::size_t client_errors = 0;
    double accuracy = 0.0;  // correct / pairs; errored pairs count as wrong
    std::vector<std::pair<std::string, std::string>> mistakes;
};

std::vector<std::pair<std::string, std::string>> probe_pairs(bool ordered = false);
std::string probe_prompt(const PromptTemplate& tmpl, std::string_view x, std::string_view y);

// Errors on an empty pair list.
ProbeReport rank_probe(const LLMClient& client, const std::vector<std::pair<std::string, std::string>>& pairs,
                       const PromptTemplate& tmpl = PromptTemplate::builtin());
ProbeReport rank_probe(const LLMClient& client, bool ordered = false);

void to_json(Json& j, const ProbeReport& r);

// ---------------------------------------------------------------------------
// Low-rank adapters
// ---------------------------------------------------------------------------

struct LoraAdapter {
    std::size_t r = 0;
    Eigen::MatrixXd A;  // r x k
    Eigen::MatrixXd B;  // d x r
};

// B = 0 and A ~ N(0, scale^2), so the initial update is exactly zero.
LoraAdapter lora_init(std::size_t d, std::size_t k, std::size_t r, std::uint64_t seed, double scale = 0.01);
Eigen::MatrixXd lora_delta(const LoraAdapter& adapter);
// W + B*A. Entries where B*A is exactly zero keep W's bits.
Eigen::MatrixXd lora_merge(const Eigen::MatrixXd& W, const LoraAdapter& adapter);

struct LoraTrainOptions {
    std::size_t r = 4;
    std::size_t epochs = 200;
    double learning_rate = 0.5;
    std::uint64_t seed = 0;
};

struct LoraTrainResult {
    LoraAdapter adapter;
    std::vector<double> loss;  // mean cross-entropy per epoch
};

// Fits an adapter on a frozen linear classifier (logits = W' x, W is 3 x k)
// with full-batch gradient descent on A and B only.
LoraTrainResult lora_train(const Eigen::MatrixXd& W, const Eigen::MatrixXd& X, const std::vector<MovementLabel>& labels,
                           const LoraTrainOptions& options);

void to_json(Json& j, const LoraAdapter& a);
LoraAdapter lora_from_json(const Json& j);

}  // namespace crf::gen
