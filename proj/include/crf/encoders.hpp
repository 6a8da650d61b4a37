#pragma once

#include <filesystem>
#include <map>
#include <memory>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "crf/backends.hpp"
#include "crf/core.hpp"
#include "crf/dataset.hpp"
#include "crf/density.hpp"

namespace crf::enc {

enum class SplitTag { train, val, test };

// Documents handed to fit(). Anything but a train-tagged corpus is refused.
struct TrainCorpus {
    SplitTag tag = SplitTag::train;
    std::vector<std::string> docs;

    static TrainCorpus train(std::vector<std::string> docs) { return {SplitTag::train, std::move(docs)}; }
};

class TextEncoder {
public:
    virtual ~TextEncoder() = default;

    virtual std::string name() const = 0;
    virtual std::size_t output_dim() const = 0;
    virtual bool fitted() const = 0;

    // Throws Error when the corpus is not train-tagged.
    void fit(const TrainCorpus& corpus, std::uint64_t seed);
    // Throws NotFitted before fit(); the result always has output_dim() finite entries.
    Vector encode(std::string_view doc) const;

    virtual Json to_json() const = 0;

protected:
    virtual void do_fit(const std::vector<std::string>& docs, std::uint64_t seed) = 0;
    virtual Vector do_encode(std::string_view doc) const = 0;
};

// ---------------------------------------------------------------------------
// Lexicon counts
// ---------------------------------------------------------------------------

struct Lexicon {
    std::string name;
    std::vector<std::string> categories;
    std::map<std::string, std::set<std::size_t>> words;  // lowercase word -> category indices

    // CSV with header "word,category"; categories are ordered by first appearance
    // unless `categories` is given.
    static Lexicon load(const std::filesystem::path& path, std::string name,
                        std::vector<std::string> categories = {});
    // Compact built-in word lists with the Loughran-McDonald category layout
    // (positive, negative, litigious, uncertainty).
    static const Lexicon& loughran_mcdonald();
    // Compact built-in word lists with the NRC emotion layout (ten categories).
    static const Lexicon& nrc_emotion();

    std::vector<double> counts(std::string_view doc) const;
};

// Per-category word counts scaled by that category's maximum over the train
// documents. Born fitted with unit maxima (raw counts).
class LexiconEncoder final : public TextEncoder {
public:
    explicit LexiconEncoder(Lexicon lexicon);

    std::string name() const override { return lexicon_.name; }
    std::size_t output_dim() const override { return lexicon_.categories.size(); }
    bool fitted() const override { return true; }
    Json to_json() const override;
    static std::unique_ptr<LexiconEncoder> from_json(const Json& j);

    const std::vector<double>& train_max() const { return train_max_; }
    void set_train_max(std::vector<double> m);

protected:
    void do_fit(const std::vector<std::string>& docs, std::uint64_t seed) override;
    Vector do_encode(std::string_view doc) const override;

private:
    Lexicon lexicon_;
    std::vector<double> train_max_;
};

// ---------------------------------------------------------------------------
// Topic model
// ---------------------------------------------------------------------------

struct LdaParams {
    std::size_t topics = 25;
    double alpha = 0.1;
    double beta = 0.01;
    std::size_t iterations = 100;        // collapsed Gibbs sweeps at fit time
    std::size_t infer_iterations = 50;   // fold-in iterations at encode time
    std::size_t max_vocab = 5000;
    std::size_t min_doc_freq = 2;
};

// Latent Dirichlet allocation fitted by collapsed Gibbs sampling; documents are
// encoded by deterministic fold-in against the fitted topic-word distributions.
class LdaEncoder final : public TextEncoder {
public:
    explicit LdaEncoder(LdaParams params = {});

    std::string name() const override { return "lda"; }
    std::size_t output_dim() const override { return params_.topics; }
    bool fitted() const override { return !topic_word_.empty(); }
    Json to_json() const override;
    static std::unique_ptr<LdaEncoder> from_json(const Json& j);

    const std::vector<std::string>& vocabulary() const { return vocab_; }

protected:
    void do_fit(const std::vector<std::string>& docs, std::uint64_t seed) override;
    Vector do_encode(std::string_view doc) const override;

private:
    std::vector<int> word_ids(std::string_view doc) const;

    LdaParams params_;
    std::vector<std::string> vocab_;
    std::map<std::string, int> index_;
    std::vector<std::vector<double>> topic_word_;  // topics x vocab, rows sum to 1
};

// ---------------------------------------------------------------------------
// Sentence-embedding clusters
// ---------------------------------------------------------------------------

struct ClusterParams {
    std::size_t clusters = 100;
    std::size_t reduced_dim = 10;
    double temperature = 1.0;
    std::size_t min_cluster_size = 10;
    std::size_t min_samples = 5;
    ClusterSelection selection = ClusterSelection::leaf;
    std::size_t max_fit_sentences = 6000;  // uniform subsample of train sentences used for fitting
};

struct ClusterModel {
    std::size_t k = 0;
    PcaReducer reducer;
    std::vector<Eigen::VectorXd> centroids;  // in reduced space
    std::vector<std::size_t> cluster_sizes;
    std::size_t clusters_found = 0;
    std::size_t noise_points = 0;

    // Softmax over negative centroid distances divided by the temperature.
    Vector soft_assign(const Eigen::VectorXd& reduced_point, double temperature) const;
};

// split sentences -> embed -> reduce -> density-cluster -> keep the K largest.
// Throws ClusterCountError when fewer than K clusters are found.
ClusterModel cluster_fit(const std::vector<std::string>& train_docs, const EmbeddingBackend& backend,
                         const ClusterParams& params, std::uint64_t seed);

// Mean of per-sentence soft assignments; uniform for a document without sentences.
// Sentence vectors are summed in sorted order so the result does not depend on sentence order.
Vector cluster_encode(const ClusterModel& model, std::string_view doc, const EmbeddingBackend& backend,
                      double temperature);

class ClusterEncoder final : public TextEncoder {
public:
    ClusterEncoder(std::shared_ptr<const EmbeddingBackend> backend, ClusterParams params = {});

    std::string name() const override { return "clusters"; }
    std::size_t output_dim() const override { return params_.clusters; }
    bool fitted() const override { return model_.has_value(); }
    Json to_json() const override;
    static std::unique_ptr<ClusterEncoder> from_json(const Json& j, std::shared_ptr<const EmbeddingBackend> backend);

    const ClusterModel& model() const;

protected:
    void do_fit(const std::vector<std::string>& docs, std::uint64_t seed) override;
    Vector do_encode(std::string_view doc) const override;

private:
    std::shared_ptr<const EmbeddingBackend> backend_;
    ClusterParams params_;
    std::optional<ClusterModel> model_;
};

// ---------------------------------------------------------------------------
// Chunked emotion classification
// ---------------------------------------------------------------------------

// Mean of the classifier's 7-simplex over consecutive chunks of `chunk_tokens` tokens.
Vector chunk_classify_encode(std::string_view doc, const EmotionClassifier& classifier, std::size_t chunk_tokens = 512,
                             const dataset::Tokenizer& tokenizer = dataset::default_tokenizer());

class EmotionEncoder final : public TextEncoder {
public:
    EmotionEncoder(std::shared_ptr<const EmotionClassifier> classifier, std::size_t chunk_tokens = 512);

    std::string name() const override { return "emotion"; }
    std::size_t output_dim() const override { return kEmotions.size(); }
    bool fitted() const override { return true; }
    Json to_json() const override;

protected:
    void do_fit(const std::vector<std::string>&, std::uint64_t) override {}
    Vector do_encode(std::string_view doc) const override;

private:
    std::shared_ptr<const EmotionClassifier> classifier_;
    std::size_t chunk_tokens_;
};

// ---------------------------------------------------------------------------
// Truncated token-embedding mean
// ---------------------------------------------------------------------------

// Mean of the token vectors of the first min(max_tokens, len) tokens; zero vector for an empty doc.
Vector truncated_embed_encode(std::string_view doc, const TokenEmbeddingBackend& backend, std::size_t max_tokens = 512);

class EmbedEncoder final : public TextEncoder {
public:
    EmbedEncoder(std::shared_ptr<const TokenEmbeddingBackend> backend, std::size_t max_tokens = 512);

    std::string name() const override { return "embed"; }
    std::size_t output_dim() const override { return backend_->dim(); }
    bool fitted() const override { return true; }
    Json to_json() const override;

protected:
    void do_fit(const std::vector<std::string>&, std::uint64_t) override {}
    Vector do_encode(std::string_view doc) const override;

private:
    std::shared_ptr<const TokenEmbeddingBackend> backend_;
    std::size_t max_tokens_;
};

// ---------------------------------------------------------------------------
// Construction and persistence
// ---------------------------------------------------------------------------

enum class EncoderKind { lm, nrc, lda, clusters, emotion, embed };

inline constexpr std::array<EncoderKind, 6> kEncoderKinds = {EncoderKind::lm,       EncoderKind::nrc,
                                                             EncoderKind::lda,      EncoderKind::clusters,
                                                             EncoderKind::emotion,  EncoderKind::embed};

std::string_view to_string(EncoderKind k) noexcept;
EncoderKind parse_encoder_kind(std::string_view s);

struct EncoderConfig {
    EncoderKind kind = EncoderKind::lm;
    std::string lexicon_path;  // optional override for lm / nrc
    LdaParams lda;
    ClusterParams cluster;
    std::size_t chunk_tokens = 512;
    std::size_t max_tokens = 512;
    std::string embedding_backend = "hash:64:7";
    std::string token_backend = "hash:32:11";
    std::string emotion_classifier = "hash:5";
};

void to_json(Json& j, const EncoderConfig& c);
void from_json(const Json& j, EncoderConfig& c);

std::unique_ptr<TextEncoder> make_encoder(const EncoderConfig& config);

inline constexpr int kEncoderBundleVersion = 1;

// {"version", "config", "state"}; backends are rebuilt from their specs on load.
Json save_encoder(const TextEncoder& encoder, const EncoderConfig& config);
std::unique_ptr<TextEncoder> load_encoder(const Json& bundle);

}  // namespace crf::enc
