#pragma once

#include <array>
#include <cstdint>
#include <filesystem>
#include <memory>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

#include "crf/core.hpp"

namespace crf::enc {

using Vector = std::vector<double>;

// Sentence-level embedder (the role all-mpnet-base-v2 plays for the cluster encoder).
class EmbeddingBackend {
public:
    virtual ~EmbeddingBackend() = default;
    virtual std::string id() const = 0;
    virtual std::size_t dim() const = 0;
    virtual std::size_t max_sequence_units() const = 0;
    // Finite vector of length dim(); deterministic for fixed weights.
    virtual Vector embed(std::string_view text) const = 0;
};

// Per-token final-layer vectors (the role BERT plays for the truncated-embedding encoder).
class TokenEmbeddingBackend {
public:
    virtual ~TokenEmbeddingBackend() = default;
    virtual std::string id() const = 0;
    virtual std::size_t dim() const = 0;
    virtual std::size_t max_sequence_units() const = 0;
    // One vector per token for at most max_sequence_units() leading tokens.
    virtual std::vector<Vector> token_vectors(std::string_view text) const = 0;
};

inline constexpr std::array<std::string_view, 7> kEmotions = {"anger", "disgust", "fear", "joy",
                                                             "neutral", "sadness", "surprise"};

using EmotionProbs = std::array<double, 7>;

// Chunk-level emotion classifier (the role the DistilRoBERTa emotion model plays).
class EmotionClassifier {
public:
    virtual ~EmotionClassifier() = default;
    virtual std::string id() const = 0;
    // A 7-simplex in kEmotions order.
    virtual EmotionProbs classify(std::string_view chunk) const = 0;
};

// ---------------------------------------------------------------------------
// Deterministic stubs. Stateless after construction, so safe across threads.
// ---------------------------------------------------------------------------

// Each lowercase word maps to a seeded Gaussian vector; a text embeds to the
// unit-normalized mean of its word vectors (zero vector when it has no words).
class HashEmbeddingBackend final : public EmbeddingBackend, public TokenEmbeddingBackend {
public:
    HashEmbeddingBackend(std::size_t dim, std::uint64_t seed, std::size_t max_units = 512);

    std::string id() const override;
    std::size_t dim() const override { return dim_; }
    std::size_t max_sequence_units() const override { return max_units_; }
    Vector embed(std::string_view text) const override;
    std::vector<Vector> token_vectors(std::string_view text) const override;

    Vector word_vector(std::string_view lowercase_word) const;

private:
    std::size_t dim_;
    std::uint64_t seed_;
    std::size_t max_units_;
};

// Every token maps to the same constant vector.
class ConstantTokenBackend final : public TokenEmbeddingBackend {
public:
    ConstantTokenBackend(std::size_t dim, double value, std::size_t max_units = 512)
        : dim_(dim), value_(value), max_units_(max_units) {}
    std::string id() const override;
    std::size_t dim() const override { return dim_; }
    std::size_t max_sequence_units() const override { return max_units_; }
    std::vector<Vector> token_vectors(std::string_view text) const override;

private:
    std::size_t dim_;
    double value_;
    std::size_t max_units_;
};

// Words vote for an emotion bucket by hash; probabilities are smoothed vote shares.
class HashEmotionClassifier final : public EmotionClassifier {
public:
    explicit HashEmotionClassifier(std::uint64_t seed) : seed_(seed) {}
    std::string id() const override;
    EmotionProbs classify(std::string_view chunk) const override;

private:
    std::uint64_t seed_;
};

// Embeddings computed offline (e.g. by a sentence-transformers script) and
// stored as JSON lines {"text": ..., "vector": [...]}. Unknown texts throw.
class PrecomputedEmbeddingBackend final : public EmbeddingBackend {
public:
    explicit PrecomputedEmbeddingBackend(const std::filesystem::path& path);
    std::string id() const override { return "precomputed:" + path_; }
    std::size_t dim() const override { return dim_; }
    std::size_t max_sequence_units() const override { return 512; }
    Vector embed(std::string_view text) const override;

private:
    std::string path_;
    std::size_t dim_ = 0;
    std::unordered_map<std::string, Vector> table_;
};

// Backend specs: "hash:<dim>:<seed>", "precomputed:<path>" for sentence
// embedders; "hash:<dim>:<seed>", "const:<dim>:<value>" for token backends;
// "hash:<seed>" for emotion classifiers.
std::shared_ptr<const EmbeddingBackend> make_embedding_backend(const std::string& spec);
std::shared_ptr<const TokenEmbeddingBackend> make_token_backend(const std::string& spec);
std::shared_ptr<const EmotionClassifier> make_emotion_classifier(const std::string& spec);

}  // namespace crf::enc
