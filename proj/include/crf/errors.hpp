#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace crf {

// Base of every error raised by the library. The CLI maps any Error to a
// non-zero exit code and prints what().
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

class UnknownRating : public Error {
public:
    explicit UnknownRating(std::string code)
        : Error("unknown rating code '" + code + "'"), code_(std::move(code)) {}
    const std::string& code() const noexcept { return code_; }

private:
    std::string code_;
};

class IOError : public Error {
public:
    using Error::Error;
};

class SchemaError : public Error {
public:
    using Error::Error;
};

class EmptyClass : public Error {
public:
    using Error::Error;
};

class EmptySplit : public Error {
public:
    using Error::Error;
};

class NotFitted : public Error {
public:
    using Error::Error;
};

class AlignmentError : public Error {
public:
    using Error::Error;
};

class ShapeError : public Error {
public:
    using Error::Error;
};

class ClientError : public Error {
public:
    using Error::Error;
};

class ConfigError : public Error {
public:
    using Error::Error;
};

class ClusterCountError : public Error {
public:
    ClusterCountError(std::size_t wanted, std::size_t achieved)
        : Error("density clustering found " + std::to_string(achieved) +
                " clusters, " + std::to_string(wanted) + " required"),
          wanted_(wanted), achieved_(achieved) {}
    std::size_t wanted() const noexcept { return wanted_; }
    std::size_t achieved() const noexcept { return achieved_; }

private:
    std::size_t wanted_;
    std::size_t achieved_;
};

class ContextOverflow : public Error {
public:
    ContextOverflow(std::size_t tokens, std::size_t budget)
        : Error("prompt has " + std::to_string(tokens) + " tokens, " +
                std::to_string(tokens - budget) + " over the context budget of " +
                std::to_string(budget)),
          overflow_(tokens - budget) {}
    std::size_t overflow() const noexcept { return overflow_; }

private:
    std::size_t overflow_;
};

// Raised by the pipeline runner; wraps the failing stage name.
class StageError : public Error {
public:
    StageError(std::string stage, const std::string& cause)
        : Error("stage '" + stage + "' failed: " + cause), stage_(std::move(stage)) {}
    const std::string& stage() const noexcept { return stage_; }

private:
    std::string stage_;
};

}  // namespace crf
