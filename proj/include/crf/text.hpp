#pragma once

#include <string>
#include <string_view>
#include <vector>

namespace crf::text {

// Rule-based splitter: breaks after '.', '!' or '?' (plus trailing quotes or
// brackets) when followed by whitespace or end of input, unless the word
// before the period is a known abbreviation. Sentences are trimmed; empty
// ones are dropped.
std::vector<std::string> sentence_split(std::string_view doc);

// Lowercased maximal runs of ASCII letters.
std::vector<std::string> word_tokens(std::string_view doc);

bool is_stopword(std::string_view lowercase_word);

}  // namespace crf::text
