#pragma once

#include <cstddef>
#include <string>
#include <vector>

namespace cohortforge {

/// Lowercase + strip Spanish accents/diacritics (á→a, ñ→n, ü→u ...).
/// Input is UTF-8; unrecognized multibyte sequences pass through unchanged.
/// Byte positions are NOT preserved; use tokenize() when offsets matter.
std::string normalize(const std::string& text);

/// One word token: a maximal run of letters or digits.
struct Token {
    std::string norm;      // normalized form used for matching
    std::size_t begin = 0; // byte offsets into the original text
    std::size_t end = 0;
    std::size_t sentence = 0;  // sentence index within the tokenized span
};

/// Tokenize text[begin, end). Sentence boundaries are . ! ? ; and newlines.
std::vector<Token> tokenize(const std::string& text, std::size_t begin, std::size_t end);

inline std::vector<Token> tokenize(const std::string& text) {
    return tokenize(text, 0, text.size());
}

std::string trim(const std::string& s);

std::vector<std::string> split(const std::string& s, char sep);

}  // namespace cohortforge
