#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "frtok/unicode.hpp"

namespace frtok {

struct ByteRange {
    std::uint32_t begin = 0;
    std::uint32_t end = 0;

    bool operator==(const ByteRange&) const = default;
    std::uint32_t size() const { return end - begin; }
    bool empty() const { return begin == end; }
};

// Canonical text form plus a per-character alignment back into the original
// byte string. Characters removed by normalization have no alignment entry.
struct NormalizedText {
    std::string original;
    std::string normalized;
    std::vector<Codepoint> chars;          // one entry per normalized char
    std::vector<ByteRange> alignment;      // chars[i] came from original bytes
    std::vector<std::uint32_t> char_byte;  // offsets into normalized, size+1

    std::string_view slice_chars(std::uint32_t first, std::uint32_t last) const {
        return std::string_view(normalized)
            .substr(char_byte[first], char_byte[last] - char_byte[first]);
    }
    ByteRange original_span(std::uint32_t first, std::uint32_t last) const {
        if (first >= last) {
            return {};
        }
        return {alignment[first].begin, alignment[last - 1].end};
    }
};

// NFC normalization with zero-width joiner/non-joiner and emoji variation
// selector removal, CRLF collapsed to LF, and all other C0/C1 controls
// dropped. Throws InvalidUtf8Error on undecodable input.
NormalizedText normalize(std::string_view text);

}  // namespace frtok
