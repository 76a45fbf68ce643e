#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace frtok {

using Codepoint = char32_t;

inline constexpr Codepoint kZeroWidthJoiner = 0x200D;
inline constexpr Codepoint kZeroWidthNonJoiner = 0x200C;
inline constexpr Codepoint kVariationSelectorText = 0xFE0E;
inline constexpr Codepoint kVariationSelectorEmoji = 0xFE0F;
inline constexpr Codepoint kMaxCodepoint = 0x10FFFF;

struct DecodedChar {
    Codepoint cp;
    std::uint32_t byte_begin;
    std::uint32_t byte_end;
};

// Strict UTF-8 decoding: overlong forms, surrogates and truncated sequences
// all raise InvalidUtf8Error with the offending byte offset.
std::vector<DecodedChar> decode_utf8(std::string_view text);

void append_utf8(std::string& out, Codepoint cp);
std::string to_utf8(Codepoint cp);
std::string to_utf8(const std::vector<Codepoint>& cps);

// Character class queries backed by the generated Unicode tables.
bool is_letter(Codepoint cp);
bool is_mark(Codepoint cp);
bool is_number(Codepoint cp);  // any Unicode N* category
bool is_punctuation(Codepoint cp);
bool is_symbol(Codepoint cp);
bool is_whitespace(Codepoint cp);
bool is_extended_pictographic(Codepoint cp);
bool is_control(Codepoint cp);  // C0/C1 controls incl. DEL

inline bool is_ascii_digit(Codepoint cp) { return cp >= U'0' && cp <= U'9'; }
inline bool is_regional_indicator(Codepoint cp) {
    return cp >= 0x1F1E6 && cp <= 0x1F1FF;
}
inline bool is_emoji_modifier(Codepoint cp) {
    return cp >= 0x1F3FB && cp <= 0x1F3FF;
}
inline bool is_apostrophe(Codepoint cp) { return cp == 0x27 || cp == 0x2019; }

Codepoint simple_lowercase(Codepoint cp);

std::uint8_t combining_class(Codepoint cp);

// Canonical composition/decomposition plus the NFC-inert fast-path query.
bool nfc_inert(Codepoint cp);
struct NfcChar {
    Codepoint cp;
    std::uint32_t byte_begin;  // original byte range the character maps to
    std::uint32_t byte_end;
};
// Normalizes a decoded sequence to NFC, propagating original byte spans.
// Composition unions the spans it consumes; if canonical reordering leaves a
// combining cluster with non-monotonic spans, the whole cluster is widened to
// its byte hull so alignment stays ordered.
std::vector<NfcChar> nfc_normalize(const std::vector<NfcChar>& input);

}  // namespace frtok
