#include "frtok/normalize.hpp"

#include <algorithm>

#include "frtok/errors.hpp"

namespace frtok {

namespace {

bool drop_codepoint(Codepoint cp) {
    if (cp == kZeroWidthJoiner || cp == kZeroWidthNonJoiner ||
        cp == kVariationSelectorText || cp == kVariationSelectorEmoji) {
        return true;
    }
    if (cp == U'\n' || cp == U'\t') {
        return false;
    }
    return is_control(cp);
}

void finish(NormalizedText& nt, const std::vector<NfcChar>& chars) {
    nt.chars.reserve(chars.size());
    nt.alignment.reserve(chars.size());
    nt.char_byte.reserve(chars.size() + 1);
    for (const NfcChar& c : chars) {
        nt.char_byte.push_back(static_cast<std::uint32_t>(nt.normalized.size()));
        append_utf8(nt.normalized, c.cp);
        nt.chars.push_back(c.cp);
        nt.alignment.push_back({c.byte_begin, c.byte_end});
    }
    nt.char_byte.push_back(static_cast<std::uint32_t>(nt.normalized.size()));
}

}  // namespace

NormalizedText normalize(std::string_view text) {
    NormalizedText nt;
    nt.original.assign(text);

    std::vector<DecodedChar> decoded = decode_utf8(text);

    // Filter pass: CRLF -> LF (span covers both bytes), lone CR dropped,
    // ZWJ/ZWNJ, emoji variation selectors and remaining controls dropped.
    std::vector<NfcChar> filtered;
    filtered.reserve(decoded.size());
    for (std::size_t i = 0; i < decoded.size(); ++i) {
        const DecodedChar& c = decoded[i];
        if (c.cp == U'\r') {
            if (i + 1 < decoded.size() && decoded[i + 1].cp == U'\n') {
                filtered.push_back(
                    {U'\n', c.byte_begin, decoded[i + 1].byte_end});
                ++i;
            }
            continue;
        }
        if (drop_codepoint(c.cp)) {
            continue;
        }
        filtered.push_back({c.cp, c.byte_begin, c.byte_end});
    }

    // NFC, skipping inert stretches. An island around a non-inert char is
    // extended left to the nearest starter so recomposition sees its base.
    bool all_inert = true;
    for (const NfcChar& c : filtered) {
        if (!nfc_inert(c.cp)) {
            all_inert = false;
            break;
        }
    }
    if (all_inert) {
        finish(nt, filtered);
        return nt;
    }

    std::vector<NfcChar> result;
    result.reserve(filtered.size());
    std::vector<NfcChar> island;
    std::size_t i = 0;
    const std::size_t n = filtered.size();
    while (i < n) {
        if (nfc_inert(filtered[i].cp)) {
            result.push_back(filtered[i]);
            ++i;
            continue;
        }
        // Reclaim the pending cluster from the already-emitted output so the
        // normalizer sees the base character this island may combine with.
        island.clear();
        while (!result.empty() && combining_class(result.back().cp) != 0) {
            island.push_back(result.back());
            result.pop_back();
        }
        if (!result.empty()) {
            island.push_back(result.back());
            result.pop_back();
        }
        std::reverse(island.begin(), island.end());
        std::size_t end = i;
        while (end < n && !nfc_inert(filtered[end].cp)) {
            ++end;
        }
        island.insert(island.end(), filtered.begin() + i,
                      filtered.begin() + end);
        std::vector<NfcChar> normalized_island = nfc_normalize(island);
        result.insert(result.end(), normalized_island.begin(),
                      normalized_island.end());
        i = end;
    }

    finish(nt, result);
    return nt;
}

}  // namespace frtok
