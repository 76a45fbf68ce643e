#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "frtok/normalize.hpp"

namespace frtok {

enum class PreTokenKind {
    Word,
    NumberChunk,
    Elision,
    Emoji,
    Newline,
    Tab,
    Punctuation,
};

const char* to_string(PreTokenKind kind);

struct PreToken {
    std::string surface;
    std::uint32_t begin = 0;  // span over normalized character indices
    std::uint32_t end = 0;
    PreTokenKind kind = PreTokenKind::Word;
    // True iff this pre-token starts a whitespace-delimited word: it is the
    // first pre-token or was preceded by removed whitespace. Newline and tab
    // pre-tokens are never word starts.
    bool word_boundary = false;
};

// Elision triggers. Prefix entries ("l'", "jusqu'") match at word start and
// keep their apostrophe; suffix entries ("'s", "'ll") split off the end of a
// word. Matching is case-insensitive, surfaces keep the original case, and
// both U+0027 and U+2019 count as the apostrophe.
class ElisionTable {
  public:
    ElisionTable(std::vector<std::string> prefixes,
                 std::vector<std::string> suffixes);

    static const ElisionTable& defaults();
    static std::vector<std::string> default_prefixes();
    static std::vector<std::string> default_suffixes();

    // `word` is the lowercased letter run before the apostrophe.
    bool is_prefix(const std::vector<Codepoint>& word) const;
    // `tail` is the lowercased letter run after the apostrophe.
    bool is_suffix(const std::vector<Codepoint>& tail) const;

    const std::vector<std::string>& prefixes() const { return prefixes_; }
    const std::vector<std::string>& suffixes() const { return suffixes_; }

  private:
    std::vector<std::string> prefixes_;  // stored without the apostrophe
    std::vector<std::string> suffixes_;
    std::vector<std::vector<Codepoint>> prefix_cps_;
    std::vector<std::vector<Codepoint>> suffix_cps_;
};

std::vector<PreToken> pretokenize(const NormalizedText& nt,
                                  const ElisionTable& elisions =
                                      ElisionTable::defaults());

// Canonical surface reconstruction: surfaces joined with a single space at
// word boundaries. Reconstructs the normalized text up to whitespace runs.
std::string rebuild(std::span<const PreToken> pretokens);

}  // namespace frtok
