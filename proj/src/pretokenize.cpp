#include "frtok/pretokenize.hpp"

#include <algorithm>

#include "frtok/errors.hpp"

namespace frtok {

namespace {

bool is_emoji_atom(Codepoint cp) {
    return is_extended_pictographic(cp) || is_regional_indicator(cp) ||
           is_emoji_modifier(cp);
}

bool is_word_char(Codepoint cp) {
    return (is_letter(cp) || is_mark(cp)) && !is_emoji_atom(cp);
}

std::vector<Codepoint> lowercased(const std::vector<Codepoint>& cps,
                                  std::size_t begin, std::size_t end) {
    std::vector<Codepoint> out;
    out.reserve(end - begin);
    for (std::size_t i = begin; i < end; ++i) {
        out.push_back(simple_lowercase(cps[i]));
    }
    return out;
}

}  // namespace

const char* to_string(PreTokenKind kind) {
    switch (kind) {
        case PreTokenKind::Word:
            return "word";
        case PreTokenKind::NumberChunk:
            return "number_chunk";
        case PreTokenKind::Elision:
            return "elision";
        case PreTokenKind::Emoji:
            return "emoji";
        case PreTokenKind::Newline:
            return "newline";
        case PreTokenKind::Tab:
            return "tab";
        case PreTokenKind::Punctuation:
            return "punctuation";
    }
    return "unknown";
}

ElisionTable::ElisionTable(std::vector<std::string> prefixes,
                           std::vector<std::string> suffixes)
    : prefixes_(std::move(prefixes)), suffixes_(std::move(suffixes)) {
    auto strip = [](const std::string& entry) {
        std::vector<Codepoint> cps;
        for (const DecodedChar& c : decode_utf8(entry)) {
            if (!is_apostrophe(c.cp)) {
                cps.push_back(simple_lowercase(c.cp));
            }
        }
        return cps;
    };
    for (const std::string& p : prefixes_) {
        prefix_cps_.push_back(strip(p));
    }
    for (const std::string& s : suffixes_) {
        suffix_cps_.push_back(strip(s));
    }
}

std::vector<std::string> ElisionTable::default_prefixes() {
    return {"c'", "d'", "j'", "l'", "m'", "n'", "s'", "t'",
            "qu'", "jusqu'", "lorsqu'", "puisqu'", "quoiqu'",
            "presqu'", "quelqu'"};
}

std::vector<std::string> ElisionTable::default_suffixes() {
    return {"'s", "'t", "'ll", "'re", "'ve", "'d", "'m"};
}

const ElisionTable& ElisionTable::defaults() {
    static const ElisionTable table(default_prefixes(), default_suffixes());
    return table;
}

bool ElisionTable::is_prefix(const std::vector<Codepoint>& word) const {
    return std::find(prefix_cps_.begin(), prefix_cps_.end(), word) !=
           prefix_cps_.end();
}

bool ElisionTable::is_suffix(const std::vector<Codepoint>& tail) const {
    return std::find(suffix_cps_.begin(), suffix_cps_.end(), tail) !=
           suffix_cps_.end();
}

std::vector<PreToken> pretokenize(const NormalizedText& nt,
                                  const ElisionTable& elisions) {
    const std::vector<Codepoint>& cps = nt.chars;
    const std::size_t n = cps.size();
    std::vector<PreToken> out;
    out.reserve(n / 4 + 4);

    bool pending_boundary = true;  // start of text counts as a word start
    auto emit = [&](std::uint32_t begin, std::uint32_t end, PreTokenKind kind) {
        PreToken pt;
        pt.surface.assign(nt.slice_chars(begin, end));
        pt.begin = begin;
        pt.end = end;
        pt.kind = kind;
        if (kind == PreTokenKind::Newline || kind == PreTokenKind::Tab) {
            pt.word_boundary = false;
        } else {
            pt.word_boundary = pending_boundary;
        }
        pending_boundary = false;
        out.push_back(std::move(pt));
    };

    std::size_t i = 0;
    while (i < n) {
        Codepoint cp = cps[i];
        if (cp == U'\n') {
            emit(i, i + 1, PreTokenKind::Newline);
            ++i;
            continue;
        }
        if (cp == U'\t') {
            emit(i, i + 1, PreTokenKind::Tab);
            ++i;
            continue;
        }
        if (is_whitespace(cp)) {
            pending_boundary = true;
            ++i;
            continue;
        }
        if (is_emoji_atom(cp)) {
            emit(i, i + 1, PreTokenKind::Emoji);
            ++i;
            continue;
        }
        if (is_ascii_digit(cp)) {
            std::size_t run_end = i + 1;
            while (run_end < n && is_ascii_digit(cps[run_end])) {
                ++run_end;
            }
            // Left-to-right chunks of at most two digits.
            while (i < run_end) {
                std::size_t chunk = std::min<std::size_t>(2, run_end - i);
                emit(i, i + chunk, PreTokenKind::NumberChunk);
                i += chunk;
            }
            continue;
        }
        if (is_word_char(cp)) {
            std::size_t run_end = i + 1;
            while (run_end < n && is_word_char(cps[run_end])) {
                ++run_end;
            }
            if (run_end < n && is_apostrophe(cps[run_end])) {
                if (elisions.is_prefix(lowercased(cps, i, run_end))) {
                    emit(i, run_end + 1, PreTokenKind::Elision);
                    i = run_end + 1;
                    continue;
                }
                // Suffix elision: word + apostrophe + listed tail ending the
                // letter run ("John's", "don't").
                std::size_t tail_end = run_end + 1;
                while (tail_end < n && is_word_char(cps[tail_end])) {
                    ++tail_end;
                }
                bool run_closed =
                    tail_end == n || (!is_word_char(cps[tail_end]) &&
                                      !is_ascii_digit(cps[tail_end]));
                if (tail_end > run_end + 1 && run_closed &&
                    elisions.is_suffix(
                        lowercased(cps, run_end + 1, tail_end))) {
                    emit(i, run_end, PreTokenKind::Word);
                    emit(run_end, tail_end, PreTokenKind::Word);
                    i = tail_end;
                    continue;
                }
            }
            emit(i, run_end, PreTokenKind::Word);
            i = run_end;
            continue;
        }
        // Everything else (punctuation, symbols, non-ASCII numerals, stray
        // format characters) is isolated one codepoint at a time.
        emit(i, i + 1, PreTokenKind::Punctuation);
        ++i;
    }
    return out;
}

std::string rebuild(std::span<const PreToken> pretokens) {
    std::string text;
    for (std::size_t i = 0; i < pretokens.size(); ++i) {
        if (i > 0 && pretokens[i].word_boundary) {
            text.push_back(' ');
        }
        text += pretokens[i].surface;
    }
    return text;
}

}  // namespace frtok
