#include "frtok/unicode.hpp"

#include <algorithm>
#include <array>

#include "frtok/errors.hpp"
#include "unicode_data.hpp"

namespace frtok {

namespace {

using namespace unidata;

std::uint16_t flags_of(Codepoint cp) {
    // ASCII is hot enough to deserve a direct table.
    static const std::array<std::uint16_t, 128> ascii = [] {
        std::array<std::uint16_t, 128> t{};
        for (std::size_t i = 0; i < kRangeCount && kRanges[i].first < 128; ++i) {
            for (char32_t c = kRanges[i].first;
                 c <= kRanges[i].last && c < 128; ++c) {
                t[c] = kRanges[i].flags;
            }
        }
        return t;
    }();
    if (cp < 128) {
        return ascii[cp];
    }
    std::size_t lo = 0;
    std::size_t hi = kRangeCount;
    while (lo < hi) {
        std::size_t mid = (lo + hi) / 2;
        if (kRanges[mid].last < cp) {
            lo = mid + 1;
        } else {
            hi = mid;
        }
    }
    if (lo < kRangeCount && kRanges[lo].first <= cp && cp <= kRanges[lo].last) {
        return kRanges[lo].flags;
    }
    return 0;
}

constexpr Codepoint kHangulSBase = 0xAC00;
constexpr Codepoint kHangulLBase = 0x1100;
constexpr Codepoint kHangulVBase = 0x1161;
constexpr Codepoint kHangulTBase = 0x11A7;
constexpr int kHangulLCount = 19;
constexpr int kHangulVCount = 21;
constexpr int kHangulTCount = 28;
constexpr int kHangulNCount = kHangulVCount * kHangulTCount;
constexpr int kHangulSCount = kHangulLCount * kHangulNCount;

bool is_hangul_syllable(Codepoint cp) {
    return cp >= kHangulSBase && cp < kHangulSBase + kHangulSCount;
}

const Decomposition* find_decomposition(Codepoint cp) {
    std::size_t lo = 0;
    std::size_t hi = kDecompositionCount;
    while (lo < hi) {
        std::size_t mid = (lo + hi) / 2;
        if (kDecompositions[mid].cp < cp) {
            lo = mid + 1;
        } else {
            hi = mid;
        }
    }
    if (lo < kDecompositionCount && kDecompositions[lo].cp == cp) {
        return &kDecompositions[lo];
    }
    return nullptr;
}

Codepoint compose_pair(Codepoint a, Codepoint b) {
    // Hangul LV / LVT composition is algorithmic.
    if (a >= kHangulLBase && a < kHangulLBase + kHangulLCount &&
        b >= kHangulVBase && b < kHangulVBase + kHangulVCount) {
        int l = static_cast<int>(a - kHangulLBase);
        int v = static_cast<int>(b - kHangulVBase);
        return kHangulSBase + (l * kHangulVCount + v) * kHangulTCount;
    }
    if (is_hangul_syllable(a) && (a - kHangulSBase) % kHangulTCount == 0 &&
        b > kHangulTBase && b < kHangulTBase + kHangulTCount) {
        return a + (b - kHangulTBase);
    }
    std::uint64_t key = (static_cast<std::uint64_t>(a) << 32) | b;
    std::size_t lo = 0;
    std::size_t hi = kCompositionCount;
    while (lo < hi) {
        std::size_t mid = (lo + hi) / 2;
        if (kCompositions[mid].key < key) {
            lo = mid + 1;
        } else {
            hi = mid;
        }
    }
    if (lo < kCompositionCount && kCompositions[lo].key == key) {
        return kCompositions[lo].composed;
    }
    return 0;
}

void decompose_into(const NfcChar& c, std::vector<NfcChar>& out) {
    if (is_hangul_syllable(c.cp)) {
        int index = static_cast<int>(c.cp - kHangulSBase);
        Codepoint l = kHangulLBase + index / kHangulNCount;
        Codepoint v = kHangulVBase + (index % kHangulNCount) / kHangulTCount;
        int t = index % kHangulTCount;
        out.push_back({l, c.byte_begin, c.byte_end});
        out.push_back({v, c.byte_begin, c.byte_end});
        if (t != 0) {
            out.push_back({kHangulTBase + t, c.byte_begin, c.byte_end});
        }
        return;
    }
    if (const Decomposition* d = find_decomposition(c.cp)) {
        for (std::uint8_t i = 0; i < d->length; ++i) {
            out.push_back(
                {kDecompositionData[d->offset + i], c.byte_begin, c.byte_end});
        }
        return;
    }
    out.push_back(c);
}

}  // namespace

std::vector<DecodedChar> decode_utf8(std::string_view text) {
    std::vector<DecodedChar> out;
    out.reserve(text.size());
    std::size_t i = 0;
    const std::size_t n = text.size();
    while (i < n) {
        unsigned char b0 = static_cast<unsigned char>(text[i]);
        if (b0 < 0x80) {
            out.push_back({b0, static_cast<std::uint32_t>(i),
                           static_cast<std::uint32_t>(i + 1)});
            ++i;
            continue;
        }
        std::size_t len;
        Codepoint cp;
        Codepoint min_cp;
        if ((b0 & 0xE0) == 0xC0) {
            len = 2;
            cp = b0 & 0x1F;
            min_cp = 0x80;
        } else if ((b0 & 0xF0) == 0xE0) {
            len = 3;
            cp = b0 & 0x0F;
            min_cp = 0x800;
        } else if ((b0 & 0xF8) == 0xF0) {
            len = 4;
            cp = b0 & 0x07;
            min_cp = 0x10000;
        } else {
            throw InvalidUtf8Error(i);
        }
        if (i + len > n) {
            throw InvalidUtf8Error(i);
        }
        for (std::size_t k = 1; k < len; ++k) {
            unsigned char bk = static_cast<unsigned char>(text[i + k]);
            if ((bk & 0xC0) != 0x80) {
                throw InvalidUtf8Error(i + k);
            }
            cp = (cp << 6) | (bk & 0x3F);
        }
        if (cp < min_cp || cp > kMaxCodepoint ||
            (cp >= 0xD800 && cp <= 0xDFFF)) {
            throw InvalidUtf8Error(i);
        }
        out.push_back({cp, static_cast<std::uint32_t>(i),
                       static_cast<std::uint32_t>(i + len)});
        i += len;
    }
    return out;
}

void append_utf8(std::string& out, Codepoint cp) {
    if (cp < 0x80) {
        out.push_back(static_cast<char>(cp));
    } else if (cp < 0x800) {
        out.push_back(static_cast<char>(0xC0 | (cp >> 6)));
        out.push_back(static_cast<char>(0x80 | (cp & 0x3F)));
    } else if (cp < 0x10000) {
        out.push_back(static_cast<char>(0xE0 | (cp >> 12)));
        out.push_back(static_cast<char>(0x80 | ((cp >> 6) & 0x3F)));
        out.push_back(static_cast<char>(0x80 | (cp & 0x3F)));
    } else {
        out.push_back(static_cast<char>(0xF0 | (cp >> 18)));
        out.push_back(static_cast<char>(0x80 | ((cp >> 12) & 0x3F)));
        out.push_back(static_cast<char>(0x80 | ((cp >> 6) & 0x3F)));
        out.push_back(static_cast<char>(0x80 | (cp & 0x3F)));
    }
}

std::string to_utf8(Codepoint cp) {
    std::string s;
    append_utf8(s, cp);
    return s;
}

std::string to_utf8(const std::vector<Codepoint>& cps) {
    std::string s;
    s.reserve(cps.size());
    for (Codepoint cp : cps) {
        append_utf8(s, cp);
    }
    return s;
}

bool is_letter(Codepoint cp) { return flags_of(cp) & kFlagLetter; }
bool is_mark(Codepoint cp) { return flags_of(cp) & kFlagMark; }
bool is_number(Codepoint cp) { return flags_of(cp) & kFlagNumber; }
bool is_punctuation(Codepoint cp) { return flags_of(cp) & kFlagPunct; }
bool is_symbol(Codepoint cp) { return flags_of(cp) & kFlagSymbol; }
bool is_whitespace(Codepoint cp) { return flags_of(cp) & kFlagSpace; }
bool is_extended_pictographic(Codepoint cp) {
    return flags_of(cp) & kFlagPictographic;
}
bool is_control(Codepoint cp) {
    return cp < 0x20 || cp == 0x7F || (cp >= 0x80 && cp <= 0x9F);
}

Codepoint simple_lowercase(Codepoint cp) {
    if (cp < 0x41) {
        return cp;
    }
    if (cp <= 0x5A) {
        return cp + 0x20;
    }
    std::size_t lo = 0;
    std::size_t hi = unidata::kSimpleLowerCount;
    while (lo < hi) {
        std::size_t mid = (lo + hi) / 2;
        if (unidata::kSimpleLower[mid].cp < cp) {
            lo = mid + 1;
        } else {
            hi = mid;
        }
    }
    if (lo < unidata::kSimpleLowerCount && unidata::kSimpleLower[lo].cp == cp) {
        return unidata::kSimpleLower[lo].lower;
    }
    return cp;
}

std::uint8_t combining_class(Codepoint cp) {
    if (cp < 0x300) {
        return 0;
    }
    std::size_t lo = 0;
    std::size_t hi = unidata::kCombiningClassCount;
    while (lo < hi) {
        std::size_t mid = (lo + hi) / 2;
        if (unidata::kCombiningClasses[mid].cp < cp) {
            lo = mid + 1;
        } else {
            hi = mid;
        }
    }
    if (lo < unidata::kCombiningClassCount &&
        unidata::kCombiningClasses[lo].cp == cp) {
        return unidata::kCombiningClasses[lo].ccc;
    }
    return 0;
}

bool nfc_inert(Codepoint cp) { return flags_of(cp) & kFlagNfcSkip; }

std::vector<NfcChar> nfc_normalize(const std::vector<NfcChar>& input) {
    // Full canonical decomposition, spans inherited from the source char.
    std::vector<NfcChar> buf;
    buf.reserve(input.size() + 8);
    for (const NfcChar& c : input) {
        decompose_into(c, buf);
    }

    // Canonical ordering: stable sort of each maximal nonzero-ccc run.
    std::size_t i = 0;
    while (i < buf.size()) {
        if (combining_class(buf[i].cp) == 0) {
            ++i;
            continue;
        }
        std::size_t j = i + 1;
        while (j < buf.size() && combining_class(buf[j].cp) != 0) {
            ++j;
        }
        std::stable_sort(buf.begin() + i, buf.begin() + j,
                         [](const NfcChar& a, const NfcChar& b) {
                             return combining_class(a.cp) <
                                    combining_class(b.cp);
                         });
        i = j;
    }

    // Canonical composition.
    std::vector<NfcChar> out;
    out.reserve(buf.size());
    std::ptrdiff_t last_starter = -1;
    for (const NfcChar& c : buf) {
        std::uint8_t ccc = combining_class(c.cp);
        if (last_starter >= 0) {
            bool blocked = false;
            if (static_cast<std::size_t>(last_starter) + 1 < out.size()) {
                std::uint8_t prev_ccc = combining_class(out.back().cp);
                blocked = prev_ccc >= ccc;
            }
            if (!blocked) {
                if (Codepoint composed = compose_pair(
                        out[last_starter].cp, c.cp)) {
                    out[last_starter].cp = composed;
                    out[last_starter].byte_begin =
                        std::min(out[last_starter].byte_begin, c.byte_begin);
                    out[last_starter].byte_end =
                        std::max(out[last_starter].byte_end, c.byte_end);
                    continue;
                }
            }
        }
        if (ccc == 0) {
            last_starter = static_cast<std::ptrdiff_t>(out.size());
        }
        out.push_back(c);
    }

    // Keep alignment spans monotonically non-decreasing in start: if
    // reordering scrambled a cluster, widen every member to the cluster hull.
    i = 0;
    while (i < out.size()) {
        std::size_t j = i + 1;
        while (j < out.size() && combining_class(out[j].cp) != 0) {
            ++j;
        }
        bool monotone = true;
        for (std::size_t k = i + 1; k < j; ++k) {
            if (out[k].byte_begin < out[k - 1].byte_begin) {
                monotone = false;
                break;
            }
        }
        if (!monotone) {
            std::uint32_t lo_b = out[i].byte_begin;
            std::uint32_t hi_b = out[i].byte_end;
            for (std::size_t k = i; k < j; ++k) {
                lo_b = std::min(lo_b, out[k].byte_begin);
                hi_b = std::max(hi_b, out[k].byte_end);
            }
            for (std::size_t k = i; k < j; ++k) {
                out[k].byte_begin = lo_b;
                out[k].byte_end = hi_b;
            }
        }
        i = j;
    }
    return out;
}

}  // namespace frtok
