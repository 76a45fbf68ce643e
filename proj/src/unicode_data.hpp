#pragma once

#include <cstddef>
#include <cstdint>

namespace frtok::unidata {

// Flag bits carried by kRanges.
enum : std::uint16_t {
    kFlagLetter = 1 << 0,
    kFlagMark = 1 << 1,
    kFlagNumber = 1 << 2,
    kFlagPunct = 1 << 3,
    kFlagSymbol = 1 << 4,
    kFlagSpace = 1 << 5,
    kFlagPictographic = 1 << 6,
    kFlagCompSecond = 1 << 7,
    // Codepoint is NFC-inert: no combining class, never the second element
    // of a canonical composition, and already in NFC form.
    kFlagNfcSkip = 1 << 8,
};

struct CharRange {
    char32_t first;
    char32_t last;
    std::uint16_t flags;
};

struct CombiningClass {
    char32_t cp;
    std::uint8_t ccc;
};

struct Decomposition {
    char32_t cp;
    std::uint32_t offset;
    std::uint8_t length;
};

struct Composition {
    std::uint64_t key;  // (first << 32) | second
    char32_t composed;
};

struct CaseMapping {
    char32_t cp;
    char32_t lower;
};

extern const CharRange kRanges[];
extern const std::size_t kRangeCount;
extern const CombiningClass kCombiningClasses[];
extern const std::size_t kCombiningClassCount;
extern const Decomposition kDecompositions[];
extern const std::size_t kDecompositionCount;
extern const char32_t kDecompositionData[];
extern const Composition kCompositions[];
extern const std::size_t kCompositionCount;
extern const CaseMapping kSimpleLower[];
extern const std::size_t kSimpleLowerCount;

}  // namespace frtok::unidata
