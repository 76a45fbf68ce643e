#!/usr/bin/env python3
"""Generates src/unicode_data.cpp from the Python unicodedata + regex modules.

Run from the repository root:

    python3 scripts/gen_unicode_data.py > src/unicode_data.cpp

The output is committed so the C++ build does not depend on Python.
"""

import sys
import unicodedata

import regex

MAX_CP = 0x110000
HANGUL_S_BASE = 0xAC00
HANGUL_S_COUNT = 11172

FLAG_LETTER = 1 << 0
FLAG_MARK = 1 << 1
FLAG_NUMBER = 1 << 2
FLAG_PUNCT = 1 << 3
FLAG_SYMBOL = 1 << 4
FLAG_SPACE = 1 << 5
FLAG_PICTOGRAPHIC = 1 << 6
FLAG_COMP_SECOND = 1 << 7
FLAG_NFC_SKIP = 1 << 8

EP_RE = regex.compile(r"\p{Extended_Pictographic}")
WS_RE = regex.compile(r"\p{White_Space}")


def is_hangul_syllable(cp: int) -> bool:
    return HANGUL_S_BASE <= cp < HANGUL_S_BASE + HANGUL_S_COUNT


def canonical_decomposition(cp: int):
    """Single-level canonical decomposition, or None."""
    if is_hangul_syllable(cp):
        return None  # algorithmic in C++
    raw = unicodedata.decomposition(chr(cp))
    if not raw or raw.startswith("<"):
        return None
    return [int(part, 16) for part in raw.split()]


def full_decomposition(cp: int):
    parts = canonical_decomposition(cp)
    if parts is None:
        return None
    out = []
    for part in parts:
        sub = full_decomposition(part)
        out.extend(sub if sub is not None else [part])
    return out


def main() -> None:
    ccc = {}
    decomp = {}
    comp_pairs = {}
    comp_second = set()

    for cp in range(MAX_CP):
        if 0xD800 <= cp <= 0xDFFF:
            continue
        ch = chr(cp)
        k = unicodedata.combining(ch)
        if k:
            ccc[cp] = k
        full = full_decomposition(cp)
        if full is not None:
            decomp[cp] = full
        single = canonical_decomposition(cp)
        if single is not None and len(single) == 2:
            a, b = single
            # Pairs that do not recompose (composition exclusions) are
            # filtered out by round-tripping through the stdlib NFC.
            if unicodedata.normalize("NFC", chr(a) + chr(b)) == ch:
                comp_pairs[(a, b)] = cp
                comp_second.add(b)

    def flags_for(cp: int) -> int:
        if 0xD800 <= cp <= 0xDFFF:
            return 0
        ch = chr(cp)
        cat = unicodedata.category(ch)
        f = 0
        if cat.startswith("L"):
            f |= FLAG_LETTER
        elif cat.startswith("M"):
            f |= FLAG_MARK
        elif cat.startswith("N"):
            f |= FLAG_NUMBER
        elif cat.startswith("P"):
            f |= FLAG_PUNCT
        elif cat.startswith("S"):
            f |= FLAG_SYMBOL
        if WS_RE.match(ch):
            f |= FLAG_SPACE
        if EP_RE.match(ch):
            f |= FLAG_PICTOGRAPHIC
        if cp in comp_second:
            f |= FLAG_COMP_SECOND
        if (
            cp not in ccc
            and cp not in comp_second
            and not is_hangul_syllable(cp)
            and unicodedata.is_normalized("NFC", ch)
        ):
            f |= FLAG_NFC_SKIP
        return f

    ranges = []
    run_start = 0
    run_flags = flags_for(0)
    for cp in range(1, MAX_CP):
        f = flags_for(cp)
        if f != run_flags:
            if run_flags:
                ranges.append((run_start, cp - 1, run_flags))
            run_start = cp
            run_flags = f
    if run_flags:
        ranges.append((run_start, MAX_CP - 1, run_flags))

    lower = {}
    for cp in range(0x41, 0x250):
        low = chr(cp).lower()
        if len(low) == 1 and ord(low) != cp:
            lower[cp] = ord(low)

    flat = []
    decomp_index = []
    for cp in sorted(decomp):
        seq = decomp[cp]
        decomp_index.append((cp, len(flat), len(seq)))
        flat.extend(seq)

    out = sys.stdout
    out.write("// Generated by scripts/gen_unicode_data.py -- do not edit.\n")
    out.write(f"// Unicode data version {unicodedata.unidata_version}.\n\n")
    out.write('#include "unicode_data.hpp"\n\n')
    out.write("namespace frtok::unidata {\n\n")

    out.write(f"const CharRange kRanges[] = {{\n")
    for first, last, f in ranges:
        out.write(f"    {{0x{first:X}, 0x{last:X}, 0x{f:X}}},\n")
    out.write("};\n")
    out.write(f"const std::size_t kRangeCount = {len(ranges)};\n\n")

    out.write("const CombiningClass kCombiningClasses[] = {\n")
    for cp in sorted(ccc):
        out.write(f"    {{0x{cp:X}, {ccc[cp]}}},\n")
    out.write("};\n")
    out.write(f"const std::size_t kCombiningClassCount = {len(ccc)};\n\n")

    out.write("const Decomposition kDecompositions[] = {\n")
    for cp, off, n in decomp_index:
        out.write(f"    {{0x{cp:X}, {off}, {n}}},\n")
    out.write("};\n")
    out.write(f"const std::size_t kDecompositionCount = {len(decomp_index)};\n\n")

    out.write("const char32_t kDecompositionData[] = {\n")
    for i in range(0, len(flat), 8):
        row = ", ".join(f"0x{v:X}" for v in flat[i : i + 8])
        out.write(f"    {row},\n")
    out.write("};\n\n")

    out.write("const Composition kCompositions[] = {\n")
    for (a, b), c in sorted(comp_pairs.items()):
        key = (a << 32) | b
        out.write(f"    {{0x{key:X}ULL, 0x{c:X}}},\n")
    out.write("};\n")
    out.write(f"const std::size_t kCompositionCount = {len(comp_pairs)};\n\n")

    out.write("const CaseMapping kSimpleLower[] = {\n")
    for cp in sorted(lower):
        out.write(f"    {{0x{cp:X}, 0x{lower[cp]:X}}},\n")
    out.write("};\n")
    out.write(f"const std::size_t kSimpleLowerCount = {len(lower)};\n\n")

    out.write("}  // namespace frtok::unidata\n")


if __name__ == "__main__":
    main()
