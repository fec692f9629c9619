#!/usr/bin/env python3
"""Regenerates core/src/unicode_tables.inc from Python's unicodedata.

Covers codepoints below LIMIT (Latin, Greek, Cyrillic, Armenian, Hebrew,
combining marks, Latin Extended Additional). Codepoints at or above LIMIT
pass through normalization unchanged, which is adequate for romanized
bibliographic name data.

Usage: python3 scripts/gen_unicode_tables.py > core/src/unicode_tables.inc
"""

import sys
import unicodedata

LIMIT = 0x3000


def cp_list(s):
    return [ord(c) for c in s]


def main():
    upper = []  # (cp, [target cps], max 3)
    for cp in range(LIMIT):
        c = chr(cp)
        u = c.upper()
        if u != c:
            t = cp_list(u)
            assert len(t) <= 3, hex(cp)
            upper.append((cp, t))

    decomp = []  # full canonical decomposition (NFD), (cp, [target cps], max 4)
    for cp in range(LIMIT):
        c = chr(cp)
        d = unicodedata.normalize("NFD", c)
        if d != c:
            t = cp_list(d)
            assert len(t) <= 4, hex(cp)
            decomp.append((cp, t))

    comp = []  # primary composites: (first, second) -> composed
    for cp in range(LIMIT):
        c = chr(cp)
        d = unicodedata.decomposition(c)
        if not d or d.startswith("<"):
            continue
        parts = [int(h, 16) for h in d.split()]
        if len(parts) != 2:
            continue
        pair = chr(parts[0]) + chr(parts[1])
        if unicodedata.normalize("NFC", pair) == c:  # skips composition exclusions
            comp.append((parts[0], parts[1], cp))
    comp.sort()

    ccc = []  # nonzero canonical combining classes
    for cp in range(LIMIT):
        k = unicodedata.combining(chr(cp))
        if k:
            ccc.append((cp, k))

    out = sys.stdout
    out.write("// Generated by scripts/gen_unicode_tables.py -- do not edit by hand.\n")
    out.write("// Unicode %s, codepoints below U+%04X.\n\n" % (unicodedata.unidata_version, LIMIT))

    out.write("struct UpperMapping { char32_t cp; char32_t to[3]; };\n")
    out.write("struct Decomposition { char32_t cp; char32_t to[4]; unsigned char len; };\n")
    out.write("struct CompositionPair { char32_t first; char32_t second; char32_t composed; };\n")
    out.write("struct CombiningClassEntry { char32_t cp; unsigned char ccc; };\n\n")

    out.write("constexpr UpperMapping kUpperMap[] = {\n")
    for cp, t in upper:
        padded = t + [0] * (3 - len(t))
        out.write("  {0x%04X, {0x%04X, 0x%04X, 0x%04X}},\n" % (cp, *padded))
    out.write("};\n\n")

    out.write("constexpr Decomposition kDecompositions[] = {\n")
    for cp, t in decomp:
        padded = t + [0] * (4 - len(t))
        out.write("  {0x%04X, {0x%04X, 0x%04X, 0x%04X, 0x%04X}, %d},\n" % (cp, *padded, len(t)))
    out.write("};\n\n")

    out.write("constexpr CompositionPair kCompositionPairs[] = {\n")
    for a, b, c in comp:
        out.write("  {0x%04X, 0x%04X, 0x%04X},\n" % (a, b, c))
    out.write("};\n\n")

    out.write("constexpr CombiningClassEntry kCombiningClasses[] = {\n")
    for cp, k in ccc:
        out.write("  {0x%04X, %d},\n" % (cp, k))
    out.write("};\n")


if __name__ == "__main__":
    main()
