#!/usr/bin/env python3
"""Generate compact Unicode classification tables (from Python's UCD)."""
import sys
import unicodedata


def ranges_for(pred):
    out = []
    start = None
    for cp in range(0x110000):
        if pred(cp):
            if start is None:
                start = cp
        else:
            if start is not None:
                out.append((start, cp - 1))
                start = None
    if start is not None:
        out.append((start, 0x10FFFF))
    return out


def cat(cp):
    return unicodedata.category(chr(cp))


letters = ranges_for(lambda cp: cat(cp).startswith("L"))
numbers = ranges_for(lambda cp: cat(cp).startswith("N"))
spaces = sorted(cp for cp in range(0x110000) if chr(cp).isspace())

lower_pairs = []
for cp in range(0x110000):
    c = chr(cp)
    l = c.lower()
    if len(l) == 1 and l != c:
        lower_pairs.append((cp, ord(l)))


def emit_ranges(name, ranges, f):
    f.write(f"inline constexpr uint32_t {name}[][2] = {{\n")
    for i in range(0, len(ranges), 6):
        row = ranges[i:i + 6]
        f.write("    " + " ".join(f"{{0x{a:X}, 0x{b:X}}}," for a, b in row) + "\n")
    f.write("};\n")
    f.write(f"inline constexpr size_t {name}_count = {len(ranges)};\n\n")


with open(sys.argv[1], "w") as f:
    f.write("// Generated from the Unicode Character Database (Python %s unicodedata %s).\n"
            % (sys.version.split()[0], unicodedata.unidata_version))
    f.write("// Do not edit by hand; regenerate with tools/gen_unicode_tables.py.\n\n")
    emit_ranges("kLetterRanges", letters, f)
    emit_ranges("kNumberRanges", numbers, f)
    f.write("inline constexpr uint32_t kSpaceCodepoints[] = {\n    ")
    f.write(", ".join(f"0x{cp:X}" for cp in spaces))
    f.write("\n};\n")
    f.write(f"inline constexpr size_t kSpaceCodepoints_count = {len(spaces)};\n\n")
    f.write("inline constexpr uint32_t kLowerPairs[][2] = {\n")
    for i in range(0, len(lower_pairs), 6):
        row = lower_pairs[i:i + 6]
        f.write("    " + " ".join(f"{{0x{a:X}, 0x{b:X}}}," for a, b in row) + "\n")
    f.write("};\n")
    f.write(f"inline constexpr size_t kLowerPairs_count = {len(lower_pairs)};\n")

print(f"letters={len(letters)} numbers={len(numbers)} spaces={len(spaces)} lower={len(lower_pairs)}")
