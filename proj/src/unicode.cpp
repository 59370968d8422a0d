#include "rrqa/unicode.hpp"

#include <algorithm>

namespace rrqa::uni {

namespace {

#include "unicode_tables.inc"

bool in_ranges(uint32_t cp, const uint32_t ranges[][2], size_t count) {
    size_t lo = 0, hi = count;
    while (lo < hi) {
        size_t mid = (lo + hi) / 2;
        if (cp > ranges[mid][1]) {
            lo = mid + 1;
        } else if (cp < ranges[mid][0]) {
            hi = mid;
        } else {
            return true;
        }
    }
    return false;
}

}  // namespace

size_t decode(std::string_view text, size_t pos, uint32_t& cp) {
    const auto b = [&](size_t i) { return static_cast<uint8_t>(text[i]); };
    uint8_t c0 = b(pos);
    if (c0 < 0x80) {
        cp = c0;
        return 1;
    }
    size_t len = text.size();
    if ((c0 >> 5) == 0x6 && pos + 1 < len) {
        cp = ((c0 & 0x1Fu) << 6) | (b(pos + 1) & 0x3Fu);
        return 2;
    }
    if ((c0 >> 4) == 0xE && pos + 2 < len) {
        cp = ((c0 & 0x0Fu) << 12) | ((b(pos + 1) & 0x3Fu) << 6) | (b(pos + 2) & 0x3Fu);
        return 3;
    }
    if ((c0 >> 3) == 0x1E && pos + 3 < len) {
        cp = ((c0 & 0x07u) << 18) | ((b(pos + 1) & 0x3Fu) << 12) |
             ((b(pos + 2) & 0x3Fu) << 6) | (b(pos + 3) & 0x3Fu);
        return 4;
    }
    cp = c0;  // invalid sequence: fall back to a single byte
    return 1;
}

void append(std::string& out, uint32_t cp) {
    if (cp <= 0x7F) {
        out.push_back(static_cast<char>(cp));
    } else if (cp <= 0x7FF) {
        out.push_back(static_cast<char>(0xC0 | (cp >> 6)));
        out.push_back(static_cast<char>(0x80 | (cp & 0x3F)));
    } else if (cp <= 0xFFFF) {
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

bool is_letter(uint32_t cp) {
    if (cp < 0x80) return (cp >= 'A' && cp <= 'Z') || (cp >= 'a' && cp <= 'z');
    return in_ranges(cp, kLetterRanges, kLetterRanges_count);
}

bool is_digit(uint32_t cp) {
    if (cp < 0x80) return cp >= '0' && cp <= '9';
    return in_ranges(cp, kNumberRanges, kNumberRanges_count);
}

bool is_alnum(uint32_t cp) {
    return is_letter(cp) || is_digit(cp);
}

bool is_space(uint32_t cp) {
    if (cp < 0x80) return cp == ' ' || (cp >= '\t' && cp <= '\r');
    const uint32_t* begin = kSpaceCodepoints;
    const uint32_t* end = kSpaceCodepoints + kSpaceCodepoints_count;
    return std::binary_search(begin, end, cp);
}

uint32_t to_lower(uint32_t cp) {
    if (cp < 0x80) {
        if (cp >= 'A' && cp <= 'Z') return cp + 32;
        return cp;
    }
    size_t lo = 0, hi = kLowerPairs_count;
    while (lo < hi) {
        size_t mid = (lo + hi) / 2;
        if (kLowerPairs[mid][0] < cp) {
            lo = mid + 1;
        } else if (kLowerPairs[mid][0] > cp) {
            hi = mid;
        } else {
            return kLowerPairs[mid][1];
        }
    }
    return cp;
}

}  // namespace rrqa::uni
