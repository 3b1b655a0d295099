/*
 * Copyright 2026 The corpus-lens Authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 * http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

#include "corpuslens/unicode.hpp"

namespace corpuslens::unicode {

namespace {

inline bool is_continuation(unsigned char b) { return (b & 0xC0) == 0x80; }

// Decodes one sequence; returns bytes consumed, 0 on malformed input.
std::size_t decode_one(std::string_view text, std::size_t pos, char32_t& cp) {
    const auto* bytes = reinterpret_cast<const unsigned char*>(text.data());
    const std::size_t n = text.size();
    const unsigned char b0 = bytes[pos];

    if (b0 < 0x80) {
        cp = b0;
        return 1;
    }
    if (b0 < 0xC2) return 0; // continuation byte or overlong lead
    if (b0 < 0xE0) {
        if (pos + 1 >= n || !is_continuation(bytes[pos + 1])) return 0;
        cp = (char32_t(b0 & 0x1F) << 6) | (bytes[pos + 1] & 0x3F);
        return 2;
    }
    if (b0 < 0xF0) {
        if (pos + 2 >= n || !is_continuation(bytes[pos + 1]) ||
            !is_continuation(bytes[pos + 2]))
            return 0;
        cp = (char32_t(b0 & 0x0F) << 12) | (char32_t(bytes[pos + 1] & 0x3F) << 6) |
             (bytes[pos + 2] & 0x3F);
        if (cp < 0x800) return 0;                  // overlong
        if (cp >= 0xD800 && cp <= 0xDFFF) return 0; // surrogate
        return 3;
    }
    if (b0 < 0xF5) {
        if (pos + 3 >= n || !is_continuation(bytes[pos + 1]) ||
            !is_continuation(bytes[pos + 2]) || !is_continuation(bytes[pos + 3]))
            return 0;
        cp = (char32_t(b0 & 0x07) << 18) | (char32_t(bytes[pos + 1] & 0x3F) << 12) |
             (char32_t(bytes[pos + 2] & 0x3F) << 6) | (bytes[pos + 3] & 0x3F);
        if (cp < 0x10000 || cp > 0x10FFFF) return 0;
        return 4;
    }
    return 0;
}

struct Range {
    char32_t lo, hi;
};

constexpr bool in_any(char32_t cp, const Range* ranges, std::size_t n) {
    for (std::size_t i = 0; i < n; ++i)
        if (cp >= ranges[i].lo && cp <= ranges[i].hi) return true;
    return false;
}

// Non-letter zones above ASCII: punctuation, symbols, and digit blocks that
// must split tokens even though they fall inside otherwise letter-heavy areas.
constexpr Range kNonLetter[] = {
    {0x0080, 0x00BF}, // Latin-1 punctuation and symbols
    {0x00D7, 0x00D7}, // multiplication sign
    {0x00F7, 0x00F7}, // division sign
    {0x0600, 0x060F}, // Arabic punctuation/signs
    {0x0660, 0x0669}, // Arabic-Indic digits
    {0x06D4, 0x06D4}, // Arabic full stop
    {0x06F0, 0x06F9}, // extended Arabic-Indic digits
    {0x0964, 0x096F}, // Devanagari danda + digits
    {0x2000, 0x206F}, // general punctuation
    {0x2070, 0x209F}, // superscripts and subscripts
    {0x20A0, 0x20CF}, // currency symbols
    {0x2100, 0x2BFF}, // letterlike symbols, arrows, math, misc symbols
    {0x2E00, 0x2E7F}, // supplemental punctuation
    {0x3000, 0x303F}, // CJK punctuation
    {0xFE10, 0xFE6F}, // vertical/small form punctuation
    {0xFEFF, 0xFEFF}, // zero-width no-break space / BOM
    {0xFF01, 0xFF20}, // fullwidth punctuation and digits
    {0xFF3B, 0xFF40}, //
    {0xFF5B, 0xFF65}, //
    {0xFFF0, 0xFFFF}, // specials (incl. replacement char)
};

} // namespace

bool validate_utf8(std::string_view text, std::size_t* error_offset) {
    std::size_t pos = 0;
    char32_t cp = 0;
    while (pos < text.size()) {
        const std::size_t consumed = decode_one(text, pos, cp);
        if (consumed == 0) {
            if (error_offset) *error_offset = pos;
            return false;
        }
        pos += consumed;
    }
    return true;
}

std::size_t decode(std::string_view text, std::size_t pos, char32_t& cp) {
    const std::size_t consumed = decode_one(text, pos, cp);
    if (consumed == 0) {
        cp = kReplacementChar;
        return 1;
    }
    return consumed;
}

void append_utf8(std::string& out, char32_t cp) {
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

bool is_word_char(char32_t cp) {
    if (cp < 0x80)
        return (cp >= 'A' && cp <= 'Z') || (cp >= 'a' && cp <= 'z');
    return !in_any(cp, kNonLetter, sizeof(kNonLetter) / sizeof(kNonLetter[0]));
}

char32_t to_lower(char32_t cp) {
    if (cp >= 'A' && cp <= 'Z') return cp + 0x20;
    if (cp >= 0xC0 && cp <= 0xDE && cp != 0xD7) return cp + 0x20; // Latin-1
    if (cp >= 0x100 && cp <= 0x137) return cp | 1;                // Latin Ext-A pairs
    if (cp >= 0x139 && cp <= 0x148) return (cp % 2 == 1) ? cp + 1 : cp;
    if (cp >= 0x14A && cp <= 0x177) return cp | 1;
    if (cp == 0x178) return 0xFF;
    if (cp >= 0x179 && cp <= 0x17E) return (cp % 2 == 1) ? cp + 1 : cp;
    if (cp >= 0x391 && cp <= 0x3A9 && cp != 0x3A2) return cp + 0x20; // Greek
    if (cp >= 0x410 && cp <= 0x42F) return cp + 0x20;                // Cyrillic
    if (cp >= 0x400 && cp <= 0x40F) return cp + 0x50;
    return cp;
}

std::string to_lower_copy(std::string_view text) {
    std::string out;
    out.reserve(text.size());
    std::size_t pos = 0;
    char32_t cp = 0;
    while (pos < text.size()) {
        pos += decode(text, pos, cp);
        append_utf8(out, to_lower(cp));
    }
    return out;
}

} // namespace corpuslens::unicode
