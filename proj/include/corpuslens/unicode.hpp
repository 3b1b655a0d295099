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

#pragma once

#include <cstddef>
#include <string>
#include <string_view>

namespace corpuslens::unicode {

inline constexpr char32_t kReplacementChar = 0xFFFD;

/// True if `text` is well-formed UTF-8 (rejects overlong forms, surrogates,
/// and out-of-range code points). On failure, `error_offset` (when non-null)
/// receives the byte offset of the first offending sequence.
bool validate_utf8(std::string_view text, std::size_t* error_offset = nullptr);

/// Decodes the code point starting at byte `pos`. Returns the number of bytes
/// consumed (>= 1) and stores the code point in `cp`. Malformed input decodes
/// to kReplacementChar one byte at a time.
std::size_t decode(std::string_view text, std::size_t pos, char32_t& cp);

/// Appends the UTF-8 encoding of `cp` to `out`.
void append_utf8(std::string& out, char32_t cp);

/// Word-character test used by the tokenizer: letters and combining marks.
/// ASCII is exact; beyond ASCII this is a pragmatic range-based approximation
/// that keeps letters of the major scripts (Latin incl. transliteration
/// diacritics, Greek, Cyrillic, Hebrew, Arabic, CJK) and splits on
/// punctuation, symbols, and digits of any script.
bool is_word_char(char32_t cp);

/// Simple lowercase mapping: ASCII plus the Latin-1, Latin Extended-A, Greek,
/// and Cyrillic blocks. Code points without a mapping pass through unchanged.
char32_t to_lower(char32_t cp);

/// Code-point-wise lowercase of a UTF-8 string.
std::string to_lower_copy(std::string_view text);

} // namespace corpuslens::unicode
