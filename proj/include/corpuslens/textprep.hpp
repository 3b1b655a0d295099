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

#include <filesystem>
#include <optional>
#include <string>
#include <string_view>
#include <unordered_map>
#include <unordered_set>
#include <vector>

#include "corpuslens/corpus.hpp"

namespace corpuslens {

/// Coarse part-of-speech tags. OTHER covers closed-class (function) words.
enum class PosTag { Noun, Verb, Adj, Adv, Other };

std::string_view to_string(PosTag tag);
std::optional<PosTag> parse_pos_tag(std::string_view text);

struct Token {
    std::string surface;
    std::string normalized; // lowercase of surface
    PosTag pos = PosTag::Other;

    bool operator==(const Token&) const = default;
};

/// A set of lowercase stop words. Entries are lowercased on the way in so the
/// invariant holds regardless of the source file's casing.
class StopList {
public:
    StopList() = default;
    explicit StopList(const std::vector<std::string>& words);

    /// One word per line; blank lines and lines starting with '#' are skipped.
    static StopList from_file(const std::filesystem::path& path);

    bool contains(std::string_view word) const;
    std::size_t size() const { return words_.size(); }
    bool empty() const { return words_.empty(); }

private:
    std::unordered_set<std::string> words_;
};

/// Open-class word -> tag lookup backing the rule tagger. The closed-class
/// word list lives in the tagger itself; this holds the bundled TSV entries
/// (and any caller-added ones).
class TaggerLexicon {
public:
    TaggerLexicon() = default;

    /// TSV rows `word<TAB>TAG` with TAG one of NOUN, VERB, ADJ, ADV, OTHER.
    static TaggerLexicon from_file(const std::filesystem::path& path);

    void insert(std::string word, PosTag tag);
    std::optional<PosTag> lookup(std::string_view word) const;
    std::size_t size() const { return entries_.size(); }

private:
    std::unordered_map<std::string, PosTag> entries_;
};

/// Splits `text` into word tokens. A token is a maximal run of letters and
/// internal apostrophes; every other character separates tokens, so digits,
/// punctuation, and symbols never appear. Leading/trailing apostrophes are
/// stripped. U+2019 is treated as an apostrophe. Each token's `normalized`
/// field carries the lowercase form; `pos` is left at Other.
std::vector<Token> tokenize(std::string_view text);

/// Drops tokens whose normalized form is in `stops`. Filtering uses the
/// normalized (lowercase) form, so it does not depend on where lowercasing
/// happens relative to stop-word removal.
std::vector<Token> normalize_and_filter(std::vector<Token> tokens, const StopList& stops);

/// True if the word belongs to the built-in closed-class list (determiners,
/// pronouns, prepositions, conjunctions, auxiliaries).
bool is_closed_class(std::string_view word);

/// Tags one normalized word: closed-class list, then `lexicon`, then suffix
/// heuristics (-ly ADV; -ing/-ed VERB; -ous/-ful/-ive/-al ADJ), default NOUN.
PosTag tag_word(std::string_view normalized, const TaggerLexicon& lexicon);

/// Populates the `pos` field of every token. Total: every token gets a tag.
void pos_tag(std::vector<Token>& tokens, const TaggerLexicon& lexicon);

/// Token stream of one document after the full pipeline.
struct PreparedDocument {
    std::string doc_id;
    std::vector<Token> tokens;
};

/// tokenize -> normalize_and_filter -> pos_tag.
PreparedDocument prepare(const Document& doc, const StopList& stops,
                         const TaggerLexicon& tagger);

std::vector<PreparedDocument> prepare_corpus(const Corpus& corpus, const StopList& stops,
                                             const TaggerLexicon& tagger);

/// Bundled data directory: $CORPUS_LENS_DATA if set, else the compile-time
/// default.
std::filesystem::path data_dir();

/// The bundled 318-word English stop list.
StopList default_stoplist();

/// The bundled open-class tagger lexicon.
TaggerLexicon default_tagger_lexicon();

} // namespace corpuslens
