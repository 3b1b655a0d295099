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

#include <array>
#include <filesystem>
#include <optional>
#include <ostream>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

#include <Eigen/Dense>

#include "corpuslens/textprep.hpp"

namespace corpuslens {

inline constexpr std::size_t kEmotionCount = 8;

/// Fixed emotion axis order used everywhere scores appear.
inline constexpr std::array<std::string_view, kEmotionCount> kEmotionNames = {
    "AFRAID", "AMUSED", "ANGRY", "ANNOYED", "DONT_CARE", "HAPPY", "INSPIRED", "SAD",
};

std::optional<std::size_t> emotion_index(std::string_view name);

using EmotionVector = std::array<double, kEmotionCount>;

/// Word (optionally word+POS) -> 8 scores in [0, 1].
///
/// TSV layout: header `word<TAB>AFRAID<TAB>...<TAB>SAD`, then one row per
/// key. In POS-aware mode keys are `word#p` with p in {n, v, a, r} mapping to
/// NOUN, VERB, ADJ, ADV; in token mode keys are bare words. Keys are
/// lowercased on load.
class EmotionLexicon {
public:
    EmotionLexicon() = default;

    /// Parses and validates a lexicon file. Throws ValidationError (naming
    /// the line) for a bad header, wrong column count, unparseable or
    /// out-of-range scores, keys that do not match the chosen mode, or
    /// duplicate keys. An empty body after the header is a valid, empty
    /// lexicon.
    static EmotionLexicon load(const std::filesystem::path& path, bool pos_aware);

    /// Builds a lexicon directly from entries, skipping file validation (no
    /// [0, 1] range check). Keys must already match `pos_aware` form.
    static EmotionLexicon from_entries(std::unordered_map<std::string, EmotionVector> entries,
                                       bool pos_aware);

    /// Scores for a normalized word, or nullptr when there is no entry. In
    /// POS-aware mode the token's tag must match (OTHER never matches since
    /// lexicon keys carry only n/v/a/r).
    const EmotionVector* find(std::string_view word, PosTag pos) const;

    bool pos_aware() const { return pos_aware_; }
    std::size_t size() const { return entries_.size(); }
    bool empty() const { return entries_.empty(); }

    /// Writes the TSV form (header + rows sorted by key); loadable again with
    /// the same pos_aware flag.
    void write(std::ostream& out) const;

    const std::unordered_map<std::string, EmotionVector>& entries() const { return entries_; }

private:
    std::unordered_map<std::string, EmotionVector> entries_;
    bool pos_aware_ = false;
};

/// Normalized evoked-emotion distribution of one article.
struct EmotionProfile {
    EmotionVector scores{};      // sums to 1 when defined, all zeros otherwise
    std::size_t matched_tokens = 0;
    std::size_t total_tokens = 0;
    bool defined = false;
};

/// Sums lexicon scores over every matched token occurrence and L1-normalizes
/// across the 8 emotions. A document with no matches (or only zero-score
/// matches) comes back with defined == false and zero scores, never NaN.
EmotionProfile score_document(const PreparedDocument& doc, const EmotionLexicon& lexicon);

struct CorpusEmotionProfile {
    EmotionProfile profile;
    std::size_t included_documents = 0;
    std::size_t excluded_documents = 0; // undefined per-article profiles
};

/// Arithmetic mean of the defined profiles, renormalized to sum 1. Undefined
/// profiles are excluded and counted. Throws ValidationError when no profile
/// is defined.
CorpusEmotionProfile aggregate_corpus(const std::vector<EmotionProfile>& profiles);

enum class Pooling {
    Macro, // mean of per-article distributions (aggregate_corpus)
    Micro  // pool raw token scores across the corpus, normalize once
};

/// Corpus-level profile under either pooling rule.
CorpusEmotionProfile corpus_profile(const std::vector<PreparedDocument>& docs,
                                    const EmotionLexicon& lexicon,
                                    Pooling pooling = Pooling::Macro);

/// Distinct corpus words with a lexicon entry, ranked by their score for one
/// emotion (descending, ties lexicographic). In POS-aware mode a word's score
/// is the best one over the (word, tag) pairs seen in the corpus.
std::vector<std::pair<std::string, double>>
top_emotion_words(const std::vector<PreparedDocument>& docs, const EmotionLexicon& lexicon,
                  std::size_t emotion, std::size_t n = 10);

/// Crowd-annotation inputs for deriving a lexicon.
struct AnnotationMatrices {
    Eigen::MatrixXd doc_emotion;    // n_docs x 8, nonnegative
    Eigen::MatrixXd word_document;  // n_words x n_docs, nonnegative
    std::vector<std::string> words; // row labels of word_document
};

/// word_emotion = word_document * doc_emotion, then each row rescaled to
/// [0, 1] by its own maximum; all-zero rows are dropped. Result is a token
/// (non-POS) lexicon. Throws ValidationError on dimension mismatch, negative
/// entries, or duplicate words.
EmotionLexicon derive_lexicon(const AnnotationMatrices& matrices);

} // namespace corpuslens
