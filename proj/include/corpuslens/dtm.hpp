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
#include <map>
#include <optional>
#include <ostream>
#include <string>
#include <string_view>
#include <unordered_map>
#include <utility>
#include <vector>

#include "corpuslens/textprep.hpp"

namespace corpuslens {

/// Term <-> column-id bijection. Terms are sorted lexicographically (by UTF-8
/// bytes) so ids are deterministic for a given term set.
struct Vocabulary {
    std::vector<std::string> terms;
    std::unordered_map<std::string, std::size_t> index;

    std::optional<std::size_t> id_of(std::string_view term) const;
    std::size_t size() const { return terms.size(); }
};

enum class MatrixKind { Counts, Tfidf };

/// Sparse document-term matrix, documents as rows. Stored values are always
/// > 0 (absent means zero); Counts entries are whole numbers.
struct DocTermMatrix {
    MatrixKind kind = MatrixKind::Counts;
    std::size_t n_docs = 0;
    std::size_t n_terms = 0;
    std::vector<std::string> doc_ids;
    /// Per row: (term id, value) pairs sorted by term id.
    std::vector<std::vector<std::pair<std::size_t, double>>> rows;

    double at(std::size_t doc, std::size_t term) const;
    /// Count of nonzero entries.
    std::size_t nnz() const;
    /// Number of documents containing each term (column support).
    std::vector<std::size_t> document_frequencies() const;
    /// Per-document sum of values; for Counts this is the token count.
    std::vector<double> row_sums() const;
};

/// Builds the vocabulary and raw count matrix from prepared documents.
/// Terms occurring in fewer than `min_df` documents are dropped. Throws
/// ValidationError when no documents are given, every document is empty, or
/// the min_df filter removes every term.
std::pair<Vocabulary, DocTermMatrix> build_matrix(const std::vector<PreparedDocument>& docs,
                                                  std::size_t min_df = 1);

/// Replaces each count c at (d, t) with c * ln(N / df(t)). Zero entries stay
/// zero; terms present in every document get weight 0 across the board (the
/// resulting explicit zeros are pruned from storage).
DocTermMatrix tfidf(const DocTermMatrix& counts);

/// frequency(t) = corpus-wide count of t / total token count. Values sum to 1.
std::map<std::string, double> normalized_term_frequencies(const DocTermMatrix& counts,
                                                          const Vocabulary& vocab);

/// Top n terms by frequency, descending, ties broken lexicographically.
std::vector<std::pair<std::string, double>>
top_frequencies(const std::map<std::string, double>& frequencies, std::size_t n);

/// Debug/oracle export: one `doc_id<TAB>term<TAB>value` line per nonzero.
void write_coordinate_format(const DocTermMatrix& matrix, const Vocabulary& vocab,
                             std::ostream& out);

/// JSON array of terms; the array position is the column id.
void write_vocabulary_json(const Vocabulary& vocab, std::ostream& out);

} // namespace corpuslens
