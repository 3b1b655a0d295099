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

#include "corpuslens/dtm.hpp"

#include <algorithm>
#include <cmath>

#include <json.hpp>

#include "corpuslens/errors.hpp"

namespace corpuslens {

std::optional<std::size_t> Vocabulary::id_of(std::string_view term) const {
    const auto it = index.find(std::string(term));
    if (it == index.end()) return std::nullopt;
    return it->second;
}

double DocTermMatrix::at(std::size_t doc, std::size_t term) const {
    const auto& row = rows.at(doc);
    const auto it = std::lower_bound(row.begin(), row.end(), term,
                                     [](const auto& e, std::size_t t) { return e.first < t; });
    if (it == row.end() || it->first != term) return 0.0;
    return it->second;
}

std::size_t DocTermMatrix::nnz() const {
    std::size_t n = 0;
    for (const auto& row : rows) n += row.size();
    return n;
}

std::vector<std::size_t> DocTermMatrix::document_frequencies() const {
    std::vector<std::size_t> df(n_terms, 0);
    for (const auto& row : rows)
        for (const auto& [term, value] : row) ++df[term];
    return df;
}

std::vector<double> DocTermMatrix::row_sums() const {
    std::vector<double> sums(n_docs, 0.0);
    for (std::size_t d = 0; d < n_docs; ++d)
        for (const auto& [term, value] : rows[d]) sums[d] += value;
    return sums;
}

std::pair<Vocabulary, DocTermMatrix> build_matrix(const std::vector<PreparedDocument>& docs,
                                                  std::size_t min_df) {
    if (docs.empty()) throw ValidationError("cannot build matrix: no documents");

    // Per-document counts keyed by term string.
    std::vector<std::unordered_map<std::string, std::size_t>> doc_counts(docs.size());
    std::unordered_map<std::string, std::size_t> df;
    std::size_t total_tokens = 0;
    for (std::size_t d = 0; d < docs.size(); ++d) {
        for (const auto& tok : docs[d].tokens) {
            if (++doc_counts[d][tok.normalized] == 1) ++df[tok.normalized];
            ++total_tokens;
        }
    }
    if (total_tokens == 0)
        throw ValidationError("cannot build matrix: every document is empty");

    Vocabulary vocab;
    vocab.terms.reserve(df.size());
    for (const auto& [term, n] : df)
        if (n >= min_df) vocab.terms.push_back(term);
    if (vocab.terms.empty())
        throw ValidationError("cannot build matrix: min-df filter removed every term");
    std::sort(vocab.terms.begin(), vocab.terms.end());
    vocab.index.reserve(vocab.terms.size());
    for (std::size_t t = 0; t < vocab.terms.size(); ++t) vocab.index[vocab.terms[t]] = t;

    DocTermMatrix matrix;
    matrix.kind = MatrixKind::Counts;
    matrix.n_docs = docs.size();
    matrix.n_terms = vocab.terms.size();
    matrix.rows.resize(docs.size());
    matrix.doc_ids.reserve(docs.size());
    for (std::size_t d = 0; d < docs.size(); ++d) {
        matrix.doc_ids.push_back(docs[d].doc_id);
        auto& row = matrix.rows[d];
        row.reserve(doc_counts[d].size());
        for (const auto& [term, count] : doc_counts[d]) {
            const auto it = vocab.index.find(term);
            if (it != vocab.index.end())
                row.emplace_back(it->second, static_cast<double>(count));
        }
        std::sort(row.begin(), row.end());
    }
    return {std::move(vocab), std::move(matrix)};
}

DocTermMatrix tfidf(const DocTermMatrix& counts) {
    if (counts.kind != MatrixKind::Counts)
        throw ValidationError("tfidf expects a Counts matrix");

    const std::vector<std::size_t> df = counts.document_frequencies();
    const double n_docs = static_cast<double>(counts.n_docs);

    DocTermMatrix weighted;
    weighted.kind = MatrixKind::Tfidf;
    weighted.n_docs = counts.n_docs;
    weighted.n_terms = counts.n_terms;
    weighted.doc_ids = counts.doc_ids;
    weighted.rows.resize(counts.n_docs);
    for (std::size_t d = 0; d < counts.n_docs; ++d) {
        auto& row = weighted.rows[d];
        row.reserve(counts.rows[d].size());
        for (const auto& [term, count] : counts.rows[d]) {
            const double weight = count * std::log(n_docs / static_cast<double>(df[term]));
            if (weight > 0.0) row.emplace_back(term, weight);
        }
    }
    return weighted;
}

std::map<std::string, double> normalized_term_frequencies(const DocTermMatrix& counts,
                                                          const Vocabulary& vocab) {
    if (counts.kind != MatrixKind::Counts)
        throw ValidationError("term frequencies expect a Counts matrix");

    std::vector<double> totals(counts.n_terms, 0.0);
    double grand_total = 0.0;
    for (const auto& row : counts.rows) {
        for (const auto& [term, count] : row) {
            totals[term] += count;
            grand_total += count;
        }
    }

    std::map<std::string, double> frequencies;
    for (std::size_t t = 0; t < counts.n_terms; ++t)
        frequencies[vocab.terms[t]] = totals[t] / grand_total;
    return frequencies;
}

std::vector<std::pair<std::string, double>>
top_frequencies(const std::map<std::string, double>& frequencies, std::size_t n) {
    std::vector<std::pair<std::string, double>> items(frequencies.begin(), frequencies.end());
    std::sort(items.begin(), items.end(), [](const auto& a, const auto& b) {
        if (a.second != b.second) return a.second > b.second;
        return a.first < b.first;
    });
    if (items.size() > n) items.resize(n);
    return items;
}

void write_coordinate_format(const DocTermMatrix& matrix, const Vocabulary& vocab,
                             std::ostream& out) {
    for (std::size_t d = 0; d < matrix.n_docs; ++d)
        for (const auto& [term, value] : matrix.rows[d])
            out << matrix.doc_ids[d] << '\t' << vocab.terms[term] << '\t' << value << '\n';
}

void write_vocabulary_json(const Vocabulary& vocab, std::ostream& out) {
    nlohmann::json terms = nlohmann::json::array();
    for (const auto& term : vocab.terms) terms.push_back(term);
    out << terms.dump(2) << '\n';
}

} // namespace corpuslens
