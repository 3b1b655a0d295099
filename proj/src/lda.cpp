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

#include "corpuslens/lda.hpp"

#include <cmath>
#include <numeric>
#include <stdexcept>
#include <vector>

#include "corpuslens/errors.hpp"
#include "corpuslens/rng.hpp"

namespace corpuslens {

LdaModel lda_fit(const DocTermMatrix& counts, const LdaOptions& opts) {
    if (counts.kind != MatrixKind::Counts)
        throw ValidationError("lda_fit expects a Counts matrix");
    if (opts.k < 1) throw ValidationError("lda k must be >= 1");
    if (opts.beta <= 0.0) throw ValidationError("lda beta must be > 0");
    if (counts.n_docs == 0) throw ValidationError("lda: empty corpus");

    const std::size_t k = opts.k;
    const std::size_t n_docs = counts.n_docs;
    const std::size_t n_terms = counts.n_terms;
    const double alpha = opts.alpha > 0.0 ? opts.alpha : 50.0 / static_cast<double>(k);
    const double beta = opts.beta;
    const double beta_sum = beta * static_cast<double>(n_terms);

    // Flatten to a token stream: doc-major, term ids ascending within a doc.
    std::vector<std::uint32_t> token_doc;
    std::vector<std::uint32_t> token_term;
    for (std::size_t d = 0; d < n_docs; ++d) {
        for (const auto& [term, value] : counts.rows[d]) {
            const auto copies = static_cast<std::size_t>(std::llround(value));
            for (std::size_t c = 0; c < copies; ++c) {
                token_doc.push_back(static_cast<std::uint32_t>(d));
                token_term.push_back(static_cast<std::uint32_t>(term));
            }
        }
    }
    const std::size_t n_tokens = token_doc.size();
    if (n_tokens == 0) throw ValidationError("lda: empty corpus (no tokens)");

    std::vector<std::uint32_t> assignment(n_tokens);
    std::vector<std::size_t> doc_topic(n_docs * k, 0);  // n_dk
    std::vector<std::size_t> term_topic(n_terms * k, 0); // n_wk
    std::vector<std::size_t> topic_total(k, 0);          // n_k

    std::mt19937_64 rng(opts.seed);
    for (std::size_t i = 0; i < n_tokens; ++i) {
        const auto z = static_cast<std::uint32_t>(uniform_index(rng, k));
        assignment[i] = z;
        ++doc_topic[token_doc[i] * k + z];
        ++term_topic[token_term[i] * k + z];
        ++topic_total[z];
    }

    std::vector<double> weight(k);
    for (std::size_t sweep = 0; sweep < opts.iterations && k > 1; ++sweep) {
        for (std::size_t i = 0; i < n_tokens; ++i) {
            const std::size_t d = token_doc[i];
            const std::size_t w = token_term[i];
            const std::uint32_t old_z = assignment[i];

            --doc_topic[d * k + old_z];
            --term_topic[w * k + old_z];
            --topic_total[old_z];

            double total = 0.0;
            for (std::size_t t = 0; t < k; ++t) {
                total += (static_cast<double>(doc_topic[d * k + t]) + alpha) *
                         (static_cast<double>(term_topic[w * k + t]) + beta) /
                         (static_cast<double>(topic_total[t]) + beta_sum);
                weight[t] = total;
            }

            const double sample = uniform_unit(rng) * total;
            std::uint32_t new_z = 0;
            while (new_z + 1 < k && weight[new_z] < sample) ++new_z;

            assignment[i] = new_z;
            ++doc_topic[d * k + new_z];
            ++term_topic[w * k + new_z];
            ++topic_total[new_z];
        }

        const std::size_t assigned =
            std::accumulate(topic_total.begin(), topic_total.end(), std::size_t{0});
        if (assigned != n_tokens)
            throw std::logic_error("lda: count tables inconsistent after sweep");
    }

    LdaModel model;
    model.alpha = alpha;
    model.beta = beta;
    model.k = k;
    model.iterations = opts.iterations;
    model.seed = opts.seed;

    model.phi.resize(static_cast<Eigen::Index>(k), static_cast<Eigen::Index>(n_terms));
    for (std::size_t t = 0; t < k; ++t) {
        const double denom = static_cast<double>(topic_total[t]) + beta_sum;
        for (std::size_t w = 0; w < n_terms; ++w)
            model.phi(static_cast<Eigen::Index>(t), static_cast<Eigen::Index>(w)) =
                (static_cast<double>(term_topic[w * k + t]) + beta) / denom;
    }

    const std::vector<double> doc_lengths = counts.row_sums();
    model.theta.resize(static_cast<Eigen::Index>(n_docs), static_cast<Eigen::Index>(k));
    for (std::size_t d = 0; d < n_docs; ++d) {
        const double denom = doc_lengths[d] + alpha * static_cast<double>(k);
        for (std::size_t t = 0; t < k; ++t)
            model.theta(static_cast<Eigen::Index>(d), static_cast<Eigen::Index>(t)) =
                (static_cast<double>(doc_topic[d * k + t]) + alpha) / denom;
    }
    return model;
}

} // namespace corpuslens
