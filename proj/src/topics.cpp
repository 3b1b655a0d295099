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

#include "corpuslens/topics.hpp"

#include <algorithm>
#include <cmath>

#include "corpuslens/errors.hpp"

namespace corpuslens {

namespace {

TopicSummary rank_terms(const Eigen::VectorXd& weights, const Vocabulary& vocab,
                        std::size_t topic_id, std::size_t k_top) {
    std::vector<std::size_t> order(vocab.size());
    for (std::size_t t = 0; t < order.size(); ++t) order[t] = t;
    std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
        const double wa = weights(static_cast<Eigen::Index>(a));
        const double wb = weights(static_cast<Eigen::Index>(b));
        if (wa != wb) return wa > wb;
        return vocab.terms[a] < vocab.terms[b];
    });

    TopicSummary summary;
    summary.topic_id = topic_id;
    const std::size_t n = std::min(k_top, order.size());
    summary.top_terms.reserve(n);
    for (std::size_t i = 0; i < n; ++i)
        summary.top_terms.emplace_back(vocab.terms[order[i]],
                                       weights(static_cast<Eigen::Index>(order[i])));
    return summary;
}

} // namespace

TopicSummary top_terms(const NmfModel& model, const Vocabulary& vocab,
                       std::size_t topic_id, std::size_t k_top) {
    if (topic_id >= model.k)
        throw ValidationError("topic id out of range: " + std::to_string(topic_id));
    if (static_cast<std::size_t>(model.W.rows()) != vocab.size())
        throw ValidationError("vocabulary does not match the fitted model");
    return rank_terms(model.W.col(static_cast<Eigen::Index>(topic_id)), vocab, topic_id,
                      k_top);
}

TopicSummary top_terms(const LdaModel& model, const Vocabulary& vocab,
                       std::size_t topic_id, std::size_t k_top) {
    if (topic_id >= model.k)
        throw ValidationError("topic id out of range: " + std::to_string(topic_id));
    if (static_cast<std::size_t>(model.phi.cols()) != vocab.size())
        throw ValidationError("vocabulary does not match the fitted model");
    return rank_terms(model.phi.row(static_cast<Eigen::Index>(topic_id)).transpose(), vocab,
                      topic_id, k_top);
}

double umass_coherence(const TopicSummary& summary, const DocTermMatrix& counts,
                       const Vocabulary& vocab) {
    if (counts.kind != MatrixKind::Counts)
        throw ValidationError("coherence expects a Counts matrix");

    // Document support per ranked term.
    std::vector<std::vector<std::size_t>> support(summary.top_terms.size());
    std::vector<std::size_t> term_ids;
    term_ids.reserve(summary.top_terms.size());
    for (const auto& [term, weight] : summary.top_terms) {
        const auto id = vocab.id_of(term);
        if (!id) throw ValidationError("coherence: term not in vocabulary: " + term);
        term_ids.push_back(*id);
    }
    for (std::size_t d = 0; d < counts.n_docs; ++d)
        for (std::size_t i = 0; i < term_ids.size(); ++i)
            if (counts.at(d, term_ids[i]) > 0.0) support[i].push_back(d);

    double score = 0.0;
    for (std::size_t i = 0; i < term_ids.size(); ++i) {
        for (std::size_t j = i + 1; j < term_ids.size(); ++j) {
            const auto& di = support[i];
            const auto& dj = support[j];
            if (dj.empty())
                throw ValidationError("coherence: term absent from every document: " +
                                      summary.top_terms[j].first);
            std::size_t both = 0;
            auto it = di.begin();
            for (const std::size_t doc : dj) {
                it = std::lower_bound(it, di.end(), doc);
                if (it == di.end()) break;
                if (*it == doc) ++both;
            }
            score += std::log((static_cast<double>(both) + 1.0) /
                              static_cast<double>(dj.size()));
        }
    }
    return score;
}

} // namespace corpuslens
