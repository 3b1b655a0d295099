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

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "corpuslens/lda.hpp"
#include "corpuslens/nmf.hpp"

namespace corpuslens {

/// The displayable face of one topic: its highest-weighted terms.
struct TopicSummary {
    std::size_t topic_id = 0;
    /// (term, weight), weights non-increasing, ties broken lexicographically.
    std::vector<std::pair<std::string, double>> top_terms;
    std::optional<std::string> label;
};

/// Top `k_top` terms of one NMF topic (a column of W).
TopicSummary top_terms(const NmfModel& model, const Vocabulary& vocab,
                       std::size_t topic_id, std::size_t k_top = 20);

/// Top `k_top` terms of one LDA topic (a row of phi).
TopicSummary top_terms(const LdaModel& model, const Vocabulary& vocab,
                       std::size_t topic_id, std::size_t k_top = 20);

/// UMass-style coherence over the summary's ranked terms:
///   sum over ranked pairs i < j of ln((D(w_i, w_j) + 1) / D(w_j))
/// where D counts documents (of `counts`) containing the term(s). Higher is
/// more coherent. Summary terms must exist in `vocab`.
double umass_coherence(const TopicSummary& summary, const DocTermMatrix& counts,
                       const Vocabulary& vocab);

} // namespace corpuslens
