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
#include <set>
#include <string>
#include <vector>

#include <json.hpp>

#include "corpuslens/corpus.hpp"
#include "corpuslens/dtm.hpp"
#include "corpuslens/emotion.hpp"
#include "corpuslens/lda.hpp"
#include "corpuslens/nmf.hpp"
#include "corpuslens/topics.hpp"

namespace corpuslens {

enum class TopicMethod { Nmf, Lda };

std::string_view to_string(TopicMethod method);
std::optional<TopicMethod> parse_topic_method(std::string_view text);

enum class ReportFormat { Json, Csv, Md, Svg };

std::optional<ReportFormat> parse_report_format(std::string_view text);

/// Shared pipeline settings applied identically to every corpus in a report.
struct ReportConfig {
    StopList stops;
    TaggerLexicon tagger;
    std::optional<EmotionLexicon> lexicon;

    TopicMethod method = TopicMethod::Nmf;
    std::size_t k = 10;
    std::uint64_t seed = 42;
    std::size_t min_df = 1;

    // NMF
    std::size_t max_iter = 200;
    double tol = 1e-4;
    NmfInit init = NmfInit::Nndsvd;

    // LDA
    double alpha = 0.0; // <= 0 selects 50/k
    double beta = 0.01;
    std::size_t lda_iterations = 1000;

    std::size_t top_terms_count = 20;
    std::size_t top_frequency_count = 20;
    std::size_t top_word_count = 10; // most-inspiring words table
    Pooling pooling = Pooling::Macro;

    std::optional<std::string> baseline_label;
};

/// Everything the pipeline produced for one corpus. The report layer only
/// formats these values; it never computes anything new from them.
struct CorpusSection {
    std::string label;
    bool is_baseline = false;
    CorpusStats stats;
    std::vector<std::pair<std::string, double>> top_frequencies;
    std::vector<TopicSummary> topics;
    std::vector<double> topic_coherence; // aligned with topics
    std::vector<double> objective_trace; // NMF only, empty for LDA
    std::optional<CorpusEmotionProfile> emotions;
    std::vector<std::pair<std::string, EmotionProfile>> document_emotions; // by doc id
    std::vector<std::pair<std::string, double>> top_inspiring_words;
};

struct ComparisonReport {
    std::string tool_version;
    TopicMethod method = TopicMethod::Nmf;
    std::size_t k = 0;
    std::uint64_t seed = 0;
    std::size_t min_df = 1;
    std::size_t max_iter = 0;
    double tol = 0.0;
    NmfInit init = NmfInit::Nndsvd;
    double alpha = 0.0;
    double beta = 0.0;
    std::size_t lda_iterations = 0;
    Pooling pooling = Pooling::Macro;
    bool pos_matching = false;
    std::vector<CorpusSection> sections;
};

/// Runs the full pipeline (prepare, counts, tf-idf, topics, coherence,
/// emotions) over every corpus with the same configuration. Corpus labels
/// must be unique; a configured baseline label must be present. Deterministic
/// for fixed inputs and seeds.
ComparisonReport build_report(const std::vector<Corpus>& corpora, const ReportConfig& config);

/// Complete machine-readable form. Key order is fixed and no timestamps are
/// embedded, so equal reports serialize to identical bytes.
nlohmann::ordered_json to_json(const ComparisonReport& report);

/// Writes the selected formats under `out_dir` (created if needed):
/// report.json, report.md, per-table CSV files, and SVG charts. Corpora
/// without an emotion section produce no emotion charts.
void render(const ComparisonReport& report, const std::filesystem::path& out_dir,
            const std::set<ReportFormat>& formats);

} // namespace corpuslens
