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

#include "corpuslens/report.hpp"

#include <fstream>
#include <unordered_set>

#include "corpuslens/config.hpp"
#include "corpuslens/errors.hpp"
#include "svg.hpp"

namespace corpuslens {

namespace {

/// One textual representation for every number in every format: the JSON
/// serializer's. Keeps CSV cells byte-equal to their JSON counterparts.
std::string number_text(double value) { return nlohmann::json(value).dump(); }

void write_file(const std::filesystem::path& path, const std::string& content) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw IoError("cannot write " + path.string());
    out << content;
    if (!out) throw IoError("error writing " + path.string());
}

nlohmann::ordered_json scores_json(const EmotionVector& scores) {
    nlohmann::ordered_json obj;
    for (std::size_t e = 0; e < kEmotionCount; ++e)
        obj[std::string(kEmotionNames[e])] = scores[e];
    return obj;
}

std::string csv_escape(const std::string& field) {
    if (field.find_first_of(",\"\n") == std::string::npos) return field;
    std::string quoted = "\"";
    for (const char c : field) {
        if (c == '"') quoted += "\"\"";
        else quoted.push_back(c);
    }
    quoted.push_back('"');
    return quoted;
}

void render_csv(const ComparisonReport& report, const std::filesystem::path& dir) {
    for (const auto& section : report.sections) {
        {
            std::string csv = "rank,term,frequency\n";
            for (std::size_t i = 0; i < section.top_frequencies.size(); ++i)
                csv += std::to_string(i + 1) + ',' +
                       csv_escape(section.top_frequencies[i].first) + ',' +
                       number_text(section.top_frequencies[i].second) + '\n';
            write_file(dir / (section.label + "_frequencies.csv"), csv);
        }
        {
            std::string csv = "topic,rank,term,weight\n";
            for (const auto& topic : section.topics)
                for (std::size_t r = 0; r < topic.top_terms.size(); ++r)
                    csv += std::to_string(topic.topic_id) + ',' + std::to_string(r + 1) +
                           ',' + csv_escape(topic.top_terms[r].first) + ',' +
                           number_text(topic.top_terms[r].second) + '\n';
            write_file(dir / (section.label + "_topics.csv"), csv);
        }
        {
            std::string csv = "topic,coherence\n";
            for (std::size_t t = 0; t < section.topic_coherence.size(); ++t)
                csv += std::to_string(t) + ',' + number_text(section.topic_coherence[t]) +
                       '\n';
            write_file(dir / (section.label + "_topic_coherence.csv"), csv);
        }
        if (!section.document_emotions.empty()) {
            std::string csv = "doc_id";
            for (const auto& name : kEmotionNames) csv += ',' + std::string(name);
            csv += ",matched_tokens,total_tokens,defined\n";
            for (const auto& [doc_id, profile] : section.document_emotions) {
                csv += csv_escape(doc_id);
                for (const double s : profile.scores) csv += ',' + number_text(s);
                csv += ',' + std::to_string(profile.matched_tokens) + ',' +
                       std::to_string(profile.total_tokens) + ',' +
                       (profile.defined ? std::string("true") : std::string("false")) + '\n';
            }
            write_file(dir / (section.label + "_document_emotions.csv"), csv);
        }
    }

    bool any_emotions = false;
    std::string csv = "corpus";
    for (const auto& name : kEmotionNames) csv += ',' + std::string(name);
    csv += ",included_documents,excluded_documents\n";
    for (const auto& section : report.sections) {
        if (!section.emotions) continue;
        any_emotions = true;
        csv += csv_escape(section.label);
        for (const double s : section.emotions->profile.scores) csv += ',' + number_text(s);
        csv += ',' + std::to_string(section.emotions->included_documents) + ',' +
               std::to_string(section.emotions->excluded_documents) + '\n';
    }
    if (any_emotions) write_file(dir / "emotions.csv", csv);
}

void render_md(const ComparisonReport& report, const std::filesystem::path& dir) {
    std::string md = "# corpus-lens report\n\n";
    md += "method: " + std::string(to_string(report.method)) +
          ", k: " + std::to_string(report.k) + ", seed: " + std::to_string(report.seed) +
          "\n";

    for (const auto& section : report.sections) {
        md += "\n## Corpus: " + section.label +
              (section.is_baseline ? " (baseline)" : "") + "\n\n";
        md += "documents: " + std::to_string(section.stats.documents) +
              ", tokens: " + std::to_string(section.stats.tokens) +
              ", vocabulary: " + std::to_string(section.stats.vocabulary) + "\n";

        md += "\n### Top terms by frequency\n\n| rank | term | frequency |\n|---|---|---|\n";
        for (std::size_t i = 0; i < section.top_frequencies.size(); ++i)
            md += "| " + std::to_string(i + 1) + " | " + section.top_frequencies[i].first +
                  " | " + number_text(section.top_frequencies[i].second) + " |\n";

        if (!section.topics.empty()) {
            md += "\n### Topics\n\n| rank |";
            for (const auto& topic : section.topics)
                md += " Topic " + std::to_string(topic.topic_id) + " |";
            md += "\n|---|";
            for (std::size_t t = 0; t < section.topics.size(); ++t) md += "---|";
            md += "\n";
            std::size_t depth = 0;
            for (const auto& topic : section.topics)
                depth = std::max(depth, topic.top_terms.size());
            for (std::size_t r = 0; r < depth; ++r) {
                md += "| " + std::to_string(r + 1) + " |";
                for (const auto& topic : section.topics)
                    md += ' ' + (r < topic.top_terms.size() ? topic.top_terms[r].first
                                                            : std::string()) +
                          " |";
                md += "\n";
            }

            md += "\n### Topic coherence\n\n| topic | coherence |\n|---|---|\n";
            for (std::size_t t = 0; t < section.topic_coherence.size(); ++t)
                md += "| " + std::to_string(t) + " | " +
                      number_text(section.topic_coherence[t]) + " |\n";
        }
    }

    bool any_emotions = false;
    for (const auto& section : report.sections)
        if (section.emotions) any_emotions = true;

    if (any_emotions) {
        md += "\n## Evoked emotions\n\n| corpus |";
        for (const auto& name : kEmotionNames) md += ' ' + std::string(name) + " |";
        md += "\n|---|";
        for (std::size_t e = 0; e < kEmotionCount; ++e) md += "---|";
        md += "\n";
        for (const auto& section : report.sections) {
            if (!section.emotions) continue;
            md += "| " + section.label + " |";
            for (const double s : section.emotions->profile.scores)
                md += ' ' + number_text(s) + " |";
            md += "\n";
        }

        md += "\n## Most inspiring words\n\n| rank |";
        for (const auto& section : report.sections)
            if (section.emotions) md += ' ' + section.label + " |";
        md += "\n|---|";
        for (const auto& section : report.sections)
            if (section.emotions) md += "---|";
        md += "\n";
        std::size_t depth = 0;
        for (const auto& section : report.sections)
            if (section.emotions) depth = std::max(depth, section.top_inspiring_words.size());
        for (std::size_t r = 0; r < depth; ++r) {
            md += "| " + std::to_string(r + 1) + " |";
            for (const auto& section : report.sections) {
                if (!section.emotions) continue;
                md += ' ' + (r < section.top_inspiring_words.size()
                                 ? section.top_inspiring_words[r].first
                                 : std::string()) +
                      " |";
            }
            md += "\n";
        }
    }

    write_file(dir / "report.md", md);
}

void render_svg(const ComparisonReport& report, const std::filesystem::path& dir) {
    for (const auto& section : report.sections) {
        if (section.top_frequencies.empty()) continue;
        std::vector<std::string> terms;
        svg::Series values{section.label, {}};
        for (const auto& [term, freq] : section.top_frequencies) {
            terms.push_back(term);
            values.values.push_back(freq);
        }
        write_file(dir / (section.label + "_frequencies.svg"),
                   svg::grouped_bar_chart("Term frequencies: " + section.label, terms,
                                          {values}));
    }

    std::vector<std::string> emotion_labels(kEmotionNames.begin(), kEmotionNames.end());
    std::vector<svg::Series> emotion_series;
    for (const auto& section : report.sections) {
        if (!section.emotions) continue;
        svg::Series series{section.label, {}};
        for (const double s : section.emotions->profile.scores) series.values.push_back(s);
        emotion_series.push_back(std::move(series));
    }
    if (!emotion_series.empty())
        write_file(dir / "emotions.svg",
                   svg::grouped_bar_chart("Evoked emotions by corpus", emotion_labels,
                                          emotion_series));

    for (const auto& section : report.sections) {
        if (!section.emotions || section.document_emotions.empty()) continue;
        std::vector<std::string> doc_ids;
        std::vector<svg::Series> lines(kEmotionCount);
        for (std::size_t e = 0; e < kEmotionCount; ++e)
            lines[e].label = std::string(kEmotionNames[e]);
        for (const auto& [doc_id, profile] : section.document_emotions) {
            doc_ids.push_back(doc_id);
            for (std::size_t e = 0; e < kEmotionCount; ++e)
                lines[e].values.push_back(profile.scores[e]);
        }
        write_file(dir / (section.label + "_document_emotions.svg"),
                   svg::line_chart("Per-document emotions: " + section.label, doc_ids,
                                   lines));
    }
}

} // namespace

std::string_view to_string(TopicMethod method) {
    return method == TopicMethod::Nmf ? "nmf" : "lda";
}

std::optional<TopicMethod> parse_topic_method(std::string_view text) {
    if (text == "nmf") return TopicMethod::Nmf;
    if (text == "lda") return TopicMethod::Lda;
    return std::nullopt;
}

std::optional<ReportFormat> parse_report_format(std::string_view text) {
    if (text == "json") return ReportFormat::Json;
    if (text == "csv") return ReportFormat::Csv;
    if (text == "md") return ReportFormat::Md;
    if (text == "svg") return ReportFormat::Svg;
    return std::nullopt;
}

ComparisonReport build_report(const std::vector<Corpus>& corpora, const ReportConfig& config) {
    if (corpora.empty()) throw ValidationError("report needs at least one corpus");

    std::unordered_set<std::string> labels;
    for (const auto& corpus : corpora)
        if (!labels.insert(corpus.label).second)
            throw ValidationError("duplicate corpus label: " + corpus.label);
    if (config.baseline_label && !labels.count(*config.baseline_label))
        throw ValidationError("baseline label not among corpora: " + *config.baseline_label);

    ComparisonReport report;
    report.tool_version = CORPUS_LENS_VERSION;
    report.method = config.method;
    report.k = config.k;
    report.seed = config.seed;
    report.min_df = config.min_df;
    report.max_iter = config.max_iter;
    report.tol = config.tol;
    report.init = config.init;
    report.alpha = config.alpha > 0.0 ? config.alpha
                                      : 50.0 / static_cast<double>(std::max<std::size_t>(1, config.k));
    report.beta = config.beta;
    report.lda_iterations = config.lda_iterations;
    report.pooling = config.pooling;
    report.pos_matching = config.lexicon && config.lexicon->pos_aware();

    for (const auto& corpus : corpora) {
        CorpusSection section;
        section.label = corpus.label;
        section.is_baseline = config.baseline_label && *config.baseline_label == corpus.label;

        const std::vector<PreparedDocument> prepared =
            prepare_corpus(corpus, config.stops, config.tagger);
        section.stats = corpus_stats(prepared);

        auto [vocab, counts] = build_matrix(prepared, config.min_df);
        section.top_frequencies = top_frequencies(
            normalized_term_frequencies(counts, vocab), config.top_frequency_count);

        if (config.method == TopicMethod::Nmf) {
            NmfOptions options;
            options.k = config.k;
            options.seed = config.seed;
            options.max_iter = config.max_iter;
            options.tol = config.tol;
            options.init = config.init;
            const NmfModel model = nmf_fit(tfidf(counts), options);
            section.objective_trace = model.objective_trace;
            for (std::size_t t = 0; t < model.k; ++t)
                section.topics.push_back(top_terms(model, vocab, t, config.top_terms_count));
        } else {
            LdaOptions options;
            options.k = config.k;
            options.alpha = config.alpha;
            options.beta = config.beta;
            options.iterations = config.lda_iterations;
            options.seed = config.seed;
            const LdaModel model = lda_fit(counts, options);
            for (std::size_t t = 0; t < model.k; ++t)
                section.topics.push_back(top_terms(model, vocab, t, config.top_terms_count));
        }
        for (const auto& topic : section.topics)
            section.topic_coherence.push_back(umass_coherence(topic, counts, vocab));

        if (config.lexicon) {
            for (const auto& doc : prepared)
                section.document_emotions.emplace_back(doc.doc_id,
                                                       score_document(doc, *config.lexicon));
            section.emotions = corpus_profile(prepared, *config.lexicon, config.pooling);
            section.top_inspiring_words = top_emotion_words(
                prepared, *config.lexicon, *emotion_index("INSPIRED"), config.top_word_count);
        }

        report.sections.push_back(std::move(section));
    }
    return report;
}

nlohmann::ordered_json to_json(const ComparisonReport& report) {
    nlohmann::ordered_json root;
    nlohmann::ordered_json meta;
    meta["tool"] = "corpus-lens";
    meta["version"] = report.tool_version;
    meta["method"] = std::string(to_string(report.method));
    meta["k"] = report.k;
    meta["seed"] = report.seed;
    meta["min_df"] = report.min_df;
    meta["max_iter"] = report.max_iter;
    meta["tol"] = report.tol;
    meta["init"] = report.init == NmfInit::Nndsvd ? "nndsvd" : "random";
    meta["alpha"] = report.alpha;
    meta["beta"] = report.beta;
    meta["lda_iterations"] = report.lda_iterations;
    meta["pooling"] = report.pooling == Pooling::Macro ? "macro" : "micro";
    meta["pos_matching"] = report.pos_matching;
    root["metadata"] = std::move(meta);

    nlohmann::ordered_json corpora = nlohmann::ordered_json::array();
    for (const auto& section : report.sections) {
        nlohmann::ordered_json s;
        s["label"] = section.label;
        s["baseline"] = section.is_baseline;
        s["stats"] = {{"documents", section.stats.documents},
                      {"tokens", section.stats.tokens},
                      {"vocabulary", section.stats.vocabulary}};

        nlohmann::ordered_json freqs = nlohmann::ordered_json::array();
        for (const auto& [term, frequency] : section.top_frequencies)
            freqs.push_back({{"term", term}, {"frequency", frequency}});
        s["frequencies"] = std::move(freqs);

        nlohmann::ordered_json topics = nlohmann::ordered_json::array();
        for (std::size_t t = 0; t < section.topics.size(); ++t) {
            nlohmann::ordered_json topic;
            topic["id"] = section.topics[t].topic_id;
            if (section.topics[t].label) topic["label"] = *section.topics[t].label;
            topic["coherence"] = section.topic_coherence[t];
            nlohmann::ordered_json terms = nlohmann::ordered_json::array();
            for (const auto& [term, weight] : section.topics[t].top_terms)
                terms.push_back({{"term", term}, {"weight", weight}});
            topic["terms"] = std::move(terms);
            topics.push_back(std::move(topic));
        }
        s["topics"] = std::move(topics);

        if (!section.objective_trace.empty()) s["objective_trace"] = section.objective_trace;

        if (section.emotions) {
            nlohmann::ordered_json emotions;
            emotions["scores"] = scores_json(section.emotions->profile.scores);
            emotions["included_documents"] = section.emotions->included_documents;
            emotions["excluded_documents"] = section.emotions->excluded_documents;
            s["emotions"] = std::move(emotions);

            nlohmann::ordered_json docs = nlohmann::ordered_json::array();
            for (const auto& [doc_id, profile] : section.document_emotions) {
                nlohmann::ordered_json d;
                d["doc"] = doc_id;
                d["defined"] = profile.defined;
                d["matched_tokens"] = profile.matched_tokens;
                d["total_tokens"] = profile.total_tokens;
                d["scores"] = scores_json(profile.scores);
                docs.push_back(std::move(d));
            }
            s["document_emotions"] = std::move(docs);

            nlohmann::ordered_json words = nlohmann::ordered_json::array();
            for (const auto& [word, score] : section.top_inspiring_words)
                words.push_back({{"word", word}, {"score", score}});
            s["top_inspiring_words"] = std::move(words);
        } else {
            s["emotions"] = nullptr;
        }

        corpora.push_back(std::move(s));
    }
    root["corpora"] = std::move(corpora);
    return root;
}

void render(const ComparisonReport& report, const std::filesystem::path& out_dir,
            const std::set<ReportFormat>& formats) {
    std::error_code ec;
    std::filesystem::create_directories(out_dir, ec);
    if (ec) throw IoError("cannot create output directory " + out_dir.string());

    if (formats.count(ReportFormat::Json))
        write_file(out_dir / "report.json", to_json(report).dump(2) + "\n");
    if (formats.count(ReportFormat::Csv)) render_csv(report, out_dir);
    if (formats.count(ReportFormat::Md)) render_md(report, out_dir);
    if (formats.count(ReportFormat::Svg)) render_svg(report, out_dir);
}

} // namespace corpuslens
