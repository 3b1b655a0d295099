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

#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "corpuslens/config.hpp"
#include "corpuslens/corpus.hpp"
#include "corpuslens/dtm.hpp"
#include "corpuslens/emotion.hpp"
#include "corpuslens/errors.hpp"
#include "corpuslens/lda.hpp"
#include "corpuslens/nmf.hpp"
#include "corpuslens/report.hpp"
#include "corpuslens/textprep.hpp"
#include "corpuslens/topics.hpp"

namespace {

using namespace corpuslens;
using nlohmann::ordered_json;

constexpr int kExitOk = 0;
constexpr int kExitIo = 1;
constexpr int kExitValidation = 2;

struct CommonOptions {
    std::string stoplist_path;
    std::string tagger_path;
};

StopList resolve_stoplist(const CommonOptions& common) {
    if (!common.stoplist_path.empty()) return StopList::from_file(common.stoplist_path);
    return default_stoplist();
}

TaggerLexicon resolve_tagger(const CommonOptions& common) {
    if (!common.tagger_path.empty()) return TaggerLexicon::from_file(common.tagger_path);
    return default_tagger_lexicon();
}

void write_json_file(const std::filesystem::path& path, const ordered_json& payload) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw IoError("cannot write " + path.string());
    out << payload.dump(2) << '\n';
    if (!out) throw IoError("error writing " + path.string());
}

ordered_json topics_json(const std::vector<TopicSummary>& topics,
                         const std::vector<double>& coherence) {
    ordered_json list = ordered_json::array();
    for (std::size_t t = 0; t < topics.size(); ++t) {
        ordered_json topic;
        topic["id"] = topics[t].topic_id;
        topic["coherence"] = coherence[t];
        ordered_json terms = ordered_json::array();
        for (const auto& [term, weight] : topics[t].top_terms)
            terms.push_back({{"term", term}, {"weight", weight}});
        topic["terms"] = std::move(terms);
        list.push_back(std::move(topic));
    }
    return list;
}

std::string topics_markdown(const std::vector<TopicSummary>& topics) {
    std::string md = "| rank |";
    for (const auto& topic : topics) md += " Topic " + std::to_string(topic.topic_id) + " |";
    md += "\n|---|";
    for (std::size_t t = 0; t < topics.size(); ++t) md += "---|";
    md += "\n";
    std::size_t depth = 0;
    for (const auto& topic : topics) depth = std::max(depth, topic.top_terms.size());
    for (std::size_t r = 0; r < depth; ++r) {
        md += "| " + std::to_string(r + 1) + " |";
        for (const auto& topic : topics)
            md += ' ' +
                  (r < topic.top_terms.size() ? topic.top_terms[r].first : std::string()) +
                  " |";
        md += "\n";
    }
    return md;
}

std::pair<std::string, std::string> split_corpus_spec(const std::string& spec) {
    const auto colon = spec.rfind(':');
    if (colon == std::string::npos || colon == 0 || colon + 1 == spec.size())
        throw ValidationError("corpus spec must be <dir>:<label>, got '" + spec + "'");
    return {spec.substr(0, colon), spec.substr(colon + 1)};
}

int run_ingest(const std::string& root, const std::string& label,
               const std::string& stats_out, const CommonOptions& common) {
    const Corpus corpus =
        load_corpus(std::filesystem::path(root) / label, label);
    const auto prepared =
        prepare_corpus(corpus, resolve_stoplist(common), resolve_tagger(common));
    const CorpusStats stats = corpus_stats(prepared);

    ordered_json payload;
    payload["label"] = corpus.label;
    payload["documents"] = stats.documents;
    payload["tokens"] = stats.tokens;
    payload["vocabulary"] = stats.vocabulary;
    if (!stats_out.empty()) write_json_file(stats_out, payload);

    std::cout << "corpus '" << corpus.label << "': " << stats.documents << " documents, "
              << stats.tokens << " tokens, " << stats.vocabulary << " distinct terms\n";
    return kExitOk;
}

std::pair<std::size_t, std::size_t> parse_k_range(const std::string& text) {
    const auto colon = text.find(':');
    if (colon == std::string::npos)
        throw ValidationError("k sweep must be <lo>:<hi>, got '" + text + "'");
    std::size_t lo = 0, hi = 0;
    try {
        lo = std::stoul(text.substr(0, colon));
        hi = std::stoul(text.substr(colon + 1));
    } catch (const std::exception&) {
        throw ValidationError("k sweep must be <lo>:<hi>, got '" + text + "'");
    }
    if (lo < 1 || hi < lo) throw ValidationError("k sweep needs 1 <= lo <= hi");
    return {lo, hi};
}

int run_topics(const std::string& corpus_dir, const std::string& label,
               const std::string& method_name, std::size_t k, std::uint64_t seed,
               std::size_t top, const std::string& out, const std::string& table,
               std::size_t min_df, std::size_t max_iter, double tol,
               const std::string& init_name, double alpha, double beta,
               std::size_t iterations, const std::string& k_sweep,
               const CommonOptions& common) {
    const auto method = parse_topic_method(method_name);
    if (!method) throw ValidationError("unknown method '" + method_name + "'");

    const Corpus corpus = load_corpus(corpus_dir, label);
    const auto prepared =
        prepare_corpus(corpus, resolve_stoplist(common), resolve_tagger(common));
    const auto [vocab, counts] = build_matrix(prepared, min_df);

    const auto fit_and_score = [&, &vocab = vocab,
                                &counts = counts](std::size_t topic_count) {
        std::vector<TopicSummary> fitted;
        std::vector<double> fitted_coherence;
        std::vector<double> fitted_trace;
        if (*method == TopicMethod::Nmf) {
            NmfOptions options;
            options.k = topic_count;
            options.seed = seed;
            options.max_iter = max_iter;
            options.tol = tol;
            if (init_name == "random") options.init = NmfInit::Random;
            else if (init_name != "nndsvd")
                throw ValidationError("unknown init '" + init_name + "'");
            const NmfModel model = nmf_fit(tfidf(counts), options);
            fitted_trace = model.objective_trace;
            for (std::size_t t = 0; t < model.k; ++t)
                fitted.push_back(top_terms(model, vocab, t, top));
        } else {
            LdaOptions options;
            options.k = topic_count;
            options.alpha = alpha;
            options.beta = beta;
            options.iterations = iterations;
            options.seed = seed;
            const LdaModel model = lda_fit(counts, options);
            for (std::size_t t = 0; t < model.k; ++t)
                fitted.push_back(top_terms(model, vocab, t, top));
        }
        for (const auto& topic : fitted)
            fitted_coherence.push_back(umass_coherence(topic, counts, vocab));
        return std::make_tuple(std::move(fitted), std::move(fitted_coherence),
                               std::move(fitted_trace));
    };

    // Coherence-by-k sweep: fit each k, report mean coherence, no topic dump.
    if (!k_sweep.empty()) {
        const auto [lo, hi] = parse_k_range(k_sweep);
        ordered_json payload;
        payload["label"] = corpus.label;
        payload["method"] = method_name;
        payload["seed"] = seed;
        ordered_json rows = ordered_json::array();
        for (std::size_t kk = lo; kk <= hi; ++kk) {
            const auto [fitted, coherence, trace] = fit_and_score(kk);
            double mean = 0.0;
            for (const double c : coherence) mean += c;
            mean /= static_cast<double>(coherence.size());
            rows.push_back({{"k", kk}, {"mean_coherence", mean}});
            std::cout << "k=" << kk << " mean_coherence=" << mean << '\n';
        }
        payload["coherence_by_k"] = std::move(rows);
        if (!out.empty()) write_json_file(out, payload);
        return kExitOk;
    }

    const auto [topics, coherence, trace] = fit_and_score(k);

    ordered_json payload;
    payload["label"] = corpus.label;
    payload["method"] = method_name;
    payload["k"] = k;
    payload["seed"] = seed;
    payload["topics"] = topics_json(topics, coherence);
    if (!trace.empty()) payload["objective_trace"] = trace;
    if (!out.empty()) write_json_file(out, payload);

    if (table == "md")
        std::cout << topics_markdown(topics);
    else
        std::cout << "fitted " << topics.size() << " topics over " << vocab.size()
                  << " terms from corpus '" << corpus.label << "'\n";
    return kExitOk;
}

int run_emotions(const std::string& corpus_dir, const std::string& label,
                 const std::string& lexicon_path, bool pos, const std::string& out,
                 const std::string& pooling_name, std::size_t top_words,
                 const CommonOptions& common) {
    Pooling pooling = Pooling::Macro;
    if (pooling_name == "micro") pooling = Pooling::Micro;
    else if (pooling_name != "macro")
        throw ValidationError("unknown pooling '" + pooling_name + "'");

    const Corpus corpus = load_corpus(corpus_dir, label);
    const auto prepared =
        prepare_corpus(corpus, resolve_stoplist(common), resolve_tagger(common));
    const EmotionLexicon lexicon = EmotionLexicon::load(lexicon_path, pos);

    const CorpusEmotionProfile aggregate = corpus_profile(prepared, lexicon, pooling);

    ordered_json payload;
    payload["label"] = corpus.label;
    payload["pos_matching"] = pos;
    payload["pooling"] = pooling_name;
    ordered_json scores;
    for (std::size_t e = 0; e < kEmotionCount; ++e)
        scores[std::string(kEmotionNames[e])] = aggregate.profile.scores[e];
    payload["aggregate"] = {{"scores", std::move(scores)},
                            {"included_documents", aggregate.included_documents},
                            {"excluded_documents", aggregate.excluded_documents}};

    ordered_json docs = ordered_json::array();
    for (const auto& doc : prepared) {
        const EmotionProfile profile = score_document(doc, lexicon);
        ordered_json d;
        d["doc"] = doc.doc_id;
        d["defined"] = profile.defined;
        d["matched_tokens"] = profile.matched_tokens;
        d["total_tokens"] = profile.total_tokens;
        ordered_json doc_scores;
        for (std::size_t e = 0; e < kEmotionCount; ++e)
            doc_scores[std::string(kEmotionNames[e])] = profile.scores[e];
        d["scores"] = std::move(doc_scores);
        docs.push_back(std::move(d));
    }
    payload["documents"] = std::move(docs);

    ordered_json words = ordered_json::array();
    for (const auto& [word, score] :
         top_emotion_words(prepared, lexicon, *emotion_index("INSPIRED"), top_words))
        words.push_back({{"word", word}, {"score", score}});
    payload["top_inspiring_words"] = std::move(words);

    if (!out.empty()) write_json_file(out, payload);

    std::size_t argmax = 0;
    for (std::size_t e = 1; e < kEmotionCount; ++e)
        if (aggregate.profile.scores[e] > aggregate.profile.scores[argmax]) argmax = e;
    std::cout << "corpus '" << corpus.label << "': strongest evoked emotion "
              << kEmotionNames[argmax] << " (" << aggregate.included_documents
              << " scored, " << aggregate.excluded_documents << " unmatched documents)\n";
    return kExitOk;
}

int run_report(const std::vector<std::string>& corpus_specs,
               const std::string& baseline_spec, const std::string& lexicon_path, bool pos,
               const std::string& out_dir, const std::string& formats_csv, std::size_t k,
               std::uint64_t seed, const std::string& method_name, std::size_t min_df,
               std::size_t max_iter, double tol, const std::string& init_name, double alpha,
               double beta, std::size_t iterations, const std::string& pooling_name,
               std::size_t top, const CommonOptions& common) {
    ReportConfig config;
    config.stops = resolve_stoplist(common);
    config.tagger = resolve_tagger(common);

    const auto method = parse_topic_method(method_name);
    if (!method) throw ValidationError("unknown method '" + method_name + "'");
    config.method = *method;
    config.k = k;
    config.seed = seed;
    config.min_df = min_df;
    config.max_iter = max_iter;
    config.tol = tol;
    if (init_name == "random") config.init = NmfInit::Random;
    else if (init_name != "nndsvd") throw ValidationError("unknown init '" + init_name + "'");
    config.alpha = alpha;
    config.beta = beta;
    config.lda_iterations = iterations;
    config.top_terms_count = top;
    if (pooling_name == "micro") config.pooling = Pooling::Micro;
    else if (pooling_name != "macro")
        throw ValidationError("unknown pooling '" + pooling_name + "'");
    if (!lexicon_path.empty()) config.lexicon = EmotionLexicon::load(lexicon_path, pos);

    std::vector<Corpus> corpora;
    std::vector<std::string> specs = corpus_specs;
    if (!baseline_spec.empty()) specs.push_back(baseline_spec);
    for (const auto& spec : specs) {
        const auto [dir, label] = split_corpus_spec(spec);
        corpora.push_back(load_corpus(dir, label));
    }
    if (!baseline_spec.empty())
        config.baseline_label = split_corpus_spec(baseline_spec).second;

    std::set<ReportFormat> formats;
    std::string token;
    std::istringstream stream(formats_csv);
    while (std::getline(stream, token, ',')) {
        if (token.empty()) continue;
        const auto format = parse_report_format(token);
        if (!format) throw ValidationError("unknown format '" + token + "'");
        formats.insert(*format);
    }
    if (formats.empty()) throw ValidationError("no output formats selected");

    const ComparisonReport report = build_report(corpora, config);
    render(report, out_dir, formats);
    std::cout << "report for " << report.sections.size() << " corpora written to "
              << out_dir << '\n';
    return kExitOk;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"corpus-lens: comparative corpus analytics (topics and evoked emotions)"};
    app.set_version_flag("--version", std::string(CORPUS_LENS_VERSION));
    app.require_subcommand(1);

    CommonOptions common;

    // ingest
    auto* ingest = app.add_subcommand("ingest", "Load a corpus and report its statistics");
    std::string ingest_root, ingest_label, ingest_stats_out;
    ingest->add_option("--root", ingest_root, "Directory holding <root>/<label>/*.txt")
        ->required();
    ingest->add_option("--label", ingest_label, "Corpus label")->required();
    ingest->add_option("--stats-out", ingest_stats_out, "Write stats JSON here");
    ingest->add_option("--stoplist", common.stoplist_path, "Stop list file override");
    ingest->add_option("--tagger-lexicon", common.tagger_path, "Tagger lexicon override");

    // topics
    auto* topics = app.add_subcommand("topics", "Fit a topic model over one corpus");
    std::string topics_dir, topics_label, topics_method = "nmf", topics_out, topics_table;
    std::string topics_init = "nndsvd", topics_k_sweep;
    std::size_t topics_k = 10, topics_top = 20, topics_min_df = 1, topics_max_iter = 200;
    std::size_t topics_iterations = 1000;
    std::uint64_t topics_seed = 42;
    double topics_tol = 1e-4, topics_alpha = 0.0, topics_beta = 0.01;
    topics->add_option("--corpus", topics_dir, "Corpus directory")->required();
    topics->add_option("--label", topics_label, "Corpus label")->required();
    topics->add_option("--method", topics_method, "nmf or lda")
        ->check(CLI::IsMember({"nmf", "lda"}));
    topics->add_option("--k", topics_k, "Topic count");
    topics->add_option("--seed", topics_seed, "Random seed");
    topics->add_option("--top", topics_top, "Top terms per topic");
    topics->add_option("--out", topics_out, "Write topics JSON here");
    topics->add_option("--table", topics_table, "Print a table to stdout (md)")
        ->check(CLI::IsMember({"md"}));
    topics->add_option("--min-df", topics_min_df, "Minimum document frequency");
    topics->add_option("--max-iter", topics_max_iter, "NMF update sweeps");
    topics->add_option("--tol", topics_tol, "NMF relative-change stop tolerance");
    topics->add_option("--init", topics_init, "NMF initialization (nndsvd or random)")
        ->check(CLI::IsMember({"nndsvd", "random"}));
    topics->add_option("--alpha", topics_alpha, "LDA document-topic prior (0 = 50/k)");
    topics->add_option("--beta", topics_beta, "LDA topic-word prior");
    topics->add_option("--iterations", topics_iterations, "LDA Gibbs sweeps");
    topics->add_option("--k-sweep", topics_k_sweep,
                       "Report mean coherence for each k in <lo>:<hi> instead of fitting "
                       "one model");
    topics->add_option("--stoplist", common.stoplist_path, "Stop list file override");
    topics->add_option("--tagger-lexicon", common.tagger_path, "Tagger lexicon override");

    // emotions
    auto* emotions = app.add_subcommand("emotions", "Score evoked emotions for one corpus");
    std::string emotions_dir, emotions_label, emotions_lexicon, emotions_out;
    std::string emotions_pooling = "macro";
    std::size_t emotions_top_words = 10;
    bool emotions_pos = false;
    emotions->add_option("--corpus", emotions_dir, "Corpus directory")->required();
    emotions->add_option("--label", emotions_label, "Corpus label")->required();
    emotions->add_option("--lexicon", emotions_lexicon, "Emotion lexicon TSV")->required();
    emotions->add_flag("--pos", emotions_pos, "Match word+POS instead of word only");
    emotions->add_option("--out", emotions_out, "Write emotions JSON here");
    emotions->add_option("--pooling", emotions_pooling, "macro or micro")
        ->check(CLI::IsMember({"macro", "micro"}));
    emotions->add_option("--top-words", emotions_top_words, "Most-inspiring words to list");
    emotions->add_option("--stoplist", common.stoplist_path, "Stop list file override");
    emotions->add_option("--tagger-lexicon", common.tagger_path, "Tagger lexicon override");

    // report
    auto* report = app.add_subcommand("report", "Comparative report across corpora");
    std::vector<std::string> report_corpora;
    std::string report_baseline, report_lexicon, report_out_dir,
        report_formats = "json,csv,md,svg";
    std::string report_method = "nmf", report_init = "nndsvd", report_pooling = "macro";
    std::size_t report_k = 10, report_min_df = 1, report_max_iter = 200, report_top = 20;
    std::size_t report_iterations = 1000;
    std::uint64_t report_seed = 42;
    double report_tol = 1e-4, report_alpha = 0.0, report_beta = 0.01;
    bool report_pos = false;
    report->add_option("--corpus", report_corpora, "Corpus as <dir>:<label> (repeatable)")
        ->required();
    report->add_option("--baseline", report_baseline, "Baseline corpus as <dir>:<label>");
    report->add_option("--lexicon", report_lexicon, "Emotion lexicon TSV");
    report->add_flag("--pos", report_pos, "Match word+POS instead of word only");
    report->add_option("--out-dir", report_out_dir, "Output directory")->required();
    report->add_option("--format", report_formats, "Comma list of json,csv,md,svg");
    report->add_option("--k", report_k, "Topic count");
    report->add_option("--seed", report_seed, "Random seed");
    report->add_option("--method", report_method, "nmf or lda")
        ->check(CLI::IsMember({"nmf", "lda"}));
    report->add_option("--min-df", report_min_df, "Minimum document frequency");
    report->add_option("--max-iter", report_max_iter, "NMF update sweeps");
    report->add_option("--tol", report_tol, "NMF relative-change stop tolerance");
    report->add_option("--init", report_init, "NMF initialization (nndsvd or random)")
        ->check(CLI::IsMember({"nndsvd", "random"}));
    report->add_option("--alpha", report_alpha, "LDA document-topic prior (0 = 50/k)");
    report->add_option("--beta", report_beta, "LDA topic-word prior");
    report->add_option("--iterations", report_iterations, "LDA Gibbs sweeps");
    report->add_option("--pooling", report_pooling, "macro or micro")
        ->check(CLI::IsMember({"macro", "micro"}));
    report->add_option("--top", report_top, "Top terms per topic");
    report->add_option("--stoplist", common.stoplist_path, "Stop list file override");
    report->add_option("--tagger-lexicon", common.tagger_path, "Tagger lexicon override");

    try {
        app.parse(argc, argv);
        if (ingest->parsed())
            return run_ingest(ingest_root, ingest_label, ingest_stats_out, common);
        if (topics->parsed())
            return run_topics(topics_dir, topics_label, topics_method, topics_k, topics_seed,
                              topics_top, topics_out, topics_table, topics_min_df,
                              topics_max_iter, topics_tol, topics_init, topics_alpha,
                              topics_beta, topics_iterations, topics_k_sweep, common);
        if (emotions->parsed())
            return run_emotions(emotions_dir, emotions_label, emotions_lexicon, emotions_pos,
                                emotions_out, emotions_pooling, emotions_top_words, common);
        if (report->parsed())
            return run_report(report_corpora, report_baseline, report_lexicon, report_pos,
                              report_out_dir, report_formats, report_k, report_seed,
                              report_method, report_min_df, report_max_iter, report_tol,
                              report_init, report_alpha, report_beta, report_iterations,
                              report_pooling, report_top, common);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? kExitOk : kExitValidation;
    } catch (const ValidationError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitValidation;
    } catch (const IoError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitIo;
    } catch (const std::exception& e) {
        std::cerr << "internal error: " << e.what() << '\n';
        return kExitIo;
    }
    return kExitOk;
}
