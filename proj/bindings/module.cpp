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

#include <pybind11/eigen.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>
#include <pybind11/stl/filesystem.h>

#include <sstream>

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

namespace py = pybind11;
using namespace corpuslens;

PYBIND11_MODULE(_corpus_lens, m) {
    m.doc() = "Corpus analytics: preprocessing, tf-idf, NMF/LDA topics, "
              "lexicon-based evoked-emotion profiles, comparative reports.";
    m.attr("__version__") = CORPUS_LENS_VERSION;
    m.attr("EMOTIONS") = std::vector<std::string>(kEmotionNames.begin(), kEmotionNames.end());

    py::register_exception<ValidationError>(m, "ValidationError", PyExc_ValueError);
    py::register_exception<IoError>(m, "IoError", PyExc_OSError);

    py::enum_<PosTag>(m, "PosTag")
        .value("NOUN", PosTag::Noun)
        .value("VERB", PosTag::Verb)
        .value("ADJ", PosTag::Adj)
        .value("ADV", PosTag::Adv)
        .value("OTHER", PosTag::Other);

    py::class_<Token>(m, "Token")
        .def(py::init<>())
        .def_readwrite("surface", &Token::surface)
        .def_readwrite("normalized", &Token::normalized)
        .def_readwrite("pos", &Token::pos)
        .def("__repr__", [](const Token& t) {
            return "Token('" + t.surface + "', " + std::string(to_string(t.pos)) + ")";
        });

    py::class_<Document>(m, "Document")
        .def(py::init<>())
        .def_readwrite("id", &Document::id)
        .def_readwrite("raw_text", &Document::raw_text)
        .def_readwrite("source_path", &Document::source_path);

    py::class_<Corpus>(m, "Corpus")
        .def(py::init<>())
        .def_readwrite("label", &Corpus::label)
        .def_readwrite("documents", &Corpus::documents)
        .def("__len__", [](const Corpus& c) { return c.documents.size(); });

    py::class_<CorpusStats>(m, "CorpusStats")
        .def_readonly("documents", &CorpusStats::documents)
        .def_readonly("tokens", &CorpusStats::tokens)
        .def_readonly("vocabulary", &CorpusStats::vocabulary);

    py::class_<StopList>(m, "StopList")
        .def(py::init<>())
        .def(py::init<const std::vector<std::string>&>())
        .def_static("from_file", &StopList::from_file)
        .def("contains", &StopList::contains)
        .def("__len__", &StopList::size)
        .def("__contains__", &StopList::contains);

    py::class_<TaggerLexicon>(m, "TaggerLexicon")
        .def(py::init<>())
        .def_static("from_file", &TaggerLexicon::from_file)
        .def("insert", &TaggerLexicon::insert)
        .def("lookup", &TaggerLexicon::lookup)
        .def("__len__", &TaggerLexicon::size);

    py::class_<PreparedDocument>(m, "PreparedDocument")
        .def(py::init<>())
        .def_readwrite("doc_id", &PreparedDocument::doc_id)
        .def_readwrite("tokens", &PreparedDocument::tokens)
        .def("__len__", [](const PreparedDocument& d) { return d.tokens.size(); });

    m.def("load_corpus", &load_corpus, py::arg("dir_path"), py::arg("label"));
    m.def("corpus_stats", &corpus_stats, py::arg("docs"));
    m.def("tokenize", &tokenize, py::arg("text"));
    m.def("normalize_and_filter", &normalize_and_filter, py::arg("tokens"), py::arg("stops"));
    m.def("pos_tag", &pos_tag, py::arg("tokens"), py::arg("lexicon"));
    m.def("tag_word", &tag_word, py::arg("normalized"), py::arg("lexicon"));
    m.def("prepare", &prepare, py::arg("doc"), py::arg("stops"), py::arg("tagger"));
    m.def("prepare_corpus", &prepare_corpus, py::arg("corpus"), py::arg("stops"),
          py::arg("tagger"));
    m.def("default_stoplist", &default_stoplist);
    m.def("default_tagger_lexicon", &default_tagger_lexicon);
    m.def("data_dir", &data_dir);

    py::class_<Vocabulary>(m, "Vocabulary")
        .def_readonly("terms", &Vocabulary::terms)
        .def("id_of", &Vocabulary::id_of)
        .def("__len__", &Vocabulary::size);

    py::enum_<MatrixKind>(m, "MatrixKind")
        .value("COUNTS", MatrixKind::Counts)
        .value("TFIDF", MatrixKind::Tfidf);

    py::class_<DocTermMatrix>(m, "DocTermMatrix")
        .def_readonly("kind", &DocTermMatrix::kind)
        .def_readonly("n_docs", &DocTermMatrix::n_docs)
        .def_readonly("n_terms", &DocTermMatrix::n_terms)
        .def_readonly("doc_ids", &DocTermMatrix::doc_ids)
        .def("at", &DocTermMatrix::at, py::arg("doc"), py::arg("term"))
        .def("nnz", &DocTermMatrix::nnz)
        .def("document_frequencies", &DocTermMatrix::document_frequencies)
        .def("row_sums", &DocTermMatrix::row_sums)
        .def("dense",
             [](const DocTermMatrix& matrix) {
                 return Eigen::MatrixXd(term_document_dense(matrix).transpose());
             },
             "Dense docs-by-terms copy.");

    m.def("build_matrix", &build_matrix, py::arg("docs"), py::arg("min_df") = 1);
    m.def("tfidf", &tfidf, py::arg("counts"));
    m.def("normalized_term_frequencies", &normalized_term_frequencies, py::arg("counts"),
          py::arg("vocab"));
    m.def("top_frequencies", &top_frequencies, py::arg("frequencies"), py::arg("n"));
    m.def("term_document_dense", &term_document_dense, py::arg("matrix"),
          "Dense terms-by-documents copy.");
    m.def("coordinate_format",
          [](const DocTermMatrix& matrix, const Vocabulary& vocab) {
              std::ostringstream out;
              write_coordinate_format(matrix, vocab, out);
              return out.str();
          },
          py::arg("matrix"), py::arg("vocab"),
          "doc_id<TAB>term<TAB>value lines, one per nonzero entry.");
    m.def("vocabulary_json",
          [](const Vocabulary& vocab) {
              std::ostringstream out;
              write_vocabulary_json(vocab, out);
              return out.str();
          },
          py::arg("vocab"));

    py::enum_<NmfInit>(m, "NmfInit")
        .value("NNDSVD", NmfInit::Nndsvd)
        .value("RANDOM", NmfInit::Random);

    py::class_<NmfOptions>(m, "NmfOptions")
        .def(py::init<>())
        .def_readwrite("k", &NmfOptions::k)
        .def_readwrite("seed", &NmfOptions::seed)
        .def_readwrite("max_iter", &NmfOptions::max_iter)
        .def_readwrite("tol", &NmfOptions::tol)
        .def_readwrite("init", &NmfOptions::init);

    py::class_<NmfModel>(m, "NmfModel")
        .def_readonly("W", &NmfModel::W)
        .def_readonly("H", &NmfModel::H)
        .def_readonly("k", &NmfModel::k)
        .def_readonly("seed", &NmfModel::seed)
        .def_readonly("objective_trace", &NmfModel::objective_trace)
        .def_readonly("iterations", &NmfModel::iterations);

    m.def("nmf_fit", &nmf_fit, py::arg("V"), py::arg("options") = NmfOptions{});
    m.def("nndsvd_init", &nndsvd_init, py::arg("A"), py::arg("k"));

    py::class_<LdaOptions>(m, "LdaOptions")
        .def(py::init<>())
        .def_readwrite("k", &LdaOptions::k)
        .def_readwrite("alpha", &LdaOptions::alpha)
        .def_readwrite("beta", &LdaOptions::beta)
        .def_readwrite("iterations", &LdaOptions::iterations)
        .def_readwrite("seed", &LdaOptions::seed);

    py::class_<LdaModel>(m, "LdaModel")
        .def_readonly("phi", &LdaModel::phi)
        .def_readonly("theta", &LdaModel::theta)
        .def_readonly("alpha", &LdaModel::alpha)
        .def_readonly("beta", &LdaModel::beta)
        .def_readonly("k", &LdaModel::k)
        .def_readonly("iterations", &LdaModel::iterations)
        .def_readonly("seed", &LdaModel::seed);

    m.def("lda_fit", &lda_fit, py::arg("counts"), py::arg("options") = LdaOptions{});

    py::class_<TopicSummary>(m, "TopicSummary")
        .def_readonly("topic_id", &TopicSummary::topic_id)
        .def_readonly("top_terms", &TopicSummary::top_terms)
        .def_readwrite("label", &TopicSummary::label);

    m.def("top_terms",
          py::overload_cast<const NmfModel&, const Vocabulary&, std::size_t, std::size_t>(
              &top_terms),
          py::arg("model"), py::arg("vocab"), py::arg("topic_id"), py::arg("k_top") = 20);
    m.def("top_terms",
          py::overload_cast<const LdaModel&, const Vocabulary&, std::size_t, std::size_t>(
              &top_terms),
          py::arg("model"), py::arg("vocab"), py::arg("topic_id"), py::arg("k_top") = 20);
    m.def("umass_coherence", &umass_coherence, py::arg("summary"), py::arg("counts"),
          py::arg("vocab"));

    m.def("emotion_index", &emotion_index, py::arg("name"));

    py::class_<EmotionLexicon>(m, "EmotionLexicon")
        .def(py::init<>())
        .def_static("load", &EmotionLexicon::load, py::arg("path"), py::arg("pos_aware"))
        .def_static("from_entries", &EmotionLexicon::from_entries, py::arg("entries"),
                    py::arg("pos_aware"))
        .def("find",
             [](const EmotionLexicon& lexicon, const std::string& word,
                PosTag pos) -> std::optional<EmotionVector> {
                 const EmotionVector* scores = lexicon.find(word, pos);
                 if (!scores) return std::nullopt;
                 return *scores;
             },
             py::arg("word"), py::arg("pos") = PosTag::Noun)
        .def_property_readonly("pos_aware", &EmotionLexicon::pos_aware)
        .def("__len__", &EmotionLexicon::size)
        .def("to_tsv", [](const EmotionLexicon& lexicon) {
            std::ostringstream out;
            lexicon.write(out);
            return out.str();
        });

    py::class_<EmotionProfile>(m, "EmotionProfile")
        .def_readonly("scores", &EmotionProfile::scores)
        .def_readonly("matched_tokens", &EmotionProfile::matched_tokens)
        .def_readonly("total_tokens", &EmotionProfile::total_tokens)
        .def_readonly("defined", &EmotionProfile::defined);

    py::class_<CorpusEmotionProfile>(m, "CorpusEmotionProfile")
        .def_readonly("profile", &CorpusEmotionProfile::profile)
        .def_readonly("included_documents", &CorpusEmotionProfile::included_documents)
        .def_readonly("excluded_documents", &CorpusEmotionProfile::excluded_documents);

    py::enum_<Pooling>(m, "Pooling")
        .value("MACRO", Pooling::Macro)
        .value("MICRO", Pooling::Micro);

    m.def("score_document", &score_document, py::arg("doc"), py::arg("lexicon"));
    m.def("aggregate_corpus", &aggregate_corpus, py::arg("profiles"));
    m.def("corpus_profile", &corpus_profile, py::arg("docs"), py::arg("lexicon"),
          py::arg("pooling") = Pooling::Macro);
    m.def("top_emotion_words", &top_emotion_words, py::arg("docs"), py::arg("lexicon"),
          py::arg("emotion"), py::arg("n") = 10);

    py::class_<AnnotationMatrices>(m, "AnnotationMatrices")
        .def(py::init<>())
        .def_readwrite("doc_emotion", &AnnotationMatrices::doc_emotion)
        .def_readwrite("word_document", &AnnotationMatrices::word_document)
        .def_readwrite("words", &AnnotationMatrices::words);

    m.def("derive_lexicon", &derive_lexicon, py::arg("matrices"));

    py::enum_<TopicMethod>(m, "TopicMethod")
        .value("NMF", TopicMethod::Nmf)
        .value("LDA", TopicMethod::Lda);

    py::enum_<ReportFormat>(m, "ReportFormat")
        .value("JSON", ReportFormat::Json)
        .value("CSV", ReportFormat::Csv)
        .value("MD", ReportFormat::Md)
        .value("SVG", ReportFormat::Svg);

    py::class_<ReportConfig>(m, "ReportConfig")
        .def(py::init<>())
        .def_readwrite("stops", &ReportConfig::stops)
        .def_readwrite("tagger", &ReportConfig::tagger)
        .def_readwrite("lexicon", &ReportConfig::lexicon)
        .def_readwrite("method", &ReportConfig::method)
        .def_readwrite("k", &ReportConfig::k)
        .def_readwrite("seed", &ReportConfig::seed)
        .def_readwrite("min_df", &ReportConfig::min_df)
        .def_readwrite("max_iter", &ReportConfig::max_iter)
        .def_readwrite("tol", &ReportConfig::tol)
        .def_readwrite("init", &ReportConfig::init)
        .def_readwrite("alpha", &ReportConfig::alpha)
        .def_readwrite("beta", &ReportConfig::beta)
        .def_readwrite("lda_iterations", &ReportConfig::lda_iterations)
        .def_readwrite("top_terms_count", &ReportConfig::top_terms_count)
        .def_readwrite("top_frequency_count", &ReportConfig::top_frequency_count)
        .def_readwrite("top_word_count", &ReportConfig::top_word_count)
        .def_readwrite("pooling", &ReportConfig::pooling)
        .def_readwrite("baseline_label", &ReportConfig::baseline_label);

    py::class_<ComparisonReport>(m, "ComparisonReport")
        .def_property_readonly("labels", [](const ComparisonReport& report) {
            std::vector<std::string> labels;
            for (const auto& s : report.sections) labels.push_back(s.label);
            return labels;
        });

    m.def("build_report", &build_report, py::arg("corpora"), py::arg("config"));
    m.def("report_json",
          [](const ComparisonReport& report) { return to_json(report).dump(2); },
          py::arg("report"), "Complete machine-readable report as a JSON string.");
    m.def("render", &render, py::arg("report"), py::arg("out_dir"), py::arg("formats"));
}
