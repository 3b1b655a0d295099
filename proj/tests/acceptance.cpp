// Apache License, Version 2.0, refer to LICENSE.txt
//
// Acceptance suite: one criterion per function, one PASS/FAIL line each.
// Exits nonzero if any criterion fails.

#include <chrono>
#include <cmath>
#include <cstdlib>
#include <fstream>
#include <functional>
#include <iostream>
#include <map>
#include <sstream>
#include <string>
#include <vector>

#include "corpuslens/corpus.hpp"
#include "corpuslens/dtm.hpp"
#include "corpuslens/emotion.hpp"
#include "corpuslens/lda.hpp"
#include "corpuslens/nmf.hpp"
#include "corpuslens/textprep.hpp"
#include "corpuslens/topics.hpp"
#include "support/fixtures.hpp"

using namespace corpuslens;
using corpuslens::testing::make_prepared;

namespace {

int failures = 0;

void expect(bool condition, const std::string& message) {
    if (!condition) throw std::runtime_error(message);
}

void criterion(int id, const std::string& name, const std::function<void()>& body) {
    const auto start = std::chrono::steady_clock::now();
    try {
        body();
        const auto ms = std::chrono::duration_cast<std::chrono::milliseconds>(
                            std::chrono::steady_clock::now() - start)
                            .count();
        std::cout << "ACCEPTANCE " << id << " [" << name << "]: PASS (" << ms << " ms)\n";
    } catch (const std::exception& e) {
        ++failures;
        std::cout << "ACCEPTANCE " << id << " [" << name << "]: FAIL - " << e.what()
                  << "\n";
    }
}

DocTermMatrix as_tfidf_matrix(const Eigen::MatrixXd& term_doc) {
    DocTermMatrix m;
    m.kind = MatrixKind::Tfidf;
    m.n_terms = static_cast<std::size_t>(term_doc.rows());
    m.n_docs = static_cast<std::size_t>(term_doc.cols());
    m.rows.resize(m.n_docs);
    for (Eigen::Index d = 0; d < term_doc.cols(); ++d) {
        m.doc_ids.push_back("doc" + std::to_string(d));
        for (Eigen::Index t = 0; t < term_doc.rows(); ++t)
            if (term_doc(t, d) > 0.0)
                m.rows[static_cast<std::size_t>(d)].emplace_back(
                    static_cast<std::size_t>(t), term_doc(t, d));
    }
    return m;
}

// ---- criterion 1 --------------------------------------------------------

void tokenizer_golden() {
    const auto tokens =
        tokenize("After sleeping for four hours, he decided to sleep for another four.");
    const std::vector<std::string> expected = {"After", "sleeping", "for", "four",
                                               "hours", "he",       "decided", "to",
                                               "sleep", "for",      "another", "four"};
    expect(tokens.size() == expected.size(), "token count mismatch");
    for (std::size_t i = 0; i < expected.size(); ++i)
        expect(tokens[i].surface == expected[i],
               "token " + std::to_string(i) + " is '" + tokens[i].surface + "', expected '" +
                   expected[i] + "'");
}

// ---- criterion 2 --------------------------------------------------------

void tfidf_oracle_equivalence() {
    // Seeded random 20-doc/200-term corpus; one term forced into every doc.
    std::mt19937_64 rng(2024);
    std::vector<PreparedDocument> docs;
    for (std::size_t d = 0; d < 20; ++d) {
        std::vector<std::string> words;
        const std::size_t length = 50 + uniform_index(rng, 150);
        for (std::size_t i = 0; i < length; ++i) {
            std::size_t t = uniform_index(rng, 200);
            words.push_back("t" + std::to_string(100 + t));
        }
        words.push_back("t100"); // df = N for this term
        docs.push_back(make_prepared("d" + std::to_string(10 + d), words));
    }

    const auto [vocab, counts] = build_matrix(docs);
    const auto weighted = tfidf(counts);

    // Independent evaluator, straight from the token lists.
    std::map<std::string, std::map<std::string, std::size_t>> tf;
    std::map<std::string, std::size_t> df;
    for (const auto& doc : docs) {
        for (const auto& tok : doc.tokens)
            if (++tf[doc.doc_id][tok.normalized] == 1) ++df[tok.normalized];
    }

    const double n = 20.0;
    for (std::size_t d = 0; d < weighted.n_docs; ++d) {
        for (std::size_t t = 0; t < weighted.n_terms; ++t) {
            const auto& row = tf.at(weighted.doc_ids[d]);
            const auto it = row.find(vocab.terms[t]);
            const double count = it == row.end() ? 0.0 : static_cast<double>(it->second);
            const double expected =
                count * std::log(n / static_cast<double>(df.at(vocab.terms[t])));
            const double actual = weighted.at(d, t);
            if (expected == 0.0)
                expect(actual == 0.0, "expected exact zero weight");
            else
                expect(std::abs(actual - expected) / std::abs(expected) < 1e-12,
                       "weight off by more than 1e-12 relative");
        }
    }

    // A term present in all docs weighs exactly zero everywhere.
    const std::size_t shared = *vocab.id_of("t100");
    for (std::size_t d = 0; d < weighted.n_docs; ++d)
        expect(weighted.at(d, shared) == 0.0, "all-document term must weigh exactly 0");
}

// ---- criterion 3 --------------------------------------------------------

void nmf_monotonicity() {
    const auto start = std::chrono::steady_clock::now();
    for (std::uint64_t seed = 1; seed <= 10; ++seed) {
        std::mt19937_64 rng(seed);
        Eigen::MatrixXd V(100, 50);
        for (Eigen::Index i = 0; i < V.rows(); ++i)
            for (Eigen::Index j = 0; j < V.cols(); ++j) V(i, j) = uniform_unit(rng);

        NmfOptions opts;
        opts.k = 5;
        opts.seed = seed;
        opts.max_iter = 200;
        opts.tol = 0.0; // run all 200 iterations
        opts.init = seed % 2 == 0 ? NmfInit::Nndsvd : NmfInit::Random;
        const NmfModel model = nmf_fit(as_tfidf_matrix(V), opts);
        expect(model.objective_trace.size() == 201, "expected 201 trace entries");
        for (std::size_t i = 1; i < model.objective_trace.size(); ++i)
            expect(model.objective_trace[i] <=
                       model.objective_trace[i - 1] * (1.0 + 1e-9),
                   "objective increased at iteration " + std::to_string(i) + " (seed " +
                       std::to_string(seed) + ")");
    }
    const auto seconds = std::chrono::duration_cast<std::chrono::duration<double>>(
                             std::chrono::steady_clock::now() - start)
                             .count();
    expect(seconds < 10.0,
           "10 runs took " + std::to_string(seconds) + " s, budget is 10 s");
}

// ---- criterion 4 --------------------------------------------------------

void nmf_planted_recovery() {
    const auto planted = corpuslens::testing::generate_planted_corpus(3, 30, 60, 42);
    const auto [vocab, counts] = build_matrix(planted.docs);
    NmfOptions opts;
    opts.k = 3;
    opts.seed = 42;
    opts.init = NmfInit::Nndsvd;

    const NmfModel first = nmf_fit(tfidf(counts), opts);
    const NmfModel second = nmf_fit(tfidf(counts), opts);
    expect(first.W == second.W && first.H == second.H,
           "rerun with the same seed must be identical");

    std::vector<bool> vocab_claimed(3, false);
    for (std::size_t topic = 0; topic < 3; ++topic) {
        const TopicSummary summary = top_terms(first, vocab, topic, 10);
        int best_overlap = -1;
        std::size_t best_vocab = 0;
        for (std::size_t p = 0; p < 3; ++p) {
            int overlap = 0;
            for (const auto& [term, weight] : summary.top_terms)
                for (const auto& planted_word : planted.topic_vocabularies[p])
                    if (term == planted_word) ++overlap;
            if (overlap > best_overlap) {
                best_overlap = overlap;
                best_vocab = p;
            }
        }
        expect(best_overlap >= 8, "topic " + std::to_string(topic) + " recovered only " +
                                      std::to_string(best_overlap) + "/10 planted words");
        expect(!vocab_claimed[best_vocab], "two topics map to one planted vocabulary");
        vocab_claimed[best_vocab] = true;
    }
}

// ---- criterion 5 --------------------------------------------------------

void lda_sanity() {
    // Degenerate k=1: theta exactly 1 for every document.
    {
        std::mt19937_64 rng(5);
        std::vector<PreparedDocument> docs;
        for (int d = 0; d < 8; ++d) {
            std::vector<std::string> words;
            const std::size_t length = 1 + uniform_index(rng, 40);
            for (std::size_t i = 0; i < length; ++i)
                words.push_back("w" + std::to_string(uniform_index(rng, 12)));
            docs.push_back(make_prepared("d" + std::to_string(d), words));
        }
        const auto [vocab, counts] = build_matrix(docs);
        LdaOptions opts;
        opts.k = 1;
        opts.iterations = 25;
        const LdaModel model = lda_fit(counts, opts);
        for (Eigen::Index d = 0; d < model.theta.rows(); ++d)
            expect(model.theta(d, 0) == 1.0, "theta must be exactly 1.0 when k=1");
    }

    // Two disjoint-vocabulary documents: dominant weight > 0.9 for >= 9/10 seeds.
    int successes = 0;
    for (std::uint64_t seed = 1; seed <= 10; ++seed) {
        const auto docs = corpuslens::testing::disjoint_pair_corpus(500, 10, 77);
        const auto [vocab, counts] = build_matrix(docs);
        LdaOptions opts;
        opts.k = 2;
        opts.alpha = 0.1;
        opts.beta = 0.01;
        opts.iterations = 1000;
        opts.seed = seed;
        const LdaModel model = lda_fit(counts, opts);
        if (model.theta.row(0).maxCoeff() > 0.9 && model.theta.row(1).maxCoeff() > 0.9)
            ++successes;
    }
    expect(successes >= 9, "only " + std::to_string(successes) +
                               "/10 seeds concentrated both documents above 0.9");
}

// ---- criterion 6 --------------------------------------------------------

void coherence_ordering() {
    const auto planted = corpuslens::testing::generate_planted_corpus(3, 30, 60, 4242);
    const auto [vocab, counts] = build_matrix(planted.docs);
    const DocTermMatrix weighted = tfidf(counts);

    int nmf_wins = 0;
    for (std::uint64_t seed = 1; seed <= 5; ++seed) {
        NmfOptions nmf_opts;
        nmf_opts.k = 3;
        nmf_opts.seed = seed;
        const NmfModel nmf_model = nmf_fit(weighted, nmf_opts);
        double nmf_total = 0.0;
        for (std::size_t t = 0; t < 3; ++t)
            nmf_total += umass_coherence(top_terms(nmf_model, vocab, t, 10), counts, vocab);

        LdaOptions lda_opts;
        lda_opts.k = 3;
        lda_opts.iterations = 1000;
        lda_opts.seed = seed;
        const LdaModel lda_model = lda_fit(counts, lda_opts);
        double lda_total = 0.0;
        for (std::size_t t = 0; t < 3; ++t)
            lda_total += umass_coherence(top_terms(lda_model, vocab, t, 10), counts, vocab);

        if (nmf_total >= lda_total) ++nmf_wins;
    }
    expect(nmf_wins >= 3, "NMF coherence beat LDA on only " + std::to_string(nmf_wins) +
                              "/5 seeds");
}

// ---- criterion 7 --------------------------------------------------------

void emotion_profile_invariants() {
    std::vector<std::string> vocabulary;
    for (int i = 0; i < 40; ++i) vocabulary.push_back("lex" + std::to_string(i));
    const EmotionLexicon lexicon = corpuslens::testing::dyadic_fixture_lexicon(vocabulary, 9);
    const EmotionLexicon scaled = corpuslens::testing::scaled_lexicon(lexicon, 10.0);

    std::mt19937_64 rng(7);
    std::size_t defined_count = 0;
    std::size_t undefined_count = 0;
    for (int round = 0; round < 1000; ++round) {
        std::vector<std::string> words;
        const std::size_t length = 1 + uniform_index(rng, 80);
        const bool force_miss = round % 10 == 0;
        for (std::size_t i = 0; i < length; ++i) {
            if (force_miss)
                words.push_back("unknown" + std::to_string(i));
            else
                words.push_back("lex" + std::to_string(uniform_index(rng, 55)));
        }
        const PreparedDocument doc = make_prepared("d", words);
        const EmotionProfile profile = score_document(doc, lexicon);

        for (const double s : profile.scores)
            expect(!std::isnan(s), "profile score must never be NaN");

        if (profile.defined) {
            ++defined_count;
            double total = 0.0;
            for (const double s : profile.scores) total += s;
            expect(std::abs(total - 1.0) <= 1e-9, "defined profile must sum to 1");
        } else {
            ++undefined_count;
            expect(profile.matched_tokens == 0 || !profile.defined,
                   "undefined profile bookkeeping");
            for (const double s : profile.scores)
                expect(s == 0.0, "undefined profile must stay zero");
        }

        const EmotionProfile rescaled = score_document(doc, scaled);
        expect(rescaled.scores == profile.scores,
               "x10 lexicon scaling must leave profiles bitwise equal");
        expect(rescaled.defined == profile.defined, "scaling must not change definedness");
    }
    expect(defined_count > 0 && undefined_count > 0,
           "fixture must exercise both defined and undefined profiles");
}

// ---- criterion 8 --------------------------------------------------------

void emotion_argmax_fixture() {
    // Inspiration-heavy fixture; expected aggregate frozen from the
    // independent script in tests/support/oracles/emotion_aggregate_oracle.py.
    corpuslens::testing::TempDir dir;
    corpuslens::testing::write_text_file(dir.path() / "a0.txt", "uplift hope hope dream");
    corpuslens::testing::write_text_file(dir.path() / "a1.txt", "uplift dream courage");
    corpuslens::testing::write_text_file(dir.path() / "a2.txt", "hope courage courage calm");
    corpuslens::testing::write_text_file(dir.path() / "a3.txt",
                                         "uplift uplift dream hope calm");
    corpuslens::testing::write_text_file(dir.path() / "a4.txt", "dream hope uplift calm");

    std::unordered_map<std::string, EmotionVector> entries;
    entries["uplift"] = EmotionVector{0.000, 0.125, 0.250, 0.125, 0.250, 0.500, 1.000, 0.250};
    entries["hope"] = EmotionVector{0.000, 0.250, 0.125, 0.250, 0.125, 0.375, 0.875, 0.125};
    entries["dream"] = EmotionVector{0.125, 0.250, 0.250, 0.125, 0.250, 0.250, 0.750, 0.250};
    entries["courage"] =
        EmotionVector{0.000, 0.125, 0.125, 0.250, 0.125, 0.250, 0.625, 0.125};
    entries["calm"] = EmotionVector{0.000, 0.250, 0.125, 0.125, 0.375, 0.500, 0.625, 0.250};
    const EmotionLexicon lexicon = EmotionLexicon::from_entries(std::move(entries), false);

    const Corpus corpus = load_corpus(dir.path(), "inspiring");
    const auto prepared = prepare_corpus(corpus, default_stoplist(), default_tagger_lexicon());
    const CorpusEmotionProfile aggregate = corpus_profile(prepared, lexicon, Pooling::Macro);

    const EmotionVector expected = {
        0.011589610067034619, 0.091185233368838978, 0.083031921141934611,
        0.081905616792039643, 0.099369825514726659, 0.17294703426454361,
        0.3687698855225513,   0.091200873328330628,
    };
    for (std::size_t e = 0; e < kEmotionCount; ++e)
        expect(std::abs(aggregate.profile.scores[e] - expected[e]) <= 1e-9,
               std::string(kEmotionNames[e]) + " deviates from the oracle value");

    std::size_t argmax = 0, argmin = 0;
    for (std::size_t e = 1; e < kEmotionCount; ++e) {
        if (aggregate.profile.scores[e] > aggregate.profile.scores[argmax]) argmax = e;
        if (aggregate.profile.scores[e] < aggregate.profile.scores[argmin]) argmin = e;
    }
    expect(kEmotionNames[argmax] == "INSPIRED", "argmax must be INSPIRED");
    expect(kEmotionNames[argmin] == "AFRAID", "argmin must be AFRAID");
}

// ---- criterion 9 --------------------------------------------------------

void derive_lexicon_cases() {
    // Identity word-document matrix reproduces annotation rows up to the
    // row-max rescale.
    {
        AnnotationMatrices matrices;
        matrices.doc_emotion.resize(3, 8);
        matrices.doc_emotion << 0.5, 0.0, 0.0, 0.0, 0.0, 0.0, 1.0, 0.0,
                                0.0, 0.2, 0.0, 0.0, 0.0, 0.0, 0.4, 0.0,
                                0.0, 0.0, 0.3, 0.0, 0.0, 0.3, 0.0, 0.0;
        matrices.word_document = Eigen::MatrixXd::Identity(3, 3);
        matrices.words = {"wa", "wb", "wc"};
        const EmotionLexicon lexicon = derive_lexicon(matrices);
        expect(lexicon.size() == 3, "identity case must keep every word");
        for (Eigen::Index w = 0; w < 3; ++w) {
            const EmotionVector* scores =
                lexicon.find(matrices.words[static_cast<std::size_t>(w)], PosTag::Noun);
            expect(scores != nullptr, "word missing from derived lexicon");
            const double row_max = matrices.doc_emotion.row(w).maxCoeff();
            for (std::size_t e = 0; e < kEmotionCount; ++e)
                expect((*scores)[e] ==
                           matrices.doc_emotion(w, static_cast<Eigen::Index>(e)) / row_max,
                       "identity case row mismatch");
        }
    }

    // 2x2 hand-multiplied case, exact values.
    {
        AnnotationMatrices matrices;
        matrices.doc_emotion.resize(2, 8);
        matrices.doc_emotion << 0.5, 0, 0, 0, 0, 0, 1.0, 0,
                                0.0, 0.25, 0, 0, 0, 0, 0.5, 0;
        matrices.word_document.resize(2, 2);
        matrices.word_document << 1, 2,
                                  0, 3;
        matrices.words = {"w0", "w1"};
        const EmotionLexicon lexicon = derive_lexicon(matrices);
        // w0 row: (0.5, 0.5, 0, 0, 0, 0, 2.0, 0) -> /2 = (0.25, 0.25, ..., 1, 0)
        const EmotionVector* w0 = lexicon.find("w0", PosTag::Noun);
        expect(w0 != nullptr, "w0 missing");
        expect((*w0)[0] == 0.25 && (*w0)[1] == 0.25 && (*w0)[6] == 1.0,
               "w0 must match the hand product exactly");
        // w1 row: (0, 0.75, 0, 0, 0, 0, 1.5, 0) -> /1.5 = (0, 0.5, ..., 1, 0)
        const EmotionVector* w1 = lexicon.find("w1", PosTag::Noun);
        expect(w1 != nullptr, "w1 missing");
        expect((*w1)[0] == 0.0 && (*w1)[1] == 0.5 && (*w1)[6] == 1.0,
               "w1 must match the hand product exactly");
    }
}

// ---- criterion 10 -------------------------------------------------------

std::string slurp(const std::filesystem::path& path) {
    std::ifstream in(path, std::ios::binary);
    expect(in.good(), "cannot read " + path.string());
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

void write_fixture_corpus(const std::filesystem::path& dir,
                          const std::vector<std::string>& docs) {
    std::filesystem::create_directories(dir);
    for (std::size_t i = 0; i < docs.size(); ++i)
        corpuslens::testing::write_text_file(dir / ("doc" + std::to_string(i) + ".txt"),
                                             docs[i]);
}

void end_to_end_reproducibility() {
    const char* cli = std::getenv("CORPUS_LENS_CLI");
    expect(cli != nullptr && *cli != '\0', "CORPUS_LENS_CLI is not set");
    const auto start = std::chrono::steady_clock::now();

    corpuslens::testing::TempDir root;
    write_fixture_corpus(root.path() / "alpha",
                         {"storm thunder rain lightning flood gale storm",
                          "rain flood river thunder surge lightning",
                          "gale squall wind storm thunder rain flood",
                          "river surge flood rain wind thunder",
                          "thunder storm lightning gale rain surge"});
    write_fixture_corpus(root.path() / "beta",
                         {"rose tulip garden bloom petal soil rose",
                          "soil seedling sprout garden bloom rose",
                          "tulip petal bloom rose garden sprout",
                          "sprout seedling soil tulip garden bloom",
                          "bloom rose petal garden soil seedling"});
    write_fixture_corpus(root.path() / "base",
                         {"table chair lamp desk shelf floor",
                          "desk shelf lamp table floor chair",
                          "chair floor desk shelf table lamp",
                          "lamp shelf floor chair desk table",
                          "floor table shelf lamp chair desk"});

    const auto lexicon_path = root.path() / "lexicon.tsv";
    corpuslens::testing::write_text_file(
        lexicon_path,
        "word\tAFRAID\tAMUSED\tANGRY\tANNOYED\tDONT_CARE\tHAPPY\tINSPIRED\tSAD\n"
        "storm\t1\t0\t0.25\t0\t0\t0\t0\t0.25\n"
        "thunder\t0.75\t0\t0.25\t0\t0\t0\t0\t0\n"
        "rain\t0.25\t0\t0\t0\t0.25\t0\t0\t0.5\n"
        "rose\t0\t0.25\t0\t0\t0\t0.5\t1\t0\n"
        "bloom\t0\t0\t0\t0\t0\t0.75\t0.75\t0\n"
        "garden\t0\t0.25\t0\t0\t0.25\t0.5\t0.5\t0\n"
        "table\t0\t0\t0\t0\t1\t0\t0\t0\n"
        "chair\t0\t0\t0\t0.25\t0.75\t0\t0\t0\n");

    const auto run = [&](const std::filesystem::path& out_dir) {
        std::ostringstream cmd;
        cmd << '"' << cli << '"' << " report"
            << " --corpus " << (root.path() / "alpha").string() << ":alpha"
            << " --corpus " << (root.path() / "beta").string() << ":beta"
            << " --baseline " << (root.path() / "base").string() << ":base"
            << " --lexicon " << lexicon_path.string()
            << " --k 3 --seed 42 --format json,csv,md,svg"
            << " --out-dir " << out_dir.string() << " >/dev/null";
        return std::system(cmd.str().c_str());
    };

    const int first = run(root.path() / "out1");
    const int second = run(root.path() / "out2");
    expect(first == 0, "first report run exited nonzero");
    expect(second == 0, "second report run exited nonzero");

    const std::string json1 = slurp(root.path() / "out1" / "report.json");
    const std::string json2 = slurp(root.path() / "out2" / "report.json");
    expect(!json1.empty(), "report.json is empty");
    expect(json1 == json2, "reruns with identical flags must be byte-identical");
    expect(std::filesystem::exists(root.path() / "out1" / "emotions.svg"),
           "emotion chart missing");

    const auto seconds = std::chrono::duration_cast<std::chrono::duration<double>>(
                             std::chrono::steady_clock::now() - start)
                             .count();
    expect(seconds < 60.0, "pipeline took " + std::to_string(seconds) + " s, budget 60 s");
}

} // namespace

int main() {
    criterion(1, "tokenizer golden sentence", tokenizer_golden);
    criterion(2, "tf-idf oracle equivalence", tfidf_oracle_equivalence);
    criterion(3, "nmf objective monotonicity", nmf_monotonicity);
    criterion(4, "nmf planted-topic recovery", nmf_planted_recovery);
    criterion(5, "lda degenerate and separation sanity", lda_sanity);
    criterion(6, "coherence ordering nmf vs lda", coherence_ordering);
    criterion(7, "emotion profile invariants", emotion_profile_invariants);
    criterion(8, "emotion argmax fixture", emotion_argmax_fixture);
    criterion(9, "derive_lexicon identity and hand product", derive_lexicon_cases);
    criterion(10, "end-to-end reproducibility", end_to_end_reproducibility);

    if (failures > 0) {
        std::cout << failures << " criterion(s) failed\n";
        return 1;
    }
    std::cout << "all 10 criteria passed\n";
    return 0;
}
