// Apache License, Version 2.0, refer to LICENSE.txt

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <map>
#include <random>
#include <sstream>

#include "corpuslens/dtm.hpp"
#include "corpuslens/errors.hpp"
#include "corpuslens/rng.hpp"
#include "support/fixtures.hpp"

using namespace corpuslens;

namespace {

// Independent counting oracle: plain nested maps, no shared code with
// build_matrix.
std::map<std::string, std::map<std::string, std::size_t>>
brute_force_counts(const std::vector<PreparedDocument>& docs) {
    std::map<std::string, std::map<std::string, std::size_t>> counts;
    for (const auto& doc : docs)
        for (const auto& tok : doc.tokens) ++counts[doc.doc_id][tok.normalized];
    return counts;
}

std::vector<PreparedDocument> random_docs(std::mt19937_64& rng, std::size_t n_docs,
                                          std::size_t vocab_size, std::size_t min_len,
                                          std::size_t max_len) {
    std::vector<PreparedDocument> docs;
    for (std::size_t d = 0; d < n_docs; ++d) {
        const std::size_t length = min_len + uniform_index(rng, max_len - min_len + 1);
        std::vector<std::string> words;
        for (std::size_t i = 0; i < length; ++i)
            words.push_back("term" + std::to_string(uniform_index(rng, vocab_size)));
        docs.push_back(testing::make_prepared("doc" + std::to_string(100 + d), words));
    }
    return docs;
}

} // namespace

TEST_CASE("build_matrix counts repeated terms") {
    const auto docs = std::vector<PreparedDocument>{
        testing::make_prepared("d0", {"a-term"}),
        testing::make_prepared("d1", {"a-term", "a-term"}),
    };
    const auto [vocab, matrix] = build_matrix(docs);
    CHECK(vocab.size() == 1);
    CHECK(matrix.n_docs == 2);
    CHECK(matrix.at(0, 0) == 1.0);
    CHECK(matrix.at(1, 0) == 2.0);
    CHECK(matrix.kind == MatrixKind::Counts);
}

TEST_CASE("disjoint vocabularies produce a block pattern") {
    const auto docs = std::vector<PreparedDocument>{
        testing::make_prepared("d0", {"alpha", "beta"}),
        testing::make_prepared("d1", {"gamma", "delta"}),
    };
    const auto [vocab, matrix] = build_matrix(docs);
    REQUIRE(vocab.size() == 4);
    for (const auto& term : {"alpha", "beta"}) {
        CHECK(matrix.at(0, *vocab.id_of(term)) == 1.0);
        CHECK(matrix.at(1, *vocab.id_of(term)) == 0.0);
    }
    for (const auto& term : {"gamma", "delta"}) {
        CHECK(matrix.at(0, *vocab.id_of(term)) == 0.0);
        CHECK(matrix.at(1, *vocab.id_of(term)) == 1.0);
    }
}

TEST_CASE("vocabulary is sorted and bijective") {
    std::mt19937_64 rng(5);
    const auto docs = random_docs(rng, 10, 60, 5, 50);
    const auto [vocab, matrix] = build_matrix(docs);
    CHECK(std::is_sorted(vocab.terms.begin(), vocab.terms.end()));
    for (std::size_t t = 0; t < vocab.size(); ++t)
        CHECK(*vocab.id_of(vocab.terms[t]) == t);
    CHECK(vocab.index.size() == vocab.terms.size());
}

TEST_CASE("build_matrix matches the brute-force counting oracle") {
    std::mt19937_64 rng(17);
    const auto docs = random_docs(rng, 20, 80, 10, 120);
    const auto [vocab, matrix] = build_matrix(docs);
    const auto oracle = brute_force_counts(docs);

    std::size_t oracle_nnz = 0;
    for (const auto& [doc_id, terms] : oracle) oracle_nnz += terms.size();
    CHECK(matrix.nnz() == oracle_nnz);

    for (std::size_t d = 0; d < matrix.n_docs; ++d) {
        const auto& expected = oracle.at(matrix.doc_ids[d]);
        for (const auto& [term, count] : expected)
            CHECK(matrix.at(d, *vocab.id_of(term)) == static_cast<double>(count));
    }
}

TEST_CASE("row sums equal per-document token counts") {
    std::mt19937_64 rng(19);
    const auto docs = random_docs(rng, 15, 40, 1, 80);
    const auto [vocab, matrix] = build_matrix(docs);
    const auto sums = matrix.row_sums();
    for (std::size_t d = 0; d < docs.size(); ++d)
        CHECK(sums[d] == static_cast<double>(docs[d].tokens.size()));
}

TEST_CASE("build_matrix rejects empty input") {
    CHECK_THROWS_AS(build_matrix({}), ValidationError);
    const auto docs = std::vector<PreparedDocument>{testing::make_prepared("d0", {}),
                                                    testing::make_prepared("d1", {})};
    CHECK_THROWS_AS(build_matrix(docs), ValidationError);
}

TEST_CASE("min_df filter drops rare terms") {
    const auto docs = std::vector<PreparedDocument>{
        testing::make_prepared("d0", {"shared", "rare"}),
        testing::make_prepared("d1", {"shared"}),
    };
    const auto [vocab, matrix] = build_matrix(docs, 2);
    CHECK(vocab.size() == 1);
    CHECK(vocab.id_of("shared").has_value());
    CHECK(!vocab.id_of("rare").has_value());
    CHECK_THROWS_AS(build_matrix(docs, 3), ValidationError);
}

TEST_CASE("tfidf zeroes out terms present in every document") {
    const auto docs = std::vector<PreparedDocument>{
        testing::make_prepared("d0", {"everywhere", "rare"}),
        testing::make_prepared("d1", {"everywhere"}),
        testing::make_prepared("d2", {"everywhere", "everywhere"}),
    };
    const auto [vocab, counts] = build_matrix(docs);
    const auto weighted = tfidf(counts);
    CHECK(weighted.kind == MatrixKind::Tfidf);
    const std::size_t everywhere = *vocab.id_of("everywhere");
    for (std::size_t d = 0; d < 3; ++d) CHECK(weighted.at(d, everywhere) == 0.0);
    // df = 1 out of 3 docs
    CHECK(weighted.at(0, *vocab.id_of("rare")) == doctest::Approx(std::log(3.0)).epsilon(1e-12));
}

TEST_CASE("tfidf weight equals count times ln(N/df)") {
    // N=4 docs, term in 2 of them with count 3 in one
    const auto docs = std::vector<PreparedDocument>{
        testing::make_prepared("d0", {"x", "x", "x", "pad"}),
        testing::make_prepared("d1", {"x", "pad"}),
        testing::make_prepared("d2", {"pad"}),
        testing::make_prepared("d3", {"pad"}),
    };
    const auto [vocab, counts] = build_matrix(docs);
    const auto weighted = tfidf(counts);
    const double expected = 3.0 * std::log(4.0 / 2.0); // one-line evaluation
    CHECK(weighted.at(0, *vocab.id_of("x")) == doctest::Approx(expected).epsilon(1e-12));
    CHECK(expected == doctest::Approx(2.0794).epsilon(1e-4));
}

TEST_CASE("tfidf matches a brute-force reimplementation on a random corpus") {
    std::mt19937_64 rng(29);
    const auto docs = random_docs(rng, 20, 60, 5, 100);
    const auto [vocab, counts] = build_matrix(docs);
    const auto weighted = tfidf(counts);

    // independent evaluation straight from the token lists
    const auto oracle = brute_force_counts(docs);
    std::map<std::string, std::size_t> df;
    for (const auto& [doc_id, terms] : oracle)
        for (const auto& [term, count] : terms) ++df[term];

    const double n = static_cast<double>(docs.size());
    for (std::size_t d = 0; d < counts.n_docs; ++d) {
        for (std::size_t t = 0; t < counts.n_terms; ++t) {
            const auto it = oracle.at(counts.doc_ids[d]).find(vocab.terms[t]);
            const double tf =
                it == oracle.at(counts.doc_ids[d]).end() ? 0.0 : static_cast<double>(it->second);
            const double expected = tf * std::log(n / static_cast<double>(df.at(vocab.terms[t])));
            const double actual = weighted.at(d, t);
            if (expected == 0.0)
                CHECK(actual == 0.0);
            else
                CHECK(std::abs(actual - expected) / std::abs(expected) < 1e-12);
        }
    }
}

TEST_CASE("tfidf preserves sparsity except all-document columns") {
    std::mt19937_64 rng(31);
    const auto docs = random_docs(rng, 12, 30, 5, 60);
    const auto [vocab, counts] = build_matrix(docs);
    const auto weighted = tfidf(counts);
    const auto df = counts.document_frequencies();
    for (std::size_t d = 0; d < counts.n_docs; ++d) {
        for (std::size_t t = 0; t < counts.n_terms; ++t) {
            const bool in_all_docs = df[t] == counts.n_docs;
            if (counts.at(d, t) == 0.0 || in_all_docs)
                CHECK(weighted.at(d, t) == 0.0);
            else
                CHECK(weighted.at(d, t) > 0.0);
        }
    }
}

TEST_CASE("normalized term frequencies form a distribution") {
    const auto docs =
        std::vector<PreparedDocument>{testing::make_prepared("d0", {"x", "x", "y"})};
    const auto [vocab, counts] = build_matrix(docs);
    const auto freq = normalized_term_frequencies(counts, vocab);
    CHECK(freq.at("x") == doctest::Approx(2.0 / 3.0).epsilon(1e-15));
    CHECK(freq.at("y") == doctest::Approx(1.0 / 3.0).epsilon(1e-15));
}

TEST_CASE("frequencies sum to one and the top list matches a sort oracle") {
    std::mt19937_64 rng(37);
    const auto docs = random_docs(rng, 10, 40, 20, 90);
    const auto [vocab, counts] = build_matrix(docs);
    const auto freq = normalized_term_frequencies(counts, vocab);

    double total = 0.0;
    for (const auto& [term, f] : freq) total += f;
    CHECK(total == doctest::Approx(1.0).epsilon(1e-12));

    // independent ranking from the brute-force counts
    std::map<std::string, std::size_t> totals;
    std::size_t all = 0;
    for (const auto& doc : docs)
        for (const auto& tok : doc.tokens) {
            ++totals[tok.normalized];
            ++all;
        }
    std::vector<std::pair<std::string, double>> oracle;
    for (const auto& [term, count] : totals)
        oracle.emplace_back(term, static_cast<double>(count) / static_cast<double>(all));
    std::sort(oracle.begin(), oracle.end(), [](const auto& a, const auto& b) {
        if (a.second != b.second) return a.second > b.second;
        return a.first < b.first;
    });
    oracle.resize(20);

    const auto top = top_frequencies(freq, 20);
    REQUIRE(top.size() == 20);
    for (std::size_t i = 0; i < top.size(); ++i) {
        CHECK(top[i].first == oracle[i].first);
        CHECK(top[i].second == doctest::Approx(oracle[i].second).epsilon(1e-12));
    }
}

TEST_CASE("coordinate export lists every nonzero once") {
    const auto docs = std::vector<PreparedDocument>{
        testing::make_prepared("d0", {"b", "a", "b"}),
        testing::make_prepared("d1", {"c"}),
    };
    const auto [vocab, counts] = build_matrix(docs);
    std::ostringstream out;
    write_coordinate_format(counts, vocab, out);
    CHECK(out.str() == "d0\ta\t1\nd0\tb\t2\nd1\tc\t1\n");

    std::ostringstream vocab_out;
    write_vocabulary_json(vocab, vocab_out);
    CHECK(vocab_out.str().find("\"a\"") != std::string::npos);
}
