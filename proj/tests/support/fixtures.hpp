// Apache License, Version 2.0, refer to LICENSE.txt
//
// Shared fixture builders and independent oracle helpers for the test suites.
// Generators here are the ground truth the implementation is checked against,
// so they must not call into the code paths they verify.

#pragma once

#include <filesystem>
#include <fstream>
#include <random>
#include <string>
#include <vector>

#include "corpuslens/emotion.hpp"
#include "corpuslens/rng.hpp"
#include "corpuslens/textprep.hpp"

namespace corpuslens::testing {

/// Self-deleting temporary directory.
class TempDir {
public:
    explicit TempDir(const std::string& prefix = "corpuslens-test") {
        const auto base = std::filesystem::temp_directory_path();
        std::mt19937_64 rng(std::random_device{}());
        for (int attempt = 0; attempt < 64; ++attempt) {
            auto candidate = base / (prefix + "-" + std::to_string(rng()));
            if (std::filesystem::create_directory(candidate)) {
                path_ = std::move(candidate);
                return;
            }
        }
        throw std::runtime_error("cannot create temp directory");
    }
    ~TempDir() {
        std::error_code ec;
        std::filesystem::remove_all(path_, ec);
    }
    TempDir(const TempDir&) = delete;
    TempDir& operator=(const TempDir&) = delete;

    const std::filesystem::path& path() const { return path_; }

private:
    std::filesystem::path path_;
};

inline void write_text_file(const std::filesystem::path& path, const std::string& content) {
    std::ofstream out(path, std::ios::binary);
    out << content;
}

/// PreparedDocument straight from words, bypassing the text pipeline.
inline PreparedDocument make_prepared(std::string doc_id,
                                      const std::vector<std::string>& words,
                                      PosTag pos = PosTag::Noun) {
    PreparedDocument doc;
    doc.doc_id = std::move(doc_id);
    for (const auto& w : words) doc.tokens.push_back(Token{w, w, pos});
    return doc;
}

struct PlantedCorpus {
    std::vector<PreparedDocument> docs;
    std::vector<std::vector<std::string>> topic_vocabularies; // disjoint
};

/// Synthetic corpus with known topic structure: `n_topics` disjoint
/// vocabularies of `words_per_topic` words; each document draws most tokens
/// from its own topic (Zipf-ish within the topic) and `noise` of them
/// uniformly from the whole vocabulary.
inline PlantedCorpus generate_planted_corpus(std::size_t n_topics, std::size_t words_per_topic,
                                             std::size_t n_docs, std::uint64_t seed,
                                             double noise = 0.2,
                                             std::size_t min_tokens = 40,
                                             std::size_t max_tokens = 80) {
    PlantedCorpus corpus;
    std::vector<std::string> all_words;
    for (std::size_t t = 0; t < n_topics; ++t) {
        std::vector<std::string> vocab;
        for (std::size_t w = 0; w < words_per_topic; ++w) {
            vocab.push_back("topic" + std::to_string(t) + "word" + std::to_string(w));
            all_words.push_back(vocab.back());
        }
        corpus.topic_vocabularies.push_back(std::move(vocab));
    }

    // Zipf-like weights within a topic vocabulary.
    std::vector<double> cdf(words_per_topic);
    double total = 0.0;
    for (std::size_t w = 0; w < words_per_topic; ++w) {
        total += 1.0 / static_cast<double>(w + 1);
        cdf[w] = total;
    }

    std::mt19937_64 rng(seed);
    for (std::size_t d = 0; d < n_docs; ++d) {
        const std::size_t topic = d % n_topics;
        const std::size_t length =
            min_tokens + uniform_index(rng, max_tokens - min_tokens + 1);
        std::vector<std::string> words;
        words.reserve(length);
        for (std::size_t i = 0; i < length; ++i) {
            if (uniform_unit(rng) < noise) {
                words.push_back(all_words[uniform_index(rng, all_words.size())]);
            } else {
                const double u = uniform_unit(rng) * total;
                std::size_t w = 0;
                while (w + 1 < words_per_topic && cdf[w] < u) ++w;
                words.push_back(corpus.topic_vocabularies[topic][w]);
            }
        }
        std::string id = "doc";
        if (d < 10) id += "0";
        corpus.docs.push_back(make_prepared(id + std::to_string(d), words));
    }
    return corpus;
}

/// Two documents over fully disjoint vocabularies, for topic-separation checks.
inline std::vector<PreparedDocument> disjoint_pair_corpus(std::size_t words_per_doc,
                                                          std::size_t vocab_per_doc,
                                                          std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    std::vector<PreparedDocument> docs;
    for (std::size_t d = 0; d < 2; ++d) {
        std::vector<std::string> words;
        for (std::size_t i = 0; i < words_per_doc; ++i)
            words.push_back("side" + std::to_string(d) + "term" +
                            std::to_string(uniform_index(rng, vocab_per_doc)));
        docs.push_back(make_prepared("doc" + std::to_string(d), words));
    }
    return docs;
}

/// Token-mode lexicon over `vocabulary` with dyadic scores (multiples of 1/8)
/// so sums and uniform rescaling stay exact in floating point.
inline EmotionLexicon dyadic_fixture_lexicon(const std::vector<std::string>& vocabulary,
                                             std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    std::unordered_map<std::string, EmotionVector> entries;
    for (const auto& word : vocabulary) {
        EmotionVector scores{};
        for (auto& s : scores) s = static_cast<double>(uniform_index(rng, 9)) / 8.0;
        entries[word] = scores;
    }
    return EmotionLexicon::from_entries(std::move(entries), /*pos_aware=*/false);
}

/// The same lexicon with every score multiplied by `factor` (bypasses load
/// validation on purpose).
inline EmotionLexicon scaled_lexicon(const EmotionLexicon& lexicon, double factor) {
    std::unordered_map<std::string, EmotionVector> entries;
    for (const auto& [key, scores] : lexicon.entries()) {
        EmotionVector scaled{};
        for (std::size_t e = 0; e < kEmotionCount; ++e) scaled[e] = scores[e] * factor;
        entries[key] = scaled;
    }
    return EmotionLexicon::from_entries(std::move(entries), lexicon.pos_aware());
}

} // namespace corpuslens::testing
