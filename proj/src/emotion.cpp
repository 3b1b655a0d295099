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

#include "corpuslens/emotion.hpp"

#include <algorithm>
#include <charconv>
#include <fstream>
#include <map>

#include "corpuslens/errors.hpp"
#include "corpuslens/unicode.hpp"

namespace corpuslens {

namespace {

std::optional<char> pos_suffix(PosTag tag) {
    switch (tag) {
    case PosTag::Noun: return 'n';
    case PosTag::Verb: return 'v';
    case PosTag::Adj: return 'a';
    case PosTag::Adv: return 'r';
    case PosTag::Other: return std::nullopt;
    }
    return std::nullopt;
}

std::optional<PosTag> tag_from_suffix(char c) {
    switch (c) {
    case 'n': return PosTag::Noun;
    case 'v': return PosTag::Verb;
    case 'a': return PosTag::Adj;
    case 'r': return PosTag::Adv;
    default: return std::nullopt;
    }
}

std::vector<std::string_view> split_tabs(std::string_view line) {
    std::vector<std::string_view> fields;
    std::size_t start = 0;
    while (true) {
        const std::size_t tab = line.find('\t', start);
        if (tab == std::string_view::npos) {
            fields.push_back(line.substr(start));
            break;
        }
        fields.push_back(line.substr(start, tab - start));
        start = tab + 1;
    }
    return fields;
}

double parse_score(std::string_view field, const std::string& where) {
    double value = 0.0;
    const auto [ptr, ec] = std::from_chars(field.data(), field.data() + field.size(), value);
    if (ec != std::errc{} || ptr != field.data() + field.size())
        throw ValidationError(where + ": unparseable score '" + std::string(field) + "'");
    return value;
}

} // namespace

std::optional<std::size_t> emotion_index(std::string_view name) {
    for (std::size_t i = 0; i < kEmotionNames.size(); ++i)
        if (kEmotionNames[i] == name) return i;
    return std::nullopt;
}

EmotionLexicon EmotionLexicon::load(const std::filesystem::path& path, bool pos_aware) {
    std::ifstream in(path);
    if (!in) throw IoError("cannot open lexicon: " + path.string());

    const std::string name = path.string();
    std::string line;
    std::size_t line_no = 0;

    if (!std::getline(in, line))
        throw ValidationError(name + ": empty file, expected a header row");
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    const auto header = split_tabs(line);
    if (header.size() != kEmotionCount + 1)
        throw ValidationError(name + ":1: header must have a key column and " +
                              std::to_string(kEmotionCount) + " emotion columns");
    for (std::size_t i = 0; i < kEmotionCount; ++i)
        if (header[i + 1] != kEmotionNames[i])
            throw ValidationError(name + ":1: emotion column " + std::to_string(i + 1) +
                                  " must be " + std::string(kEmotionNames[i]) + ", got '" +
                                  std::string(header[i + 1]) + "'");

    EmotionLexicon lexicon;
    lexicon.pos_aware_ = pos_aware;
    while (std::getline(in, line)) {
        ++line_no;
        if (!line.empty() && line.back() == '\r') line.pop_back();
        if (line.empty()) continue;
        const std::string where = name + ":" + std::to_string(line_no);

        const auto fields = split_tabs(line);
        if (fields.size() != kEmotionCount + 1)
            throw ValidationError(where + ": expected " + std::to_string(kEmotionCount + 1) +
                                  " columns, got " + std::to_string(fields.size()));

        std::string key = unicode::to_lower_copy(fields[0]);
        const std::size_t hash = key.find('#');
        if (pos_aware) {
            if (hash == std::string::npos || hash + 2 != key.size())
                throw ValidationError(where + ": POS-aware lexicon needs keys of the form "
                                              "word#p (p one of n, v, a, r)");
            if (!tag_from_suffix(key[hash + 1]))
                throw ValidationError(where + ": unknown POS suffix '" +
                                      std::string(1, key[hash + 1]) + "'");
            if (hash == 0) throw ValidationError(where + ": empty word before '#'");
        } else {
            if (hash != std::string::npos)
                throw ValidationError(where + ": POS-tagged key in a token-mode lexicon "
                                              "(load with pos_aware=true)");
            if (key.empty()) throw ValidationError(where + ": empty key");
        }

        EmotionVector scores{};
        for (std::size_t i = 0; i < kEmotionCount; ++i) {
            const double value = parse_score(fields[i + 1], where);
            if (value < 0.0 || value > 1.0)
                throw ValidationError(where + ": score " + std::to_string(value) +
                                      " outside [0, 1]");
            scores[i] = value;
        }

        if (!lexicon.entries_.emplace(std::move(key), scores).second)
            throw ValidationError(where + ": duplicate key '" + std::string(fields[0]) + "'");
    }
    return lexicon;
}

EmotionLexicon EmotionLexicon::from_entries(
    std::unordered_map<std::string, EmotionVector> entries, bool pos_aware) {
    EmotionLexicon lexicon;
    lexicon.entries_ = std::move(entries);
    lexicon.pos_aware_ = pos_aware;
    return lexicon;
}

const EmotionVector* EmotionLexicon::find(std::string_view word, PosTag pos) const {
    std::string key(word);
    if (pos_aware_) {
        const auto suffix = pos_suffix(pos);
        if (!suffix) return nullptr;
        key.push_back('#');
        key.push_back(*suffix);
    }
    const auto it = entries_.find(key);
    return it == entries_.end() ? nullptr : &it->second;
}

void EmotionLexicon::write(std::ostream& out) const {
    out << "word";
    for (const auto& name : kEmotionNames) out << '\t' << name;
    out << '\n';
    std::map<std::string_view, const EmotionVector*> sorted;
    for (const auto& [key, scores] : entries_) sorted[key] = &scores;
    out.precision(17);
    for (const auto& [key, scores] : sorted) {
        out << key;
        for (const double s : *scores) out << '\t' << s;
        out << '\n';
    }
}

EmotionProfile score_document(const PreparedDocument& doc, const EmotionLexicon& lexicon) {
    EmotionProfile profile;
    profile.total_tokens = doc.tokens.size();

    EmotionVector raw{};
    for (const auto& tok : doc.tokens) {
        if (const EmotionVector* scores = lexicon.find(tok.normalized, tok.pos)) {
            ++profile.matched_tokens;
            for (std::size_t e = 0; e < kEmotionCount; ++e) raw[e] += (*scores)[e];
        }
    }

    double total = 0.0;
    for (const double r : raw) total += r;
    if (total > 0.0) {
        for (std::size_t e = 0; e < kEmotionCount; ++e) profile.scores[e] = raw[e] / total;
        profile.defined = true;
    }
    return profile;
}

CorpusEmotionProfile aggregate_corpus(const std::vector<EmotionProfile>& profiles) {
    CorpusEmotionProfile result;
    EmotionVector sum{};
    for (const auto& p : profiles) {
        if (!p.defined) {
            ++result.excluded_documents;
            continue;
        }
        ++result.included_documents;
        result.profile.matched_tokens += p.matched_tokens;
        result.profile.total_tokens += p.total_tokens;
        for (std::size_t e = 0; e < kEmotionCount; ++e) sum[e] += p.scores[e];
    }
    if (result.included_documents == 0)
        throw ValidationError("cannot aggregate: no document has a defined emotion profile");

    double total = 0.0;
    for (const double s : sum) total += s;
    for (std::size_t e = 0; e < kEmotionCount; ++e) result.profile.scores[e] = sum[e] / total;
    result.profile.defined = true;
    return result;
}

CorpusEmotionProfile corpus_profile(const std::vector<PreparedDocument>& docs,
                                    const EmotionLexicon& lexicon, Pooling pooling) {
    if (pooling == Pooling::Macro) {
        std::vector<EmotionProfile> profiles;
        profiles.reserve(docs.size());
        for (const auto& doc : docs) profiles.push_back(score_document(doc, lexicon));
        return aggregate_corpus(profiles);
    }

    // Micro: one pooled pseudo-document, but per-document match bookkeeping.
    CorpusEmotionProfile result;
    EmotionVector raw{};
    for (const auto& doc : docs) {
        const EmotionProfile p = score_document(doc, lexicon);
        if (p.defined)
            ++result.included_documents;
        else
            ++result.excluded_documents;
        result.profile.total_tokens += p.total_tokens;
        for (const auto& tok : doc.tokens) {
            if (const EmotionVector* scores = lexicon.find(tok.normalized, tok.pos)) {
                ++result.profile.matched_tokens;
                for (std::size_t e = 0; e < kEmotionCount; ++e) raw[e] += (*scores)[e];
            }
        }
    }
    double total = 0.0;
    for (const double r : raw) total += r;
    if (total <= 0.0)
        throw ValidationError("cannot aggregate: no document has a defined emotion profile");
    for (std::size_t e = 0; e < kEmotionCount; ++e) result.profile.scores[e] = raw[e] / total;
    result.profile.defined = true;
    return result;
}

std::vector<std::pair<std::string, double>>
top_emotion_words(const std::vector<PreparedDocument>& docs, const EmotionLexicon& lexicon,
                  std::size_t emotion, std::size_t n) {
    if (emotion >= kEmotionCount)
        throw ValidationError("emotion index out of range: " + std::to_string(emotion));

    // Best score per distinct word over the (word, tag) pairs in the corpus.
    std::unordered_map<std::string, double> best;
    for (const auto& doc : docs) {
        for (const auto& tok : doc.tokens) {
            if (const EmotionVector* scores = lexicon.find(tok.normalized, tok.pos)) {
                const double value = (*scores)[emotion];
                const auto [it, inserted] = best.emplace(tok.normalized, value);
                if (!inserted && value > it->second) it->second = value;
            }
        }
    }

    std::vector<std::pair<std::string, double>> ranked(best.begin(), best.end());
    std::sort(ranked.begin(), ranked.end(), [](const auto& a, const auto& b) {
        if (a.second != b.second) return a.second > b.second;
        return a.first < b.first;
    });
    if (ranked.size() > n) ranked.resize(n);
    return ranked;
}

EmotionLexicon derive_lexicon(const AnnotationMatrices& matrices) {
    const auto& D = matrices.doc_emotion;
    const auto& T = matrices.word_document;
    if (static_cast<std::size_t>(D.cols()) != kEmotionCount)
        throw ValidationError("doc_emotion must have " + std::to_string(kEmotionCount) +
                              " columns");
    if (T.cols() != D.rows())
        throw ValidationError("word_document columns (" + std::to_string(T.cols()) +
                              ") must match doc_emotion rows (" + std::to_string(D.rows()) +
                              ")");
    if (static_cast<std::size_t>(T.rows()) != matrices.words.size())
        throw ValidationError("word labels must match word_document rows");
    if ((D.array() < 0.0).any() || (T.array() < 0.0).any())
        throw ValidationError("annotation matrices must be nonnegative");

    const Eigen::MatrixXd product = T * D; // n_words x 8

    std::unordered_map<std::string, EmotionVector> entries;
    entries.reserve(matrices.words.size());
    for (Eigen::Index w = 0; w < product.rows(); ++w) {
        const double row_max = product.row(w).maxCoeff();
        if (row_max <= 0.0) continue; // word never annotated
        EmotionVector scores{};
        for (std::size_t e = 0; e < kEmotionCount; ++e)
            scores[e] = product(w, static_cast<Eigen::Index>(e)) / row_max;
        const std::string key = unicode::to_lower_copy(matrices.words[w]);
        if (!entries.emplace(key, scores).second)
            throw ValidationError("duplicate word in annotation matrix: " + key);
    }
    return EmotionLexicon::from_entries(std::move(entries), /*pos_aware=*/false);
}

} // namespace corpuslens
