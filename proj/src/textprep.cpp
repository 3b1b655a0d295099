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

#include "corpuslens/textprep.hpp"

#include <algorithm>
#include <cstdlib>
#include <fstream>

#include "corpuslens/config.hpp"
#include "corpuslens/errors.hpp"
#include "corpuslens/unicode.hpp"

namespace corpuslens {

namespace {

constexpr char32_t kApostrophe = 0x27;
constexpr char32_t kRightSingleQuote = 0x2019;

// Determiners, pronouns, prepositions, conjunctions, auxiliaries, and other
// function words. Tagged OTHER before any lexicon or suffix rule applies.
const std::unordered_set<std::string>& closed_class_words() {
    static const std::unordered_set<std::string> words = {
        // determiners / articles
        "a", "an", "the", "this", "that", "these", "those", "each", "every",
        "either", "neither", "some", "any", "no", "all", "both", "few",
        "many", "much", "several", "enough", "such", "what", "which",
        "whose", "another", "other",
        // pronouns
        "i", "me", "my", "mine", "myself", "you", "your", "yours",
        "yourself", "yourselves", "he", "him", "his", "himself", "she",
        "her", "hers", "herself", "it", "its", "itself", "we", "us", "our",
        "ours", "ourselves", "they", "them", "their", "theirs",
        "themselves", "who", "whom", "whoever", "whomever", "someone",
        "somebody", "something", "anyone", "anybody", "anything",
        "everyone", "everybody", "everything", "nobody", "nothing", "none",
        "one", "ones", "oneself",
        // prepositions
        "about", "above", "across", "after", "against", "along", "amid",
        "among", "around", "at", "before", "behind", "below", "beneath",
        "beside", "besides", "between", "beyond", "by", "despite", "down",
        "during", "except", "for", "from", "in", "inside", "into", "like",
        "near", "of", "off", "on", "onto", "out", "outside", "over", "past",
        "per", "since", "through", "throughout", "till", "to", "toward",
        "towards", "under", "underneath", "until", "unto", "up", "upon",
        "via", "with", "within", "without",
        // conjunctions / complementizers
        "and", "but", "or", "nor", "so", "yet", "although", "because",
        "if", "once", "than", "though", "unless", "whenever", "where",
        "whereas", "wherever", "whether", "while", "when", "why", "how",
        "as", "that",
        // auxiliaries and common light verbs
        "am", "is", "are", "was", "were", "be", "been", "being", "have",
        "has", "had", "having", "do", "does", "did", "doing", "done",
        "will", "would", "shall", "should", "can", "could", "may", "might",
        "must", "ought", "need", "dare",
        // negation, existential, infinitive marker
        "not", "there", "here", "then", "also", "too", "very", "just",
        "only", "even", "now", "again", "ever", "never", "always", "often",
        "still", "yes",
    };
    return words;
}

bool ends_with(std::string_view word, std::string_view suffix) {
    return word.size() > suffix.size() + 1 &&
           word.substr(word.size() - suffix.size()) == suffix;
}

} // namespace

std::string_view to_string(PosTag tag) {
    switch (tag) {
    case PosTag::Noun: return "NOUN";
    case PosTag::Verb: return "VERB";
    case PosTag::Adj: return "ADJ";
    case PosTag::Adv: return "ADV";
    case PosTag::Other: return "OTHER";
    }
    return "OTHER";
}

std::optional<PosTag> parse_pos_tag(std::string_view text) {
    if (text == "NOUN") return PosTag::Noun;
    if (text == "VERB") return PosTag::Verb;
    if (text == "ADJ") return PosTag::Adj;
    if (text == "ADV") return PosTag::Adv;
    if (text == "OTHER") return PosTag::Other;
    return std::nullopt;
}

StopList::StopList(const std::vector<std::string>& words) {
    for (const auto& w : words) {
        std::string lowered = unicode::to_lower_copy(w);
        if (!lowered.empty()) words_.insert(std::move(lowered));
    }
}

StopList StopList::from_file(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) throw IoError("cannot open stop list: " + path.string());
    StopList list;
    std::string line;
    while (std::getline(in, line)) {
        if (!line.empty() && line.back() == '\r') line.pop_back();
        if (line.empty() || line.front() == '#') continue;
        list.words_.insert(unicode::to_lower_copy(line));
    }
    return list;
}

bool StopList::contains(std::string_view word) const {
    return words_.find(std::string(word)) != words_.end();
}

TaggerLexicon TaggerLexicon::from_file(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) throw IoError("cannot open tagger lexicon: " + path.string());
    TaggerLexicon lex;
    std::string line;
    std::size_t line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        if (!line.empty() && line.back() == '\r') line.pop_back();
        if (line.empty() || line.front() == '#') continue;
        const auto tab = line.find('\t');
        if (tab == std::string::npos)
            throw ValidationError("tagger lexicon " + path.string() + ":" +
                                  std::to_string(line_no) + ": expected word<TAB>tag");
        const auto tag = parse_pos_tag(std::string_view(line).substr(tab + 1));
        if (!tag)
            throw ValidationError("tagger lexicon " + path.string() + ":" +
                                  std::to_string(line_no) + ": unknown tag '" +
                                  line.substr(tab + 1) + "'");
        lex.entries_[unicode::to_lower_copy(line.substr(0, tab))] = *tag;
    }
    return lex;
}

void TaggerLexicon::insert(std::string word, PosTag tag) {
    entries_[std::move(word)] = tag;
}

std::optional<PosTag> TaggerLexicon::lookup(std::string_view word) const {
    const auto it = entries_.find(std::string(word));
    if (it == entries_.end()) return std::nullopt;
    return it->second;
}

std::vector<Token> tokenize(std::string_view text) {
    std::vector<Token> tokens;
    std::string current; // code points kept for the current token, UTF-8

    const auto flush = [&] {
        if (current.empty()) return;
        // strip leading/trailing apostrophes
        std::size_t begin = 0;
        std::size_t end = current.size();
        while (begin < end && current[begin] == '\'') ++begin;
        while (end > begin && current[end - 1] == '\'') --end;
        if (end > begin) {
            Token tok;
            tok.surface = current.substr(begin, end - begin);
            tok.normalized = unicode::to_lower_copy(tok.surface);
            tokens.push_back(std::move(tok));
        }
        current.clear();
    };

    std::size_t pos = 0;
    char32_t cp = 0;
    while (pos < text.size()) {
        pos += unicode::decode(text, pos, cp);
        if (cp == kRightSingleQuote) cp = kApostrophe;
        if (cp == kApostrophe || unicode::is_word_char(cp)) {
            unicode::append_utf8(current, cp);
        } else {
            flush();
        }
    }
    flush();
    return tokens;
}

std::vector<Token> normalize_and_filter(std::vector<Token> tokens, const StopList& stops) {
    std::erase_if(tokens, [&](const Token& t) { return stops.contains(t.normalized); });
    return tokens;
}

bool is_closed_class(std::string_view word) {
    return closed_class_words().count(std::string(word)) > 0;
}

PosTag tag_word(std::string_view normalized, const TaggerLexicon& lexicon) {
    if (is_closed_class(normalized)) return PosTag::Other;
    if (const auto tag = lexicon.lookup(normalized)) return *tag;
    if (ends_with(normalized, "ly")) return PosTag::Adv;
    if (ends_with(normalized, "ing") || ends_with(normalized, "ed")) return PosTag::Verb;
    if (ends_with(normalized, "ous") || ends_with(normalized, "ful") ||
        ends_with(normalized, "ive") || ends_with(normalized, "al"))
        return PosTag::Adj;
    return PosTag::Noun;
}

void pos_tag(std::vector<Token>& tokens, const TaggerLexicon& lexicon) {
    for (auto& tok : tokens) tok.pos = tag_word(tok.normalized, lexicon);
}

PreparedDocument prepare(const Document& doc, const StopList& stops,
                         const TaggerLexicon& tagger) {
    PreparedDocument prepared;
    prepared.doc_id = doc.id;
    prepared.tokens = normalize_and_filter(tokenize(doc.raw_text), stops);
    pos_tag(prepared.tokens, tagger);
    return prepared;
}

std::vector<PreparedDocument> prepare_corpus(const Corpus& corpus, const StopList& stops,
                                             const TaggerLexicon& tagger) {
    std::vector<PreparedDocument> prepared;
    prepared.reserve(corpus.documents.size());
    for (const auto& doc : corpus.documents) prepared.push_back(prepare(doc, stops, tagger));
    return prepared;
}

std::filesystem::path data_dir() {
    if (const char* env = std::getenv("CORPUS_LENS_DATA"); env && *env)
        return std::filesystem::path(env);
    return std::filesystem::path(CORPUS_LENS_DEFAULT_DATA_DIR);
}

StopList default_stoplist() {
    return StopList::from_file(data_dir() / "stopwords_en.txt");
}

TaggerLexicon default_tagger_lexicon() {
    return TaggerLexicon::from_file(data_dir() / "pos_lexicon.tsv");
}

} // namespace corpuslens
