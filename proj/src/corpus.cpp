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

#include "corpuslens/corpus.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>
#include <unordered_set>

#include "corpuslens/errors.hpp"
#include "corpuslens/textprep.hpp"
#include "corpuslens/unicode.hpp"

namespace corpuslens {

namespace {

std::string read_file(const std::filesystem::path& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw IoError("cannot open file: " + path.string());
    std::ostringstream buf;
    buf << in.rdbuf();
    return std::move(buf).str();
}

} // namespace

Corpus load_corpus(const std::filesystem::path& dir_path, const std::string& label) {
    if (label.empty()) throw ValidationError("corpus label must be non-empty");

    std::error_code ec;
    if (!std::filesystem::is_directory(dir_path, ec))
        throw IoError("corpus directory does not exist: " + dir_path.string());

    Corpus corpus;
    corpus.label = label;

    for (const auto& entry : std::filesystem::directory_iterator(dir_path)) {
        if (!entry.is_regular_file() || entry.path().extension() != ".txt") continue;
        Document doc;
        doc.id = entry.path().stem().string();
        doc.source_path = entry.path().string();
        doc.raw_text = read_file(entry.path());

        std::size_t bad_offset = 0;
        if (!unicode::validate_utf8(doc.raw_text, &bad_offset))
            throw ValidationError("file is not valid UTF-8: " + doc.source_path +
                                  " (byte offset " + std::to_string(bad_offset) + ")");
        corpus.documents.push_back(std::move(doc));
    }

    if (corpus.documents.empty())
        throw ValidationError("no documents: no .txt files in " + dir_path.string());

    std::sort(corpus.documents.begin(), corpus.documents.end(),
              [](const Document& a, const Document& b) { return a.id < b.id; });

    std::unordered_set<std::string> seen;
    for (const auto& doc : corpus.documents)
        if (!seen.insert(doc.id).second)
            throw ValidationError("duplicate document id '" + doc.id + "' in " +
                                  dir_path.string());

    return corpus;
}

CorpusStats corpus_stats(const std::vector<PreparedDocument>& docs) {
    CorpusStats stats;
    stats.documents = docs.size();
    std::unordered_set<std::string_view> vocab;
    for (const auto& doc : docs) {
        stats.tokens += doc.tokens.size();
        for (const auto& tok : doc.tokens) vocab.insert(tok.normalized);
    }
    stats.vocabulary = vocab.size();
    return stats;
}

} // namespace corpuslens
