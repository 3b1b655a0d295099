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

#include <cstddef>
#include <filesystem>
#include <string>
#include <vector>

namespace corpuslens {

struct PreparedDocument;

/// One article. `id` is the file stem and is unique within its corpus;
/// `raw_text` is validated UTF-8.
struct Document {
    std::string id;
    std::string raw_text;
    std::string source_path;
};

/// A labeled collection of articles, ordered lexicographically by id so every
/// downstream result is deterministic.
struct Corpus {
    std::string label;
    std::vector<Document> documents;
};

/// Loads every `.txt` file in `dir_path` (non-recursive) as one Document,
/// sorted by id. Throws IoError if the directory is missing, ValidationError
/// if it holds no `.txt` files, contains duplicate stems, or a file is not
/// valid UTF-8 (the message names the offending file).
Corpus load_corpus(const std::filesystem::path& dir_path, const std::string& label);

/// Counts over a preprocessed corpus.
struct CorpusStats {
    std::size_t documents = 0;
    std::size_t tokens = 0;     // total across documents, post-filtering
    std::size_t vocabulary = 0; // distinct normalized forms
};

CorpusStats corpus_stats(const std::vector<PreparedDocument>& docs);

} // namespace corpuslens
