// Copyright 2026 The OpenForge Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef OPENFORGE_CORPUS_H_
#define OPENFORGE_CORPUS_H_

#include <string>
#include <string_view>
#include <vector>

namespace openforge {

// One CoNLL-U token. Indices are 1-based; head 0 marks the root.
struct Token {
  int index = 0;
  std::string surface;
  std::string lemma;  // lowercased surface when the lemma column is "_"
  std::string pos;    // Penn tag from the XPOS column
  int head = 0;
  std::string deprel;

  bool operator==(const Token &other) const = default;
};

struct Sentence {
  std::string id;
  std::vector<Token> tokens;

  int size() const { return static_cast<int>(tokens.size()); }

  // 0-based access.
  const Token &at(int i) const { return tokens[i]; }

  bool operator==(const Sentence &other) const = default;
};

struct Corpus {
  std::vector<Sentence> sentences;
  // Parallel to sentences; empty string when no newdoc id was seen.
  std::vector<std::string> doc_ids;

  int num_tokens() const;

  bool operator==(const Corpus &other) const = default;
};

// Parses a CoNLL-U document. Multiword ranges and empty nodes are skipped.
// Sentences without a sent_id comment get "s<N>" (1-based ordinal).
// Throws ParseError for malformed lines and StructureError for sentences
// that are not single-rooted trees or carry duplicate ids.
Corpus ParseConllu(std::string_view text);

// Reads and parses a CoNLL-U file. Throws Error if the file cannot be read.
Corpus LoadConllu(const std::string &path);

// Serializes back to CoNLL-U. ParseConllu(WriteConllu(c)) == c.
std::string WriteConllu(const Corpus &corpus);

// Checks the token invariants and the tree shape of a sentence.
void ValidateSentence(const Sentence &sentence);

// Lowercases ASCII letters.
std::string Lowercase(std::string_view text);

// Penn punctuation tags and bare punctuation surfaces.
bool IsPunctuation(const Token &token);

}  // namespace openforge

#endif  // OPENFORGE_CORPUS_H_
