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

#include "openforge/corpus.h"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <fstream>
#include <sstream>
#include <unordered_set>

#include "openforge/errors.h"

namespace openforge {

namespace {

std::vector<std::string_view> SplitTabs(std::string_view line) {
  std::vector<std::string_view> fields;
  size_t start = 0;
  while (true) {
    size_t tab = line.find('\t', start);
    if (tab == std::string_view::npos) {
      fields.push_back(line.substr(start));
      break;
    }
    fields.push_back(line.substr(start, tab - start));
    start = tab + 1;
  }
  return fields;
}

bool ParseInt(std::string_view field, int *value) {
  auto [ptr, ec] = std::from_chars(field.data(), field.data() + field.size(),
                                   *value);
  return ec == std::errc() && ptr == field.data() + field.size();
}

std::string_view Trim(std::string_view s) {
  while (!s.empty() && (s.front() == ' ' || s.front() == '\r')) s.remove_prefix(1);
  while (!s.empty() && (s.back() == ' ' || s.back() == '\r')) s.remove_suffix(1);
  return s;
}

// Parses "# key = value" comments; returns false if not of that form.
bool ParseComment(std::string_view line, std::string_view key,
                  std::string *value) {
  line.remove_prefix(1);
  line = Trim(line);
  if (line.substr(0, key.size()) != key) return false;
  line.remove_prefix(key.size());
  line = Trim(line);
  if (line.empty() || line.front() != '=') return false;
  line.remove_prefix(1);
  *value = std::string(Trim(line));
  return true;
}

}  // namespace

int Corpus::num_tokens() const {
  int n = 0;
  for (const Sentence &s : sentences) n += s.size();
  return n;
}

std::string Lowercase(std::string_view text) {
  std::string out(text);
  for (char &c : out) {
    if (c >= 'A' && c <= 'Z') c = static_cast<char>(c - 'A' + 'a');
  }
  return out;
}

bool IsPunctuation(const Token &token) {
  static const std::unordered_set<std::string> kTags = {
      ".", ",", ":", "``", "''", "-LRB-", "-RRB-", "HYPH", "NFP", "#", "$"};
  if (kTags.count(token.pos)) return true;
  return std::all_of(token.surface.begin(), token.surface.end(), [](char c) {
    return std::ispunct(static_cast<unsigned char>(c));
  }) && !token.surface.empty();
}

void ValidateSentence(const Sentence &sentence) {
  const int n = sentence.size();
  if (n == 0) throw StructureError(sentence.id, "no tokens");
  int roots = 0;
  for (int i = 0; i < n; ++i) {
    const Token &t = sentence.tokens[i];
    if (t.index != i + 1) {
      throw StructureError(sentence.id, "token indices are not contiguous at " +
                                            std::to_string(t.index));
    }
    if (t.head < 0 || t.head > n) {
      throw StructureError(sentence.id, "head out of range for token " +
                                            std::to_string(t.index));
    }
    if (t.head == t.index) {
      throw StructureError(sentence.id,
                           "token " + std::to_string(t.index) + " heads itself");
    }
    if (t.pos.empty()) {
      throw StructureError(sentence.id,
                           "empty POS tag on token " + std::to_string(t.index));
    }
    if (t.head == 0) ++roots;
  }
  if (roots != 1) {
    throw StructureError(sentence.id,
                         "expected one root, found " + std::to_string(roots));
  }
  // With a single root and one head per token, the graph is a tree iff every
  // token reaches the root.
  std::vector<int> state(n + 1, 0);  // 0 unvisited, 1 on stack, 2 reaches root
  state[0] = 2;
  for (int start = 1; start <= n; ++start) {
    std::vector<int> chain;
    int cur = start;
    while (state[cur] == 0) {
      state[cur] = 1;
      chain.push_back(cur);
      cur = sentence.tokens[cur - 1].head;
    }
    if (state[cur] == 1) {
      throw StructureError(sentence.id, "cycle through token " +
                                            std::to_string(cur));
    }
    for (int v : chain) state[v] = 2;
  }
}

Corpus ParseConllu(std::string_view text) {
  Corpus corpus;
  Sentence current;
  std::string pending_id;
  std::string pending_doc;
  std::string current_doc;
  std::unordered_set<std::string> seen_ids;
  int line_no = 0;

  auto flush = [&]() {
    if (current.tokens.empty()) {
      pending_id.clear();
      return;
    }
    current.id = pending_id.empty()
                     ? "s" + std::to_string(corpus.sentences.size() + 1)
                     : pending_id;
    ValidateSentence(current);
    if (!seen_ids.insert(current.id).second) {
      throw StructureError(current.id, "duplicate sentence id");
    }
    corpus.sentences.push_back(std::move(current));
    corpus.doc_ids.push_back(current_doc);
    current = Sentence();
    pending_id.clear();
  };

  size_t pos = 0;
  while (pos <= text.size()) {
    size_t end = text.find('\n', pos);
    if (end == std::string_view::npos) end = text.size();
    std::string_view line = text.substr(pos, end - pos);
    pos = end + 1;
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.remove_suffix(1);

    if (Trim(line).empty()) {
      flush();
      if (end == text.size()) break;
      continue;
    }
    if (line.front() == '#') {
      std::string value;
      if (ParseComment(line, "sent_id", &value)) {
        pending_id = value;
      } else if (ParseComment(line, "newdoc id", &value)) {
        current_doc = value;
      }
      if (end == text.size()) break;
      continue;
    }

    auto fields = SplitTabs(line);
    if (fields.size() < 10) {
      throw ParseError("expected 10 tab-separated columns, found " +
                           std::to_string(fields.size()),
                       line_no);
    }
    std::string_view id = fields[0];
    if (id.find('-') != std::string_view::npos ||
        id.find('.') != std::string_view::npos) {
      if (end == text.size()) break;
      continue;
    }
    Token token;
    if (!ParseInt(id, &token.index)) {
      throw ParseError("bad token id '" + std::string(id) + "'", line_no);
    }
    if (!ParseInt(fields[6], &token.head)) {
      throw ParseError("bad head '" + std::string(fields[6]) + "'", line_no);
    }
    token.surface = std::string(fields[1]);
    token.lemma = fields[2] == "_" ? Lowercase(fields[1]) : Lowercase(fields[2]);
    token.pos = std::string(fields[4]);
    token.deprel = std::string(fields[7]);
    current.tokens.push_back(std::move(token));
    if (end == text.size()) break;
  }
  flush();
  return corpus;
}

Corpus LoadConllu(const std::string &path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error("cannot open corpus file '" + path + "'");
  std::stringstream buffer;
  buffer << in.rdbuf();
  return ParseConllu(buffer.str());
}

std::string WriteConllu(const Corpus &corpus) {
  std::ostringstream out;
  std::string last_doc;
  for (size_t s = 0; s < corpus.sentences.size(); ++s) {
    const Sentence &sentence = corpus.sentences[s];
    const std::string &doc = s < corpus.doc_ids.size() ? corpus.doc_ids[s] : "";
    if (!doc.empty() && doc != last_doc) out << "# newdoc id = " << doc << "\n";
    last_doc = doc;
    out << "# sent_id = " << sentence.id << "\n";
    for (const Token &t : sentence.tokens) {
      out << t.index << '\t' << t.surface << '\t' << t.lemma << '\t' << '_'
          << '\t' << t.pos << '\t' << '_' << '\t' << t.head << '\t'
          << t.deprel << '\t' << '_' << '\t' << '_' << '\n';
    }
    out << '\n';
  }
  return out.str();
}

}  // namespace openforge
