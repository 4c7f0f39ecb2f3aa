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

#ifndef OPENFORGE_DEP_TREE_H_
#define OPENFORGE_DEP_TREE_H_

#include <vector>

#include "openforge/corpus.h"

namespace openforge {

// Half-open 0-based token range.
struct TokenSpan {
  int begin = 0;
  int end = 0;

  int length() const { return end - begin; }
  bool contains(int i) const { return i >= begin && i < end; }
  bool operator==(const TokenSpan &) const = default;
  auto operator<=>(const TokenSpan &) const = default;
};

// Parent/child view of a validated sentence, 0-based (root parent is -1).
class DepTree {
 public:
  explicit DepTree(const Sentence &sentence);

  int size() const { return static_cast<int>(parent_.size()); }
  int parent(int i) const { return parent_[i]; }
  int depth(int i) const { return depth_[i]; }
  const std::vector<int> &children(int i) const { return children_[i]; }

  // Nodes on the unique path from a to b, both included.
  std::vector<int> Path(int a, int b) const;
  int Distance(int a, int b) const;

 private:
  std::vector<int> parent_;
  std::vector<int> depth_;
  std::vector<std::vector<int>> children_;
};

// The first token of the span whose head lies outside it; the last token if
// none does. Throws Error for an empty span.
int SpanHeadWord(const Sentence &sentence, TokenSpan span);

struct DepPath {
  int distance = 0;
  std::vector<int> intermediate;  // path nodes with both endpoints excluded
};

// Path between the head words of two spans.
DepPath ShortestDepPath(const DepTree &tree, const Sentence &sentence,
                        TokenSpan a, TokenSpan b);

}  // namespace openforge

#endif  // OPENFORGE_DEP_TREE_H_
