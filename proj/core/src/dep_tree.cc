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

#include "openforge/dep_tree.h"

#include <algorithm>

#include "openforge/errors.h"

namespace openforge {

DepTree::DepTree(const Sentence &sentence)
    : parent_(sentence.size()), depth_(sentence.size(), -1),
      children_(sentence.size()) {
  const int n = sentence.size();
  for (int i = 0; i < n; ++i) {
    parent_[i] = sentence.tokens[i].head - 1;
    if (parent_[i] >= 0) children_[parent_[i]].push_back(i);
  }
  for (int i = 0; i < n; ++i) {
    std::vector<int> chain;
    int cur = i;
    while (cur >= 0 && depth_[cur] < 0) {
      chain.push_back(cur);
      cur = parent_[cur];
    }
    int d = cur < 0 ? -1 : depth_[cur];
    for (auto it = chain.rbegin(); it != chain.rend(); ++it) depth_[*it] = ++d;
  }
}

std::vector<int> DepTree::Path(int a, int b) const {
  std::vector<int> up_a, up_b;
  while (depth_[a] > depth_[b]) {
    up_a.push_back(a);
    a = parent_[a];
  }
  while (depth_[b] > depth_[a]) {
    up_b.push_back(b);
    b = parent_[b];
  }
  while (a != b) {
    up_a.push_back(a);
    up_b.push_back(b);
    a = parent_[a];
    b = parent_[b];
  }
  up_a.push_back(a);  // lowest common ancestor
  up_a.insert(up_a.end(), up_b.rbegin(), up_b.rend());
  return up_a;
}

int DepTree::Distance(int a, int b) const {
  return static_cast<int>(Path(a, b).size()) - 1;
}

int SpanHeadWord(const Sentence &sentence, TokenSpan span) {
  if (span.length() <= 0) throw Error("empty token span");
  for (int i = span.begin; i < span.end; ++i) {
    if (!span.contains(sentence.tokens[i].head - 1)) return i;
  }
  return span.end - 1;
}

DepPath ShortestDepPath(const DepTree &tree, const Sentence &sentence,
                        TokenSpan a, TokenSpan b) {
  const int ha = SpanHeadWord(sentence, a);
  const int hb = SpanHeadWord(sentence, b);
  DepPath path;
  if (ha == hb) return path;
  std::vector<int> nodes = tree.Path(ha, hb);
  path.distance = static_cast<int>(nodes.size()) - 1;
  path.intermediate.assign(nodes.begin() + 1, nodes.end() - 1);
  return path;
}

}  // namespace openforge
