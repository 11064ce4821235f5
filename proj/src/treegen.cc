// Copyright 2026 The treematch Authors
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

#include "treematch/treegen.h"

#include <algorithm>
#include <string>

#include "treematch/common.h"

namespace treematch {
namespace {

// One step of the Beyer-Hedetniemi successor on rooted level sequences,
// starting at position p (or the last entry above level 1 when p < 0).
bool NextRootedTree(std::vector<int>& levels, int p = -1) {
  const int n = static_cast<int>(levels.size());
  if (p < 0) {
    p = n - 1;
    while (p > 0 && levels[p] == 1) --p;
  }
  if (p == 0) return false;
  int q = p - 1;
  while (levels[q] != levels[p] - 1) --q;
  for (int i = p; i < n; ++i) levels[i] = levels[i - p + q];
  return true;
}

// Index of the second child of the root, or n when the root has one child.
int SplitPoint(const std::vector<int>& levels) {
  const int n = static_cast<int>(levels.size());
  for (int i = 2; i < n; ++i) {
    if (levels[i] == 1) return i;
  }
  return n;
}

// A level sequence is a canonical center rooting when the first subtree of
// the root is no higher than the rest of the tree, and in a tie no larger,
// and in a further tie not lexicographically later.
bool IsCanonicalFree(const std::vector<int>& levels, int m) {
  const int n = static_cast<int>(levels.size());
  int left_height = 0;
  for (int i = 1; i < m; ++i) left_height = std::max(left_height, levels[i] - 1);
  int rest_height = 0;
  for (int i = m; i < n; ++i) rest_height = std::max(rest_height, levels[i]);
  if (rest_height < left_height) return false;
  if (rest_height > left_height) return true;
  const int left_size = m - 1;
  const int rest_size = n - m + 1;
  if (left_size != rest_size) return left_size < rest_size;
  // left = levels[1..m) - 1, rest = 0, levels[m..n)
  for (int i = 0; i < left_size; ++i) {
    int l = levels[1 + i] - 1;
    int r = i == 0 ? 0 : levels[m + i - 1];
    if (l != r) return l < r;
  }
  return true;
}

// Moves levels forward to the first canonical free-tree sequence at or after
// it. Returns false when the enumeration is over.
bool MakeCanonical(std::vector<int>& levels) {
  for (;;) {
    int m = SplitPoint(levels);
    if (IsCanonicalFree(levels, m)) return true;
    const int p = m - 1;  // = size of the first subtree
    const bool deep = levels[p] > 2;
    if (!NextRootedTree(levels, p)) return false;
    if (deep) {
      int new_m = SplitPoint(levels);
      int left_height = 0;
      for (int i = 1; i < new_m; ++i) {
        left_height = std::max(left_height, levels[i] - 1);
      }
      const int n = static_cast<int>(levels.size());
      const int suffix = left_height + 1;
      for (int j = 0; j < suffix; ++j) levels[n - suffix + j] = j + 1;
    }
  }
}

}  // namespace

Tree TreeFromLevels(const std::vector<int>& levels) {
  const int n = static_cast<int>(levels.size());
  std::vector<Edge> edges;
  edges.reserve(n > 0 ? n - 1 : 0);
  std::vector<int> last_at_level(n + 1, -1);
  for (int i = 0; i < n; ++i) {
    if (i > 0) edges.push_back({last_at_level[levels[i] - 1], i});
    last_at_level[levels[i]] = i;
  }
  return Tree::FromEdges(n, edges);
}

TreeStream::TreeStream(int n, int max_order) : n_(n) {
  if (n < 1) {
    throw Error(ErrorCode::kOrderTooSmall, "tree order must be at least 1");
  }
  if (n > max_order) {
    throw Error(ErrorCode::kOrderTooLarge,
                "order " + std::to_string(n) + " exceeds the enumeration cap " +
                    std::to_string(max_order));
  }
  if (n == 1) {
    levels_ = {0};
    return;
  }
  // The path rooted at its center.
  for (int i = 0; i <= n / 2; ++i) levels_.push_back(i);
  for (int i = 1; i < (n + 1) / 2; ++i) levels_.push_back(i);
  exhausted_ = !MakeCanonical(levels_);
}

bool TreeStream::Advance() {
  if (exhausted_) return false;
  ++index_;
  if (n_ == 1 || !NextRootedTree(levels_) || !MakeCanonical(levels_)) {
    exhausted_ = true;
  }
  return !exhausted_;
}

void TreeStream::SkipToResidue() {
  while (!exhausted_ && index_ % stride_ != offset_) Advance();
}

std::optional<Tree> TreeStream::Next() {
  SkipToResidue();
  if (exhausted_) return std::nullopt;
  Tree tree = TreeFromLevels(levels_);
  Advance();
  return tree;
}

std::vector<TreeStream> TreeStream::Partition(int parts) const {
  if (parts < 1) {
    throw Error(ErrorCode::kInvalidArgument, "partition count must be >= 1");
  }
  std::vector<TreeStream> result;
  result.reserve(parts);
  // The remaining items of this stream are index_' + t * stride_ where
  // index_' is the first index >= index_ in the residue class.
  TreeStream base = *this;
  base.SkipToResidue();
  for (int j = 0; j < parts; ++j) {
    TreeStream sub = base;
    sub.stride_ = stride_ * parts;
    sub.offset_ = (base.index_ + j * stride_) % sub.stride_;
    sub.SkipToResidue();
    result.push_back(std::move(sub));
  }
  return result;
}

std::int64_t CountFreeTrees(int n, int max_order) {
  TreeStream stream(n, max_order);
  std::int64_t count = 0;
  while (stream.Next()) ++count;
  return count;
}

}  // namespace treematch
