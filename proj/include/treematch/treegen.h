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

#ifndef TREEMATCH_TREEGEN_H_
#define TREEMATCH_TREEGEN_H_

#include <cstdint>
#include <optional>
#include <vector>

#include "treematch/tree.h"

namespace treematch {

inline constexpr int kDefaultMaxOrder = 22;

// Stream of all free trees of order n, one per isomorphism class.
//
// Trees are produced in the Wright-Richmond-Odlyzko-McKay order: each tree is
// a level sequence of a canonical rooting at its center, and successive
// sequences are generated in constant amortized time. The stream is a value
// type; copying it copies the cursor.
//
// A stream may be restricted to a residue class of the global index so that
// several sub-streams cover the whole enumeration without overlap.
class TreeStream {
 public:
  // Throws Error(kOrderTooLarge) when n > max_order and Error(kOrderTooSmall)
  // when n < 1.
  explicit TreeStream(int n, int max_order = kDefaultMaxOrder);

  int order() const { return n_; }

  // Next tree of this sub-stream, or nullopt at the end.
  std::optional<Tree> Next();

  // Global index (in the full enumeration) of the next tree to be yielded.
  std::int64_t position() const { return index_; }

  // Disjoint sub-streams covering exactly the remaining trees of this one.
  std::vector<TreeStream> Partition(int parts) const;

 private:
  bool Advance();
  void SkipToResidue();

  int n_ = 1;
  std::vector<int> levels_;
  bool exhausted_ = false;
  std::int64_t index_ = 0;
  std::int64_t stride_ = 1;
  std::int64_t offset_ = 0;
};

// Converts a level sequence (root at level 0, preorder) into a tree whose
// vertex i is the i-th entry.
Tree TreeFromLevels(const std::vector<int>& levels);

// Number of free trees of order n, by draining a stream.
std::int64_t CountFreeTrees(int n, int max_order = kDefaultMaxOrder);

}  // namespace treematch

#endif  // TREEMATCH_TREEGEN_H_
