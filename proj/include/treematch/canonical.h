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

#ifndef TREEMATCH_CANONICAL_H_
#define TREEMATCH_CANONICAL_H_

#include <compare>
#include <functional>
#include <string>

#include "treematch/tree.h"

namespace treematch {

// Isomorphism-class identifier of a free tree. The text is a balanced
// parenthesis string: the AHU encoding of the tree rooted at its centroid,
// taking the smaller of the two rootings when there are two centroids.
class CanonicalCode {
 public:
  CanonicalCode() = default;
  explicit CanonicalCode(std::string text) : text_(std::move(text)) {}

  const std::string& str() const { return text_; }

  friend auto operator<=>(const CanonicalCode&, const CanonicalCode&) = default;

 private:
  std::string text_;
};

CanonicalCode Canonicalize(const Tree& tree);

// AHU encoding of the tree rooted at root.
std::string RootedCode(const Tree& tree, int root);

bool Isomorphic(const Tree& a, const Tree& b);

}  // namespace treematch

template <>
struct std::hash<treematch::CanonicalCode> {
  std::size_t operator()(const treematch::CanonicalCode& code) const noexcept {
    return std::hash<std::string>()(code.str());
  }
};

#endif  // TREEMATCH_CANONICAL_H_
