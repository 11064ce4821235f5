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

#ifndef TREEMATCH_FAMILY_H_
#define TREEMATCH_FAMILY_H_

#include <memory>
#include <string>
#include <string_view>
#include <vector>

#include "treematch/tree.h"

namespace treematch {

// Named tree families. Parameters and text forms:
//
//   Path            path:n          n >= 1
//   Star            star:n          n >= 1, center 0
//   Spider          spider:n        n >= 3; center 0 with legs of length 2
//                                   (mid 2i+1, leaf 2i+2), plus leaf n-1 on
//                                   the center when n is even
//   SpecialSpider   sss:n           n >= 4; Spider(n-1) plus vertex n-1,
//                                   attached to mid 1 (n even: sibling of
//                                   leaf 2) or to the center (n odd)
//   DoubleBroom     db:a,b          a, b >= 1; centers 0 and 1 with a and b
//                                   leaves
//   BalancedDoubleBroom  bdb:n      n >= 4; db:floor(n/2)-1,ceil(n/2)-1
//   WideSpider      wide:n          even n >= 8; every pendant edge of
//                                   bdb:(n/2+1) subdivided
//   SpiderTrio      st:a,b,c        leg counts >= 0; hub 0 joined to the
//                                   centers of three odd spiders
//   KSpiderWheel    wheel:k,a       k, a >= 1; hub 0 joined to the centers of
//                                   k+1 odd spiders with a legs each
//   SpiderChain     chain:l1,...,lm m >= 1, li >= 0; centers 0..m-1 on a path,
//                                   center i carries li legs of length 2
//   GoldenDense     golden-dense:s  s >= 2; spine of s vertices, two leaves
//                                   on each, one extra leaf on each end
//   GoldenSparse    golden-sparse:h h >= 2; hubs and degree-2 connectors
//                                   alternate on a path; interior hubs carry
//                                   5 leaves, end hubs 6, so every hub has
//                                   degree 7
//   OneSubdivision  subdiv:<spec>   1-subdivision of a base tree
enum class Family {
  kPath,
  kStar,
  kSpider,
  kSpecialSpider,
  kDoubleBroom,
  kBalancedDoubleBroom,
  kWideSpider,
  kSpiderTrio,
  kKSpiderWheel,
  kSpiderChain,
  kGoldenDense,
  kGoldenSparse,
  kOneSubdivision,
};

struct FamilySpec {
  Family family = Family::kPath;
  std::vector<int> params;
  // Base tree for kOneSubdivision, with an optional text label.
  std::shared_ptr<const Tree> base;
  std::string base_label;

  static FamilySpec Of(Family family, std::vector<int> params) {
    return FamilySpec{family, std::move(params), nullptr, {}};
  }
  static FamilySpec Subdivision(Tree base, std::string label = {});
};

// Throws Error(kBadFamilyParams) when parameters violate the family domain.
Tree MakeFamily(const FamilySpec& spec);

// Closed-form order of the family member, validated like MakeFamily.
int FamilyOrder(const FamilySpec& spec);

// Throws Error(kParseError) naming the offending token.
FamilySpec ParseFamilySpec(std::string_view text);
std::string ToString(const FamilySpec& spec);

// Shorthands.
Tree MakePath(int n);
Tree MakeStar(int n);
Tree MakeSpider(int n);
Tree MakeSpecialSpider(int n);
Tree MakeDoubleBroom(int a, int b);
Tree MakeBalancedDoubleBroom(int n);
Tree MakeWideSpider(int n);
Tree MakeSpiderTrio(int a, int b, int c);
Tree MakeKSpiderWheel(int k, int a);
Tree MakeSpiderChain(std::span<const int> legs);
Tree MakeGoldenDense(int spine);
Tree MakeGoldenSparse(int hubs);

}  // namespace treematch

#endif  // TREEMATCH_FAMILY_H_
