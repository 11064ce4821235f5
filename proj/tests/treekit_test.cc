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

#include <gtest/gtest.h>

#include <algorithm>
#include <map>
#include <numeric>
#include <random>

#include "oracles.h"
#include "treematch/canonical.h"
#include "treematch/family.h"
#include "treematch/tree.h"

namespace treematch {
namespace {

ErrorCode CodeOf(const std::function<void()>& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.code();
  }
  return ErrorCode::kOk;
}

Tree Relabel(const Tree& t, std::mt19937& rng) {
  std::vector<int> perm(t.order());
  std::iota(perm.begin(), perm.end(), 0);
  std::shuffle(perm.begin(), perm.end(), rng);
  std::vector<Edge> edges;
  for (const Edge& e : t.edges()) edges.push_back({perm[e.u], perm[e.v]});
  std::shuffle(edges.begin(), edges.end(), rng);
  return Tree::FromEdges(t.order(), edges);
}

std::vector<int> SortedDegrees(const Tree& t) {
  std::vector<int> d = t.degrees();
  std::sort(d.rbegin(), d.rend());
  return d;
}

TEST(TreeTest, BuildsSmallTrees) {
  EXPECT_EQ(Tree::FromEdges(1, {}).order(), 1);
  std::vector<Edge> path = {{0, 1}, {1, 2}, {2, 3}};
  Tree p4 = Tree::FromEdges(4, path);
  EXPECT_EQ(p4.order(), 4);
  EXPECT_TRUE(Isomorphic(p4, MakePath(4)));
  int sum = 0;
  for (int d : p4.degrees()) sum += d;
  EXPECT_EQ(sum, 2 * (p4.order() - 1));
}

TEST(TreeTest, RejectsNonTrees) {
  std::vector<Edge> cycle = {{0, 1}, {1, 2}, {2, 0}};
  EXPECT_EQ(CodeOf([&] { Tree::FromEdges(4, cycle); }), ErrorCode::kNotATree);
  std::vector<Edge> triangle_plus = {{0, 1}, {1, 2}, {2, 0}, {2, 3}};
  EXPECT_EQ(CodeOf([&] { Tree::FromEdges(4, triangle_plus); }),
            ErrorCode::kNotATree);
  std::vector<Edge> loop = {{0, 0}, {1, 2}};
  EXPECT_EQ(CodeOf([&] { Tree::FromEdges(3, loop); }), ErrorCode::kNotATree);
  std::vector<Edge> duplicate = {{0, 1}, {1, 0}};
  EXPECT_EQ(CodeOf([&] { Tree::FromEdges(3, duplicate); }),
            ErrorCode::kNotATree);
  std::vector<Edge> out_of_range = {{0, 1}, {1, 5}};
  EXPECT_EQ(CodeOf([&] { Tree::FromEdges(3, out_of_range); }),
            ErrorCode::kNotATree);
  std::vector<Edge> too_few = {{0, 1}};
  EXPECT_EQ(CodeOf([&] { Tree::FromEdges(3, too_few); }), ErrorCode::kNotATree);
  EXPECT_EQ(CodeOf([&] { Tree::FromEdges(0, {}); }), ErrorCode::kNotATree);
}

TEST(TreeTest, ParsesEdgeLists) {
  Tree t = Tree::Parse("# a path\n4\n0 1\n\n1 2\n2 3\n");
  EXPECT_TRUE(Isomorphic(t, MakePath(4)));
  EXPECT_EQ(Tree::Parse(t.ToEdgeList()).edges(), t.edges());
  EXPECT_EQ(Tree::Parse("1\n").order(), 1);
  EXPECT_EQ(CodeOf([] { Tree::Parse(""); }), ErrorCode::kNotATree);
  EXPECT_EQ(CodeOf([] { Tree::Parse("3\n0 1\n1\n"); }), ErrorCode::kNotATree);
  EXPECT_EQ(CodeOf([] { Tree::Parse("x\n"); }), ErrorCode::kNotATree);
  EXPECT_EQ(CodeOf([] { Tree::Parse("3\n0 1\n0 1\n"); }), ErrorCode::kNotATree);
}

TEST(TreeTest, Diameter) {
  EXPECT_EQ(Diameter(MakePath(6)).length, 5);
  EXPECT_EQ(Diameter(MakeStar(7)).length, 2);
  EXPECT_EQ(Diameter(MakeDoubleBroom(4, 5)).length, 3);
  EXPECT_EQ(Diameter(Tree()).length, 0);
  for (const Tree& t : {MakeSpider(9), MakeWideSpider(12), MakeSpiderTrio(3, 2, 0)}) {
    DiameterPath d = Diameter(t);
    ASSERT_EQ(static_cast<int>(d.path.size()), d.length + 1);
    for (int i = 0; i < d.length; ++i) {
      EXPECT_TRUE(t.adjacent(d.path[i], d.path[i + 1]));
    }
    int far = 0;
    for (int v = 0; v < t.order(); ++v) {
      auto dist = Distances(t, v);
      far = std::max(far, *std::max_element(dist.begin(), dist.end()));
    }
    EXPECT_EQ(d.length, far);
  }
}

TEST(TreeTest, OneSubdivision) {
  EXPECT_TRUE(Isomorphic(OneSubdivision(MakePath(2)), MakePath(3)));
  EXPECT_TRUE(Isomorphic(OneSubdivision(MakePath(3)), MakePath(5)));
  EXPECT_TRUE(Isomorphic(OneSubdivision(MakeStar(5)), MakeSpider(9)));
  Tree base = MakeSpiderTrio(2, 1, 0);
  Tree s = OneSubdivision(base);
  EXPECT_EQ(s.order(), 2 * base.order() - 1);
  for (int v = base.order(); v < s.order(); ++v) EXPECT_EQ(s.degree(v), 2);
  for (int v = 0; v < base.order(); ++v) EXPECT_EQ(s.degree(v), base.degree(v));
}

TEST(TreeTest, CentroidsAndBipartition) {
  EXPECT_EQ(Centroids(MakePath(5)), std::vector<int>{2});
  EXPECT_EQ(Centroids(MakePath(4)).size(), 2u);
  std::vector<int> side = Bipartition(MakePath(4));
  for (const Edge& e : MakePath(4).edges()) EXPECT_NE(side[e.u], side[e.v]);
}

TEST(FamilyTest, ExamplesFromDefinitions) {
  EXPECT_EQ(SortedDegrees(MakeSpider(9)),
            (std::vector<int>{4, 2, 2, 2, 2, 1, 1, 1, 1}));
  EXPECT_EQ(MakeSpiderTrio(3, 2, 0).order(), 14);
  Tree w12 = MakeWideSpider(12);
  EXPECT_EQ(w12.order(), 12);
  EXPECT_EQ(w12.leaves().size(), 5u);
  std::vector<int> d = SortedDegrees(w12);
  EXPECT_EQ(d[0], 4);
  EXPECT_EQ(d[1], 3);
  EXPECT_EQ(MakeDoubleBroom(4, 5).order(), 11);
  EXPECT_TRUE(Isomorphic(MakeSpider(5), MakePath(5)));
  EXPECT_TRUE(Isomorphic(MakeSpider(4), MakePath(4)));
  EXPECT_TRUE(Isomorphic(MakeSpider(3), MakePath(3)));
}

TEST(FamilyTest, OrderFormulasOnGrid) {
  for (int n = 1; n <= 12; ++n) {
    EXPECT_EQ(MakePath(n).order(), n);
    EXPECT_EQ(MakeStar(n).order(), n);
  }
  for (int n = 3; n <= 15; ++n) EXPECT_EQ(MakeSpider(n).order(), n);
  for (int n = 4; n <= 15; ++n) {
    EXPECT_EQ(MakeSpecialSpider(n).order(), n);
    EXPECT_EQ(MakeBalancedDoubleBroom(n).order(), n);
  }
  for (int n = 8; n <= 20; n += 2) EXPECT_EQ(MakeWideSpider(n).order(), n);
  for (int a = 1; a <= 4; ++a) {
    for (int b = 1; b <= 4; ++b) EXPECT_EQ(MakeDoubleBroom(a, b).order(), a + b + 2);
  }
  for (int a = 0; a <= 3; ++a) {
    for (int b = 0; b <= 3; ++b) {
      for (int c = 0; c <= 3; ++c) {
        EXPECT_EQ(MakeSpiderTrio(a, b, c).order(), 2 * (a + b + c) + 4);
      }
    }
  }
  for (int k = 1; k <= 4; ++k) {
    for (int a = 1; a <= 3; ++a) {
      EXPECT_EQ(MakeKSpiderWheel(k, a).order(), (k + 1) * (2 * a + 1) + 1);
    }
  }
  std::vector<int> legs = {2, 0, 3, 1};
  EXPECT_EQ(MakeSpiderChain(legs).order(), 4 + 2 * 6);
  for (int s = 2; s <= 6; ++s) EXPECT_EQ(MakeGoldenDense(s).order(), 3 * s + 2);
  for (int h = 2; h <= 6; ++h) {
    Tree g = MakeGoldenSparse(h);
    EXPECT_EQ(g.order(), 2 * h - 1 + 5 * h + 2);
    int hubs = 0;
    for (int v = 0; v < g.order(); ++v) {
      if (g.degree(v) > 2) {
        EXPECT_EQ(g.degree(v), 7);
        ++hubs;
      }
    }
    EXPECT_EQ(hubs, h);
  }
}

TEST(FamilyTest, StructuralIdentities) {
  for (int n = 3; n <= 15; n += 2) {
    EXPECT_TRUE(Isomorphic(MakeSpider(n), OneSubdivision(MakeStar((n + 1) / 2))));
  }
  // Wide spider: balanced double broom on n/2+1 vertices with every pendant
  // edge subdivided, built here by hand.
  for (int n = 8; n <= 20; n += 2) {
    Tree bdb = MakeBalancedDoubleBroom(n / 2 + 1);
    std::vector<Edge> edges;
    int next = bdb.order();
    for (const Edge& e : bdb.edges()) {
      if (bdb.is_leaf(e.u) || bdb.is_leaf(e.v)) {
        edges.push_back({e.u, next});
        edges.push_back({next, e.v});
        ++next;
      } else {
        edges.push_back(e);
      }
    }
    EXPECT_TRUE(Isomorphic(MakeWideSpider(n), Tree::FromEdges(next, edges)))
        << n;
  }
  // Special spiders: even n adds a sibling leaf, odd n a pendant on the center.
  Tree sss10 = MakeSpecialSpider(10);
  int sibling_pairs = 0;
  for (int v = 0; v < sss10.order(); ++v) {
    int leaves = 0;
    for (int w : sss10.neighbors(v)) leaves += sss10.is_leaf(w);
    sibling_pairs += leaves >= 2;
  }
  EXPECT_EQ(sibling_pairs, 1);
  EXPECT_EQ(SortedDegrees(MakeSpecialSpider(9))[0], 5);
  EXPECT_TRUE(Isomorphic(MakeBalancedDoubleBroom(8), MakeDoubleBroom(3, 3)));
  EXPECT_TRUE(Isomorphic(MakeBalancedDoubleBroom(9), MakeDoubleBroom(3, 4)));
}

TEST(FamilyTest, RejectsBadParameters) {
  EXPECT_EQ(CodeOf([] { MakePath(0); }), ErrorCode::kBadFamilyParams);
  EXPECT_EQ(CodeOf([] { MakeSpider(2); }), ErrorCode::kBadFamilyParams);
  EXPECT_EQ(CodeOf([] { MakeWideSpider(9); }), ErrorCode::kBadFamilyParams);
  EXPECT_EQ(CodeOf([] { MakeWideSpider(6); }), ErrorCode::kBadFamilyParams);
  EXPECT_EQ(CodeOf([] { MakeDoubleBroom(0, 2); }), ErrorCode::kBadFamilyParams);
  EXPECT_EQ(CodeOf([] { MakeSpiderTrio(-1, 0, 0); }), ErrorCode::kBadFamilyParams);
  EXPECT_EQ(CodeOf([] { MakeGoldenSparse(1); }), ErrorCode::kBadFamilyParams);
  EXPECT_EQ(CodeOf([] { MakeFamily(FamilySpec::Of(Family::kDoubleBroom, {2})); }),
            ErrorCode::kBadFamilyParams);
}

TEST(FamilyTest, ParsesSpecText) {
  for (std::string text : {"path:6", "star:7", "spider:9", "sss:10", "db:4,5",
                           "bdb:9", "wide:12", "st:3,2,0", "wheel:2,3",
                           "chain:1,2,0,3", "golden-dense:4", "golden-sparse:3",
                           "subdiv:star:5"}) {
    FamilySpec spec = ParseFamilySpec(text);
    EXPECT_EQ(ToString(spec), text);
    EXPECT_EQ(MakeFamily(spec).order(), FamilyOrder(spec)) << text;
  }
  EXPECT_TRUE(Isomorphic(MakeFamily(ParseFamilySpec("subdiv:star:5")),
                         MakeSpider(9)));
  EXPECT_EQ(CodeOf([] { ParseFamilySpec("spyder:9"); }), ErrorCode::kParseError);
  EXPECT_EQ(CodeOf([] { ParseFamilySpec("spider:x"); }), ErrorCode::kParseError);
  EXPECT_EQ(CodeOf([] { ParseFamilySpec("spider"); }), ErrorCode::kParseError);
  EXPECT_EQ(CodeOf([] { ParseFamilySpec("db:4,"); }), ErrorCode::kParseError);
}

TEST(CanonicalTest, RelabelingInvariance) {
  std::mt19937 rng(7);
  for (const Tree& t : {MakePath(4), MakeSpider(11), MakeWideSpider(14),
                        MakeSpiderTrio(3, 2, 0), MakeGoldenSparse(3)}) {
    for (int i = 0; i < 20; ++i) {
      EXPECT_EQ(Canonicalize(Relabel(t, rng)), Canonicalize(t));
    }
  }
  EXPECT_FALSE(Isomorphic(MakePath(4), MakeStar(4)));
}

TEST(CanonicalTest, AgreesWithBruteForceOnAllLabeledTrees) {
  // Codes must induce the same partition as the all-roots oracle.
  for (int n = 1; n <= 8; ++n) {
    std::map<std::string, CanonicalCode> by_oracle;
    std::map<CanonicalCode, std::string> by_code;
    oracle::ForEachLabeledTree(n, [&](const Tree& t) {
      std::string o = oracle::BruteCode(t);
      CanonicalCode c = Canonicalize(t);
      auto [it, fresh] = by_oracle.emplace(o, c);
      if (!fresh) ASSERT_EQ(it->second, c);
      auto [jt, fresh2] = by_code.emplace(c, o);
      if (!fresh2) ASSERT_EQ(jt->second, o);
    });
    const std::size_t expected[] = {0, 1, 1, 1, 2, 3, 6, 11, 23};
    EXPECT_EQ(by_oracle.size(), expected[n]);
  }
}

}  // namespace
}  // namespace treematch
