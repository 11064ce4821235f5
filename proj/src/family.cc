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

#include "treematch/family.h"

#include <charconv>
#include <numeric>
#include <utility>

#include "treematch/common.h"

namespace treematch {
namespace {

Error BadParams(const std::string& what) {
  return Error(ErrorCode::kBadFamilyParams, what);
}

class Builder {
 public:
  int AddVertex() { return next_++; }
  void Link(int u, int v) { edges_.push_back({u, v}); }
  int AddPendant(int at) {
    int v = AddVertex();
    Link(at, v);
    return v;
  }
  // Leg of length 2 hanging from center; returns the mid vertex.
  int AddLeg(int center) {
    int mid = AddPendant(center);
    AddPendant(mid);
    return mid;
  }
  // Odd spider with the given leg count; returns its center.
  int AddOddSpider(int legs) {
    int center = AddVertex();
    for (int i = 0; i < legs; ++i) AddLeg(center);
    return center;
  }
  Tree Build() const { return Tree::FromEdges(next_, edges_); }

 private:
  int next_ = 0;
  std::vector<Edge> edges_;
};

const char* FamilyKeyword(Family family) {
  switch (family) {
    case Family::kPath: return "path";
    case Family::kStar: return "star";
    case Family::kSpider: return "spider";
    case Family::kSpecialSpider: return "sss";
    case Family::kDoubleBroom: return "db";
    case Family::kBalancedDoubleBroom: return "bdb";
    case Family::kWideSpider: return "wide";
    case Family::kSpiderTrio: return "st";
    case Family::kKSpiderWheel: return "wheel";
    case Family::kSpiderChain: return "chain";
    case Family::kGoldenDense: return "golden-dense";
    case Family::kGoldenSparse: return "golden-sparse";
    case Family::kOneSubdivision: return "subdiv";
  }
  return "?";
}

void RequireArity(const FamilySpec& spec, std::size_t arity) {
  if (spec.params.size() != arity) {
    throw BadParams(std::string(FamilyKeyword(spec.family)) + " takes " +
                    std::to_string(arity) + " parameter(s), got " +
                    std::to_string(spec.params.size()));
  }
}

void Require(bool ok, const FamilySpec& spec, const char* constraint) {
  if (!ok) {
    throw BadParams(ToString(spec) + ": requires " + constraint);
  }
}

// Validates params and returns the closed-form order.
int ValidateAndOrder(const FamilySpec& spec) {
  const auto& p = spec.params;
  switch (spec.family) {
    case Family::kPath:
    case Family::kStar:
      RequireArity(spec, 1);
      Require(p[0] >= 1, spec, "n >= 1");
      return p[0];
    case Family::kSpider:
      RequireArity(spec, 1);
      Require(p[0] >= 3, spec, "n >= 3");
      return p[0];
    case Family::kSpecialSpider:
      RequireArity(spec, 1);
      Require(p[0] >= 4, spec, "n >= 4");
      return p[0];
    case Family::kDoubleBroom:
      RequireArity(spec, 2);
      Require(p[0] >= 1 && p[1] >= 1, spec, "a, b >= 1");
      return p[0] + p[1] + 2;
    case Family::kBalancedDoubleBroom:
      RequireArity(spec, 1);
      Require(p[0] >= 4, spec, "n >= 4");
      return p[0];
    case Family::kWideSpider:
      RequireArity(spec, 1);
      Require(p[0] >= 8 && p[0] % 2 == 0, spec, "even n >= 8");
      return p[0];
    case Family::kSpiderTrio:
      RequireArity(spec, 3);
      Require(p[0] >= 0 && p[1] >= 0 && p[2] >= 0, spec, "leg counts >= 0");
      return 2 * (p[0] + p[1] + p[2]) + 4;
    case Family::kKSpiderWheel:
      RequireArity(spec, 2);
      Require(p[0] >= 1 && p[1] >= 1, spec, "k, a >= 1");
      return (p[0] + 1) * (2 * p[1] + 1) + 1;
    case Family::kSpiderChain: {
      Require(!p.empty(), spec, "at least one center");
      int legs = 0;
      for (int l : p) {
        Require(l >= 0, spec, "leg counts >= 0");
        legs += l;
      }
      return static_cast<int>(p.size()) + 2 * legs;
    }
    case Family::kGoldenDense:
      RequireArity(spec, 1);
      Require(p[0] >= 2, spec, "spine length >= 2");
      return 3 * p[0] + 2;
    case Family::kGoldenSparse:
      RequireArity(spec, 1);
      Require(p[0] >= 2, spec, "hub count >= 2");
      return 7 * p[0] + 1;
    case Family::kOneSubdivision:
      RequireArity(spec, 0);
      Require(spec.base != nullptr, spec, "a base tree");
      return 2 * spec.base->order() - 1;
  }
  throw BadParams("unknown family");
}

bool ParseInt(std::string_view token, int& out) {
  auto [ptr, ec] =
      std::from_chars(token.data(), token.data() + token.size(), out);
  return ec == std::errc() && ptr == token.data() + token.size();
}

}  // namespace

FamilySpec FamilySpec::Subdivision(Tree base, std::string label) {
  FamilySpec spec;
  spec.family = Family::kOneSubdivision;
  spec.base = std::make_shared<const Tree>(std::move(base));
  spec.base_label = std::move(label);
  return spec;
}

Tree MakePath(int n) { return MakeFamily(FamilySpec::Of(Family::kPath, {n})); }
Tree MakeStar(int n) { return MakeFamily(FamilySpec::Of(Family::kStar, {n})); }
Tree MakeSpider(int n) {
  return MakeFamily(FamilySpec::Of(Family::kSpider, {n}));
}
Tree MakeSpecialSpider(int n) {
  return MakeFamily(FamilySpec::Of(Family::kSpecialSpider, {n}));
}
Tree MakeDoubleBroom(int a, int b) {
  return MakeFamily(FamilySpec::Of(Family::kDoubleBroom, {a, b}));
}
Tree MakeBalancedDoubleBroom(int n) {
  return MakeFamily(FamilySpec::Of(Family::kBalancedDoubleBroom, {n}));
}
Tree MakeWideSpider(int n) {
  return MakeFamily(FamilySpec::Of(Family::kWideSpider, {n}));
}
Tree MakeSpiderTrio(int a, int b, int c) {
  return MakeFamily(FamilySpec::Of(Family::kSpiderTrio, {a, b, c}));
}
Tree MakeKSpiderWheel(int k, int a) {
  return MakeFamily(FamilySpec::Of(Family::kKSpiderWheel, {k, a}));
}
Tree MakeSpiderChain(std::span<const int> legs) {
  return MakeFamily(FamilySpec::Of(Family::kSpiderChain,
                                   std::vector<int>(legs.begin(), legs.end())));
}
Tree MakeGoldenDense(int spine) {
  return MakeFamily(FamilySpec::Of(Family::kGoldenDense, {spine}));
}
Tree MakeGoldenSparse(int hubs) {
  return MakeFamily(FamilySpec::Of(Family::kGoldenSparse, {hubs}));
}

int FamilyOrder(const FamilySpec& spec) { return ValidateAndOrder(spec); }

Tree MakeFamily(const FamilySpec& spec) {
  ValidateAndOrder(spec);
  const auto& p = spec.params;
  Builder b;
  switch (spec.family) {
    case Family::kPath: {
      int prev = b.AddVertex();
      for (int i = 1; i < p[0]; ++i) prev = b.AddPendant(prev);
      break;
    }
    case Family::kStar: {
      int center = b.AddVertex();
      for (int i = 1; i < p[0]; ++i) b.AddPendant(center);
      break;
    }
    case Family::kSpider:
    case Family::kSpecialSpider: {
      int n = spec.family == Family::kSpider ? p[0] : p[0] - 1;
      int center = b.AddOddSpider((n - 1) / 2);
      if (n % 2 == 0) b.AddPendant(center);
      if (spec.family == Family::kSpecialSpider) {
        // Odd base: sibling for leaf 2 (hangs from mid 1). Even base: pendant
        // edge on the center.
        b.AddPendant(n % 2 == 1 ? 1 : center);
      }
      break;
    }
    case Family::kDoubleBroom:
    case Family::kBalancedDoubleBroom:
    case Family::kWideSpider: {
      int left = 0, right = 0;
      bool subdivide = spec.family == Family::kWideSpider;
      if (spec.family == Family::kDoubleBroom) {
        left = p[0];
        right = p[1];
      } else {
        int base = subdivide ? p[0] / 2 + 1 : p[0];
        left = base / 2 - 1;
        right = (base + 1) / 2 - 1;
      }
      int u = b.AddVertex();
      int v = b.AddPendant(u);
      for (int i = 0; i < left; ++i) subdivide ? b.AddLeg(u) : b.AddPendant(u);
      for (int i = 0; i < right; ++i) subdivide ? b.AddLeg(v) : b.AddPendant(v);
      break;
    }
    case Family::kSpiderTrio: {
      int hub = b.AddVertex();
      for (int legs : p) b.Link(hub, b.AddOddSpider(legs));
      break;
    }
    case Family::kKSpiderWheel: {
      int hub = b.AddVertex();
      for (int i = 0; i <= p[0]; ++i) b.Link(hub, b.AddOddSpider(p[1]));
      break;
    }
    case Family::kSpiderChain: {
      const int m = static_cast<int>(p.size());
      for (int i = 0; i < m; ++i) b.AddVertex();
      for (int i = 0; i + 1 < m; ++i) b.Link(i, i + 1);
      for (int i = 0; i < m; ++i) {
        for (int j = 0; j < p[i]; ++j) b.AddLeg(i);
      }
      break;
    }
    case Family::kGoldenDense: {
      const int s = p[0];
      for (int i = 0; i < s; ++i) b.AddVertex();
      for (int i = 0; i + 1 < s; ++i) b.Link(i, i + 1);
      for (int i = 0; i < s; ++i) {
        b.AddPendant(i);
        b.AddPendant(i);
      }
      b.AddPendant(0);
      b.AddPendant(s - 1);
      break;
    }
    case Family::kGoldenSparse: {
      const int h = p[0];
      int prev_hub = -1;
      for (int i = 0; i < h; ++i) {
        int hub = b.AddVertex();
        if (prev_hub >= 0) {
          int connector = b.AddPendant(prev_hub);
          b.Link(connector, hub);
        }
        int leaves = (i == 0 || i == h - 1) ? 6 : 5;
        for (int j = 0; j < leaves; ++j) b.AddPendant(hub);
        prev_hub = hub;
      }
      break;
    }
    case Family::kOneSubdivision:
      return OneSubdivision(*spec.base);
  }
  return b.Build();
}

FamilySpec ParseFamilySpec(std::string_view text) {
  auto fail = [&](std::string_view token, const std::string& why) {
    return Error(ErrorCode::kParseError, "bad family spec token '" +
                                             std::string(token) + "': " + why);
  };
  std::size_t colon = text.find(':');
  if (colon == std::string_view::npos) {
    throw fail(text, "expected <family>:<params>");
  }
  std::string_view keyword = text.substr(0, colon);
  std::string_view rest = text.substr(colon + 1);
  static constexpr Family kAll[] = {
      Family::kPath,         Family::kStar,
      Family::kSpider,       Family::kSpecialSpider,
      Family::kDoubleBroom,  Family::kBalancedDoubleBroom,
      Family::kWideSpider,   Family::kSpiderTrio,
      Family::kKSpiderWheel, Family::kSpiderChain,
      Family::kGoldenDense,  Family::kGoldenSparse,
      Family::kOneSubdivision};
  for (Family family : kAll) {
    if (keyword != FamilyKeyword(family)) continue;
    if (family == Family::kOneSubdivision) {
      FamilySpec base = ParseFamilySpec(rest);
      return FamilySpec::Subdivision(MakeFamily(base), ToString(base));
    }
    FamilySpec spec;
    spec.family = family;
    std::size_t start = 0;
    while (start <= rest.size()) {
      std::size_t comma = rest.find(',', start);
      if (comma == std::string_view::npos) comma = rest.size();
      std::string_view token = rest.substr(start, comma - start);
      int value = 0;
      if (!ParseInt(token, value)) throw fail(token, "not an integer");
      spec.params.push_back(value);
      start = comma + 1;
    }
    return spec;
  }
  throw fail(keyword, "unknown family");
}

std::string ToString(const FamilySpec& spec) {
  std::string out = FamilyKeyword(spec.family);
  out += ':';
  if (spec.family == Family::kOneSubdivision) {
    out += spec.base_label.empty() ? "tree" : spec.base_label;
    return out;
  }
  for (std::size_t i = 0; i < spec.params.size(); ++i) {
    if (i) out += ',';
    out += std::to_string(spec.params[i]);
  }
  return out;
}

}  // namespace treematch
