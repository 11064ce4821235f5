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

#include "treematch/treematch.h"

#include <cstdlib>
#include <cstring>
#include <new>
#include <sstream>
#include <string>

#include "json.hpp"
#include "treematch/canonical.h"
#include "treematch/extremal.h"
#include "treematch/family.h"
#include "treematch/matching.h"
#include "treematch/spideropt.h"
#include "treematch/tree.h"
#include "treematch/treegen.h"

struct tm_tree {
  treematch::Tree tree;
};

struct tm_stream {
  treematch::TreeStream stream;
};

namespace {

using treematch::Error;

thread_local std::string g_last_error;

tm_status Fail(tm_status status, const std::string& message) {
  g_last_error = message;
  return status;
}

// Runs body, translating exceptions into status codes.
template <typename Body>
tm_status Guard(Body&& body) {
  try {
    body();
    return TM_OK;
  } catch (const Error& e) {
    return Fail(static_cast<tm_status>(e.code()), e.what());
  } catch (const std::bad_alloc&) {
    return Fail(TM_INTERNAL, "out of memory");
  } catch (const std::exception& e) {
    return Fail(TM_INTERNAL, e.what());
  }
}

char* Dup(const std::string& s) {
  char* out = static_cast<char*>(std::malloc(s.size() + 1));
  if (!out) throw std::bad_alloc();
  std::memcpy(out, s.c_str(), s.size() + 1);
  return out;
}

#define TM_REQUIRE(ptr)                                           \
  do {                                                            \
    if (!(ptr)) return Fail(TM_NULL_ARGUMENT, #ptr " is NULL");   \
  } while (0)

int MaxOrder(int max_order) {
  return max_order > 0 ? max_order : treematch::kDefaultMaxOrder;
}

nlohmann::json OptimizeJson(const treematch::OptimizeOptions& o,
                            const treematch::OptimizeResult& r) {
  using treematch::OptimizeMode;
  nlohmann::json j;
  j["schema"] = "treematch.optimize/1";
  j["mode"] = r.mode == OptimizeMode::kInteger ? "integer" : "continuous";
  j["m"] = o.m;
  j["k"] = o.k;
  j["symmetric"] = o.symmetric;
  j["variables"] = r.variables;
  j["total"] = r.total;
  j["seed"] = o.seed;
  j["polynomial"] = r.polynomial;
  j["ratio"] = r.ratio;
  if (r.mode == OptimizeMode::kInteger) {
    j["profile"] = r.profile;
    j["value"] = treematch::ToJson(treematch::StatValue(r.integer_value));
    j["exhaustive"] = r.exhaustive;
  } else {
    j["profile"] = r.point;
    j["value"] = r.value;
    j["starts"] = o.starts;
    j["gradient_norm"] = r.gradient_norm;
    j["finite_difference_error"] = r.finite_difference_error;
  }
  return j;
}

}  // namespace

extern "C" {

const char* tm_version(void) { return "1.0.0"; }

const char* tm_status_name(tm_status status) {
  switch (status) {
    case TM_NULL_ARGUMENT: return "NullArgument";
    case TM_INTERNAL: return "Internal";
    default:
      if (status >= TM_OK && status <= TM_INVALID_ARGUMENT) {
        return treematch::ErrorCodeName(
                   static_cast<treematch::ErrorCode>(status)).data();
      }
      return "Unknown";
  }
}

const char* tm_last_error(void) { return g_last_error.c_str(); }

void tm_free_string(char* s) { std::free(s); }

tm_status tm_tree_parse(const char* edge_list, tm_tree** out) {
  TM_REQUIRE(edge_list);
  TM_REQUIRE(out);
  return Guard([&] {
    *out = new tm_tree{treematch::Tree::Parse(edge_list)};
  });
}

tm_status tm_tree_from_edges(int n, const int* endpoints, tm_tree** out) {
  TM_REQUIRE(out);
  if (n > 1) TM_REQUIRE(endpoints);
  return Guard([&] {
    std::vector<treematch::Edge> edges;
    for (int i = 0; i + 1 < n; ++i) {
      edges.push_back({endpoints[2 * i], endpoints[2 * i + 1]});
    }
    *out = new tm_tree{treematch::Tree::FromEdges(n, edges)};
  });
}

tm_status tm_tree_family(const char* spec, tm_tree** out) {
  TM_REQUIRE(spec);
  TM_REQUIRE(out);
  return Guard([&] {
    *out = new tm_tree{
        treematch::MakeFamily(treematch::ParseFamilySpec(spec))};
  });
}

void tm_tree_free(tm_tree* tree) { delete tree; }

int tm_tree_order(const tm_tree* tree) {
  return tree ? tree->tree.order() : 0;
}

tm_status tm_tree_edge_list(const tm_tree* tree, char** out) {
  TM_REQUIRE(tree);
  TM_REQUIRE(out);
  return Guard([&] { *out = Dup(tree->tree.ToEdgeList()); });
}

tm_status tm_tree_canonical(const tm_tree* tree, char** out) {
  TM_REQUIRE(tree);
  TM_REQUIRE(out);
  return Guard([&] { *out = Dup(treematch::Canonicalize(tree->tree).str()); });
}

tm_status tm_tree_isomorphic(const tm_tree* a, const tm_tree* b, int* out) {
  TM_REQUIRE(a);
  TM_REQUIRE(b);
  TM_REQUIRE(out);
  return Guard([&] { *out = treematch::Isomorphic(a->tree, b->tree) ? 1 : 0; });
}

tm_status tm_tree_diameter(const tm_tree* tree, int* out) {
  TM_REQUIRE(tree);
  TM_REQUIRE(out);
  return Guard([&] { *out = treematch::Diameter(tree->tree).length; });
}

tm_status tm_count(const tm_tree* tree, const char* selector, char** out) {
  TM_REQUIRE(tree);
  TM_REQUIRE(selector);
  TM_REQUIRE(out);
  return Guard([&] {
    treematch::Statistic stat = treematch::MakeStatistic(selector);
    if (stat.domain && !stat.domain(tree->tree)) {
      throw Error(treematch::ErrorCode::kInvalidArgument,
                  std::string("tree lies outside the domain of ") + selector);
    }
    *out = Dup(treematch::ToString(stat.evaluate(tree->tree)));
  });
}

tm_status tm_matching_profile(const tm_tree* tree, char** out) {
  TM_REQUIRE(tree);
  TM_REQUIRE(out);
  return Guard([&] {
    nlohmann::json j = nlohmann::json::array();
    for (const auto& m : treematch::ComputeMatchingProfile(tree->tree)) {
      j.push_back(treematch::ToString(m));
    }
    *out = Dup(j.dump());
  });
}

tm_status tm_stream_open(int n, int max_order, tm_stream** out) {
  TM_REQUIRE(out);
  return Guard([&] {
    *out = new tm_stream{treematch::TreeStream(n, MaxOrder(max_order))};
  });
}

tm_status tm_stream_next(tm_stream* stream, tm_tree** out) {
  TM_REQUIRE(stream);
  TM_REQUIRE(out);
  return Guard([&] {
    auto tree = stream->stream.Next();
    *out = tree ? new tm_tree{std::move(*tree)} : nullptr;
  });
}

void tm_stream_free(tm_stream* stream) { delete stream; }

tm_status tm_count_free_trees(int n, int max_order, int64_t* out) {
  TM_REQUIRE(out);
  return Guard([&] {
    *out = treematch::CountFreeTrees(n, MaxOrder(max_order));
  });
}

tm_status tm_scan(int n, const char* selector, int maximize, int threads,
                  int max_order, int include_meta, char** out_json) {
  TM_REQUIRE(selector);
  TM_REQUIRE(out_json);
  return Guard([&] {
    treematch::ScanOptions options{threads, MaxOrder(max_order)};
    treematch::ScanReport report = treematch::Scan(
        n, treematch::MakeStatistic(selector),
        maximize ? treematch::Objective::kMax : treematch::Objective::kMin,
        options);
    *out_json = Dup(treematch::ToJson(report, include_meta != 0).dump(2));
  });
}

tm_status tm_verify(int n_max, const char* theorems, int threads,
                    int max_order, int include_meta, char** out_json,
                    int* all_pass) {
  TM_REQUIRE(out_json);
  return Guard([&] {
    treematch::BatteryConfig config;
    config.threads = threads;
    config.max_order = MaxOrder(max_order);
    if (theorems && *theorems && std::strcmp(theorems, "all") != 0) {
      std::stringstream list(theorems);
      std::string name;
      while (std::getline(list, name, ',')) {
        if (!name.empty() && name != "all") config.theorems.push_back(name);
      }
    }
    treematch::BatteryReport report =
        treematch::RunTheoremBattery(n_max, config);
    *out_json = Dup(treematch::ToJson(report, include_meta != 0).dump(2));
    if (all_pass) *all_pass = report.all_pass() ? 1 : 0;
  });
}

tm_status tm_theorem_names(char** out_json) {
  TM_REQUIRE(out_json);
  return Guard([&] {
    *out_json = Dup(nlohmann::json(treematch::TheoremNames()).dump());
  });
}

void tm_optimize_defaults(tm_optimize_options* options) {
  if (!options) return;
  treematch::OptimizeOptions d;
  options->m = d.m;
  options->k = d.k;
  options->total_legs = d.total_legs;
  options->symmetric = d.symmetric ? 1 : 0;
  options->integer_mode = d.mode == treematch::OptimizeMode::kInteger;
  options->seed = d.seed;
  options->starts = d.starts;
}

tm_status tm_optimize(const tm_optimize_options* options, char** out_json) {
  TM_REQUIRE(options);
  TM_REQUIRE(out_json);
  return Guard([&] {
    treematch::OptimizeOptions o;
    o.m = options->m;
    o.k = options->k;
    o.total_legs = options->total_legs;
    o.symmetric = options->symmetric != 0;
    o.mode = options->integer_mode ? treematch::OptimizeMode::kInteger
                                   : treematch::OptimizeMode::kContinuous;
    o.seed = options->seed;
    o.starts = options->starts;
    treematch::OptimizeResult r = treematch::OptimizeLeafDistribution(o);
    *out_json = Dup(OptimizeJson(o, r).dump(2));
  });
}

tm_status tm_chain_count(const int* legs, int m, int k, char** out) {
  TM_REQUIRE(legs);
  TM_REQUIRE(out);
  return Guard([&] {
    treematch::ChainProfile profile{std::vector<int>(legs, legs + m)};
    *out = Dup(treematch::ToString(treematch::KSapmChainCount(profile, k)));
  });
}

tm_status tm_growth_check(int k, const int* orders, int count,
                          char** out_json) {
  TM_REQUIRE(orders);
  TM_REQUIRE(out_json);
  return Guard([&] {
    auto rows = treematch::KsapmGrowthCheck(
        k, std::span<const int>(orders, static_cast<std::size_t>(count)));
    nlohmann::json j = nlohmann::json::array();
    for (const auto& r : rows) {
      j.push_back({{"n", r.n},
                   {"k", r.k},
                   {"a", r.a},
                   {"wheel_count", treematch::ToString(r.wheel_count)},
                   {"best_known", treematch::ToString(r.best_known)},
                   {"best_known_family", r.best_known_family},
                   {"binomial", treematch::ToString(r.binomial)},
                   {"within_binomial", r.best_known <= r.binomial}});
    }
    *out_json = Dup(nlohmann::json{{"schema", "treematch.growth/1"},
                                   {"rows", j}}.dump(2));
  });
}

}  // extern "C"
