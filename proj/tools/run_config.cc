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

#include "run_config.h"

#include <algorithm>
#include <sstream>

#include "CLI11.hpp"

namespace treematch::cli {
namespace {

std::string Join(const std::vector<std::string>& parts, char sep) {
  std::string out;
  for (const auto& p : parts) {
    if (!out.empty()) out += sep;
    out += p;
  }
  return out;
}

void AddCommon(CLI::App* sub, RunConfig& c) {
  sub->add_option("--threads", c.threads, "Worker threads for scans")
      ->envname("TREEMATCH_THREADS")
      ->check(CLI::Range(1, 1024));
  sub->add_option("--format", c.format, "Output format")
      ->envname("TREEMATCH_FORMAT")
      ->check(CLI::IsMember({"json", "csv", "text"}));
  sub->add_option("-o,--output", c.output, "Output file")
      ->envname("TREEMATCH_OUTPUT");
  sub->add_option("--max-order", c.max_order, "Enumeration cap")
      ->envname("TREEMATCH_MAX_ORDER")
      ->check(CLI::Range(1, 64));
  sub->add_option("--seed", c.seed, "Random seed")->envname("TREEMATCH_SEED");
  sub->add_flag("--no-meta", c.no_meta, "Omit timing from reports")
      ->envname("TREEMATCH_NO_META");
}

// Rejects combinations CLI11 cannot express.
void Validate(const RunConfig& c) {
  auto cap = [&](int n, const char* what) {
    if (n > c.max_order) {
      throw ConfigError(kExitCapBreach,
                        std::string(what) + " " + std::to_string(n) +
                            " exceeds the enumeration cap " +
                            std::to_string(c.max_order) +
                            " (raise --max-order)");
    }
  };
  if (c.subcommand == "scan") {
    cap(c.n, "-n");
  } else if (c.subcommand == "verify") {
    cap(c.n_max, "--n-max");
  } else if (c.subcommand == "optimize") {
    if (c.symmetric && c.chain % 2 != 0) {
      throw ConfigError(kExitUsage, "--symmetric needs an even --chain");
    }
  } else if (c.subcommand == "growth" && c.orders.empty()) {
    throw ConfigError(kExitUsage, "growth needs at least one order");
  }
}

}  // namespace

std::string RunConfig::EffectiveFormat() const {
  if (!format.empty()) return format;
  return subcommand == "gen" || subcommand == "count" ? "text" : "json";
}

std::vector<std::string> RunConfig::ToArgs() const {
  std::vector<std::string> a = {subcommand};
  if (subcommand == "gen") {
    a.push_back(family);
  } else if (subcommand == "count") {
    a.push_back(input);
    a.insert(a.end(), {"--query", query});
  } else if (subcommand == "scan") {
    a.insert(a.end(), {"-n", std::to_string(n), "--stat", statistic,
                       maximize ? "--max" : "--min"});
  } else if (subcommand == "verify") {
    a.insert(a.end(), {"--n-max", std::to_string(n_max), "--theorem",
                       Join(theorems, ',')});
  } else if (subcommand == "optimize") {
    a.insert(a.end(), {"--chain", std::to_string(chain), "--k",
                       std::to_string(k), "--total", std::to_string(total_legs),
                       "--starts", std::to_string(starts),
                       integer_mode ? "--integer" : "--continuous"});
    if (symmetric) a.push_back("--symmetric");
  } else if (subcommand == "growth") {
    a.insert(a.end(), {"--k", std::to_string(k)});
    for (int o : orders) a.push_back(std::to_string(o));
  }
  a.insert(a.end(), {"--threads", std::to_string(threads), "--max-order",
                     std::to_string(max_order), "--seed",
                     std::to_string(seed)});
  if (!format.empty()) a.insert(a.end(), {"--format", format});
  if (!output.empty()) a.insert(a.end(), {"--output", output});
  if (no_meta) a.push_back("--no-meta");
  return a;
}

std::string RunConfig::ToText() const {
  std::vector<std::string> quoted;
  for (const std::string& arg : ToArgs()) {
    bool plain = !arg.empty() &&
                 arg.find_first_of(" \t\n'\"\\$`*?;&|<>()") == std::string::npos;
    if (plain) {
      quoted.push_back(arg);
      continue;
    }
    std::string q = "'";
    for (char ch : arg) q += ch == '\'' ? std::string("'\\''") : std::string(1, ch);
    quoted.push_back(q + "'");
  }
  return Join(quoted, ' ');
}

std::vector<std::string> SplitArgs(const std::string& text) {
  std::vector<std::string> out;
  std::string cur;
  bool in_token = false, quoted = false;
  for (std::size_t i = 0; i < text.size(); ++i) {
    char ch = text[i];
    if (quoted) {
      if (ch == '\'') {
        quoted = false;
      } else {
        cur += ch;
      }
    } else if (ch == '\'') {
      quoted = in_token = true;
    } else if (ch == '\\' && i + 1 < text.size()) {
      cur += text[++i];
      in_token = true;
    } else if (ch == ' ' || ch == '\t' || ch == '\n') {
      if (in_token) out.push_back(cur);
      cur.clear();
      in_token = false;
    } else {
      cur += ch;
      in_token = true;
    }
  }
  if (quoted) throw ConfigError(kExitUsage, "unterminated quote");
  if (in_token) out.push_back(cur);
  return out;
}

RunConfig ParseRunConfig(const std::vector<std::string>& args) {
  RunConfig c;
  CLI::App app{"Matchings and extremal trees", "treematch"};
  app.require_subcommand(1);

  CLI::App* gen = app.add_subcommand("gen", "Print a family member's edge list");
  gen->add_option("family", c.family, "Family text, e.g. spider:9")->required();
  AddCommon(gen, c);

  CLI::App* count = app.add_subcommand("count", "Evaluate a statistic on a tree");
  count->add_option("input", c.input, "Edge-list file, - for standard input");
  std::string stat_selector, hosoya_selector;
  bool apm = false, sapm = false, maximal = false, profile = false,
       order = false, canonical = false, diameter = false;
  int sapm_k = 0;
  auto* query_opt = count->add_option("--query", c.query,
                                      "Selector or profile/order/canonical/diameter");
  auto* stat_opt = count->add_option("--stat", stat_selector, "Statistic selector");
  auto* apm_opt = count->add_flag("--apm", apm, "Almost-perfect matchings");
  auto* sapm_opt = count->add_flag("--sapm", sapm, "Strong almost-perfect matchings");
  auto* k_opt = count->add_option("-k", sapm_k, "Avoided leaves for --sapm")
                    ->check(CLI::PositiveNumber);
  auto* maximal_opt = count->add_flag("--maximal", maximal, "Maximal matchings");
  auto* profile_opt = count->add_flag("--profile", profile, "Counts m_0, m_1, ...");
  auto* order_opt = count->add_flag("--order", order, "Number of vertices");
  auto* canonical_opt = count->add_flag("--canonical", canonical, "Canonical code");
  auto* diameter_opt = count->add_flag("--diameter", diameter, "Diameter");
  auto* hosoya_opt = count->add_option("--hosoya", hosoya_selector,
                                       "Weighted index, e.g. phi1:c=2")
                         ->expected(0, 1)
                         ->default_str("hosoya");
  std::vector<CLI::Option*> queries = {query_opt,   stat_opt,      apm_opt,
                                       sapm_opt,    maximal_opt,   profile_opt,
                                       order_opt,   canonical_opt, diameter_opt,
                                       hosoya_opt};
  for (auto* a : queries) {
    for (auto* b : queries) {
      if (a != b) a->excludes(b);
    }
  }
  k_opt->needs(sapm_opt);
  AddCommon(count, c);

  CLI::App* scan = app.add_subcommand("scan", "Extremal value over all trees of order n");
  scan->add_option("-n", c.n, "Order")->required()->check(CLI::PositiveNumber);
  scan->add_option("--stat", c.statistic, "Statistic selector")->required();
  bool min = false, max = false;
  auto* min_opt = scan->add_flag("--min", min, "Minimize");
  auto* max_opt = scan->add_flag("--max", max, "Maximize (default)");
  min_opt->excludes(max_opt);
  AddCommon(scan, c);

  CLI::App* verify = app.add_subcommand("verify", "Run the theorem battery");
  verify->add_option("--n-max", c.n_max, "Largest order")
      ->check(CLI::PositiveNumber);
  std::string theorem_text = "all";
  verify->add_option("--theorem", theorem_text,
                     "Comma-separated check names, or all");
  AddCommon(verify, c);

  CLI::App* optimize = app.add_subcommand("optimize", "Leaf distribution on a spider chain");
  optimize->add_option("--chain", c.chain, "Number of spider centers")
      ->check(CLI::Range(2, 64));
  optimize->add_option("--k", c.k, "Avoided leaves")->check(CLI::PositiveNumber);
  optimize->add_option("--total", c.total_legs, "Total legs (0: one per variable)")
      ->check(CLI::NonNegativeNumber);
  optimize->add_option("--starts", c.starts, "Random starts")
      ->check(CLI::Range(1, 100000));
  optimize->add_flag("--symmetric", c.symmetric, "Mirror-symmetric profiles");
  auto* integer_opt = optimize->add_flag("--integer", c.integer_mode, "Integer compositions");
  bool continuous = false;
  optimize->add_flag("--continuous", continuous, "Simplex relaxation (default)")
      ->excludes(integer_opt);
  AddCommon(optimize, c);

  CLI::App* growth = app.add_subcommand("growth", "Spider-wheel counts against C(n,k)");
  growth->add_option("--k", c.k, "Avoided leaves")->check(CLI::PositiveNumber);
  growth->add_option("orders", c.orders, "Orders n = (k+1)(2a+1)+1");
  AddCommon(growth, c);

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    auto subs = app.get_subcommands();
    throw HelpRequested(subs.empty() ? app.help() : subs.back()->help());
  } catch (const CLI::ParseError& e) {
    throw ConfigError(kExitUsage, e.what());
  }

  for (CLI::App* sub : app.get_subcommands()) c.subcommand = sub->get_name();
  if (c.subcommand == "count") {
    if (query_opt->count()) {
      // already set
    } else if (stat_opt->count()) {
      c.query = stat_selector;
    } else if (apm) {
      c.query = "apm";
    } else if (sapm) {
      c.query = sapm_k > 0 ? "ksapm:" + std::to_string(sapm_k) : "sapm";
    } else if (maximal) {
      c.query = "maximal";
    } else if (profile) {
      c.query = "profile";
    } else if (order) {
      c.query = "order";
    } else if (canonical) {
      c.query = "canonical";
    } else if (diameter) {
      c.query = "diameter";
    } else if (hosoya_opt->count()) {
      c.query = hosoya_selector.empty() ? "hosoya" : hosoya_selector;
    } else {
      throw ConfigError(kExitUsage,
                        "count needs a statistic: --apm, --sapm [-k K], "
                        "--maximal, --profile, --order, --hosoya [W] or --stat S");
    }
  } else if (c.subcommand == "scan") {
    c.maximize = !min;
  } else if (c.subcommand == "verify") {
    c.theorems.clear();
    std::stringstream list(theorem_text);
    std::string name;
    while (std::getline(list, name, ',')) {
      if (!name.empty()) c.theorems.push_back(name);
    }
    if (c.theorems.empty() ||
        std::find(c.theorems.begin(), c.theorems.end(), "all") !=
            c.theorems.end()) {
      c.theorems = {"all"};
    }
  }
  Validate(c);
  return c;
}

RunConfig ParseRunConfigText(const std::string& text) {
  return ParseRunConfig(SplitArgs(text));
}

}  // namespace treematch::cli
