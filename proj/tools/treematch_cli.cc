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

// treematch: command-line front end over the C API.
//
// Exit codes: 0 ok, 1 a theorem check failed, 2 usage or parse error,
// 3 malformed tree, 4 resource cap exceeded.

#include <fstream>
#include <iostream>
#include <iterator>
#include <sstream>
#include <string>
#include <vector>

#include "json.hpp"
#include "run_config.h"
#include "treematch/treematch.h"

namespace treematch::cli {
namespace {

using nlohmann::json;

class Failure : public std::runtime_error {
 public:
  Failure(int exit_code, const std::string& message)
      : std::runtime_error(message), exit_code_(exit_code) {}
  int exit_code() const { return exit_code_; }

 private:
  int exit_code_;
};

int ExitFor(tm_status status) {
  switch (status) {
    case TM_NOT_A_TREE:
      return kExitMalformedTree;
    case TM_ORDER_TOO_LARGE:
    case TM_TOO_LARGE_FOR_ORACLE:
    case TM_TOO_LARGE_FOR_SYMBOLIC:
      return kExitCapBreach;
    default:
      return kExitUsage;
  }
}

void Check(tm_status status) {
  if (status != TM_OK) {
    throw Failure(ExitFor(status), std::string(tm_status_name(status)) +
                                       ": " + tm_last_error());
  }
}

// Owns a string returned by the library.
std::string Take(char* s) {
  std::string out = s ? s : "";
  tm_free_string(s);
  return out;
}

struct TreeHandle {
  tm_tree* ptr = nullptr;
  ~TreeHandle() { tm_tree_free(ptr); }
};

std::string ReadInput(const std::string& path) {
  if (path == "-") {
    return std::string(std::istreambuf_iterator<char>(std::cin), {});
  }
  std::ifstream in(path);
  if (!in) throw Failure(kExitUsage, "cannot open " + path);
  return std::string(std::istreambuf_iterator<char>(in), {});
}

std::string CsvField(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  return out + "\"";
}

std::string Scalar(const json& v) {
  return v.is_string() ? v.get<std::string>() : v.dump();
}

std::string Gen(const RunConfig& c) {
  TreeHandle t;
  Check(tm_tree_family(c.family.c_str(), &t.ptr));
  char* s = nullptr;
  Check(tm_tree_edge_list(t.ptr, &s));
  std::string edges = Take(s);
  const std::string format = c.EffectiveFormat();
  if (format == "text") return edges;
  Check(tm_tree_canonical(t.ptr, &s));
  std::string code = Take(s);
  json pairs = json::array();
  std::istringstream in(edges);
  int n = 0, u = 0, v = 0;
  in >> n;
  while (in >> u >> v) pairs.push_back({u, v});
  if (format == "csv") {
    std::string out = "u,v\n";
    for (const auto& p : pairs) {
      out += std::to_string(p[0].get<int>()) + "," +
             std::to_string(p[1].get<int>()) + "\n";
    }
    return out;
  }
  return json{{"family", c.family},
              {"order", n},
              {"edges", pairs},
              {"canonical", code}}
             .dump(2) +
         "\n";
}

std::string Count(const RunConfig& c) {
  TreeHandle t;
  Check(tm_tree_parse(ReadInput(c.input).c_str(), &t.ptr));
  json value;
  char* s = nullptr;
  if (c.query == "profile") {
    Check(tm_matching_profile(t.ptr, &s));
    value = json::parse(Take(s));
  } else if (c.query == "order") {
    value = tm_tree_order(t.ptr);
  } else if (c.query == "canonical") {
    Check(tm_tree_canonical(t.ptr, &s));
    value = Take(s);
  } else if (c.query == "diameter") {
    int d = 0;
    Check(tm_tree_diameter(t.ptr, &d));
    value = d;
  } else {
    Check(tm_count(t.ptr, c.query.c_str(), &s));
    value = Take(s);
  }
  const std::string format = c.EffectiveFormat();
  if (format == "json") {
    return json{{"statistic", c.query}, {"value", value}}.dump(2) + "\n";
  }
  std::string text;
  if (value.is_array()) {
    for (const auto& v : value) text += (text.empty() ? "" : " ") + Scalar(v);
  } else {
    text = Scalar(value);
  }
  if (format == "csv") return "statistic,value\n" + CsvField(c.query) + "," + CsvField(text) + "\n";
  return text + "\n";
}

std::string Scan(const RunConfig& c) {
  char* s = nullptr;
  Check(tm_scan(c.n, c.statistic.c_str(), c.maximize ? 1 : 0, c.threads,
                c.max_order, c.no_meta ? 0 : 1, &s));
  std::string text = Take(s);
  const std::string format = c.EffectiveFormat();
  if (format == "json") return text + "\n";
  json r = json::parse(text);
  if (format == "csv") {
    std::string out = "n,statistic,objective,value,code,edge_list\n";
    for (std::size_t i = 0; i < r["argmax"].size(); ++i) {
      out += std::to_string(r["n"].get<int>()) + "," +
             CsvField(r["statistic"]) + "," + r["objective"].get<std::string>() +
             "," + CsvField(Scalar(r["value"])) + "," +
             CsvField(r["argmax"][i]) + "," +
             CsvField(r["argmax_edge_lists"][i]) + "\n";
    }
    return out;
  }
  std::ostringstream out;
  out << r["objective"].get<std::string>() << " " << r["statistic"].get<std::string>()
      << " over " << r["classes_in_domain"] << " of " << r["classes_scanned"]
      << " trees of order " << r["n"] << ": " << Scalar(r["value"]) << "\n";
  out << r["argmax"].size() << " extremal tree(s):\n";
  for (const auto& code : r["argmax"]) out << "  " << code.get<std::string>() << "\n";
  return out.str();
}

std::string Verify(const RunConfig& c, bool* all_pass) {
  std::string theorems;
  for (const auto& t : c.theorems) theorems += (theorems.empty() ? "" : ",") + t;
  char* s = nullptr;
  int pass = 0;
  Check(tm_verify(c.n_max, theorems.c_str(), c.threads, c.max_order,
                  c.no_meta ? 0 : 1, &s, &pass));
  *all_pass = pass != 0;
  std::string text = Take(s);
  const std::string format = c.EffectiveFormat();
  if (format == "json") return text + "\n";
  json r = json::parse(text);
  std::ostringstream out;
  if (format == "csv") {
    out << "theorem,n,pass,expected,observed\n";
    for (const auto& row : r["checks"]) {
      out << CsvField(row["theorem"]) << "," << row["n"] << ","
          << (row["pass"].get<bool>() ? "PASS" : "FAIL") << ","
          << CsvField(row["expected"]) << "," << CsvField(row["observed"]) << "\n";
    }
    return out.str();
  }
  for (const auto& row : r["checks"]) {
    out << (row["pass"].get<bool>() ? "PASS " : "FAIL ")
        << row["theorem"].get<std::string>() << " n=" << row["n"] << "  "
        << row["observed"].get<std::string>() << "\n";
    if (!row["pass"].get<bool>()) {
      out << "     expected: " << row["expected"].get<std::string>() << "\n";
      if (row.contains("offending")) {
        for (const auto& o : row["offending"]) {
          std::string line = o.get<std::string>();
          for (char& ch : line) {
            if (ch == '\n') ch = ';';
          }
          out << "     offending: " << line << "\n";
        }
      }
    }
  }
  out << r["checks"].size() << " checks, " << r["failures"] << " failed\n";
  return out.str();
}

std::string Optimize(const RunConfig& c) {
  tm_optimize_options o;
  tm_optimize_defaults(&o);
  o.m = c.chain;
  o.k = c.k;
  o.total_legs = c.total_legs;
  o.symmetric = c.symmetric ? 1 : 0;
  o.integer_mode = c.integer_mode ? 1 : 0;
  o.seed = c.seed;
  o.starts = c.starts;
  char* s = nullptr;
  Check(tm_optimize(&o, &s));
  std::string text = Take(s);
  const std::string format = c.EffectiveFormat();
  if (format == "json") return text + "\n";
  json r = json::parse(text);
  auto list = [](const json& a) {
    std::string out;
    for (const auto& v : a) out += (out.empty() ? "" : " ") + Scalar(v);
    return out;
  };
  if (format == "csv") {
    return "mode,value,profile,ratio\n" + r["mode"].get<std::string>() + "," +
           Scalar(r["value"]) + "," + list(r["profile"]) + "," +
           list(r["ratio"]) + "\n";
  }
  std::ostringstream out;
  out << "mode " << r["mode"].get<std::string>() << ", value "
      << Scalar(r["value"]) << "\nprofile " << list(r["profile"])
      << "\nratio " << list(r["ratio"]) << "\n";
  if (r.contains("gradient_norm")) {
    out << "gradient norm " << r["gradient_norm"] << ", finite-difference gap "
        << r["finite_difference_error"] << "\n";
  }
  out << "polynomial " << r["polynomial"].get<std::string>() << "\n";
  return out.str();
}

std::string Growth(const RunConfig& c) {
  char* s = nullptr;
  Check(tm_growth_check(c.k, c.orders.data(), static_cast<int>(c.orders.size()), &s));
  std::string text = Take(s);
  const std::string format = c.EffectiveFormat();
  if (format == "json") return text + "\n";
  json r = json::parse(text);
  std::ostringstream out;
  out << "n,k,a,wheel_count,best_known,best_known_family,binomial\n";
  for (const auto& row : r["rows"]) {
    out << row["n"] << "," << row["k"] << "," << row["a"] << ","
        << row["wheel_count"].get<std::string>() << ","
        << row["best_known"].get<std::string>() << ","
        << CsvField(row["best_known_family"]) << ","
        << row["binomial"].get<std::string>() << "\n";
  }
  return out.str();
}

void Emit(const RunConfig& c, const std::string& text) {
  if (c.output.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream out(c.output, std::ios::binary);
  if (!out || !(out << text)) throw Failure(kExitUsage, "cannot write " + c.output);
}

int Run(int argc, char** argv) {
  RunConfig config;
  try {
    config = ParseRunConfig(std::vector<std::string>(argv + 1, argv + argc));
  } catch (const HelpRequested& e) {
    std::cout << e.what();
    return kExitOk;
  } catch (const ConfigError& e) {
    std::cerr << "treematch: " << e.what() << "\n";
    return e.exit_code();
  }
  try {
    bool pass = true;
    std::string text;
    const std::string& sub = config.subcommand;
    if (sub == "gen") text = Gen(config);
    if (sub == "count") text = Count(config);
    if (sub == "scan") text = Scan(config);
    if (sub == "verify") text = Verify(config, &pass);
    if (sub == "optimize") text = Optimize(config);
    if (sub == "growth") text = Growth(config);
    Emit(config, text);
    return pass ? kExitOk : kExitCheckFailed;
  } catch (const Failure& e) {
    std::cerr << "treematch: " << e.what() << "\n";
    return e.exit_code();
  } catch (const std::exception& e) {
    std::cerr << "treematch: " << e.what() << "\n";
    return kExitUsage;
  }
}

}  // namespace
}  // namespace treematch::cli

int main(int argc, char** argv) { return treematch::cli::Run(argc, argv); }
