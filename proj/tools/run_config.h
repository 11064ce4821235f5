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

#ifndef TREEMATCH_TOOLS_RUN_CONFIG_H_
#define TREEMATCH_TOOLS_RUN_CONFIG_H_

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace treematch::cli {

// Process exit codes.
enum ExitCode {
  kExitOk = 0,
  kExitCheckFailed = 1,
  kExitUsage = 2,
  kExitMalformedTree = 3,
  kExitCapBreach = 4,
};

inline constexpr int kDefaultCap = 22;
inline constexpr std::uint64_t kDefaultSeedValue = 20240229;

struct RunConfig {
  std::string subcommand;  // gen, count, scan, verify, optimize, growth

  // gen
  std::string family;
  // count: input path, "-" for standard input; query is a statistic
  // selector or one of profile, order, canonical, diameter.
  std::string input = "-";
  std::string query;
  // scan
  int n = 0;
  std::string statistic;
  bool maximize = true;
  // verify
  int n_max = 10;
  std::vector<std::string> theorems = {"all"};
  // optimize
  int chain = 8;
  int k = 4;
  int total_legs = 0;
  bool symmetric = false;
  bool integer_mode = false;
  int starts = 16;
  // growth
  std::vector<int> orders;

  // common
  int threads = 1;
  std::string format;  // json, csv, text; empty picks the subcommand default
  std::string output;  // empty writes to standard output
  int max_order = kDefaultCap;
  std::uint64_t seed = kDefaultSeedValue;
  bool no_meta = false;

  // Arguments (without the program name) that parse back to this config.
  std::vector<std::string> ToArgs() const;
  // ToArgs joined with spaces, single-quoting tokens that need it.
  std::string ToText() const;
  // Format actually used for output.
  std::string EffectiveFormat() const;

  friend bool operator==(const RunConfig&, const RunConfig&) = default;
};

// Raised for bad command lines; carries the exit code to use.
class ConfigError : public std::runtime_error {
 public:
  ConfigError(int exit_code, const std::string& message)
      : std::runtime_error(message), exit_code_(exit_code) {}
  int exit_code() const { return exit_code_; }

 private:
  int exit_code_;
};

// Thrown for --help; what() is the help text.
class HelpRequested : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Parses arguments (program name excluded). Options also read TREEMATCH_*
// environment variables (TREEMATCH_THREADS, TREEMATCH_FORMAT,
// TREEMATCH_OUTPUT, TREEMATCH_MAX_ORDER, TREEMATCH_SEED, TREEMATCH_NO_META);
// flags win over the environment. Throws ConfigError or HelpRequested.
RunConfig ParseRunConfig(const std::vector<std::string>& args);
RunConfig ParseRunConfigText(const std::string& text);

// Shell-style split honoring single quotes.
std::vector<std::string> SplitArgs(const std::string& text);

}  // namespace treematch::cli

#endif  // TREEMATCH_TOOLS_RUN_CONFIG_H_
