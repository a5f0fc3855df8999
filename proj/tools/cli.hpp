// Copyright 2026 The oomkit Authors.
//
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

#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "oom/enumeration.hpp"
#include "oom/hmm.hpp"

namespace oom::cli {

enum class Command { kValidate, kProb, kCond, kSample, kInner, kGram, kDensity, kCylinder, kConverge, kExample };

enum ExitCode : int {
  kOk = 0,
  kIoError = 1,
  kParseError = 2,
  kModelInvalid = 3,
  kBudgetExceeded = 4,
  kZeroProbability = 5,
  kUnknownSymbol = 6,
  kInvalidArgument = 7,
  kUsage = 64,
};

struct RunConfig {
  Command command = Command::kValidate;
  std::string model_path;
  int depth = 8;
  double tolerance = 1e-8;
  std::uint64_t seed = 0;
  std::optional<std::string> output_path;
  std::uint64_t budget = kDefaultNodeBudget;
  bool parallel = false;

  // Command-specific arguments.
  std::string string;             // prob, cond, density
  std::string given;              // cond, cylinder
  std::string left = "eps";       // inner, converge
  std::string right = "eps";      // inner, converge
  std::string prefix = "eps";     // density
  std::string cylinder;           // cylinder, "k:s1,s2"
  std::vector<std::string> prefixes;  // gram
  double rank_tol = 1e-8;         // gram
  int window = 3;                 // converge
  std::size_t length = 10;        // sample
  std::size_t count = 1;          // sample
  bool operator_form = false;     // inner
  std::string example_name;       // example
};

/// Runs one command. Human-readable text goes to `out`, one-line
/// diagnostics to `err`; CSV goes to config.output_path when set.
int run(const RunConfig& config, std::ostream& out, std::ostream& err);

/// Built-in models: "iid_uniform", "two_state_sticky", "alternating".
/// Throws InvalidArgument for an unknown name.
Hmm builtin_model(const std::string& name);
std::string generate_example(const std::string& name);
const std::vector<std::string>& builtin_names();

}  // namespace oom::cli
