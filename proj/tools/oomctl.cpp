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

#include <iostream>
#include <string>

#include "CLI11.hpp"
#include "cli.hpp"

using oom::cli::Command;
using oom::cli::RunConfig;

namespace {

CLI::App* add_common(CLI::App& app, const std::string& name, const std::string& help, RunConfig& cfg,
                     Command command, Command& selected) {
  auto* sub = app.add_subcommand(name, help);
  sub->add_option("-m,--model", cfg.model_path, "Model file (JSON)")->required();
  sub->add_option("-o,--output", cfg.output_path, "Write machine-readable CSV to this path");
  sub->add_option("--budget", cfg.budget, "Node budget for prefix-tree enumeration")->capture_default_str();
  sub->add_flag("--parallel", cfg.parallel, "Fan enumeration out over first symbols");
  sub->callback([&selected, command] { selected = command; });
  return sub;
}

}  // namespace

int main(int argc, char** argv) {
  RunConfig cfg;
  Command selected = Command::kValidate;
  CLI::App app{"oomctl: observable operator model diagnostics"};
  app.require_subcommand(1);

  auto* validate = add_common(app, "validate", "Check level sums, negativity and stationarity", cfg,
                              Command::kValidate, selected);
  validate->add_option("-d,--depth", cfg.depth, "Exhaustive check depth")->capture_default_str();

  auto* prob = add_common(app, "prob", "String probability P(w)", cfg, Command::kProb, selected);
  prob->add_option("-s,--string", cfg.string, "Word, e.g. abba (\"eps\" for the empty word)")->required();

  auto* cond = add_common(app, "cond", "Conditional probability P(w | given)", cfg, Command::kCond, selected);
  cond->add_option("-s,--string", cfg.string, "Future word")->required();
  cond->add_option("-g,--given", cfg.given, "Conditioning past word")->required();

  auto* sample = add_common(app, "sample", "Draw sequences", cfg, Command::kSample, selected);
  sample->add_option("-l,--length", cfg.length, "Sequence length")->capture_default_str();
  sample->add_option("--count", cfg.count, "Number of sequences (seeds seed..seed+count-1)")->capture_default_str();
  sample->add_option("--seed", cfg.seed, "RNG seed")->capture_default_str();

  auto* inner = add_common(app, "inner", "Truncated inner products S_1..S_n of two basis functions", cfg,
                           Command::kInner, selected);
  inner->add_option("--left", cfg.left, "Left prefix")->capture_default_str();
  inner->add_option("--right", cfg.right, "Right prefix")->capture_default_str();
  inner->add_option("-n,--max-depth,--depth", cfg.depth, "Largest truncation depth")->capture_default_str();
  inner->add_flag("--operator-form", cfg.operator_form, "Use the composite-operator formula");

  auto* converge = add_common(app, "converge", "Stabilization study of a truncated inner product", cfg,
                              Command::kConverge, selected);
  converge->add_option("--left", cfg.left, "Left prefix")->capture_default_str();
  converge->add_option("--right", cfg.right, "Right prefix")->capture_default_str();
  converge->add_option("-n,--max-depth,--depth", cfg.depth, "Largest truncation depth")->capture_default_str();
  converge->add_option("--tol", cfg.tolerance, "Stabilization tolerance")->capture_default_str();
  converge->add_option("--window", cfg.window, "Number of consecutive agreeing values")->capture_default_str();

  auto* gram = add_common(app, "gram", "Gram matrix and numerical rank over a prefix family", cfg, Command::kGram,
                          selected);
  gram->add_option("-p,--prefixes", cfg.prefixes, "Comma-separated prefixes")->delimiter(',');
  gram->add_option("-n,--depth", cfg.depth, "Truncation depth")->capture_default_str();
  gram->add_option("--rank-tol", cfg.rank_tol, "Relative eigenvalue threshold")->capture_default_str();

  auto* density = add_common(app, "density", "Density estimates g_prefix(w^k)/P(w^k) along a path", cfg,
                             Command::kDensity, selected);
  density->add_option("--prefix", cfg.prefix, "Basis prefix")->capture_default_str();
  density->add_option("-s,--string", cfg.string, "Evaluation path")->required();

  auto* cylinder = add_common(app, "cylinder", "Pre-measure of a cylinder union", cfg, Command::kCylinder, selected);
  cylinder->add_option("--set", cfg.cylinder, "Cylinder set, e.g. 2:aa,ab")->required();
  cylinder->add_option("-g,--given", cfg.given, "Conditioning prefix")->capture_default_str();

  auto* example = app.add_subcommand("example", "Print a built-in model file");
  example->add_option("name", cfg.example_name, "iid_uniform | two_state_sticky | alternating")->required();
  example->add_option("-o,--output", cfg.output_path, "Write to this path instead of stdout");
  example->callback([&selected] { selected = Command::kExample; });

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return oom::cli::kUsage;
  }
  cfg.command = selected;
  return oom::cli::run(cfg, std::cout, std::cerr);
}
