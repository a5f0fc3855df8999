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

#include "cli.hpp"

#include <charconv>
#include <fstream>
#include <ostream>
#include <sstream>

#include "oom/oom.hpp"

namespace oom::cli {

namespace {

std::string shortest(double x) {
  char buf[64];
  auto [ptr, ec] = std::to_chars(buf, buf + sizeof(buf), x);
  return std::string(buf, ptr);
}

class CsvSink {
 public:
  explicit CsvSink(const std::optional<std::string>& path) : path_(path) {}
  std::ostream& stream() { return buffer_; }
  void flush() {
    if (!path_) return;
    std::ofstream file(*path_, std::ios::binary);
    if (!file) throw IoError("cannot open output file '" + *path_ + "'");
    file << buffer_.str();
    if (!file) throw IoError("cannot write output file '" + *path_ + "'");
  }

 private:
  std::optional<std::string> path_;
  std::ostringstream buffer_;
};

EnumerationOptions enumeration(const RunConfig& c) { return EnumerationOptions{c.budget, c.parallel}; }

std::shared_ptr<const MatrixOom> load(const RunConfig& c) {
  if (c.model_path.empty()) throw InvalidArgument("a model file is required (--model)");
  return std::make_shared<const MatrixOom>(to_oom(load_model_file(c.model_path)));
}

int cmd_validate(const RunConfig& c, std::ostream& out) {
  if (c.depth < 1) throw InvalidArgument("--depth must be at least 1");
  const auto m = load(c);
  const ValidationTolerances tol;
  const auto r = validate(*m, c.depth, tol, c.budget);
  auto line = [&](const char* name, double value, double limit, bool ok) {
    out << name << ": " << shortest(value) << " (tolerance " << shortest(limit) << ") " << (ok ? "ok" : "FAIL") << '\n';
  };
  out << "validation to depth " << r.depth << '\n';
  line("max negativity", r.max_negativity, tol.negativity, r.negativity_ok);
  line("max level-sum deviation", r.max_level_sum_deviation, tol.level_sum, r.level_sums_ok);
  line("stationarity residual", r.stationarity_residual, tol.stationarity, r.stationarity_ok);
  line("normalization residual", r.normalization_residual, tol.normalization, r.normalization_ok);
  out << "verdict: " << (r.passed() ? "pass" : "fail") << '\n';
  CsvSink csv(c.output_path);
  csv.stream() << "check,value,tolerance,pass\n"
               << "negativity," << format_double(r.max_negativity) << ',' << format_double(tol.negativity) << ','
               << r.negativity_ok << '\n'
               << "level_sum," << format_double(r.max_level_sum_deviation) << ',' << format_double(tol.level_sum)
               << ',' << r.level_sums_ok << '\n'
               << "stationarity," << format_double(r.stationarity_residual) << ','
               << format_double(tol.stationarity) << ',' << r.stationarity_ok << '\n'
               << "normalization," << format_double(r.normalization_residual) << ','
               << format_double(tol.normalization) << ',' << r.normalization_ok << '\n';
  csv.flush();
  return r.passed() ? kOk : kModelInvalid;
}

int cmd_prob(const RunConfig& c, std::ostream& out) {
  const auto m = load(c);
  const auto w = m->alphabet().parse(c.string);
  const double p = string_probability(*m, w);
  out << shortest(p) << '\n';
  CsvSink csv(c.output_path);
  csv.stream() << "word,probability\n" << m->alphabet().format(w) << ',' << format_double(p) << '\n';
  csv.flush();
  return kOk;
}

int cmd_cond(const RunConfig& c, std::ostream& out) {
  const auto m = load(c);
  const auto b = m->alphabet().parse(c.string);
  const auto a = m->alphabet().parse(c.given);
  const double p = conditional_probability(*m, b, a);
  out << shortest(p) << '\n';
  CsvSink csv(c.output_path);
  csv.stream() << "word,given,probability\n"
               << m->alphabet().format(b) << ',' << m->alphabet().format(a) << ',' << format_double(p) << '\n';
  csv.flush();
  return kOk;
}

int cmd_sample(const RunConfig& c, std::ostream& out) {
  const auto m = load(c);
  CsvSink csv(c.output_path);
  csv.stream() << "index,sequence\n";
  for (std::size_t i = 0; i < c.count; ++i) {
    const auto w = sample_sequence(*m, c.length, c.seed + i);
    const auto text = m->alphabet().format(w);
    out << text << '\n';
    csv.stream() << i << ',' << text << '\n';
  }
  csv.flush();
  return kOk;
}

int cmd_inner(const RunConfig& c, std::ostream& out) {
  if (c.depth < 1) throw InvalidArgument("--max-depth must be at least 1");
  const auto m = load(c);
  const auto left = m->alphabet().parse(c.left);
  const auto right = m->alphabet().parse(c.right);
  const auto g1 = FutureFunction::basis(m, left);
  const auto g2 = FutureFunction::basis(m, right);
  ConvergenceReport series;
  for (int n = 1; n <= c.depth; ++n) {
    series.values.push_back(c.operator_form ? inner_product_operator_form(*m, left, right, n, enumeration(c))
                                            : inner_product_truncated(g1, g2, n, enumeration(c)));
  }
  out << "truncated inner product <g_" << m->alphabet().format(left) << ", g_" << m->alphabet().format(right)
      << ">" << (c.operator_form ? " (operator form)" : "") << '\n';
  for (std::size_t i = 0; i < series.values.size(); ++i) out << (i + 1) << ' ' << shortest(series.values[i]) << '\n';
  CsvSink csv(c.output_path);
  write_csv(csv.stream(), series);
  csv.flush();
  return kOk;
}

int cmd_converge(const RunConfig& c, std::ostream& out) {
  const auto m = load(c);
  const auto g1 = FutureFunction::basis(m, m->alphabet().parse(c.left));
  const auto g2 = FutureFunction::basis(m, m->alphabet().parse(c.right));
  const auto r = inner_product_converged(g1, g2, c.tolerance, c.depth, c.window, enumeration(c));
  for (std::size_t i = 0; i < r.values.size(); ++i) out << (i + 1) << ' ' << shortest(r.values[i]) << '\n';
  out << (r.stabilized ? "stabilized" : "not stabilized") << " at depth " << r.depth_reached << " (window "
      << r.window << ", tail delta " << shortest(r.tail_delta) << ", tolerance " << shortest(r.tolerance)
      << "); stabilization does not prove the limit exists\n";
  CsvSink csv(c.output_path);
  write_csv(csv.stream(), r);
  csv.flush();
  return kOk;
}

int cmd_gram(const RunConfig& c, std::ostream& out) {
  const auto m = load(c);
  std::vector<Word> prefixes;
  for (const auto& p : c.prefixes) prefixes.push_back(m->alphabet().parse(p));
  if (prefixes.empty()) prefixes.push_back(Word{});
  const auto gram = gram_matrix(m, prefixes, c.depth, c.rank_tol, enumeration(c));
  out << "Gram matrix at depth " << gram.depth << '\n';
  for (Eigen::Index i = 0; i < gram.entries.rows(); ++i) {
    out << m->alphabet().format(gram.prefixes[static_cast<std::size_t>(i)]) << ':';
    for (Eigen::Index j = 0; j < gram.entries.cols(); ++j) out << ' ' << shortest(gram.entries(i, j));
    out << '\n';
  }
  out << "eigenvalues:";
  for (double e : gram.eigenvalues) out << ' ' << shortest(e);
  out << "\nnumerical rank: " << gram.numerical_rank << " (rank tolerance " << shortest(gram.rank_tolerance)
      << " relative to the largest eigenvalue)\n";
  CsvSink csv(c.output_path);
  write_csv(csv.stream(), gram, m->alphabet());
  csv.flush();
  return kOk;
}

int cmd_density(const RunConfig& c, std::ostream& out) {
  const auto m = load(c);
  const auto g = FutureFunction::basis(m, m->alphabet().parse(c.prefix));
  const auto path = m->alphabet().parse(c.string);
  if (path.empty()) throw InvalidArgument("--string must name a non-empty evaluation path");
  ConvergenceReport series;
  for (std::size_t k = 1; k <= path.size(); ++k)
    series.values.push_back(density_estimate(g, Word(path.begin(), path.begin() + static_cast<std::ptrdiff_t>(k))));
  for (std::size_t i = 0; i < series.values.size(); ++i) out << (i + 1) << ' ' << shortest(series.values[i]) << '\n';
  CsvSink csv(c.output_path);
  write_csv(csv.stream(), series);
  csv.flush();
  return kOk;
}

int cmd_cylinder(const RunConfig& c, std::ostream& out) {
  const auto m = load(c);
  const CylinderAlgebra algebra(m->alphabet());
  const auto set = algebra.parse(c.cylinder);
  const auto given = m->alphabet().parse(c.given);
  const double mu = premeasure(*m, given, set);
  out << "premeasure " << shortest(mu) << '\n';
  CsvSink csv(c.output_path);
  csv.stream() << "given,set,premeasure,majorization_slack\n"
               << m->alphabet().format(given) << ',' << algebra.format(set) << ',' << format_double(mu) << ',';
  if (string_probability(*m, given) > 0.0) {
    const double slack = majorization_check(*m, given, set);
    out << "majorization slack " << shortest(slack) << '\n';
    csv.stream() << format_double(slack);
  }
  csv.stream() << '\n';
  csv.flush();
  return kOk;
}

int cmd_example(const RunConfig& c, std::ostream& out) {
  const auto text = generate_example(c.example_name);
  if (c.output_path) {
    std::ofstream file(*c.output_path, std::ios::binary);
    if (!file || !(file << text)) throw IoError("cannot write '" + *c.output_path + "'");
  } else {
    out << text;
  }
  return kOk;
}

int dispatch(const RunConfig& c, std::ostream& out) {
  switch (c.command) {
    case Command::kValidate: return cmd_validate(c, out);
    case Command::kProb: return cmd_prob(c, out);
    case Command::kCond: return cmd_cond(c, out);
    case Command::kSample: return cmd_sample(c, out);
    case Command::kInner: return cmd_inner(c, out);
    case Command::kGram: return cmd_gram(c, out);
    case Command::kDensity: return cmd_density(c, out);
    case Command::kCylinder: return cmd_cylinder(c, out);
    case Command::kConverge: return cmd_converge(c, out);
    case Command::kExample: return cmd_example(c, out);
  }
  return kUsage;
}

}  // namespace

int run(const RunConfig& config, std::ostream& out, std::ostream& err) {
  if (config.budget == 0) {
    err << "error: --budget must be positive\n";
    return kInvalidArgument;
  }
  if (!(config.tolerance > 0.0)) {
    err << "error: --tol must be positive\n";
    return kInvalidArgument;
  }
  try {
    return dispatch(config, out);
  } catch (const IoError& e) {
    err << "io error: " << e.what() << '\n';
    return kIoError;
  } catch (const ParseError& e) {
    err << "parse error: " << e.what() << '\n';
    return kParseError;
  } catch (const InvalidModel& e) {
    err << "invalid model: " << e.what() << '\n';
    return kModelInvalid;
  } catch (const BudgetExceeded& e) {
    err << "budget exceeded: " << e.what() << '\n';
    return kBudgetExceeded;
  } catch (const ZeroProbability& e) {
    err << "zero probability: " << e.what() << '\n';
    return kZeroProbability;
  } catch (const UnknownSymbol& e) {
    err << "unknown symbol: " << e.what() << '\n';
    return kUnknownSymbol;
  } catch (const InvalidArgument& e) {
    err << "invalid argument: " << e.what() << '\n';
    return kInvalidArgument;
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return kInvalidArgument;
  }
}

const std::vector<std::string>& builtin_names() {
  static const std::vector<std::string> names{"iid_uniform", "two_state_sticky", "alternating"};
  return names;
}

Hmm builtin_model(const std::string& name) {
  Alphabet ab({"a", "b"});
  if (name == "iid_uniform") {
    Matrix t(1, 1);
    t << 1.0;
    Matrix e(1, 2);
    e << 0.5, 0.5;
    Vector pi(1);
    pi << 1.0;
    return Hmm{ab, t, e, pi};
  }
  if (name == "two_state_sticky") {
    Matrix t(2, 2);
    t << 0.9, 0.1, 0.1, 0.9;
    return Hmm{ab, t, Matrix::Identity(2, 2), Vector::Constant(2, 0.5)};
  }
  if (name == "alternating") {
    Matrix t(2, 2);
    t << 0.0, 1.0, 1.0, 0.0;
    return Hmm{ab, t, Matrix::Identity(2, 2), Vector::Constant(2, 0.5)};
  }
  throw InvalidArgument("unknown example '" + name + "' (expected iid_uniform, two_state_sticky or alternating)");
}

std::string generate_example(const std::string& name) { return to_json(builtin_model(name)); }

}  // namespace oom::cli
