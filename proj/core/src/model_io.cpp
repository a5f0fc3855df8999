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

#include "oom/model_io.hpp"

#include <fstream>
#include <sstream>

#include "json.hpp"
#include "oom/errors.hpp"

namespace oom {

namespace {

using Json = nlohmann::json;

const Json& field(const Json& doc, const char* name) {
  auto it = doc.find(name);
  if (it == doc.end()) throw ParseError(std::string("missing field '") + name + "'");
  return *it;
}

double number(const Json& x, const std::string& where) {
  if (!x.is_number()) throw ParseError("field '" + where + "' must be a number");
  return x.get<double>();
}

Vector vector_field(const Json& x, const std::string& where, Eigen::Index expected = -1) {
  if (!x.is_array()) throw ParseError("field '" + where + "' must be an array of numbers");
  if (expected >= 0 && static_cast<Eigen::Index>(x.size()) != expected)
    throw ParseError("field '" + where + "' must have " + std::to_string(expected) + " entries, got " +
                     std::to_string(x.size()));
  Vector v(static_cast<Eigen::Index>(x.size()));
  for (std::size_t i = 0; i < x.size(); ++i) v(static_cast<Eigen::Index>(i)) = number(x[i], where + "[" + std::to_string(i) + "]");
  return v;
}

Matrix matrix_field(const Json& x, const std::string& where, Eigen::Index rows, Eigen::Index cols) {
  if (!x.is_array() || static_cast<Eigen::Index>(x.size()) != rows)
    throw ParseError("field '" + where + "' must be an array of " + std::to_string(rows) + " rows");
  Matrix out(rows, cols);
  for (Eigen::Index i = 0; i < rows; ++i) {
    const auto row = vector_field(x[static_cast<std::size_t>(i)], where + "[" + std::to_string(i) + "]", cols);
    out.row(i) = row.transpose();
  }
  return out;
}

Alphabet alphabet_field(const Json& doc) {
  const auto& a = field(doc, "alphabet");
  if (!a.is_array() || a.empty()) throw ParseError("field 'alphabet' must be a non-empty array of strings");
  std::vector<std::string> symbols;
  for (const auto& s : a) {
    if (!s.is_string()) throw ParseError("field 'alphabet' must contain only strings");
    symbols.push_back(s.get<std::string>());
  }
  try {
    return Alphabet(std::move(symbols));
  } catch (const InvalidArgument& e) {
    throw ParseError(std::string("field 'alphabet': ") + e.what());
  }
}

Hmm parse_hmm(const Json& doc) {
  Alphabet alphabet = alphabet_field(doc);
  Vector initial = vector_field(field(doc, "initial"), "initial");
  const auto m = initial.size();
  if (m == 0) throw ParseError("field 'initial' must be non-empty");
  Matrix transition = matrix_field(field(doc, "transition"), "transition", m, m);
  Matrix emission =
      matrix_field(field(doc, "emission"), "emission", m, static_cast<Eigen::Index>(alphabet.size()));
  return Hmm{std::move(alphabet), std::move(transition), std::move(emission), std::move(initial)};
}

MatrixOom parse_oom(const Json& doc) {
  Alphabet alphabet = alphabet_field(doc);
  const auto& dim_json = field(doc, "dim");
  if (!dim_json.is_number_integer() || dim_json.get<long long>() <= 0)
    throw ParseError("field 'dim' must be a positive integer");
  const auto m = static_cast<Eigen::Index>(dim_json.get<long long>());
  const auto& tau_json = field(doc, "tau");
  if (!tau_json.is_object()) throw ParseError("field 'tau' must be an object mapping symbols to matrices");
  for (const auto& [key, value] : tau_json.items())
    if (!alphabet.contains(key)) throw ParseError("field 'tau' has entry for unknown symbol '" + key + "'");
  std::vector<Matrix> tau;
  for (const auto& s : alphabet.symbols()) {
    auto it = tau_json.find(s);
    if (it == tau_json.end()) throw ParseError("field 'tau' is missing symbol '" + s + "'");
    tau.push_back(matrix_field(*it, "tau." + s, m, m));
  }
  RowVector sigma = vector_field(field(doc, "sigma"), "sigma", m).transpose();
  Vector w_eps = vector_field(field(doc, "w_eps"), "w_eps", m);
  try {
    return MatrixOom(std::move(alphabet), std::move(tau), std::move(sigma), std::move(w_eps));
  } catch (const InvalidModel& e) {
    throw ParseError(e.what());
  }
}

nlohmann::ordered_json to_rows(const Matrix& x) {
  auto rows = nlohmann::ordered_json::array();
  for (Eigen::Index i = 0; i < x.rows(); ++i) {
    auto row = nlohmann::ordered_json::array();
    for (Eigen::Index j = 0; j < x.cols(); ++j) row.push_back(x(i, j));
    rows.push_back(std::move(row));
  }
  return rows;
}

template <class V>
nlohmann::ordered_json to_list(const V& v) {
  auto out = nlohmann::ordered_json::array();
  for (Eigen::Index i = 0; i < v.size(); ++i) out.push_back(v(i));
  return out;
}

}  // namespace

ModelSpec parse_model(std::string_view json_text) {
  Json doc;
  try {
    doc = Json::parse(json_text);
  } catch (const Json::parse_error& e) {
    throw ParseError(std::string("invalid JSON: ") + e.what());
  }
  if (!doc.is_object()) throw ParseError("model document must be a JSON object");
  const auto& type = field(doc, "type");
  if (!type.is_string()) throw ParseError("field 'type' must be \"hmm\" or \"oom\"");
  const auto t = type.get<std::string>();
  if (t == "hmm") return parse_hmm(doc);
  if (t == "oom") return parse_oom(doc);
  throw ParseError("field 'type' must be \"hmm\" or \"oom\", got \"" + t + "\"");
}

ModelSpec load_model_file(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw IoError("cannot open model file '" + path.string() + "'");
  std::ostringstream buffer;
  buffer << in.rdbuf();
  if (in.bad()) throw IoError("cannot read model file '" + path.string() + "'");
  return parse_model(buffer.str());
}

MatrixOom to_oom(const ModelSpec& spec) {
  if (const auto* h = std::get_if<Hmm>(&spec)) return hmm_to_oom(*h);
  return std::get<MatrixOom>(spec);
}

std::string to_json(const Hmm& h) {
  nlohmann::ordered_json doc;
  doc["type"] = "hmm";
  doc["alphabet"] = h.alphabet.symbols();
  doc["transition"] = to_rows(h.transition);
  doc["emission"] = to_rows(h.emission);
  doc["initial"] = to_list(h.initial);
  return doc.dump(2) + "\n";
}

std::string to_json(const MatrixOom& m) {
  nlohmann::ordered_json doc;
  doc["type"] = "oom";
  doc["alphabet"] = m.alphabet().symbols();
  doc["dim"] = m.dim();
  nlohmann::ordered_json tau;
  for (std::uint32_t a = 0; a < m.alphabet().size(); ++a)
    tau[m.alphabet().symbols()[a]] = to_rows(m.tau(Symbol{a}));
  doc["tau"] = std::move(tau);
  doc["sigma"] = to_list(m.sigma());
  doc["w_eps"] = to_list(m.w_eps());
  return doc.dump(2) + "\n";
}

}  // namespace oom
