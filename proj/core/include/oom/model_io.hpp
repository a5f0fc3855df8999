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

#include <filesystem>
#include <string>
#include <string_view>
#include <variant>

#include "oom/hmm.hpp"
#include "oom/matrix_oom.hpp"

namespace oom {

/// Contents of a model file before conversion to operator form.
using ModelSpec = std::variant<Hmm, MatrixOom>;

/// Parses the JSON model format:
///
///   {"type": "hmm", "alphabet": [...], "transition": [[...]],
///    "emission": [[...]], "initial": [...]}
///   {"type": "oom", "alphabet": [...], "dim": m,
///    "tau": {"a": [[...]], ...}, "sigma": [...], "w_eps": [...]}
///
/// Throws ParseError naming the offending field.
ModelSpec parse_model(std::string_view json_text);

/// Throws IoError if the file cannot be read, otherwise as parse_model.
ModelSpec load_model_file(const std::filesystem::path& path);

/// HMMs go through hmm_to_oom (and may throw InvalidModel).
MatrixOom to_oom(const ModelSpec& spec);

std::string to_json(const Hmm& h);
std::string to_json(const MatrixOom& m);

}  // namespace oom
