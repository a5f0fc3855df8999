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

#include "oom/alphabet.hpp"
#include "oom/cylinder.hpp"
#include "oom/embedding.hpp"
#include "oom/enumeration.hpp"
#include "oom/errors.hpp"
#include "oom/future_function.hpp"
#include "oom/hmm.hpp"
#include "oom/matrix_oom.hpp"
#include "oom/model_io.hpp"
#include "oom/partition.hpp"
