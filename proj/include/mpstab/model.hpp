// Copyright (c) 2026 The mpstab Authors. All Rights Reserved.
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

#include <cstddef>
#include <cstdint>
#include <filesystem>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "json.hpp"
#include "mpstab/matrix.hpp"
#include "mpstab/smpl.hpp"

namespace mpstab {

struct NamedMatrix {
  std::string name;
  Matrix matrix;
  bool operator==(const NamedMatrix&) const = default;
};

struct SimulationBlock {
  std::optional<Vector> x0;
  std::optional<std::size_t> length;
  std::optional<std::uint64_t> seed;
  /// "random", "periodic" or "automaton".
  std::optional<std::string> policy;
  /// Mode names, for the periodic policy.
  std::vector<std::string> pattern;
  bool operator==(const SimulationBlock&) const = default;
};

/// JSON model file. Matrix entries are numbers or the string "-inf" (ε).
///
///   { "dimension": 2,
///     "modes": [ {"name": "1", "matrix": [[4, "-inf"], [1, 1]]}, ... ],
///     "candidate_Q": [ {"name": "Q1", "matrix": [[4, 3], [1, 1]]} ],
///     "alpha": 0, "beta": 4,
///     "switching_automaton": { "states": ["1", "2"], "initial": ["1"],
///        "transitions": [ {"from": "1", "mode": "2", "to": "2"}, ... ] },
///     "simulation": { "x0": [0, 0], "length": 1000, "seed": 7,
///                     "policy": "random" } }
struct ModelFile {
  std::size_t dimension = 0;
  std::vector<NamedMatrix> modes;
  std::vector<NamedMatrix> candidate_q;
  std::optional<double> alpha;
  std::optional<double> beta;
  std::optional<Automaton> automaton;
  std::optional<SimulationBlock> simulation;

  SmplSystem system() const;
  std::vector<Matrix> candidate_matrices() const;
  std::vector<std::string> mode_names() const;
  /// 0-based index of a mode name; throws ModelError when unknown.
  std::size_t mode_index(std::string_view name) const;

  bool operator==(const ModelFile& o) const;
};

/// Throws ModelError with a line:column (syntax) or JSON-path (semantic)
/// location.
ModelFile parse_model(std::string_view text);
ModelFile load_model(const std::filesystem::path& path);

nlohmann::ordered_json model_to_json(const ModelFile& model);
std::string serialize_model(const ModelFile& model);

/// Shared JSON encodings: integers print without a fraction, ε as "-inf".
nlohmann::ordered_json scalar_to_json(double v);
nlohmann::ordered_json matrix_to_json(const Matrix& m);
nlohmann::ordered_json vector_to_json(const Vector& v);
Matrix matrix_from_json(const nlohmann::json& j, const std::string& path);
Vector vector_from_json(const nlohmann::json& j, const std::string& path);

}  // namespace mpstab
