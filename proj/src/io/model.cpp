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

#include "mpstab/model.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <set>
#include <sstream>

namespace mpstab {

using nlohmann::json;
using nlohmann::ordered_json;

namespace {

[[noreturn]] void fail(const std::string& path, const std::string& what) {
  throw ModelError(what, path);
}

std::string line_col(std::string_view text, std::size_t byte) {
  std::size_t line = 1;
  std::size_t col = 1;
  for (std::size_t i = 0; i < std::min(byte, text.size()); ++i) {
    if (text[i] == '\n') {
      ++line;
      col = 1;
    } else {
      ++col;
    }
  }
  return std::to_string(line) + ":" + std::to_string(col);
}

double entry_from_json(const json& j, const std::string& path) {
  if (j.is_number()) {
    const double v = j.get<double>();
    if (!std::isfinite(v)) fail(path, "entry must be finite or \"-inf\"");
    return v;
  }
  if (j.is_string() && j.get<std::string>() == "-inf") return kEps;
  fail(path, "entry must be a number or the string \"-inf\"");
}

const json& member(const json& obj, const char* key, const std::string& path) {
  auto it = obj.find(key);
  if (it == obj.end()) fail(path, std::string("missing required field \"") + key + "\"");
  return *it;
}

std::string name_from_json(const json& j, const std::string& path) {
  if (!j.is_string()) fail(path, "expected a string");
  return j.get<std::string>();
}

std::vector<NamedMatrix> named_matrices(const json& arr, const std::string& path,
                                        const std::string& default_prefix) {
  if (!arr.is_array() || arr.empty()) fail(path, "expected a non-empty array");
  std::vector<NamedMatrix> out;
  std::set<std::string> names;
  for (std::size_t i = 0; i < arr.size(); ++i) {
    const std::string p = path + "/" + std::to_string(i);
    NamedMatrix nm;
    if (arr[i].is_object()) {
      nm.name = arr[i].contains("name") ? name_from_json(arr[i]["name"], p + "/name")
                                        : default_prefix + std::to_string(i + 1);
      nm.matrix = matrix_from_json(member(arr[i], "matrix", p), p + "/matrix");
    } else {
      nm.name = default_prefix + std::to_string(i + 1);
      nm.matrix = matrix_from_json(arr[i], p);
    }
    if (!names.insert(nm.name).second) fail(p, "duplicate name \"" + nm.name + "\"");
    out.push_back(std::move(nm));
  }
  return out;
}

std::size_t state_index(const std::vector<std::string>& states, const json& j,
                        const std::string& path) {
  const std::string s = name_from_json(j, path);
  auto it = std::find(states.begin(), states.end(), s);
  if (it == states.end()) fail(path, "unknown automaton state \"" + s + "\"");
  return static_cast<std::size_t>(it - states.begin());
}

}  // namespace

ordered_json scalar_to_json(double v) {
  if (v == kEps) return "-inf";
  if (std::nearbyint(v) == v && std::fabs(v) < 9.0e15) return static_cast<std::int64_t>(v);
  return v;
}

ordered_json matrix_to_json(const Matrix& m) {
  ordered_json rows = ordered_json::array();
  for (std::size_t i = 0; i < m.rows(); ++i) {
    ordered_json row = ordered_json::array();
    for (double v : m.row_raw(i)) row.push_back(scalar_to_json(v));
    rows.push_back(std::move(row));
  }
  return rows;
}

ordered_json vector_to_json(const Vector& v) {
  ordered_json out = ordered_json::array();
  for (double x : v.raw()) out.push_back(scalar_to_json(x));
  return out;
}

Matrix matrix_from_json(const json& j, const std::string& path) {
  if (!j.is_array() || j.empty()) fail(path, "matrix must be a non-empty array of rows");
  std::vector<std::vector<double>> rows;
  for (std::size_t i = 0; i < j.size(); ++i) {
    const std::string p = path + "/" + std::to_string(i);
    if (!j[i].is_array() || j[i].empty()) fail(p, "row must be a non-empty array");
    if (j[i].size() != j[0].size()) fail(p, "ragged matrix row");
    std::vector<double> row;
    for (std::size_t k = 0; k < j[i].size(); ++k)
      row.push_back(entry_from_json(j[i][k], p + "/" + std::to_string(k)));
    rows.push_back(std::move(row));
  }
  return Matrix::from_rows(rows);
}

Vector vector_from_json(const json& j, const std::string& path) {
  if (!j.is_array() || j.empty()) fail(path, "vector must be a non-empty array");
  std::vector<double> v;
  for (std::size_t i = 0; i < j.size(); ++i)
    v.push_back(entry_from_json(j[i], path + "/" + std::to_string(i)));
  return Vector(std::move(v));
}

SmplSystem ModelFile::system() const {
  std::vector<Matrix> m;
  for (const auto& nm : modes) m.push_back(nm.matrix);
  return SmplSystem(std::move(m));
}

std::vector<Matrix> ModelFile::candidate_matrices() const {
  std::vector<Matrix> m;
  for (const auto& nm : candidate_q) m.push_back(nm.matrix);
  return m;
}

std::vector<std::string> ModelFile::mode_names() const {
  std::vector<std::string> out;
  for (const auto& nm : modes) out.push_back(nm.name);
  return out;
}

std::size_t ModelFile::mode_index(std::string_view name) const {
  for (std::size_t i = 0; i < modes.size(); ++i)
    if (modes[i].name == name) return i;
  throw ModelError("unknown mode \"" + std::string(name) + "\"");
}

bool ModelFile::operator==(const ModelFile& o) const {
  auto aut_eq = [](const std::optional<Automaton>& a, const std::optional<Automaton>& b) {
    if (a.has_value() != b.has_value()) return false;
    if (!a) return true;
    if (a->states != b->states || a->initial != b->initial ||
        a->transitions.size() != b->transitions.size())
      return false;
    for (std::size_t i = 0; i < a->transitions.size(); ++i) {
      const auto& x = a->transitions[i];
      const auto& y = b->transitions[i];
      if (x.from != y.from || x.mode != y.mode || x.to != y.to) return false;
    }
    return true;
  };
  return dimension == o.dimension && modes == o.modes && candidate_q == o.candidate_q &&
         alpha == o.alpha && beta == o.beta && aut_eq(automaton, o.automaton) &&
         simulation == o.simulation;
}

ModelFile parse_model(std::string_view text) {
  json root;
  try {
    root = json::parse(text.begin(), text.end());
  } catch (const json::parse_error& e) {
    throw ModelError(e.what(), line_col(text, e.byte == 0 ? 0 : e.byte - 1));
  }
  if (!root.is_object()) fail("", "model must be a JSON object");

  ModelFile m;
  const json& dim = member(root, "dimension", "");
  if (!dim.is_number_unsigned() || dim.get<std::size_t>() == 0)
    fail("/dimension", "dimension must be a positive integer");
  m.dimension = dim.get<std::size_t>();

  m.modes = named_matrices(member(root, "modes", ""), "/modes", "");
  for (std::size_t i = 0; i < m.modes.size(); ++i) {
    const auto& a = m.modes[i].matrix;
    if (a.rows() != m.dimension || a.cols() != m.dimension)
      fail("/modes/" + std::to_string(i), "mode matrix must be " + std::to_string(m.dimension) +
                                              "x" + std::to_string(m.dimension));
  }
  if (root.contains("candidate_Q")) {
    m.candidate_q = named_matrices(root["candidate_Q"], "/candidate_Q", "Q");
    for (std::size_t i = 0; i < m.candidate_q.size(); ++i) {
      const auto& a = m.candidate_q[i].matrix;
      if (a.rows() != m.dimension || a.cols() != m.dimension)
        fail("/candidate_Q/" + std::to_string(i), "matrix must be " +
                                                      std::to_string(m.dimension) + "x" +
                                                      std::to_string(m.dimension));
    }
  }
  for (const char* key : {"alpha", "beta"}) {
    if (!root.contains(key)) continue;
    const json& v = root[key];
    if (!v.is_number()) fail(std::string("/") + key, "must be a number");
    (std::string(key) == "alpha" ? m.alpha : m.beta) = v.get<double>();
  }

  if (root.contains("switching_automaton")) {
    const std::string p = "/switching_automaton";
    const json& a = root["switching_automaton"];
    if (!a.is_object()) fail(p, "must be an object");
    Automaton aut;
    const json& states = member(a, "states", p);
    if (!states.is_array() || states.empty()) fail(p + "/states", "expected a non-empty array");
    for (std::size_t i = 0; i < states.size(); ++i) {
      aut.states.push_back(name_from_json(states[i], p + "/states/" + std::to_string(i)));
      if (std::count(aut.states.begin(), aut.states.end(), aut.states.back()) > 1)
        fail(p + "/states/" + std::to_string(i), "duplicate state name");
    }
    if (a.contains("initial")) {
      const json& init = a["initial"];
      if (!init.is_array() || init.empty()) fail(p + "/initial", "expected a non-empty array");
      for (std::size_t i = 0; i < init.size(); ++i)
        aut.initial.push_back(
            state_index(aut.states, init[i], p + "/initial/" + std::to_string(i)));
    } else {
      for (std::size_t i = 0; i < aut.states.size(); ++i) aut.initial.push_back(i);
    }
    const json& trans = member(a, "transitions", p);
    if (!trans.is_array()) fail(p + "/transitions", "expected an array");
    for (std::size_t i = 0; i < trans.size(); ++i) {
      const std::string tp = p + "/transitions/" + std::to_string(i);
      const json& t = trans[i];
      if (!t.is_object()) fail(tp, "transition must be an object");
      const std::size_t from = state_index(aut.states, member(t, "from", tp), tp + "/from");
      const std::size_t to = state_index(aut.states, member(t, "to", tp), tp + "/to");
      const std::string mode = name_from_json(member(t, "mode", tp), tp + "/mode");
      std::size_t l = 0;
      try {
        l = m.mode_index(mode);
      } catch (const ModelError&) {
        fail(tp + "/mode", "transition label \"" + mode + "\" is not a declared mode");
      }
      aut.transitions.push_back({from, l, to});
    }
    m.automaton = std::move(aut);
  }

  if (root.contains("simulation")) {
    const std::string p = "/simulation";
    const json& s = root["simulation"];
    if (!s.is_object()) fail(p, "must be an object");
    SimulationBlock sb;
    if (s.contains("x0")) {
      sb.x0 = vector_from_json(s["x0"], p + "/x0");
      if (sb.x0->size() != m.dimension) fail(p + "/x0", "x0 length must equal dimension");
    }
    if (s.contains("length")) {
      if (!s["length"].is_number_unsigned()) fail(p + "/length", "must be a non-negative integer");
      sb.length = s["length"].get<std::size_t>();
    }
    if (s.contains("seed")) {
      if (!s["seed"].is_number_unsigned()) fail(p + "/seed", "must be a non-negative integer");
      sb.seed = s["seed"].get<std::uint64_t>();
    }
    if (s.contains("policy")) {
      sb.policy = name_from_json(s["policy"], p + "/policy");
      if (*sb.policy != "random" && *sb.policy != "periodic" && *sb.policy != "automaton")
        fail(p + "/policy", "policy must be random, periodic or automaton");
    }
    if (s.contains("pattern")) {
      const json& pat = s["pattern"];
      if (!pat.is_array()) fail(p + "/pattern", "expected an array of mode names");
      for (std::size_t i = 0; i < pat.size(); ++i) {
        const std::string name = name_from_json(pat[i], p + "/pattern/" + std::to_string(i));
        try {
          m.mode_index(name);
        } catch (const ModelError&) {
          fail(p + "/pattern/" + std::to_string(i), "unknown mode \"" + name + "\"");
        }
        sb.pattern.push_back(name);
      }
    }
    m.simulation = std::move(sb);
  }
  return m;
}

ModelFile load_model(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ModelError("cannot open model file", path.string());
  std::ostringstream ss;
  ss << in.rdbuf();
  try {
    return parse_model(ss.str());
  } catch (const ModelError& e) {
    throw ModelError(e.what(), path.string());
  }
}

ordered_json model_to_json(const ModelFile& model) {
  ordered_json j;
  j["dimension"] = model.dimension;
  auto named = [](const std::vector<NamedMatrix>& v) {
    ordered_json arr = ordered_json::array();
    for (const auto& nm : v) {
      ordered_json o;
      o["name"] = nm.name;
      o["matrix"] = matrix_to_json(nm.matrix);
      arr.push_back(std::move(o));
    }
    return arr;
  };
  j["modes"] = named(model.modes);
  if (!model.candidate_q.empty()) j["candidate_Q"] = named(model.candidate_q);
  if (model.alpha) j["alpha"] = scalar_to_json(*model.alpha);
  if (model.beta) j["beta"] = scalar_to_json(*model.beta);
  if (model.automaton) {
    const Automaton& a = *model.automaton;
    ordered_json o;
    o["states"] = a.states;
    ordered_json init = ordered_json::array();
    for (std::size_t s : a.initial) init.push_back(a.states[s]);
    o["initial"] = std::move(init);
    ordered_json trans = ordered_json::array();
    for (const auto& t : a.transitions) {
      ordered_json tj;
      tj["from"] = a.states[t.from];
      tj["mode"] = model.modes[t.mode].name;
      tj["to"] = a.states[t.to];
      trans.push_back(std::move(tj));
    }
    o["transitions"] = std::move(trans);
    j["switching_automaton"] = std::move(o);
  }
  if (model.simulation) {
    const SimulationBlock& s = *model.simulation;
    ordered_json o = ordered_json::object();
    if (s.x0) o["x0"] = vector_to_json(*s.x0);
    if (s.length) o["length"] = *s.length;
    if (s.seed) o["seed"] = *s.seed;
    if (s.policy) o["policy"] = *s.policy;
    if (!s.pattern.empty()) o["pattern"] = s.pattern;
    j["simulation"] = std::move(o);
  }
  return j;
}

std::string serialize_model(const ModelFile& model) { return model_to_json(model).dump(2) + "\n"; }

}  // namespace mpstab
