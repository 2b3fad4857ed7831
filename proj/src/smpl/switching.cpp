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

#include <string>
#include <vector>

#include "mpstab/rng.hpp"
#include "mpstab/smpl.hpp"

namespace mpstab {

std::vector<const Automaton::Transition*> Automaton::outgoing(std::size_t state) const {
  std::vector<const Transition*> out;
  for (const auto& t : transitions)
    if (t.from == state) out.push_back(&t);
  return out;
}

bool Automaton::accepts(const std::vector<std::size_t>& word) const {
  std::vector<bool> current(states.size(), false);
  for (std::size_t s : initial) current.at(s) = true;
  for (std::size_t mode : word) {
    std::vector<bool> next(states.size(), false);
    bool any = false;
    for (const auto& t : transitions) {
      if (t.mode == mode && current[t.from]) {
        next[t.to] = true;
        any = true;
      }
    }
    if (!any) return false;
    current = std::move(next);
  }
  return true;
}

void Automaton::check_no_dead_states() const {
  if (initial.empty()) throw GenerationError("automaton has no initial state");
  std::vector<bool> seen(states.size(), false);
  std::vector<std::size_t> todo(initial.begin(), initial.end());
  for (std::size_t s : initial) seen.at(s) = true;
  while (!todo.empty()) {
    const std::size_t s = todo.back();
    todo.pop_back();
    const auto out = outgoing(s);
    if (out.empty())
      throw GenerationError("automaton state '" + states[s] +
                            "' is reachable but has no outgoing transition");
    for (const auto* t : out) {
      if (!seen.at(t->to)) {
        seen[t->to] = true;
        todo.push_back(t->to);
      }
    }
  }
}

namespace {

struct Generator {
  std::size_t length;
  SplitMix64 rng;

  std::vector<std::size_t> operator()(const ArbitrarySwitching& p) {
    if (p.mode_count == 0) throw ArgumentError("arbitrary switching needs at least one mode");
    std::vector<std::size_t> out(length);
    for (auto& l : out) l = static_cast<std::size_t>(rng.below(p.mode_count));
    return out;
  }

  std::vector<std::size_t> operator()(const PeriodicSwitching& p) {
    if (p.pattern.empty()) throw ArgumentError("periodic switching needs a non-empty pattern");
    std::vector<std::size_t> out(length);
    for (std::size_t k = 0; k < length; ++k) out[k] = p.pattern[k % p.pattern.size()];
    return out;
  }

  std::vector<std::size_t> operator()(const AutomatonSwitching& p) {
    const Automaton& a = p.automaton;
    a.check_no_dead_states();
    std::size_t state = a.initial[rng.below(a.initial.size())];
    std::vector<std::size_t> out;
    out.reserve(length);
    for (std::size_t k = 0; k < length; ++k) {
      const auto enabled = a.outgoing(state);
      const auto* t = enabled[rng.below(enabled.size())];
      out.push_back(t->mode);
      state = t->to;
    }
    return out;
  }
};

}  // namespace

std::vector<std::size_t> gen_switching(const SwitchingPolicy& policy, std::size_t length,
                                       std::uint64_t seed) {
  return std::visit(Generator{length, SplitMix64(seed)}, policy);
}

}  // namespace mpstab
