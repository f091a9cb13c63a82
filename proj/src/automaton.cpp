// Copyright 2026 The gkat authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "gkat/automaton.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <json.hpp>

#include "gkat/errors.hpp"

namespace gkat {

using nlohmann::json;

const State* Cell::target(ActionId p) const {
  auto it = std::lower_bound(
      moves.begin(), moves.end(), p,
      [](const std::pair<ActionId, State>& m, ActionId x) {
        return m.first < x;
      });
  if (it == moves.end() || it->first != p) return nullptr;
  return &it->second;
}

Automaton::Automaton(UniversePtr universe, State initial,
                     std::vector<std::vector<Cell>> cells,
                     std::vector<std::string> labels)
    : universe_(std::move(universe)),
      initial_(initial),
      cells_(std::move(cells)),
      labels_(std::move(labels)) {
  const std::size_t n = cells_.size();
  const std::size_t atoms = universe_->atom_count();
  if (initial_ >= n) throw Error("initial state out of range");
  if (!labels_.empty() && labels_.size() != n) {
    throw Error("label count does not match state count");
  }
  for (std::size_t s = 0; s < n; ++s) {
    if (cells_[s].size() != atoms) {
      throw Error("state " + std::to_string(s) +
                  " does not have one cell per atom");
    }
    for (const Cell& c : cells_[s]) {
      for (std::size_t i = 0; i < c.moves.size(); ++i) {
        if (c.moves[i].second >= n) {
          throw Error("move target out of range in state " +
                      std::to_string(s));
        }
        if (i > 0 && c.moves[i - 1].first >= c.moves[i].first) {
          throw Error("moves of state " + std::to_string(s) +
                      " are not sorted by distinct actions");
        }
      }
    }
  }
  // Forward reachability from the initial state.
  reachable_.assign(n, false);
  std::deque<State> queue{initial_};
  reachable_[initial_] = true;
  reachable_count_ = 1;
  while (!queue.empty()) {
    State s = queue.front();
    queue.pop_front();
    for (const Cell& c : cells_[s]) {
      for (const auto& [p, t] : c.moves) {
        if (!reachable_[t]) {
          reachable_[t] = true;
          ++reachable_count_;
          queue.push_back(t);
        }
      }
    }
  }
}

bool Automaton::deterministic_per_atom() const {
  for (const auto& row : cells_) {
    for (const Cell& c : row) {
      if (c.moves.size() > 1) return false;
      if (c.accept && !c.moves.empty()) return false;
    }
  }
  return true;
}

bool accepts(const Automaton& a, State from, const GuardedString& w) {
  State s = from;
  for (std::size_t i = 0; i < w.actions.size(); ++i) {
    const State* t = a.cell(s, w.atoms[i]).target(w.actions[i]);
    if (t == nullptr) return false;
    s = *t;
  }
  return a.cell(s, w.atoms.back()).accept;
}

std::vector<bool> live_states(const Automaton& a) {
  const std::size_t n = a.state_count();
  // Reverse edges, then close backwards from the accepting states.
  std::vector<std::vector<State>> preds(n);
  std::vector<bool> live(n, false);
  std::deque<State> queue;
  for (State s = 0; s < n; ++s) {
    bool accepting = false;
    for (Atom atom = 0; atom < a.atom_count(); ++atom) {
      const Cell& c = a.cell(s, atom);
      if (c.accept) accepting = true;
      for (const auto& [p, t] : c.moves) preds[t].push_back(s);
    }
    if (accepting) {
      live[s] = true;
      queue.push_back(s);
    }
  }
  while (!queue.empty()) {
    State s = queue.front();
    queue.pop_front();
    for (State q : preds[s]) {
      if (!live[q]) {
        live[q] = true;
        queue.push_back(q);
      }
    }
  }
  return live;
}

Automaton normalize_live(const Automaton& a) {
  std::vector<bool> live = live_states(a);
  std::vector<std::vector<Cell>> cells(a.state_count());
  for (State s = 0; s < a.state_count(); ++s) {
    cells[s].resize(a.atom_count());
    for (Atom atom = 0; atom < a.atom_count(); ++atom) {
      const Cell& c = a.cell(s, atom);
      Cell& out = cells[s][atom];
      out.accept = c.accept;
      for (const auto& m : c.moves) {
        if (live[m.second]) out.moves.push_back(m);
      }
    }
  }
  return Automaton(a.universe_ptr(), a.initial(), std::move(cells),
                   a.labels());
}

namespace {

std::string dot_escape(const std::string& s) {
  std::string out;
  for (char c : s) {
    if (c == '"' || c == '\\') out += '\\';
    out += c;
  }
  return out;
}

}  // namespace

std::string to_dot(const Automaton& a) {
  const Universe& u = a.universe();
  std::string out = "digraph automaton {\n  rankdir=LR;\n";
  out += "  __start [shape=point, label=\"\"];\n";
  out += "  __start -> q" + std::to_string(a.initial()) + ";\n";
  for (State s = 0; s < a.state_count(); ++s) {
    std::vector<Atom> accepted;
    for (Atom atom = 0; atom < a.atom_count(); ++atom) {
      if (a.cell(s, atom).accept) accepted.push_back(atom);
    }
    // Escape per component: the "\n" between the name and the acceptance
    // list is an intentional DOT line break and must survive verbatim.
    std::string label = "q" + std::to_string(s);
    if (!a.labels().empty() && !a.labels()[s].empty()) {
      label += ": " + dot_escape(a.labels()[s]);
    }
    if (!accepted.empty()) {
      label += "\\naccepts: ";
      for (std::size_t i = 0; i < accepted.size(); ++i) {
        if (i > 0) label += ",";
        label += dot_escape(render_atom(accepted[i], u));
      }
    }
    out += "  q" + std::to_string(s) + " [shape=" +
           (accepted.empty() ? "circle" : "doublecircle") + ", label=\"" +
           label + "\"];\n";
    // One edge per (action, target), carrying every atom that takes it.
    std::map<std::pair<ActionId, State>, std::vector<Atom>> edges;
    for (Atom atom = 0; atom < a.atom_count(); ++atom) {
      for (const auto& m : a.cell(s, atom).moves) {
        edges[m].push_back(atom);
      }
    }
    for (const auto& [edge, atoms] : edges) {
      std::string elabel;
      for (std::size_t i = 0; i < atoms.size(); ++i) {
        if (i > 0) elabel += ",";
        elabel += render_atom(atoms[i], u);
      }
      elabel += "|" + u.action_name(edge.first);
      out += "  q" + std::to_string(s) + " -> q" +
             std::to_string(edge.second) + " [label=\"" + dot_escape(elabel) +
             "\"];\n";
    }
  }
  out += "}\n";
  return out;
}

std::string to_json(const Automaton& a) {
  const Universe& u = a.universe();
  json j;
  j["tests"] = u.tests();
  j["actions"] = u.actions();
  j["initial"] = a.initial();
  json states = json::array();
  for (State s = 0; s < a.state_count(); ++s) {
    json outcomes = json::array();
    for (Atom atom = 0; atom < a.atom_count(); ++atom) {
      const Cell& c = a.cell(s, atom);
      if (c.is_reject()) continue;
      json cell;
      cell["atom"] = render_atom(atom, u);
      if (c.accept && c.moves.empty()) {
        cell["accept"] = true;
      } else if (!c.accept && c.moves.size() == 1) {
        cell["step"] =
            json::array({u.action_name(c.moves[0].first), c.moves[0].second});
      } else {
        if (c.accept) cell["accept"] = true;
        json steps = json::array();
        for (const auto& [p, t] : c.moves) {
          steps.push_back(json::array({u.action_name(p), t}));
        }
        cell["steps"] = std::move(steps);
      }
      outcomes.push_back(std::move(cell));
    }
    json state;
    state["outcomes"] = std::move(outcomes);
    if (!a.labels().empty() && !a.labels()[s].empty()) {
      state["label"] = a.labels()[s];
    }
    states.push_back(std::move(state));
  }
  j["states"] = std::move(states);
  return j.dump(2);
}

Automaton automaton_from_json(std::string_view text) {
  json j;
  try {
    j = json::parse(text);
  } catch (const json::parse_error& e) {
    throw JsonFormatError(std::string("invalid automaton JSON: ") + e.what());
  }
  if (!j.is_object() || !j.contains("tests") || !j.contains("actions") ||
      !j.contains("states") || !j["states"].is_array()) {
    throw JsonFormatError(
        "automaton JSON needs 'tests', 'actions' and 'states'");
  }
  std::vector<std::string> tests, actions;
  try {
    tests = j["tests"].get<std::vector<std::string>>();
    actions = j["actions"].get<std::vector<std::string>>();
  } catch (const json::exception&) {
    throw JsonFormatError("'tests' and 'actions' must be string arrays");
  }
  auto universe = std::make_shared<const Universe>(
      std::move(tests), std::move(actions), Universe::kMaxTestsHard);

  const std::size_t n = j["states"].size();
  State initial = 0;
  if (j.contains("initial")) {
    if (!j["initial"].is_number_unsigned() ||
        j["initial"].get<std::size_t>() >= n) {
      throw JsonFormatError("'initial' must index a state");
    }
    initial = j["initial"].get<State>();
  }
  auto parse_target = [&](const json& pair) -> std::pair<ActionId, State> {
    if (!pair.is_array() || pair.size() != 2 || !pair[0].is_string() ||
        !pair[1].is_number_unsigned()) {
      throw JsonFormatError("steps must be [action, state] pairs");
    }
    auto p = universe->action_id(pair[0].get<std::string>());
    if (!p) {
      throw JsonFormatError("unknown action '" + pair[0].get<std::string>() +
                            "' in step");
    }
    std::size_t t = pair[1].get<std::size_t>();
    if (t >= n) throw JsonFormatError("step target out of range");
    return {*p, static_cast<State>(t)};
  };

  std::vector<std::vector<Cell>> cells(n);
  std::vector<std::string> labels;
  bool any_label = false;
  std::vector<std::string> label_buf(n);
  for (std::size_t s = 0; s < n; ++s) {
    const json& state = j["states"][s];
    if (!state.is_object() || !state.contains("outcomes") ||
        !state["outcomes"].is_array()) {
      throw JsonFormatError("each state needs an 'outcomes' array");
    }
    if (state.contains("label")) {
      if (!state["label"].is_string()) {
        throw JsonFormatError("state 'label' must be a string");
      }
      label_buf[s] = state["label"].get<std::string>();
      any_label = true;
    }
    cells[s].resize(universe->atom_count());
    std::vector<bool> seen(universe->atom_count(), false);
    for (const json& cell : state["outcomes"]) {
      if (!cell.is_object() || !cell.contains("atom") ||
          !cell["atom"].is_string()) {
        throw JsonFormatError("each outcome needs an 'atom' string");
      }
      Atom atom;
      try {
        atom = parse_atom(cell["atom"].get<std::string>(), *universe);
      } catch (const Error& e) {
        throw JsonFormatError(e.what());
      }
      if (seen[atom]) {
        throw JsonFormatError("state " + std::to_string(s) +
                              " lists atom '" +
                              cell["atom"].get<std::string>() + "' twice");
      }
      seen[atom] = true;
      Cell& out = cells[s][atom];
      if (cell.contains("accept")) {
        if (!cell["accept"].is_boolean()) {
          throw JsonFormatError("'accept' must be a boolean");
        }
        out.accept = cell["accept"].get<bool>();
      }
      if (cell.contains("step") && cell.contains("steps")) {
        throw JsonFormatError("an outcome cannot have both 'step' and "
                              "'steps'");
      }
      if (cell.contains("step")) {
        out.moves.push_back(parse_target(cell["step"]));
      } else if (cell.contains("steps")) {
        if (!cell["steps"].is_array()) {
          throw JsonFormatError("'steps' must be an array");
        }
        for (const json& pair : cell["steps"]) {
          out.moves.push_back(parse_target(pair));
        }
        std::sort(out.moves.begin(), out.moves.end());
        for (std::size_t i = 1; i < out.moves.size(); ++i) {
          if (out.moves[i - 1].first == out.moves[i].first) {
            throw JsonFormatError(
                "two steps on the same action in one outcome");
          }
        }
      }
    }
  }
  if (any_label) labels = std::move(label_buf);
  return Automaton(std::move(universe), initial, std::move(cells),
                   std::move(labels));
}

}  // namespace gkat
