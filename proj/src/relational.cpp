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

#include "gkat/relational.hpp"

#include <json.hpp>

#include "gkat/errors.hpp"

namespace gkat {

using nlohmann::json;

Interpretation::Interpretation(std::vector<std::string> states,
                               bool functional,
                               std::map<std::string, std::set<StateIdx>> tau,
                               std::map<std::string, Relation> sigma)
    : states_(std::move(states)),
      functional_(functional),
      tau_(std::move(tau)),
      sigma_(std::move(sigma)) {
  const StateIdx n = static_cast<StateIdx>(states_.size());
  for (const auto& [name, set] : tau_) {
    for (StateIdx s : set) {
      if (s >= n) {
        throw JsonFormatError("test '" + name +
                              "' mentions an out-of-range state");
      }
    }
  }
  for (const auto& [name, rel] : sigma_) {
    for (const auto& [from, to] : rel) {
      if (from >= n || to >= n) {
        throw JsonFormatError("action '" + name +
                              "' mentions an out-of-range state");
      }
    }
    if (functional_ && !is_partial_function(rel)) {
      throw FunctionalityError("interpretation is declared functional but "
                               "action '" +
                               name + "' maps a state to two successors");
    }
  }
}

const std::set<StateIdx>& Interpretation::test_states(
    const std::string& name) const {
  auto it = tau_.find(name);
  if (it == tau_.end()) {
    throw MissingSymbolError("interpretation does not cover test '" + name +
                             "'");
  }
  return it->second;
}

const Relation& Interpretation::action_relation(
    const std::string& name) const {
  auto it = sigma_.find(name);
  if (it == sigma_.end()) {
    throw MissingSymbolError("interpretation does not cover action '" + name +
                             "'");
  }
  return it->second;
}

Interpretation Interpretation::from_json(std::string_view text) {
  json j;
  try {
    j = json::parse(text);
  } catch (const json::parse_error& e) {
    throw JsonFormatError(std::string("invalid interpretation JSON: ") +
                          e.what());
  }
  if (!j.is_object() || !j.contains("states") || !j["states"].is_array()) {
    throw JsonFormatError(
        "interpretation JSON must be an object with a 'states' array");
  }
  std::vector<std::string> states;
  std::map<std::string, StateIdx> index;
  for (const auto& s : j["states"]) {
    if (!s.is_string()) {
      throw JsonFormatError("'states' entries must be strings");
    }
    std::string name = s.get<std::string>();
    if (!index.emplace(name, static_cast<StateIdx>(states.size())).second) {
      throw JsonFormatError("duplicate state '" + name + "'");
    }
    states.push_back(std::move(name));
  }
  auto lookup = [&](const json& s, const char* where) -> StateIdx {
    if (!s.is_string()) {
      throw JsonFormatError(std::string(where) + " must name states");
    }
    auto it = index.find(s.get<std::string>());
    if (it == index.end()) {
      throw JsonFormatError("unknown state '" + s.get<std::string>() +
                            "' in " + where);
    }
    return it->second;
  };
  bool functional = false;
  if (j.contains("functional")) {
    if (!j["functional"].is_boolean()) {
      throw JsonFormatError("'functional' must be a boolean");
    }
    functional = j["functional"].get<bool>();
  }
  std::map<std::string, std::set<StateIdx>> tau;
  if (j.contains("tau")) {
    if (!j["tau"].is_object()) {
      throw JsonFormatError("'tau' must be an object");
    }
    for (const auto& [name, arr] : j["tau"].items()) {
      if (!arr.is_array()) {
        throw JsonFormatError("tau entry '" + name + "' must be an array");
      }
      std::set<StateIdx>& set = tau[name];
      for (const auto& s : arr) set.insert(lookup(s, "tau"));
    }
  }
  std::map<std::string, Relation> sigma;
  if (j.contains("sigma")) {
    if (!j["sigma"].is_object()) {
      throw JsonFormatError("'sigma' must be an object");
    }
    for (const auto& [name, arr] : j["sigma"].items()) {
      if (!arr.is_array()) {
        throw JsonFormatError("sigma entry '" + name + "' must be an array");
      }
      Relation& rel = sigma[name];
      for (const auto& pair : arr) {
        if (!pair.is_array() || pair.size() != 2) {
          throw JsonFormatError("sigma entry '" + name +
                                "' must contain [from, to] pairs");
        }
        rel.emplace(lookup(pair[0], "sigma"), lookup(pair[1], "sigma"));
      }
    }
  }
  return Interpretation(std::move(states), functional, std::move(tau),
                        std::move(sigma));
}

std::string Interpretation::to_json() const {
  json j;
  j["states"] = states_;
  j["functional"] = functional_;
  json tau = json::object();
  for (const auto& [name, set] : tau_) {
    json arr = json::array();
    for (StateIdx s : set) arr.push_back(states_[s]);
    tau[name] = std::move(arr);
  }
  j["tau"] = std::move(tau);
  json sigma = json::object();
  for (const auto& [name, rel] : sigma_) {
    json arr = json::array();
    for (const auto& [from, to] : rel) {
      arr.push_back(json::array({states_[from], states_[to]}));
    }
    sigma[name] = std::move(arr);
  }
  j["sigma"] = std::move(sigma);
  return j.dump(2);
}

bool is_partial_function(const Relation& r) {
  // Pairs are sorted by first component, so duplicates of a source are
  // adjacent.
  const std::pair<StateIdx, StateIdx>* prev = nullptr;
  for (const auto& p : r) {
    if (prev && prev->first == p.first) return false;
    prev = &p;
  }
  return true;
}

namespace {

Relation identity(StateIdx n) {
  Relation r;
  for (StateIdx s = 0; s < n; ++s) r.emplace(s, s);
  return r;
}

bool state_satisfies(const BExpPtr& b, StateIdx s,
                     const Interpretation& interp, const Universe& u) {
  switch (b->kind()) {
    case BKind::kZero:
      return false;
    case BKind::kOne:
      return true;
    case BKind::kTest:
      return interp.test_states(u.test_name(b->test())).count(s) != 0;
    case BKind::kNot:
      return !state_satisfies(b->left(), s, interp, u);
    case BKind::kOr:
      return state_satisfies(b->left(), s, interp, u) ||
             state_satisfies(b->right(), s, interp, u);
    case BKind::kAnd:
      return state_satisfies(b->left(), s, interp, u) &&
             state_satisfies(b->right(), s, interp, u);
  }
  return false;
}

Relation compose(const Relation& a, const Relation& b) {
  std::map<StateIdx, std::vector<StateIdx>> by_first;
  for (const auto& [from, to] : b) by_first[from].push_back(to);
  Relation out;
  for (const auto& [from, mid] : a) {
    auto it = by_first.find(mid);
    if (it == by_first.end()) continue;
    for (StateIdx to : it->second) out.emplace(from, to);
  }
  return out;
}

}  // namespace

Relation rel_sem(const KatExpPtr& e, const Interpretation& interp,
                 const Universe& u) {
  const StateIdx n = static_cast<StateIdx>(interp.states().size());
  switch (e->kind()) {
    case KKind::kTest: {
      Relation r;
      for (StateIdx s = 0; s < n; ++s) {
        if (state_satisfies(e->test(), s, interp, u)) r.emplace(s, s);
      }
      return r;
    }
    case KKind::kAct:
      return interp.action_relation(u.action_name(e->action()));
    case KKind::kPlus: {
      Relation r = rel_sem(e->left(), interp, u);
      Relation r2 = rel_sem(e->right(), interp, u);
      r.insert(r2.begin(), r2.end());
      return r;
    }
    case KKind::kSeq:
      return compose(rel_sem(e->left(), interp, u),
                     rel_sem(e->right(), interp, u));
    case KKind::kStar: {
      // Reflexive-transitive closure by iterating composition to fixpoint.
      Relation step = rel_sem(e->left(), interp, u);
      Relation acc = identity(n);
      Relation frontier = acc;
      while (true) {
        Relation next = compose(frontier, step);
        std::size_t before = acc.size();
        acc.insert(next.begin(), next.end());
        if (acc.size() == before) break;
        frontier = std::move(next);
      }
      return acc;
    }
  }
  return Relation{};
}

Relation rel_sem_gkat(const GkatExpPtr& e, const Interpretation& interp,
                      const Universe& u) {
  Relation r = rel_sem(embed(e), interp, u);
  if (interp.functional() && !is_partial_function(r)) {
    throw FunctionalityError(
        "program denotes a non-functional relation under a functional "
        "interpretation");
  }
  return r;
}

std::string relation_to_json(const Relation& r,
                             const Interpretation& interp) {
  if (interp.functional()) {
    json obj = json::object();
    for (const auto& [from, to] : r) {
      obj[interp.states()[from]] = interp.states()[to];
    }
    return obj.dump();
  }
  json arr = json::array();
  for (const auto& [from, to] : r) {
    arr.push_back(json::array({interp.states()[from], interp.states()[to]}));
  }
  return arr.dump();
}

}  // namespace gkat
