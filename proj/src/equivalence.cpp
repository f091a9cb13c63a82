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

#include "gkat/equivalence.hpp"

#include <algorithm>
#include <deque>
#include <json.hpp>
#include <tuple>
#include <unordered_set>

#include "gkat/build.hpp"
#include "gkat/errors.hpp"
#include "gkat/render.hpp"

namespace gkat {

using nlohmann::json;

const char* mode_name(Mode m) {
  switch (m) {
    case Mode::kBisim:
      return "bisim";
    case Mode::kLang:
      return "lang";
    case Mode::kLangInclusion:
      return "incl";
  }
  return "?";
}

namespace {

std::vector<ActionId> move_actions(const Cell& c) {
  std::vector<ActionId> out;
  out.reserve(c.moves.size());
  for (const auto& [p, t] : c.moves) out.push_back(p);
  return out;
}

// Divergence test for one atom. Cells agree when their accept bits match
// and they move on the same action set; matching targets are the walk's
// job, not a divergence.
std::optional<Divergence> classify(const Cell& c1, const Cell& c2, Atom a) {
  if (c1.accept != c2.accept) {
    Divergence d;
    d.kind = Divergence::Kind::kAcceptMismatch;
    d.atom = a;
    d.side = c1.accept ? Divergence::Side::kLeft : Divergence::Side::kRight;
    return d;
  }
  if (c1.moves.size() == c2.moves.size()) {
    bool same = true;
    for (std::size_t i = 0; i < c1.moves.size(); ++i) {
      if (c1.moves[i].first != c2.moves[i].first) {
        same = false;
        break;
      }
    }
    if (same) return std::nullopt;
  }
  Divergence d;
  d.atom = a;
  d.left_actions = move_actions(c1);
  d.right_actions = move_actions(c2);
  if (c1.moves.empty() || c2.moves.empty()) {
    d.kind = Divergence::Kind::kStepVsStop;
    d.side =
        c1.moves.empty() ? Divergence::Side::kLeft : Divergence::Side::kRight;
  } else {
    d.kind = Divergence::Kind::kActionMismatch;
  }
  return d;
}

// Divergence test for inclusion: only behavior of the left that the right
// cannot match counts.
std::optional<Divergence> classify_inclusion(const Cell& c1, const Cell& c2,
                                             Atom a) {
  if (c1.accept && !c2.accept) {
    Divergence d;
    d.kind = Divergence::Kind::kAcceptMismatch;
    d.atom = a;
    d.side = Divergence::Side::kLeft;
    return d;
  }
  for (const auto& [p, t] : c1.moves) {
    if (c2.target(p) == nullptr) {
      Divergence d;
      d.atom = a;
      d.side = Divergence::Side::kRight;
      d.left_actions = {p};
      d.right_actions = move_actions(c2);
      d.kind = c2.moves.empty() ? Divergence::Kind::kStepVsStop
                                : Divergence::Kind::kActionMismatch;
      return d;
    }
  }
  return std::nullopt;
}

class UnionFind {
 public:
  explicit UnionFind(std::size_t n) : parent_(n), rank_(n, 0) {
    for (std::size_t i = 0; i < n; ++i) parent_[i] = i;
  }

  std::size_t find(std::size_t x) {
    while (parent_[x] != x) {
      parent_[x] = parent_[parent_[x]];
      x = parent_[x];
    }
    return x;
  }

  // True when x and y were in different classes.
  bool unite(std::size_t x, std::size_t y) {
    std::size_t rx = find(x), ry = find(y);
    if (rx == ry) return false;
    if (rank_[rx] < rank_[ry]) std::swap(rx, ry);
    parent_[ry] = rx;
    if (rank_[rx] == rank_[ry]) ++rank_[rx];
    return true;
  }

 private:
  std::vector<std::size_t> parent_;
  std::vector<std::uint8_t> rank_;
};

void require_same_universe(const Automaton& a1, const Automaton& a2) {
  if (!a1.universe().same_symbols(a2.universe())) {
    throw UniverseMismatchError(
        "automata being compared declare different universes");
  }
}

// Breadth-first product walk that recovers the minimal witness once the
// union-find walk has established inequivalence. Pairs are visited in
// first-reached order, atoms in numeric order, so the first divergence
// found closes the shortest trace, with ties broken lexicographically.
template <typename Classify>
Witness bfs_witness(const Automaton& a1, State s1, const Automaton& a2,
                    State s2, Classify&& classify_fn) {
  struct Node {
    State x, y;
    std::int64_t parent;
    Atom atom;
    ActionId action;
  };
  std::vector<Node> nodes;
  std::unordered_set<std::uint64_t> visited;
  auto key = [&](State x, State y) {
    return (static_cast<std::uint64_t>(x) << 32) | y;
  };
  std::deque<std::size_t> queue;
  nodes.push_back({s1, s2, -1, 0, 0});
  visited.insert(key(s1, s2));
  queue.push_back(0);

  while (!queue.empty()) {
    std::size_t idx = queue.front();
    queue.pop_front();
    const State x = nodes[idx].x, y = nodes[idx].y;
    for (Atom a = 0; a < a1.atom_count(); ++a) {
      const Cell& c1 = a1.cell(x, a);
      const Cell& c2 = a2.cell(y, a);
      if (auto d = classify_fn(c1, c2, a)) {
        Witness w;
        w.divergence = *d;
        for (std::int64_t i = static_cast<std::int64_t>(idx);
             nodes[i].parent >= 0; i = nodes[i].parent) {
          w.trace.emplace_back(nodes[i].atom, nodes[i].action);
        }
        std::reverse(w.trace.begin(), w.trace.end());
        return w;
      }
      for (const auto& [p, t1] : c1.moves) {
        const State* t2 = c2.target(p);
        if (t2 == nullptr) continue;  // inclusion walk tolerates extras
        if (visited.insert(key(t1, *t2)).second) {
          nodes.push_back({t1, *t2, static_cast<std::int64_t>(idx), a, p});
          queue.push_back(nodes.size() - 1);
        }
      }
    }
  }
  throw Error("witness walk found no divergence; checker bug");
}

}  // namespace

Verdict bisim(const Automaton& a1, State s1, const Automaton& a2, State s2,
              CheckStats* stats) {
  require_same_universe(a1, a2);
  CheckStats local;
  CheckStats& st = stats ? *stats : local;

  const std::size_t n1 = a1.state_count();
  UnionFind uf(n1 + a2.state_count());
  std::deque<std::pair<State, State>> queue;
  uf.unite(s1, n1 + s2);
  queue.emplace_back(s1, s2);
  bool diverged = false;

  while (!queue.empty() && !diverged) {
    auto [x, y] = queue.front();
    queue.pop_front();
    ++st.pairs_explored;
    for (Atom a = 0; a < a1.atom_count() && !diverged; ++a) {
      ++st.outcome_comparisons;
      const Cell& c1 = a1.cell(x, a);
      const Cell& c2 = a2.cell(y, a);
      if (classify(c1, c2, a)) {
        diverged = true;
        break;
      }
      // Same action sets; recurse on target pairs not yet identified.
      for (std::size_t i = 0; i < c1.moves.size(); ++i) {
        State t1 = c1.moves[i].second;
        State t2 = c2.moves[i].second;
        if (uf.unite(t1, n1 + t2)) queue.emplace_back(t1, t2);
      }
    }
  }

  Verdict v;
  v.mode = Mode::kBisim;
  v.equivalent = !diverged;
  if (diverged) {
    v.witness = bfs_witness(a1, s1, a2, s2,
                            [](const Cell& c1, const Cell& c2, Atom a) {
                              return classify(c1, c2, a);
                            });
  }
  return v;
}

Verdict language_inclusion(const Automaton& a1, State s1, const Automaton& a2,
                           State s2, CheckStats* stats) {
  require_same_universe(a1, a2);
  CheckStats local;
  CheckStats& st = stats ? *stats : local;

  // Simulation on deterministic automata is a plain product reachability
  // question, and the breadth-first walk already yields minimal witnesses.
  std::unordered_set<std::uint64_t> visited;
  auto key = [](State x, State y) {
    return (static_cast<std::uint64_t>(x) << 32) | y;
  };
  std::deque<std::pair<State, State>> queue;
  visited.insert(key(s1, s2));
  queue.emplace_back(s1, s2);
  bool diverged = false;
  while (!queue.empty() && !diverged) {
    auto [x, y] = queue.front();
    queue.pop_front();
    ++st.pairs_explored;
    for (Atom a = 0; a < a1.atom_count() && !diverged; ++a) {
      ++st.outcome_comparisons;
      const Cell& c1 = a1.cell(x, a);
      const Cell& c2 = a2.cell(y, a);
      if (classify_inclusion(c1, c2, a)) {
        diverged = true;
        break;
      }
      for (const auto& [p, t1] : c1.moves) {
        const State* t2 = c2.target(p);
        if (t2 && visited.insert(key(t1, *t2)).second) {
          queue.emplace_back(t1, *t2);
        }
      }
    }
  }

  Verdict v;
  v.mode = Mode::kLangInclusion;
  v.equivalent = !diverged;
  if (diverged) {
    v.witness = bfs_witness(a1, s1, a2, s2,
                            [](const Cell& c1, const Cell& c2, Atom a) {
                              return classify_inclusion(c1, c2, a);
                            });
  }
  return v;
}

namespace {

// Shortest run from s to an acceptance, as the guarded-string suffix
// "atom (action atom)*". Requires a live s, which normalization guarantees
// for every move target.
void append_completion(const Automaton& a, State s, GuardedString* gs) {
  struct Node {
    State state;
    std::int64_t parent;
    Atom atom;
    ActionId action;
  };
  std::vector<Node> nodes;
  std::vector<bool> visited(a.state_count(), false);
  std::deque<std::size_t> queue;
  nodes.push_back({s, -1, 0, 0});
  visited[s] = true;
  queue.push_back(0);
  while (!queue.empty()) {
    std::size_t idx = queue.front();
    queue.pop_front();
    State x = nodes[idx].state;
    for (Atom at = 0; at < a.atom_count(); ++at) {
      if (a.cell(x, at).accept) {
        // Rebuild the path, then lay it down in order.
        std::vector<std::pair<Atom, ActionId>> steps;
        for (std::int64_t i = static_cast<std::int64_t>(idx);
             nodes[i].parent >= 0; i = nodes[i].parent) {
          steps.emplace_back(nodes[i].atom, nodes[i].action);
        }
        std::reverse(steps.begin(), steps.end());
        for (const auto& [atm, act] : steps) {
          gs->atoms.push_back(atm);
          gs->actions.push_back(act);
        }
        gs->atoms.push_back(at);
        return;
      }
    }
    for (Atom at = 0; at < a.atom_count(); ++at) {
      for (const auto& [p, t] : a.cell(x, at).moves) {
        if (!visited[t]) {
          visited[t] = true;
          nodes.push_back({t, static_cast<std::int64_t>(idx), at, p});
          queue.push_back(nodes.size() - 1);
        }
      }
    }
  }
  throw Error("no completion from a live state; normalization bug");
}

// Least action present in exactly one of the two sorted lists, plus which
// side owns it.
std::pair<ActionId, Divergence::Side> one_sided_action(
    const std::vector<ActionId>& left, const std::vector<ActionId>& right) {
  std::size_t i = 0, j = 0;
  while (i < left.size() && j < right.size()) {
    if (left[i] == right[j]) {
      ++i;
      ++j;
    } else if (left[i] < right[j]) {
      return {left[i], Divergence::Side::kLeft};
    } else {
      return {right[j], Divergence::Side::kRight};
    }
  }
  if (i < left.size()) return {left[i], Divergence::Side::kLeft};
  return {right[j], Divergence::Side::kRight};
}

// Extends a language-mode witness into a guarded string accepted by exactly
// one automaton. Both automata must be live-normalized. Inclusion witnesses
// record only the left action the right could not match, so they always
// complete through the left automaton; an extra action on the right does
// not refute inclusion.
void complete_lang_witness(Witness* w, const Automaton& a1, State s1,
                           const Automaton& a2, State s2, bool inclusion) {
  State x = s1, y = s2;
  GuardedString gs;
  for (const auto& [a, p] : w->trace) {
    gs.atoms.push_back(a);
    gs.actions.push_back(p);
    x = *a1.cell(x, a).target(p);
    y = *a2.cell(y, a).target(p);
  }
  const Divergence& d = w->divergence;
  if (d.kind == Divergence::Kind::kAcceptMismatch) {
    gs.atoms.push_back(d.atom);
    w->contained_in = d.side;
  } else {
    ActionId p;
    Divergence::Side owner;
    if (inclusion) {
      p = d.left_actions.front();
      owner = Divergence::Side::kLeft;
    } else {
      std::tie(p, owner) = one_sided_action(d.left_actions, d.right_actions);
    }
    gs.atoms.push_back(d.atom);
    gs.actions.push_back(p);
    if (owner == Divergence::Side::kLeft) {
      append_completion(a1, *a1.cell(x, d.atom).target(p), &gs);
    } else {
      append_completion(a2, *a2.cell(y, d.atom).target(p), &gs);
    }
    w->contained_in = owner;
  }
  w->distinguishing = std::move(gs);
}

Verdict run_check(const Automaton& a1, const Automaton& a2, Mode mode,
                  CheckStats* stats) {
  if (mode == Mode::kBisim) {
    Verdict v = bisim(a1, a1.initial(), a2, a2.initial(), stats);
    v.mode = mode;
    return v;
  }
  Automaton n1 = normalize_live(a1);
  Automaton n2 = normalize_live(a2);
  Verdict v = mode == Mode::kLang
                  ? bisim(n1, n1.initial(), n2, n2.initial(), stats)
                  : language_inclusion(n1, n1.initial(), n2, n2.initial(),
                                       stats);
  v.mode = mode;
  if (!v.equivalent && v.witness) {
    complete_lang_witness(&*v.witness, n1, n1.initial(), n2, n2.initial(),
                          mode == Mode::kLangInclusion);
  }
  return v;
}

}  // namespace

Verdict check(const GkatExpPtr& e, const GkatExpPtr& f, Mode mode,
              const UniversePtr& u, CheckStats* stats) {
  return run_check(build_gkat(e, u), build_gkat(f, u), mode, stats);
}

Verdict check(const KatExpPtr& e, const KatExpPtr& f, Mode mode,
              const UniversePtr& u, CheckStats* stats) {
  return run_check(build_kat(e, u), build_kat(f, u), mode, stats);
}

namespace {

std::string side_name(Divergence::Side s) {
  return s == Divergence::Side::kLeft ? "left" : "right";
}

std::string action_list(const std::vector<ActionId>& actions,
                        const Universe& u) {
  std::string out;
  for (std::size_t i = 0; i < actions.size(); ++i) {
    if (i > 0) out += ",";
    out += u.action_name(actions[i]);
  }
  return out;
}

std::string divergence_text(const Divergence& d, const Universe& u) {
  switch (d.kind) {
    case Divergence::Kind::kAcceptMismatch:
      return side_name(d.side) + " accepts, " +
             side_name(d.side == Divergence::Side::kLeft
                           ? Divergence::Side::kRight
                           : Divergence::Side::kLeft) +
             " does not";
    case Divergence::Kind::kStepVsStop: {
      const bool left_stopped = d.side == Divergence::Side::kLeft;
      const auto& stepping =
          left_stopped ? d.right_actions : d.left_actions;
      return side_name(left_stopped ? Divergence::Side::kRight
                                    : Divergence::Side::kLeft) +
             " steps with " + action_list(stepping, u) + ", " +
             side_name(d.side) + " rejects";
    }
    case Divergence::Kind::kActionMismatch:
      return "left steps with " + action_list(d.left_actions, u) +
             ", right steps with " + action_list(d.right_actions, u);
  }
  return "";
}

std::string trace_text(const std::vector<std::pair<Atom, ActionId>>& trace,
                       const Universe& u) {
  std::string out;
  for (std::size_t i = 0; i < trace.size(); ++i) {
    if (i > 0) out += " ";
    out += render_atom(trace[i].first, u) + " " +
           u.action_name(trace[i].second);
  }
  return out;
}

}  // namespace

std::string explain(const Verdict& v, const Universe& u) {
  std::string head;
  if (v.mode == Mode::kLangInclusion) {
    head = v.equivalent ? "inclusion holds" : "inclusion does not hold";
  } else {
    head = v.equivalent ? "equivalent" : "inequivalent";
  }
  head += " (mode: " + std::string(mode_name(v.mode)) + ")";
  if (!v.witness) return head;

  const Witness& w = *v.witness;
  std::string out = head + "; ";
  if (!w.trace.empty()) {
    out += "after " + trace_text(w.trace, u) + ", ";
  }
  out += "at " + render_atom(w.divergence.atom, u) + ": " +
         divergence_text(w.divergence, u);
  if (w.distinguishing) {
    out += "; distinguishing string: " + render(*w.distinguishing, u) +
           " (in " + side_name(*w.contained_in) + " only)";
  }
  return out;
}

std::string verdict_to_json(const Verdict& v, const Universe& u) {
  json j;
  j["equivalent"] = v.equivalent;
  j["mode"] = mode_name(v.mode);
  if (v.witness) {
    const Witness& w = *v.witness;
    json jw;
    json trace = json::array();
    for (const auto& [a, p] : w.trace) {
      trace.push_back(json::array({render_atom(a, u), u.action_name(p)}));
    }
    jw["trace"] = std::move(trace);
    json jd;
    jd["atom"] = render_atom(w.divergence.atom, u);
    switch (w.divergence.kind) {
      case Divergence::Kind::kAcceptMismatch:
        jd["kind"] = "acceptMismatch";
        jd["accepts"] = side_name(w.divergence.side);
        break;
      case Divergence::Kind::kStepVsStop:
        jd["kind"] = "stepVsStop";
        jd["stopped"] = side_name(w.divergence.side);
        break;
      case Divergence::Kind::kActionMismatch: {
        jd["kind"] = "actionMismatch";
        json l = json::array(), r = json::array();
        for (ActionId p : w.divergence.left_actions) {
          l.push_back(u.action_name(p));
        }
        for (ActionId p : w.divergence.right_actions) {
          r.push_back(u.action_name(p));
        }
        jd["left"] = std::move(l);
        jd["right"] = std::move(r);
        break;
      }
    }
    jw["divergence"] = std::move(jd);
    if (w.distinguishing) {
      jw["guardedString"] = render(*w.distinguishing, u);
      jw["containedIn"] = side_name(*w.contained_in);
    }
    j["witness"] = std::move(jw);
  }
  return j.dump(2);
}

}  // namespace gkat
