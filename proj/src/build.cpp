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

#include "gkat/build.hpp"

#include <deque>
#include <map>
#include <unordered_map>

#include "gkat/errors.hpp"
#include "gkat/render.hpp"

namespace gkat {

GkatDeriv derivative(const GkatExpPtr& e, Atom a, const Universe& u) {
  switch (e->kind()) {
    case GKind::kTest:
      return eval(e->test(), a) ? GkatDeriv::mk_accept()
                                : GkatDeriv::mk_reject();
    case GKind::kAct:
      return GkatDeriv::mk_step(e->action(), g_skip());
    case GKind::kBranch:
      return eval(e->test(), a) ? derivative(e->left(), a, u)
                                : derivative(e->right(), a, u);
    case GKind::kSeq: {
      GkatDeriv d = derivative(e->left(), a, u);
      switch (d.kind) {
        case GkatDeriv::Kind::kStep:
          return GkatDeriv::mk_step(
              d.action, g_seq_norm(std::move(d.next), e->right()));
        case GkatDeriv::Kind::kAccept:
          return derivative(e->right(), a, u);
        case GkatDeriv::Kind::kReject:
          return GkatDeriv::mk_reject();
      }
      return GkatDeriv::mk_reject();
    }
    case GKind::kWhile: {
      if (!eval(e->test(), a)) return GkatDeriv::mk_accept();
      GkatDeriv d = derivative(e->left(), a, u);
      if (d.kind == GkatDeriv::Kind::kStep) {
        // Loop back around the body's remainder.
        return GkatDeriv::mk_step(d.action,
                                  g_seq_norm(std::move(d.next), e));
      }
      // A body that would terminate immediately makes the loop diverge,
      // which the finite semantics identifies with failure.
      return GkatDeriv::mk_reject();
    }
  }
  return GkatDeriv::mk_reject();
}

Automaton build_gkat(const GkatExpPtr& e, UniversePtr u) {
  const std::size_t ceiling = size(e) + 1;
  std::unordered_map<GkatExpPtr, State, GkatExpHash, GkatExpEq> index;
  std::vector<GkatExpPtr> states;
  std::deque<State> queue;

  auto intern = [&](const GkatExpPtr& x) -> State {
    auto it = index.find(x);
    if (it != index.end()) return it->second;
    if (states.size() >= ceiling) {
      throw Error(
          "derivative closure exceeded size(e) + 1 states, which indicates "
          "a successor normalization bug");
    }
    State s = static_cast<State>(states.size());
    states.push_back(x);
    index.emplace(x, s);
    queue.push_back(s);
    return s;
  };

  intern(e);
  std::vector<std::vector<Cell>> cells;
  while (!queue.empty()) {
    State s = queue.front();
    queue.pop_front();
    if (cells.size() <= s) cells.resize(s + 1);
    cells[s].resize(u->atom_count());
    for (Atom a = 0; a < u->atom_count(); ++a) {
      GkatDeriv d = derivative(states[s], a, *u);
      Cell& cell = cells[s][a];
      switch (d.kind) {
        case GkatDeriv::Kind::kAccept:
          cell.accept = true;
          break;
        case GkatDeriv::Kind::kReject:
          break;
        case GkatDeriv::Kind::kStep:
          cell.moves.emplace_back(d.action, intern(d.next));
          break;
      }
    }
  }
  cells.resize(states.size());
  for (auto& row : cells) row.resize(u->atom_count());

  std::vector<std::string> labels;
  labels.reserve(states.size());
  for (const auto& x : states) labels.push_back(render(x, *u));
  return Automaton(std::move(u), 0, std::move(cells), std::move(labels));
}

namespace {

// Termination test of a Kleene program as a Boolean expression.
BExpPtr kat_observation(const KatExpPtr& e) {
  switch (e->kind()) {
    case KKind::kTest:
      return e->test();
    case KKind::kAct:
      return b_zero();
    case KKind::kPlus:
      return b_or(kat_observation(e->left()), kat_observation(e->right()));
    case KKind::kSeq:
      return b_and(kat_observation(e->left()), kat_observation(e->right()));
    case KKind::kStar:
      return b_one();
  }
  return b_zero();
}

// Whether a normalized term is the literal 0, which denotes nothing and is
// dropped from successor sets.
bool is_literal_zero(const KatExpPtr& e) {
  return e->kind() == KKind::kTest && e->test()->kind() == BKind::kZero;
}

// Partial derivative of e on action p as (enabling atoms, successor
// expression) pairs, restricted to `guard`. Successors get the
// right-associated 1;x and 0;x normalization.
void collect_pd(const KatExpPtr& e, ActionId p, const AtomSet& guard,
                const Universe& u,
                std::vector<std::pair<AtomSet, KatExpPtr>>* out) {
  if (guard.empty()) return;
  switch (e->kind()) {
    case KKind::kTest:
      return;
    case KKind::kAct:
      if (e->action() == p) out->emplace_back(guard, k_one());
      return;
    case KKind::kPlus:
      collect_pd(e->left(), p, guard, u, out);
      collect_pd(e->right(), p, guard, u, out);
      return;
    case KKind::kSeq: {
      std::vector<std::pair<AtomSet, KatExpPtr>> left;
      collect_pd(e->left(), p, guard, u, &left);
      for (auto& [g, x] : left) {
        KatExpPtr succ = k_seq_norm(std::move(x), e->right());
        if (!is_literal_zero(succ)) {
          out->emplace_back(std::move(g), std::move(succ));
        }
      }
      // The right part starts where the left can already terminate.
      AtomSet pass = satisfying(kat_observation(e->left()), u);
      pass &= guard;
      collect_pd(e->right(), p, pass, u, out);
      return;
    }
    case KKind::kStar: {
      std::vector<std::pair<AtomSet, KatExpPtr>> body;
      collect_pd(e->left(), p, guard, u, &body);
      for (auto& [g, x] : body) {
        KatExpPtr succ = k_seq_norm(std::move(x), e);
        if (!is_literal_zero(succ)) {
          out->emplace_back(std::move(g), std::move(succ));
        }
      }
      return;
    }
  }
}

class NfaBuilder {
 public:
  NfaBuilder(const KatExpPtr& root, const Universe& u) : u_(u) {
    intern(root);
    while (!queue_.empty()) {
      std::uint32_t t = queue_.front();
      queue_.pop_front();
      nfa_.obs.push_back(satisfying(kat_observation(nfa_.terms[t]), u_));
      nfa_.moves.emplace_back(u_.action_count());
      for (ActionId p = 0; p < u_.action_count(); ++p) {
        std::vector<std::pair<AtomSet, KatExpPtr>> succs;
        collect_pd(nfa_.terms[t], p, satisfying(b_one(), u_), u_, &succs);
        for (auto& [g, x] : succs) {
          nfa_.moves[t][p].emplace_back(std::move(g), intern(x));
        }
      }
    }
  }

  KatNfa take() { return std::move(nfa_); }

 private:
  std::uint32_t intern(const KatExpPtr& x) {
    auto it = index_.find(x);
    if (it != index_.end()) return it->second;
    std::uint32_t id = static_cast<std::uint32_t>(nfa_.terms.size());
    nfa_.terms.push_back(x);
    index_.emplace(x, id);
    queue_.push_back(id);
    return id;
  }

  const Universe& u_;
  KatNfa nfa_;
  std::unordered_map<KatExpPtr, std::uint32_t, KatExpHash, KatExpEq> index_;
  std::deque<std::uint32_t> queue_;
};

}  // namespace

KatNfa kat_nfa(const KatExpPtr& e, const Universe& u) {
  return NfaBuilder(e, u).take();
}

Automaton build_kat(const KatExpPtr& e, UniversePtr u,
                    const BuildLimits& limits) {
  KatNfa nfa = kat_nfa(e, *u);
  using Subset = std::vector<std::uint32_t>;  // sorted term ids

  std::map<Subset, State> index;
  std::vector<Subset> subsets;
  std::deque<State> queue;
  auto intern = [&](Subset s) -> State {
    auto it = index.find(s);
    if (it != index.end()) return it->second;
    if (subsets.size() >= limits.max_dfa_states) {
      throw ResourceLimitError("determinization exceeded " +
                               std::to_string(limits.max_dfa_states) +
                               " states");
    }
    State id = static_cast<State>(subsets.size());
    subsets.push_back(s);
    index.emplace(std::move(s), id);
    queue.push_back(id);
    return id;
  };

  intern(Subset{0});
  std::vector<std::vector<Cell>> cells;
  while (!queue.empty()) {
    State s = queue.front();
    queue.pop_front();
    if (cells.size() <= s) cells.resize(s + 1);
    cells[s].resize(u->atom_count());
    Subset members = subsets[s];  // copied: intern below may reallocate
    for (Atom a = 0; a < u->atom_count(); ++a) {
      Cell& cell = cells[s][a];
      for (std::uint32_t t : members) {
        if (nfa.obs[t].contains(a)) {
          cell.accept = true;
          break;
        }
      }
      for (ActionId p = 0; p < u->action_count(); ++p) {
        Subset next;
        for (std::uint32_t t : members) {
          for (const auto& [guard, succ] : nfa.moves[t][p]) {
            if (guard.contains(a)) next.push_back(succ);
          }
        }
        if (next.empty()) continue;
        std::sort(next.begin(), next.end());
        next.erase(std::unique(next.begin(), next.end()), next.end());
        cell.moves.emplace_back(p, intern(std::move(next)));
      }
    }
  }
  cells.resize(subsets.size());
  for (auto& row : cells) row.resize(u->atom_count());

  std::vector<std::string> labels;
  labels.reserve(subsets.size());
  for (const auto& members : subsets) {
    std::string label;
    for (std::size_t i = 0; i < members.size(); ++i) {
      if (i > 0) label += " + ";
      label += render(nfa.terms[members[i]], *u);
    }
    labels.push_back(std::move(label));
  }
  return Automaton(std::move(u), 0, std::move(cells), std::move(labels));
}

}  // namespace gkat
