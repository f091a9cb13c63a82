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

#include "gkat/generate.hpp"

namespace gkat {

namespace {

TestId pick_test(Rng& rng, const UniversePtr& u) {
  return static_cast<TestId>(rng() % u->test_count());
}

ActionId pick_action(Rng& rng, const UniversePtr& u) {
  return static_cast<ActionId>(rng() % u->action_count());
}

BExpPtr random_bexp_leaf(Rng& rng, const UniversePtr& u) {
  if (u->test_count() == 0) return rng() % 2 == 0 ? b_zero() : b_one();
  switch (rng() % 5) {
    case 0:
      return b_zero();
    case 1:
      return b_one();
    default:
      return b_test(pick_test(rng, u));
  }
}

}  // namespace

BExpPtr random_bexp(Rng& rng, const UniversePtr& u, int depth) {
  if (depth <= 0) return random_bexp_leaf(rng, u);
  switch (rng() % 10) {
    case 0:
    case 1:
    case 2:
    case 3:
      return random_bexp_leaf(rng, u);
    case 4:
    case 5:
      return b_or(random_bexp(rng, u, depth - 1),
                  random_bexp(rng, u, depth - 1));
    case 6:
    case 7:
      return b_and(random_bexp(rng, u, depth - 1),
                   random_bexp(rng, u, depth - 1));
    default:
      return b_not(random_bexp(rng, u, depth - 1));
  }
}

GkatExpPtr random_gkat(Rng& rng, const UniversePtr& u, int depth) {
  const bool has_actions = u->action_count() > 0;
  if (depth <= 0 || !has_actions) {
    if (has_actions && rng() % 4 != 0) return g_act(pick_action(rng, u));
    return g_test(random_bexp(rng, u, 1));
  }
  switch (rng() % 10) {
    case 0:
      return g_test(random_bexp(rng, u, 2));
    case 1:
    case 2:
    case 3:
      return g_act(pick_action(rng, u));
    case 4:
    case 5:
      return g_seq(random_gkat(rng, u, depth - 1),
                   random_gkat(rng, u, depth - 1));
    case 6:
    case 7:
      return g_branch(random_bexp(rng, u, 2), random_gkat(rng, u, depth - 1),
                      random_gkat(rng, u, depth - 1));
    default:
      return g_while(random_bexp(rng, u, 2), random_gkat(rng, u, depth - 1));
  }
}

KatExpPtr random_kat(Rng& rng, const UniversePtr& u, int depth) {
  const bool has_actions = u->action_count() > 0;
  if (depth <= 0 || !has_actions) {
    if (has_actions && rng() % 4 != 0) return k_act(pick_action(rng, u));
    return k_test(random_bexp(rng, u, 1));
  }
  switch (rng() % 10) {
    case 0:
      return k_test(random_bexp(rng, u, 2));
    case 1:
    case 2:
    case 3:
      return k_act(pick_action(rng, u));
    case 4:
    case 5:
      return k_plus(random_kat(rng, u, depth - 1),
                    random_kat(rng, u, depth - 1));
    case 6:
    case 7:
      return k_seq(random_kat(rng, u, depth - 1),
                   random_kat(rng, u, depth - 1));
    default:
      return k_star(random_kat(rng, u, depth - 1));
  }
}

}  // namespace gkat
