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

#ifndef GKAT_GENERATE_HPP_
#define GKAT_GENERATE_HPP_

#include <random>

#include "gkat/exp.hpp"
#include "gkat/universe.hpp"

namespace gkat {

// Seeded random expression generators for property suites.
//
// All draws go through mt19937_64 with modulo choice so a fixed seed
// produces the same expressions on every platform; std::uniform_int_
// distribution is avoided because its output is not pinned by the
// standard.
using Rng = std::mt19937_64;

// Random Boolean expression of nesting depth at most `depth`. Universes
// without tests still work; only 0 and 1 come out.
BExpPtr random_bexp(Rng& rng, const UniversePtr& u, int depth);

// Random guarded program of nesting depth at most `depth`. Branch and
// loop guards draw shallow Boolean expressions.
GkatExpPtr random_gkat(Rng& rng, const UniversePtr& u, int depth);

// Random regular program of nesting depth at most `depth`.
KatExpPtr random_kat(Rng& rng, const UniversePtr& u, int depth);

}  // namespace gkat

#endif  // GKAT_GENERATE_HPP_
