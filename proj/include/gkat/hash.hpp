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

#ifndef GKAT_HASH_HPP_
#define GKAT_HASH_HPP_

#include <cstddef>
#include <cstdint>

namespace gkat {

// 64-bit mix-based hash combining (splitmix64 finalizer). Stable across
// platforms; expression hashes feed interning tables, never persisted data.
inline std::size_t hash_mix(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return static_cast<std::size_t>(x ^ (x >> 31));
}

inline std::size_t hash_seed(std::size_t tag) { return hash_mix(tag + 1); }

inline std::size_t hash_combine(std::size_t h, std::size_t v) {
  return hash_mix(h * 0x100000001b3ULL ^ v);
}

}  // namespace gkat

#endif  // GKAT_HASH_HPP_
