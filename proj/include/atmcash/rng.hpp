// Copyright 2026 The atmcash Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     https://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef ATMCASH_RNG_HPP_
#define ATMCASH_RNG_HPP_

#include <cstdint>
#include <string_view>

#include "atmcash/bytes.hpp"

namespace atmcash {

// Randomness source for all protocol operations. Defaults to the process
// CSPRNG; a seeded instance yields a deterministic stream so that scenario
// runs replay byte-identically.
class Rng {
 public:
  Rng();                            // system entropy
  explicit Rng(const Bytes32& seed);
  explicit Rng(uint64_t seed);

  void fill(void* buf, size_t len);
  Bytes32 bytes32();
  Bytes bytes(size_t len);
  uint64_t u64();
  uint64_t uniform(uint64_t bound);  // [0, bound), bound > 0

  // Independent child stream; children with distinct labels never overlap.
  Rng fork(std::string_view label);

  bool deterministic() const { return deterministic_; }

 private:
  bool deterministic_;
  Bytes32 seed_{};
  uint64_t counter_ = 0;
};

}  // namespace atmcash

#endif  // ATMCASH_RNG_HPP_
