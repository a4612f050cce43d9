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

#ifndef ATMCASH_RANGEPROOF_HPP_
#define ATMCASH_RANGEPROOF_HPP_

#include "atmcash/primitives.hpp"

namespace atmcash::nizk {

using group::Element;
using group::GeneratorSet;
using group::Group;
using group::Scalar;
using prim::Commitment;

struct OutOfRange : std::invalid_argument {
  OutOfRange() : std::invalid_argument("counter outside [1, n]") {}
};

// Proof that a commitment J = comm(ctr; b) opens to ctr in [1, n], n a power
// of two. ctr - 1 is decomposed into log2(n) committed bits, each proven in
// {0, 1} with a two-branch OR, plus one equation tying the weighted bit sum
// back to J.
struct RangeProof {
  std::vector<Element> bits;       // per-bit commitments B_i
  std::vector<Element> a0, a1;     // branch commitments
  std::vector<Scalar> c0, z0, z1;  // c1_i = c - c0_i
  Element a_sum;
  Scalar z_sum;
  Scalar challenge;
};

RangeProof prove_range(const Group& grp, const GeneratorSet& gens, const Commitment& J,
                       uint64_t ctr, const Scalar& blinding, uint64_t n, Rng& rng);
bool verify_range(const Group& grp, const GeneratorSet& gens, const Commitment& J, uint64_t n,
                  const RangeProof& proof);

}  // namespace atmcash::nizk

#endif  // ATMCASH_RANGEPROOF_HPP_
