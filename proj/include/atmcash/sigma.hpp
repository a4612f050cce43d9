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

#ifndef ATMCASH_SIGMA_HPP_
#define ATMCASH_SIGMA_HPP_

#include "atmcash/group.hpp"

namespace atmcash::nizk {

using group::Element;
using group::Group;
using group::Scalar;

struct WitnessMismatch : std::invalid_argument {
  WitnessMismatch() : std::invalid_argument("witness does not satisfy the statement") {}
};

// One multiplicative term base^{w[index]} of an equation.
struct Term {
  Element base;
  size_t index;
};

// target = prod_j terms[j].base ^ w[terms[j].index]
struct Equation {
  Element target;
  std::vector<Term> terms;
};

// AND-composition of discrete-log representation equations over a shared
// witness vector. Shared indices across equations is what enforces "same
// secret here and there". PRF and product statements are linearized into
// this form by the statement builders.
struct LinearRelation {
  std::string tag;
  Bytes context;               // public scalars etc., bound into the challenge
  size_t witness_count = 0;
  std::vector<Equation> equations;
  std::vector<Element> aux;    // prover-chosen public elements (sub-proof commitments)
};

struct Proof {
  std::string tag;
  std::vector<Element> aux;
  std::vector<Element> commitments;  // one per equation
  Scalar challenge;
  std::vector<Scalar> responses;     // one per witness
};

// Fiat-Shamir challenge over the canonical relation transcript.
Scalar challenge_of(const Group& grp, const LinearRelation& rel,
                    std::span<const Element> commitments);

Proof prove(const Group& grp, const LinearRelation& rel, std::span<const Scalar> witness,
            Rng& rng);
bool verify(const Group& grp, const LinearRelation& rel, const Proof& proof);

// Honest-prover check used by provers to fail fast on a bad witness.
bool witness_satisfies(const Group& grp, const LinearRelation& rel,
                       std::span<const Scalar> witness);

// Test support: run the prover with fixed nonces and a forced challenge
// (rewinding extractor), and the zero-knowledge simulator that picks the
// responses first and backpatches the commitments.
Proof prove_forced(const Group& grp, const LinearRelation& rel, std::span<const Scalar> witness,
                   std::span<const Scalar> nonces, const Scalar& challenge);
Proof simulate(const Group& grp, const LinearRelation& rel, Rng& rng);

}  // namespace atmcash::nizk

#endif  // ATMCASH_SIGMA_HPP_
