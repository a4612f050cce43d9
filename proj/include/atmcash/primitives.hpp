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

#ifndef ATMCASH_PRIMITIVES_HPP_
#define ATMCASH_PRIMITIVES_HPP_

#include "atmcash/group.hpp"

namespace atmcash::prim {

using group::Element;
using group::GeneratorSet;
using group::Group;
using group::Scalar;

struct TooManyMessages : std::invalid_argument {
  TooManyMessages() : std::invalid_argument("more messages than generators") {}
};
struct DegenerateInput : std::domain_error {
  DegenerateInput() : std::domain_error("1 + k + x = 0; resample the PRF key") {}
};

// Generalized Pedersen commitment g1^m1 ... gn^mn * (g')^r.
struct Commitment {
  Element c;
  bool operator==(const Commitment&) const = default;
};

struct Opening {
  std::vector<Scalar> messages;
  Scalar blinding;
};

struct PrfKey {
  Scalar k;
};

Commitment commit(const Group& grp, const GeneratorSet& gens, std::span<const Scalar> messages,
                  const Scalar& blinding);
bool verify_opening(const Group& grp, const GeneratorSet& gens, const Commitment& c,
                    const Opening& o);

// Dodis-Yampolskiy PRF: F_k(x) = g^{1/(1 + k + x)}.
Element dy_prf(const Group& grp, const PrfKey& key, const Scalar& x);

// Random oracle to a 2-lambda-bit string; domain separated.
Bytes32 ro(std::string_view domain, ByteView msg);

// Fresh 2-lambda-bit nonce. The overload without an Rng draws from the
// process CSPRNG; scenario code passes its seeded stream instead.
Bytes32 gen_nonce();
Bytes32 gen_nonce(Rng& rng);

}  // namespace atmcash::prim

#endif  // ATMCASH_PRIMITIVES_HPP_
