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

#include "atmcash/primitives.hpp"

#include <sodium.h>

namespace atmcash::prim {

Commitment commit(const Group& grp, const GeneratorSet& gens, std::span<const Scalar> messages,
                  const Scalar& blinding) {
  if (messages.size() > gens.count()) throw TooManyMessages();
  Element acc = grp.exp(gens.gprime, blinding);
  for (size_t i = 0; i < messages.size(); i++) {
    acc = grp.mul(acc, grp.exp(gens.gs[i], messages[i]));
  }
  return Commitment{acc};
}

bool verify_opening(const Group& grp, const GeneratorSet& gens, const Commitment& c,
                    const Opening& o) {
  if (o.messages.size() > gens.count()) return false;
  return commit(grp, gens, o.messages, o.blinding) == c;
}

Element dy_prf(const Group& grp, const PrfKey& key, const Scalar& x) {
  Scalar denom = grp.s_add(grp.s_add(grp.s_one(), key.k), x);
  if (grp.s_is_zero(denom)) throw DegenerateInput();
  return grp.exp_g(grp.s_invert(denom));
}

Bytes32 ro(std::string_view domain, ByteView msg) {
  Transcript t("atmcash/ro");
  t.add(domain);
  t.add(msg);
  Bytes32 out;
  crypto_hash_sha256(out.data(), t.bytes().data(), t.bytes().size());
  return out;
}

Bytes32 gen_nonce() {
  Rng rng;
  return rng.bytes32();
}

Bytes32 gen_nonce(Rng& rng) { return rng.bytes32(); }

}  // namespace atmcash::prim
