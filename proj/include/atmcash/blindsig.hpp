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

#ifndef ATMCASH_BLINDSIG_HPP_
#define ATMCASH_BLINDSIG_HPP_

#include "atmcash/bn.hpp"

namespace atmcash::blindsig {

// RSA full-domain-hash blind signature. Messages are always fixed-width
// digests; the signer sees only the blinded value.
struct PublicKey {
  Bn n, e;
  size_t modulus_bytes() const { return size_t((n.bits() + 7) / 8); }
  bool operator==(const PublicKey& o) const { return n == o.n && e == o.e; }
};

struct SecretKey {
  Bn d;
};

struct Keypair {
  PublicKey pk;
  SecretKey sk;
};

struct Signature {
  Bn s;
  bool operator==(const Signature& o) const = default;
};

struct Blinded {
  Bn k;
};

// Unblinding factor; zeroized by unblind().
struct BlindingFactor {
  Bn r;
};

Keypair keygen(Rng& rng, int modulus_bits);

// K = F(m) * r^e mod n for fresh r.
std::pair<Blinded, BlindingFactor> blind(const PublicKey& pk, ByteView msg, Rng& rng);
Signature sign_blinded(const PublicKey& pk, const SecretKey& sk, const Blinded& blinded);
Signature unblind(const PublicKey& pk, const Signature& blinded_sig, BlindingFactor& r);
bool verify(const PublicKey& pk, ByteView msg, const Signature& sig);

// The full domain hash itself, exposed for tests.
Bn fdh(const PublicKey& pk, ByteView msg);

}  // namespace atmcash::blindsig

#endif  // ATMCASH_BLINDSIG_HPP_
