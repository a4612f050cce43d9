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

#ifndef ATMCASH_CREDSIG_HPP_
#define ATMCASH_CREDSIG_HPP_

#include "atmcash/bn.hpp"
#include "atmcash/primitives.hpp"

namespace atmcash::credsig {

using group::Element;
using group::GeneratorSet;
using group::Group;
using group::Scalar;
using prim::Commitment;
using prim::Opening;

// CL-style signature over an RSA group: the bank signs values it never sees,
// and the holder later proves possession of a signature on the opening of a
// fresh main-group Pedersen commitment. Witness equality across the RSA and
// main-group sides is enforced by shared integer responses, which is what
// makes credentialed values directly usable as exponents in the main group.
//
// Signature on messages m_1..m_L:  Z = A^e * R_1^{m_1}...R_L^{m_L} * S^v
// with e prime in [2^{le-1}, 2^{le-1} + 2^{le'}).

struct Params {
  int ln;             // modulus bits
  int lm = 256;       // message bits (canonical scalar integers fit)
  int lc = 128;       // challenge bits
  int ls = 80;        // statistical hiding slack
  int le_prime = 120; // width of the prime-exponent interval
  int le() const { return lm + lc + ls + 4; }
  int lv() const { return ln + lm + ls; }
};

struct PublicKey {
  Params prm;
  Bn n, S, Z;
  std::vector<Bn> R;
  size_t msg_count() const { return R.size(); }
};

struct SecretKey {
  Bn p, q;
};

struct Keypair {
  PublicKey pk;
  SecretKey sk;
};

struct Credential {
  Bn A, e, v;
};

struct InvalidRegistration : std::runtime_error {
  explicit InvalidRegistration(const char* what) : std::runtime_error(what) {}
};

Keypair keygen(Rng& rng, int modulus_bits, size_t msg_count);

// --- blind issuance ---

// Holder side: U = prod R_i^{m_i} * S^{v_u}; v_u returned for assembling the
// final credential.
Bn make_request(const PublicKey& pk, std::span<const Scalar> messages, Rng& rng, Bn* v_u);

struct BlindResult {
  Bn A, e, vpp;
};

// Issuer side. The caller is responsible for having verified a registration
// or representation proof for U first.
BlindResult zsign(const PublicKey& pk, const SecretKey& sk, const Bn& U, Rng& rng);

Credential assemble(const PublicKey& pk, const BlindResult& blind, const Bn& v_u);

// Plain check of the signature equation against known messages (holder-side
// sanity after issuance, and tests).
bool verify_signature(const PublicKey& pk, std::span<const Scalar> messages,
                      const Credential& cred);

// --- presentation: proof of possession bound to a fresh commitment ---

struct Presentation {
  Bn a_prime;          // randomized A
  Bn t_rsa;            // RSA-side sigma commitment
  Element t_grp;       // main-group sigma commitment
  Bytes challenge;     // lc/8 bytes
  std::vector<Bn> z_m; // shared integer responses, one per message
  Bn z_e;
  Bn z_v;              // may be negative
  Scalar z_blind;      // main-group blinding response
};

Presentation zprove(const Group& grp, const GeneratorSet& gens, const PublicKey& pk,
                    const Commitment& com, const Opening& opening, const Credential& cred,
                    Rng& rng);
bool zverify(const Group& grp, const GeneratorSet& gens, const PublicKey& pk,
             const Commitment& com, const Presentation& pres);

// --- registration proof: binds U, a main-group commitment, and an identity
// key pk_id = g^{m_0} together ---

struct RegistrationProof {
  Bn t_u;
  Element t_p, t_pk;
  Bytes challenge;
  std::vector<Bn> z_m;
  Bn z_vu;
  Scalar z_blind;
};

RegistrationProof prove_registration(const Group& grp, const GeneratorSet& gens,
                                     const PublicKey& pk, const Commitment& com,
                                     const Element& pk_id, const Bn& U, const Opening& opening,
                                     const Bn& v_u, Rng& rng);
bool verify_registration(const Group& grp, const GeneratorSet& gens, const PublicKey& pk,
                         const Commitment& com, const Element& pk_id, const Bn& U,
                         const RegistrationProof& proof);

// --- representation proof for U alone (blind key certification without an
// identity conjunct, used for the compact mode's PRF keys) ---

struct URepresentationProof {
  Bn t_u;
  Bytes challenge;
  std::vector<Bn> z_m;
  Bn z_vu;
};

URepresentationProof prove_u_representation(const PublicKey& pk, const Bn& U,
                                            std::span<const Scalar> messages, const Bn& v_u,
                                            Rng& rng);
bool verify_u_representation(const PublicKey& pk, const Bn& U, const URepresentationProof& proof);

// Canonical integer value of a scalar for cross-group arithmetic.
Bn scalar_to_bn(const Scalar& s);
Scalar bn_mod_order(const Group& grp, const Bn& x);

}  // namespace atmcash::credsig

#endif  // ATMCASH_CREDSIG_HPP_
