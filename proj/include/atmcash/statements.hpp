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

#ifndef ATMCASH_STATEMENTS_HPP_
#define ATMCASH_STATEMENTS_HPP_

#include "atmcash/primitives.hpp"
#include "atmcash/sigma.hpp"

namespace atmcash::nizk {

using group::GeneratorSet;
using prim::Commitment;
using prim::Opening;

// Issuance-side statement binding a coin's key commitments, the ATM identity
// commitment and the two tokens X, Y to one hidden witness set:
//   C1 = comm(a1; b1)  and  C2 = comm(a2; b2)  and  Q = comm(c; d)
//   and  X = F_{a1}(cid)  and  Y = g^c * F_{a2}(0)^{r_c}
// The PRF conjuncts are linearized; Y additionally needs the product secret
// m = c * a2, carried in an auxiliary commitment inside the proof.
struct VoucherStatement {
  Commitment C1, C2, Q;
  Element X, Y;
  Scalar cid, r_c;
};

struct VoucherWitness {
  Scalar k1, b1;      // opening of C1
  Scalar k2, b2;      // opening of C2
  Scalar sk_a, d;     // opening of Q
};

Proof prove_voucher(const Group& grp, const GeneratorSet& gens, const VoucherStatement& st,
                    const VoucherWitness& wit, Rng& rng);
bool verify_voucher(const Group& grp, const GeneratorSet& gens, const VoucherStatement& st,
                    const Proof& proof);

// Compact variant: both tokens evaluate the PRF at the hidden counter
// committed in J, so the witness carries the counter and two products.
struct CompactVoucherStatement {
  Commitment C1, C2, Q, J;
  Element X, Y;
  Scalar r_c;
};

struct CompactVoucherWitness {
  Scalar k1, b1;
  Scalar k2, b2;
  Scalar sk_a, d;
  Scalar ctr, bj;     // opening of J
};

Proof prove_voucher_compact(const Group& grp, const GeneratorSet& gens,
                            const CompactVoucherStatement& st, const CompactVoucherWitness& wit,
                            Rng& rng);
bool verify_voucher_compact(const Group& grp, const GeneratorSet& gens,
                            const CompactVoucherStatement& st, const Proof& proof);

// Spend-side statement: P = comm(a, c; b)  and  Z = g^a * F_c(cid)^{r_t},
// with a = the user's private identity key and c = the spending PRF key.
struct SpendStatement {
  Commitment P;
  Element Z;
  Scalar cid, r_t;
};

struct SpendWitness {
  Scalar sk_u;   // a
  Scalar b;      // blinding of P
  Scalar s;      // c
};

Proof prove_spend(const Group& grp, const GeneratorSet& gens, const SpendStatement& st,
                  const SpendWitness& wit, Rng& rng);
bool verify_spend(const Group& grp, const GeneratorSet& gens, const SpendStatement& st,
                  const Proof& proof);

// Registration statement: P = comm(m_0, ..., m_{k-1}; b)  and  pk = g^{m_0}.
struct KeyRegStatement {
  Commitment P;
  Element pk;
  size_t message_count = 1;
};

Proof prove_key_registration(const Group& grp, const GeneratorSet& gens,
                             const KeyRegStatement& st, const Opening& opening, Rng& rng);
bool verify_key_registration(const Group& grp, const GeneratorSet& gens,
                             const KeyRegStatement& st, const Proof& proof);

// Relation builders are exposed so tests can drive the extractor and the
// simulator against the exact systems the protocol uses.
LinearRelation voucher_relation(const Group& grp, const GeneratorSet& gens,
                                const VoucherStatement& st, std::span<const Element> aux);
LinearRelation compact_voucher_relation(const Group& grp, const GeneratorSet& gens,
                                        const CompactVoucherStatement& st,
                                        std::span<const Element> aux);
LinearRelation spend_relation(const Group& grp, const GeneratorSet& gens,
                              const SpendStatement& st, std::span<const Element> aux);
LinearRelation keyreg_relation(const Group& grp, const GeneratorSet& gens,
                               const KeyRegStatement& st);

std::vector<Scalar> voucher_witness_vector(const Group& grp, const VoucherWitness& wit,
                                           Rng& rng, std::vector<Element>* aux,
                                           const GeneratorSet& gens);
std::vector<Scalar> spend_witness_vector(const Group& grp, const SpendWitness& wit, Rng& rng,
                                         std::vector<Element>* aux, const GeneratorSet& gens);

}  // namespace atmcash::nizk

#endif  // ATMCASH_STATEMENTS_HPP_
