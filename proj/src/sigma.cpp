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

#include "atmcash/sigma.hpp"

namespace atmcash::nizk {

namespace {

void u32_field(Transcript& t, uint32_t v) {
  uint8_t b[4] = {uint8_t(v >> 24), uint8_t(v >> 16), uint8_t(v >> 8), uint8_t(v)};
  t.add(ByteView(b, 4));
}

Element eval_terms(const Group& grp, const Equation& eq, std::span<const Scalar> exps) {
  Element acc = grp.identity();
  for (const Term& term : eq.terms) {
    acc = grp.mul(acc, grp.exp(term.base, exps[term.index]));
  }
  return acc;
}

}  // namespace

Scalar challenge_of(const Group& grp, const LinearRelation& rel,
                    std::span<const Element> commitments) {
  Transcript t("atmcash/fs");
  t.add(rel.tag);
  t.add(view(rel.context));
  u32_field(t, uint32_t(rel.witness_count));
  u32_field(t, uint32_t(rel.equations.size()));
  for (const Equation& eq : rel.equations) {
    t.add(view(eq.target.b));
    u32_field(t, uint32_t(eq.terms.size()));
    for (const Term& term : eq.terms) {
      t.add(view(term.base.b));
      u32_field(t, uint32_t(term.index));
    }
  }
  u32_field(t, uint32_t(rel.aux.size()));
  for (const Element& a : rel.aux) t.add(view(a.b));
  u32_field(t, uint32_t(commitments.size()));
  for (const Element& a : commitments) t.add(view(a.b));
  return grp.hash_to_scalar("atmcash/fs-challenge", view(t.bytes()));
}

bool witness_satisfies(const Group& grp, const LinearRelation& rel,
                       std::span<const Scalar> witness) {
  if (witness.size() != rel.witness_count) return false;
  for (const Equation& eq : rel.equations) {
    if (!(eval_terms(grp, eq, witness) == eq.target)) return false;
  }
  return true;
}

Proof prove(const Group& grp, const LinearRelation& rel, std::span<const Scalar> witness,
            Rng& rng) {
  if (!witness_satisfies(grp, rel, witness)) throw WitnessMismatch();
  std::vector<Scalar> nonces(rel.witness_count);
  for (Scalar& r : nonces) r = grp.s_random(rng);

  Proof proof;
  proof.tag = rel.tag;
  proof.aux = rel.aux;
  proof.commitments.reserve(rel.equations.size());
  for (const Equation& eq : rel.equations) {
    proof.commitments.push_back(eval_terms(grp, eq, nonces));
  }
  proof.challenge = challenge_of(grp, rel, proof.commitments);
  proof.responses.resize(rel.witness_count);
  for (size_t j = 0; j < rel.witness_count; j++) {
    proof.responses[j] = grp.s_add(nonces[j], grp.s_mul(proof.challenge, witness[j]));
  }
  return proof;
}

bool verify(const Group& grp, const LinearRelation& rel, const Proof& proof) {
  if (proof.tag != rel.tag) return false;
  if (proof.aux.size() != rel.aux.size()) return false;
  for (size_t i = 0; i < rel.aux.size(); i++) {
    if (!(proof.aux[i] == rel.aux[i])) return false;
  }
  if (proof.commitments.size() != rel.equations.size()) return false;
  if (proof.responses.size() != rel.witness_count) return false;

  Scalar expected = challenge_of(grp, rel, proof.commitments);
  if (!(expected == proof.challenge)) return false;

  for (size_t i = 0; i < rel.equations.size(); i++) {
    const Equation& eq = rel.equations[i];
    Element lhs = eval_terms(grp, eq, proof.responses);
    Element rhs = grp.mul(proof.commitments[i], grp.exp(eq.target, proof.challenge));
    if (!(lhs == rhs)) return false;
  }
  return true;
}

Proof prove_forced(const Group& grp, const LinearRelation& rel, std::span<const Scalar> witness,
                   std::span<const Scalar> nonces, const Scalar& challenge) {
  if (witness.size() != rel.witness_count || nonces.size() != rel.witness_count)
    throw WitnessMismatch();
  Proof proof;
  proof.tag = rel.tag;
  proof.aux = rel.aux;
  for (const Equation& eq : rel.equations) {
    proof.commitments.push_back(eval_terms(grp, eq, nonces));
  }
  proof.challenge = challenge;
  proof.responses.resize(rel.witness_count);
  for (size_t j = 0; j < rel.witness_count; j++) {
    proof.responses[j] = grp.s_add(nonces[j], grp.s_mul(challenge, witness[j]));
  }
  return proof;
}

Proof simulate(const Group& grp, const LinearRelation& rel, Rng& rng) {
  Proof proof;
  proof.tag = rel.tag;
  proof.aux = rel.aux;
  proof.challenge = grp.s_random(rng);
  proof.responses.resize(rel.witness_count);
  for (Scalar& z : proof.responses) z = grp.s_random(rng);
  for (const Equation& eq : rel.equations) {
    Element lhs = eval_terms(grp, eq, proof.responses);
    proof.commitments.push_back(grp.div(lhs, grp.exp(eq.target, proof.challenge)));
  }
  return proof;
}

}  // namespace atmcash::nizk
