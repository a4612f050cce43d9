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

#include "atmcash/statements.hpp"

namespace atmcash::nizk {

namespace {

Bytes scalar_context(std::initializer_list<const Scalar*> scalars) {
  Transcript t("ctx");
  for (const Scalar* s : scalars) t.add(view(s->b));
  return t.bytes();
}

// 1 + cid as an exponent shows up in every PRF linearization.
Scalar one_plus(const Group& grp, const Scalar& cid) { return grp.s_add(grp.s_one(), cid); }

}  // namespace

// Witness layout: 0:a1 1:b1 2:a2 3:b2 4:c 5:d 6:m=c*a2 7:r 8:t=r-d*a2
// aux[0] = comm(m; r)
LinearRelation voucher_relation(const Group& grp, const GeneratorSet& gens,
                                const VoucherStatement& st, std::span<const Element> aux) {
  if (aux.size() != 1) throw std::invalid_argument("voucher relation: one aux commitment");
  const Element& g = gens.g;
  const Element& g1 = gens.gs.at(0);
  const Element& h = gens.gprime;
  Element gi = grp.inv(g);

  LinearRelation rel;
  rel.tag = "voucher";
  rel.context = scalar_context({&st.cid, &st.r_c});
  rel.witness_count = 9;
  rel.aux.assign(aux.begin(), aux.end());

  rel.equations.push_back({st.C1.c, {{g1, 0}, {h, 1}}});
  rel.equations.push_back({st.C2.c, {{g1, 2}, {h, 3}}});
  rel.equations.push_back({st.Q.c, {{g1, 4}, {h, 5}}});

  // X = F_{a1}(cid)  <=>  X^{a1} = g * X^{-(1+cid)}
  Element tx = grp.mul(g, grp.exp(st.X, grp.s_neg(one_plus(grp, st.cid))));
  rel.equations.push_back({tx, {{st.X, 0}}});

  // Y = g^c * F_{a2}(0)^{r_c}  <=>  Y^{a2} * g^{-c} * g^{-m} = g^{r_c} * Y^{-1}
  Element ty = grp.mul(grp.exp_g(st.r_c), grp.inv(st.Y));
  rel.equations.push_back({ty, {{st.Y, 2}, {gi, 4}, {gi, 6}}});

  // m = c * a2 via the auxiliary commitment
  rel.equations.push_back({aux[0], {{g1, 6}, {h, 7}}});
  rel.equations.push_back({aux[0], {{st.Q.c, 2}, {h, 8}}});
  return rel;
}

std::vector<Scalar> voucher_witness_vector(const Group& grp, const VoucherWitness& wit,
                                           Rng& rng, std::vector<Element>* aux,
                                           const GeneratorSet& gens) {
  Scalar m = grp.s_mul(wit.sk_a, wit.k2);
  Scalar r = grp.s_random(rng);
  Scalar t = grp.s_sub(r, grp.s_mul(wit.d, wit.k2));
  if (aux) {
    Element cm = grp.mul(grp.exp(gens.gs.at(0), m), grp.exp(gens.gprime, r));
    aux->assign({cm});
  }
  return {wit.k1, wit.b1, wit.k2, wit.b2, wit.sk_a, wit.d, m, r, t};
}

Proof prove_voucher(const Group& grp, const GeneratorSet& gens, const VoucherStatement& st,
                    const VoucherWitness& wit, Rng& rng) {
  std::vector<Element> aux;
  std::vector<Scalar> w = voucher_witness_vector(grp, wit, rng, &aux, gens);
  LinearRelation rel = voucher_relation(grp, gens, st, aux);
  return prove(grp, rel, w, rng);
}

bool verify_voucher(const Group& grp, const GeneratorSet& gens, const VoucherStatement& st,
                    const Proof& proof) {
  if (proof.aux.size() != 1) return false;
  LinearRelation rel = voucher_relation(grp, gens, st, proof.aux);
  return verify(grp, rel, proof);
}

// Witness layout: 0:a1 1:b1 2:a2 3:b2 4:c 5:d 6:ctr 7:bj
//                 8:m2=c*a2 9:r2 10:t2 11:m4=c*ctr 12:r4 13:t4
// aux = { comm(m2; r2), comm(m4; r4) }
LinearRelation compact_voucher_relation(const Group& grp, const GeneratorSet& gens,
                                        const CompactVoucherStatement& st,
                                        std::span<const Element> aux) {
  if (aux.size() != 2) throw std::invalid_argument("compact voucher relation: two aux");
  const Element& g = gens.g;
  const Element& g1 = gens.gs.at(0);
  const Element& h = gens.gprime;
  Element gi = grp.inv(g);

  LinearRelation rel;
  rel.tag = "voucher-compact";
  rel.context = scalar_context({&st.r_c});
  rel.witness_count = 14;
  rel.aux.assign(aux.begin(), aux.end());

  rel.equations.push_back({st.C1.c, {{g1, 0}, {h, 1}}});
  rel.equations.push_back({st.C2.c, {{g1, 2}, {h, 3}}});
  rel.equations.push_back({st.Q.c, {{g1, 4}, {h, 5}}});
  rel.equations.push_back({st.J.c, {{g1, 6}, {h, 7}}});

  // X = F_{a1}(ctr)  <=>  X^{a1} * X^{ctr} = g * X^{-1}
  Element tx = grp.mul(g, grp.inv(st.X));
  rel.equations.push_back({tx, {{st.X, 0}, {st.X, 6}}});

  // Y = g^c * F_{a2}(ctr)^{r_c}
  //   <=>  Y^{a2} * Y^{ctr} * g^{-c} * g^{-m2} * g^{-m4} = g^{r_c} * Y^{-1}
  Element ty = grp.mul(grp.exp_g(st.r_c), grp.inv(st.Y));
  rel.equations.push_back({ty, {{st.Y, 2}, {st.Y, 6}, {gi, 4}, {gi, 8}, {gi, 11}}});

  rel.equations.push_back({aux[0], {{g1, 8}, {h, 9}}});
  rel.equations.push_back({aux[0], {{st.Q.c, 2}, {h, 10}}});
  rel.equations.push_back({aux[1], {{g1, 11}, {h, 12}}});
  rel.equations.push_back({aux[1], {{st.Q.c, 6}, {h, 13}}});
  return rel;
}

Proof prove_voucher_compact(const Group& grp, const GeneratorSet& gens,
                            const CompactVoucherStatement& st, const CompactVoucherWitness& wit,
                            Rng& rng) {
  const Element& g1 = gens.gs.at(0);
  const Element& h = gens.gprime;
  Scalar m2 = grp.s_mul(wit.sk_a, wit.k2);
  Scalar r2 = grp.s_random(rng);
  Scalar t2 = grp.s_sub(r2, grp.s_mul(wit.d, wit.k2));
  Scalar m4 = grp.s_mul(wit.sk_a, wit.ctr);
  Scalar r4 = grp.s_random(rng);
  Scalar t4 = grp.s_sub(r4, grp.s_mul(wit.d, wit.ctr));
  std::vector<Element> aux = {grp.mul(grp.exp(g1, m2), grp.exp(h, r2)),
                              grp.mul(grp.exp(g1, m4), grp.exp(h, r4))};
  std::vector<Scalar> w = {wit.k1, wit.b1, wit.k2,  wit.b2, wit.sk_a, wit.d, wit.ctr,
                           wit.bj, m2,     r2,      t2,     m4,       r4,    t4};
  LinearRelation rel = compact_voucher_relation(grp, gens, st, aux);
  return prove(grp, rel, w, rng);
}

bool verify_voucher_compact(const Group& grp, const GeneratorSet& gens,
                            const CompactVoucherStatement& st, const Proof& proof) {
  if (proof.aux.size() != 2) return false;
  LinearRelation rel = compact_voucher_relation(grp, gens, st, proof.aux);
  return verify(grp, rel, proof);
}

// Witness layout: 0:a 1:b 2:c 3:m=a*c 4:r 5:s 6:t=r-s*a
// aux = { comm(c; s), comm(m; r) }
LinearRelation spend_relation(const Group& grp, const GeneratorSet& gens,
                              const SpendStatement& st, std::span<const Element> aux) {
  if (aux.size() != 2) throw std::invalid_argument("spend relation: two aux commitments");
  const Element& g = gens.g;
  const Element& g1 = gens.gs.at(0);
  const Element& g2 = gens.gs.at(1);
  const Element& h = gens.gprime;
  Element gi = grp.inv(g);

  LinearRelation rel;
  rel.tag = "spend";
  rel.context = scalar_context({&st.cid, &st.r_t});
  rel.witness_count = 7;
  rel.aux.assign(aux.begin(), aux.end());

  rel.equations.push_back({st.P.c, {{g1, 0}, {g2, 2}, {h, 1}}});

  // Z = g^a * F_c(cid)^{r_t}
  //   <=>  Z^{c} * (g^{-(1+cid)})^{a} * g^{-m} = g^{r_t} * Z^{-(1+cid)}
  Scalar e1 = one_plus(grp, st.cid);
  Element b = grp.exp_g(grp.s_neg(e1));
  Element tz = grp.mul(grp.exp_g(st.r_t), grp.exp(st.Z, grp.s_neg(e1)));
  rel.equations.push_back({tz, {{st.Z, 2}, {b, 0}, {gi, 3}}});

  // m = a * c via aux commitments: aux[0] = comm(c; s), aux[1] = comm(m; r)
  rel.equations.push_back({aux[0], {{g1, 2}, {h, 5}}});
  rel.equations.push_back({aux[1], {{g1, 3}, {h, 4}}});
  rel.equations.push_back({aux[1], {{aux[0], 0}, {h, 6}}});
  return rel;
}

std::vector<Scalar> spend_witness_vector(const Group& grp, const SpendWitness& wit, Rng& rng,
                                         std::vector<Element>* aux, const GeneratorSet& gens) {
  Scalar m = grp.s_mul(wit.sk_u, wit.s);
  Scalar r = grp.s_random(rng);
  Scalar sb = grp.s_random(rng);
  Scalar t = grp.s_sub(r, grp.s_mul(sb, wit.sk_u));
  if (aux) {
    const Element& g1 = gens.gs.at(0);
    const Element& h = gens.gprime;
    aux->assign({grp.mul(grp.exp(g1, wit.s), grp.exp(h, sb)),
                 grp.mul(grp.exp(g1, m), grp.exp(h, r))});
  }
  return {wit.sk_u, wit.b, wit.s, m, r, sb, t};
}

Proof prove_spend(const Group& grp, const GeneratorSet& gens, const SpendStatement& st,
                  const SpendWitness& wit, Rng& rng) {
  std::vector<Element> aux;
  std::vector<Scalar> w = spend_witness_vector(grp, wit, rng, &aux, gens);
  LinearRelation rel = spend_relation(grp, gens, st, aux);
  return prove(grp, rel, w, rng);
}

bool verify_spend(const Group& grp, const GeneratorSet& gens, const SpendStatement& st,
                  const Proof& proof) {
  if (proof.aux.size() != 2) return false;
  LinearRelation rel = spend_relation(grp, gens, st, proof.aux);
  return verify(grp, rel, proof);
}

LinearRelation keyreg_relation(const Group& grp, const GeneratorSet& gens,
                               const KeyRegStatement& st) {
  if (st.message_count < 1 || st.message_count > gens.count())
    throw std::invalid_argument("keyreg relation: bad message count");
  LinearRelation rel;
  rel.tag = "key-registration";
  rel.witness_count = st.message_count + 1;
  Equation open{st.P.c, {}};
  for (size_t i = 0; i < st.message_count; i++) open.terms.push_back({gens.gs.at(i), i});
  open.terms.push_back({gens.gprime, st.message_count});
  rel.equations.push_back(std::move(open));
  rel.equations.push_back({st.pk, {{gens.g, 0}}});
  return rel;
}

Proof prove_key_registration(const Group& grp, const GeneratorSet& gens,
                             const KeyRegStatement& st, const Opening& opening, Rng& rng) {
  if (opening.messages.size() != st.message_count)
    throw std::invalid_argument("opening does not match statement");
  LinearRelation rel = keyreg_relation(grp, gens, st);
  std::vector<Scalar> w(opening.messages.begin(), opening.messages.end());
  w.push_back(opening.blinding);
  return prove(grp, rel, w, rng);
}

bool verify_key_registration(const Group& grp, const GeneratorSet& gens,
                             const KeyRegStatement& st, const Proof& proof) {
  LinearRelation rel = keyreg_relation(grp, gens, st);
  return verify(grp, rel, proof);
}

}  // namespace atmcash::nizk
