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

#include "atmcash/rangeproof.hpp"

namespace atmcash::nizk {

namespace {

// n = 1 would make the single OR bit cover [1, 2]; the compact protocol is
// pointless below n = 2 anyway.
bool usable_bound(uint64_t n) { return n >= 2 && (n & (n - 1)) == 0; }

size_t bit_width(uint64_t n) {
  size_t t = 0;
  while ((uint64_t(1) << t) < n) t++;
  return t;
}

Scalar range_challenge(const Group& grp, const Commitment& J, uint64_t n,
                       const std::vector<Element>& bits, const std::vector<Element>& a0,
                       const std::vector<Element>& a1, const Element& a_sum) {
  Transcript t("atmcash/fs-range");
  t.add(view(J.c.b));
  uint8_t nb[8];
  for (int i = 0; i < 8; i++) nb[i] = uint8_t(n >> (8 * (7 - i)));
  t.add(ByteView(nb, 8));
  for (const Element& b : bits) t.add(view(b.b));
  for (const Element& e : a0) t.add(view(e.b));
  for (const Element& e : a1) t.add(view(e.b));
  t.add(view(a_sum.b));
  return grp.hash_to_scalar("atmcash/fs-range", view(t.bytes()));
}

// S = (J * g1^{-1}) / prod B_i^{2^i}; the sum equation is S = h^{w}.
Element sum_target(const Group& grp, const GeneratorSet& gens, const Commitment& J,
                   const std::vector<Element>& bits) {
  Element s = grp.div(J.c, gens.gs.at(0));
  for (size_t i = 0; i < bits.size(); i++) {
    Scalar w = grp.s_from_u64(uint64_t(1) << i);
    s = grp.div(s, grp.exp(bits[i], w));
  }
  return s;
}

}  // namespace

RangeProof prove_range(const Group& grp, const GeneratorSet& gens, const Commitment& J,
                       uint64_t ctr, const Scalar& blinding, uint64_t n, Rng& rng) {
  if (!usable_bound(n))
    throw std::invalid_argument("range proof requires n to be a power of two >= 2");
  if (ctr < 1 || ctr > n) throw OutOfRange();
  const Element& g1 = gens.gs.at(0);
  const Element& h = gens.gprime;
  size_t t = bit_width(n);
  uint64_t v = ctr - 1;

  RangeProof p;
  std::vector<Scalar> r(t);          // bit blindings
  std::vector<int> bit(t);
  std::vector<Scalar> k(t);          // honest-branch nonces
  for (size_t i = 0; i < t; i++) {
    bit[i] = int((v >> i) & 1);
    r[i] = grp.s_random(rng);
    Element b = grp.exp(h, r[i]);
    if (bit[i]) b = grp.mul(b, g1);
    p.bits.push_back(b);
  }

  p.a0.resize(t);
  p.a1.resize(t);
  p.c0.resize(t);
  p.z0.resize(t);
  p.z1.resize(t);
  std::vector<Scalar> c1(t);
  for (size_t i = 0; i < t; i++) {
    k[i] = grp.s_random(rng);
    if (bit[i] == 0) {
      // real branch 0, simulate branch 1
      p.a0[i] = grp.exp(h, k[i]);
      c1[i] = grp.s_random(rng);
      p.z1[i] = grp.s_random(rng);
      Element bg = grp.div(p.bits[i], g1);
      p.a1[i] = grp.div(grp.exp(h, p.z1[i]), grp.exp(bg, c1[i]));
    } else {
      // real branch 1, simulate branch 0
      p.a1[i] = grp.exp(h, k[i]);
      p.c0[i] = grp.s_random(rng);
      p.z0[i] = grp.s_random(rng);
      p.a0[i] = grp.div(grp.exp(h, p.z0[i]), grp.exp(p.bits[i], p.c0[i]));
    }
  }

  // sum equation nonce
  Scalar w = blinding;
  for (size_t i = 0; i < t; i++) {
    w = grp.s_sub(w, grp.s_mul(grp.s_from_u64(uint64_t(1) << i), r[i]));
  }
  Scalar ks = grp.s_random(rng);
  p.a_sum = grp.exp(h, ks);

  p.challenge = range_challenge(grp, J, n, p.bits, p.a0, p.a1, p.a_sum);

  for (size_t i = 0; i < t; i++) {
    if (bit[i] == 0) {
      p.c0[i] = grp.s_sub(p.challenge, c1[i]);
      p.z0[i] = grp.s_add(k[i], grp.s_mul(p.c0[i], r[i]));
    } else {
      c1[i] = grp.s_sub(p.challenge, p.c0[i]);
      p.z1[i] = grp.s_add(k[i], grp.s_mul(c1[i], r[i]));
    }
  }
  p.z_sum = grp.s_add(ks, grp.s_mul(p.challenge, w));
  return p;
}

bool verify_range(const Group& grp, const GeneratorSet& gens, const Commitment& J, uint64_t n,
                  const RangeProof& p) {
  if (!usable_bound(n)) return false;
  const Element& g1 = gens.gs.at(0);
  const Element& h = gens.gprime;
  size_t t = bit_width(n);
  if (p.bits.size() != t || p.a0.size() != t || p.a1.size() != t || p.c0.size() != t ||
      p.z0.size() != t || p.z1.size() != t)
    return false;

  Scalar c = range_challenge(grp, J, n, p.bits, p.a0, p.a1, p.a_sum);
  if (!(c == p.challenge)) return false;

  for (size_t i = 0; i < t; i++) {
    Scalar c1 = grp.s_sub(c, p.c0[i]);
    // h^{z0} = a0 * B^{c0}
    if (!(grp.exp(h, p.z0[i]) == grp.mul(p.a0[i], grp.exp(p.bits[i], p.c0[i])))) return false;
    // h^{z1} = a1 * (B/g1)^{c1}
    Element bg = grp.div(p.bits[i], g1);
    if (!(grp.exp(h, p.z1[i]) == grp.mul(p.a1[i], grp.exp(bg, c1)))) return false;
  }

  Element s = sum_target(grp, gens, J, p.bits);
  return grp.exp(h, p.z_sum) == grp.mul(p.a_sum, grp.exp(s, c));
}

}  // namespace atmcash::nizk
