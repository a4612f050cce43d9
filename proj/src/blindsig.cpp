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

#include "atmcash/blindsig.hpp"

#include <sodium.h>

namespace atmcash {

Bn BnCtx::mod(const Bn& a, const Bn& m) {
  Bn r;
  if (!BN_nnmod(r.get(), a.get(), m.get(), get())) throw std::runtime_error("BN_nnmod");
  return r;
}

Bn BnCtx::mod_mul(const Bn& a, const Bn& b, const Bn& m) {
  Bn r;
  if (!BN_mod_mul(r.get(), a.get(), b.get(), m.get(), get())) throw std::runtime_error("BN_mod_mul");
  return r;
}

Bn BnCtx::mod_exp(const Bn& a, const Bn& e, const Bn& m) {
  Bn r;
  if (!BN_mod_exp(r.get(), a.get(), e.get(), m.get(), get())) throw std::runtime_error("BN_mod_exp");
  return r;
}

Bn BnCtx::mod_inverse(const Bn& a, const Bn& m) {
  Bn r;
  if (!BN_mod_inverse(r.get(), a.get(), m.get(), get()))
    throw std::domain_error("BN_mod_inverse: not invertible");
  return r;
}

Bn BnCtx::mul(const Bn& a, const Bn& b) {
  Bn r;
  if (!BN_mul(r.get(), a.get(), b.get(), get())) throw std::runtime_error("BN_mul");
  return r;
}

Bn BnCtx::add(const Bn& a, const Bn& b) {
  Bn r;
  if (!BN_add(r.get(), a.get(), b.get())) throw std::runtime_error("BN_add");
  return r;
}

Bn BnCtx::sub(const Bn& a, const Bn& b) {
  Bn r;
  if (!BN_sub(r.get(), a.get(), b.get())) throw std::runtime_error("BN_sub");
  return r;
}

Bn BnCtx::div(const Bn& a, const Bn& b) {
  Bn r;
  if (!BN_div(r.get(), nullptr, a.get(), b.get(), get())) throw std::runtime_error("BN_div");
  return r;
}

Bn BnCtx::gcd(const Bn& a, const Bn& b) {
  Bn r;
  if (!BN_gcd(r.get(), a.get(), b.get(), get())) throw std::runtime_error("BN_gcd");
  return r;
}

bool BnCtx::is_prime(const Bn& a) {
  int rc = BN_check_prime(a.get(), get(), nullptr);
  if (rc < 0) throw std::runtime_error("BN_check_prime");
  return rc == 1;
}

Bn Bn::random_bits(Rng& rng, int bits) {
  if (bits <= 0) return Bn(0);
  Bytes buf(size_t((bits + 7) / 8));
  rng.fill(buf.data(), buf.size());
  int excess = int(buf.size()) * 8 - bits;
  buf[0] &= uint8_t(0xFF >> excess);
  return Bn::from_be(view(buf));
}

Bn Bn::random_below(Rng& rng, const Bn& bound) {
  if (bound.is_zero()) throw std::invalid_argument("random_below: zero bound");
  int bits = bound.bits();
  for (;;) {
    Bn candidate = random_bits(rng, bits);
    if (BN_cmp(candidate.get(), bound.get()) < 0) return candidate;
  }
}

Bn gen_prime(Rng& rng, int bits) {
  if (bits < 16) throw std::invalid_argument("gen_prime: too few bits");
  BnCtx ctx;
  for (;;) {
    Bn candidate = Bn::random_bits(rng, bits);
    // force exact width and oddness
    BN_set_bit(candidate.get(), bits - 1);
    BN_set_bit(candidate.get(), bits - 2);
    BN_set_bit(candidate.get(), 0);
    if (ctx.is_prime(candidate)) return candidate;
  }
}

namespace blindsig {

namespace {

// MGF1-style expansion of the digest over the full modulus domain, reduced
// mod n with 128 bits of slack so the output is near-uniform.
Bn expand_to_modulus(const Bn& n, ByteView msg) {
  size_t want = size_t((n.bits() + 7) / 8) + 16;
  Bytes stream;
  uint32_t ctr = 0;
  while (stream.size() < want) {
    Transcript t("atmcash/fdh");
    t.add(msg);
    uint8_t cb[4] = {uint8_t(ctr >> 24), uint8_t(ctr >> 16), uint8_t(ctr >> 8), uint8_t(ctr)};
    t.add(ByteView(cb, 4));
    uint8_t block[64];
    crypto_hash_sha512(block, t.bytes().data(), t.bytes().size());
    append(stream, ByteView(block, 64));
    ctr++;
  }
  stream.resize(want);
  BnCtx ctx;
  return ctx.mod(Bn::from_be(view(stream)), n);
}

}  // namespace

Bn fdh(const PublicKey& pk, ByteView msg) { return expand_to_modulus(pk.n, msg); }

Keypair keygen(Rng& rng, int modulus_bits) {
  BnCtx ctx;
  Bn e(65537);
  for (;;) {
    Bn p = gen_prime(rng, modulus_bits / 2);
    Bn q = gen_prime(rng, modulus_bits - modulus_bits / 2);
    if (p == q) continue;
    Bn n = ctx.mul(p, q);
    Bn phi = ctx.mul(ctx.sub(p, Bn(1)), ctx.sub(q, Bn(1)));
    if (!(ctx.gcd(e, phi) == Bn(1))) continue;
    Bn d = ctx.mod_inverse(e, phi);
    return Keypair{PublicKey{n, e}, SecretKey{d}};
  }
}

std::pair<Blinded, BlindingFactor> blind(const PublicKey& pk, ByteView msg, Rng& rng) {
  BnCtx ctx;
  Bn m = fdh(pk, msg);
  Bn r;
  do {
    r = Bn::random_below(rng, pk.n);
  } while (r.is_zero() || !(ctx.gcd(r, pk.n) == Bn(1)));
  Bn k = ctx.mod_mul(m, ctx.mod_exp(r, pk.e, pk.n), pk.n);
  return {Blinded{k}, BlindingFactor{r}};
}

Signature sign_blinded(const PublicKey& pk, const SecretKey& sk, const Blinded& blinded) {
  BnCtx ctx;
  return Signature{ctx.mod_exp(blinded.k, sk.d, pk.n)};
}

Signature unblind(const PublicKey& pk, const Signature& blinded_sig, BlindingFactor& r) {
  BnCtx ctx;
  Bn rinv = ctx.mod_inverse(r.r, pk.n);
  Signature sig{ctx.mod_mul(blinded_sig.s, rinv, pk.n)};
  BN_clear(r.r.get());
  return sig;
}

bool verify(const PublicKey& pk, ByteView msg, const Signature& sig) {
  if (sig.s.is_zero() || BN_cmp(sig.s.get(), pk.n.get()) >= 0) return false;
  BnCtx ctx;
  return ctx.mod_exp(sig.s, pk.e, pk.n) == fdh(pk, msg);
}

}  // namespace blindsig
}  // namespace atmcash
