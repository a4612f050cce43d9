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

#include "atmcash/group.hpp"

#include <sodium.h>

#include <algorithm>

namespace atmcash::group {

namespace {

// Toy backend: subgroup of quadratic residues of Z_P^*, P = 2Q + 1,
// both prime. Q fits in 62 bits so products fit in __int128.
constexpr uint64_t kToyP = 0x40000000000019c3ULL;  // safe prime
constexpr uint64_t kToyQ = 0x2000000000000ce1ULL;  // (P-1)/2, prime group order
constexpr uint64_t kToyG = 4;                      // 2^2, generator of QR_P

uint64_t toy_mulmod(uint64_t a, uint64_t b, uint64_t m) {
  return uint64_t((unsigned __int128)a * b % m);
}

uint64_t toy_powmod(uint64_t base, uint64_t e, uint64_t m) {
  uint64_t r = 1;
  base %= m;
  while (e) {
    if (e & 1) r = toy_mulmod(r, base, m);
    base = toy_mulmod(base, base, m);
    e >>= 1;
  }
  return r;
}

// Extended Euclid inverse mod m (m prime, a != 0).
uint64_t toy_invmod(uint64_t a, uint64_t m) {
  int64_t t = 0, newt = 1;
  int64_t r = int64_t(m), newr = int64_t(a % m);
  while (newr != 0) {
    int64_t q = r / newr;
    int64_t tmp = t - q * newt;
    t = newt;
    newt = tmp;
    tmp = r - q * newr;
    r = newr;
    newr = tmp;
  }
  if (t < 0) t += int64_t(m);
  return uint64_t(t);
}

uint64_t load_le64(const uint8_t* p) {
  uint64_t v = 0;
  for (int i = 7; i >= 0; i--) v = v << 8 | p[i];
  return v;
}

void store_le64(uint8_t* p, uint64_t v) {
  for (int i = 0; i < 8; i++) p[i] = uint8_t(v >> (8 * i));
}

bool upper_zero(const Bytes32& b) {
  for (size_t i = 8; i < 32; i++)
    if (b[i] != 0) return false;
  return true;
}

Scalar toy_scalar(uint64_t v) {
  Scalar s;
  store_le64(s.b.data(), v % kToyQ);
  return s;
}

uint64_t toy_scalar_val(const Scalar& s) { return load_le64(s.b.data()); }

Element toy_element(uint64_t v) {
  Element e;
  store_le64(e.b.data(), v);
  return e;
}

uint64_t toy_element_val(const Element& e) { return load_le64(e.b.data()); }

bool toy_is_member(uint64_t v) {
  if (v == 0 || v >= kToyP) return false;
  // Euler criterion: QR subgroup has order Q.
  return toy_powmod(v, kToyQ, kToyP) == 1;
}

// Reduce a big little-endian byte string mod m (64-bit m).
uint64_t toy_reduce_bytes(ByteView in, uint64_t m) {
  uint64_t r = 0;
  for (size_t i = in.size(); i-- > 0;) {
    r = (uint64_t)(((unsigned __int128)r << 8 | in[i]) % m);
  }
  return r;
}

void sodium_ready() {
  static const int rc = sodium_init();
  if (rc < 0) throw std::runtime_error("libsodium initialization failed");
}

void domain_hash512(std::string_view domain, ByteView msg, uint8_t out[64]) {
  Transcript t("atmcash/h2x");
  t.add(domain);
  t.add(msg);
  crypto_hash_sha512(out, t.bytes().data(), t.bytes().size());
}

}  // namespace

Group::Group(Profile profile) : profile_(profile) { sodium_ready(); }

Bytes Group::order_be() const {
  if (profile_ == Profile::toy) {
    Bytes out(8);
    for (int i = 0; i < 8; i++) out[i] = uint8_t(kToyQ >> (8 * (7 - i)));
    return out;
  }
  // l = 2^252 + 27742317777372353535851937790883648493
  static const char* hexbe = "1000000000000000000000000000000014def9dea2f79cd65812631a5cf5d3ed";
  return from_hex(hexbe);
}

Scalar Group::s_zero() const { return Scalar{}; }

Scalar Group::s_one() const { return s_from_u64(1); }

Scalar Group::s_from_u64(uint64_t v) const {
  if (profile_ == Profile::toy) return toy_scalar(v);
  Scalar s;
  store_le64(s.b.data(), v);
  return s;
}

Scalar Group::s_add(const Scalar& a, const Scalar& b) const {
  Scalar r;
  if (profile_ == Profile::toy) {
    unsigned __int128 sum = (unsigned __int128)toy_scalar_val(a) + toy_scalar_val(b);
    return toy_scalar(uint64_t(sum % kToyQ));
  }
  crypto_core_ristretto255_scalar_add(r.b.data(), a.b.data(), b.b.data());
  return r;
}

Scalar Group::s_sub(const Scalar& a, const Scalar& b) const {
  Scalar r;
  if (profile_ == Profile::toy) {
    uint64_t av = toy_scalar_val(a), bv = toy_scalar_val(b);
    return toy_scalar(av >= bv ? av - bv : av + kToyQ - bv);
  }
  crypto_core_ristretto255_scalar_sub(r.b.data(), a.b.data(), b.b.data());
  return r;
}

Scalar Group::s_mul(const Scalar& a, const Scalar& b) const {
  Scalar r;
  if (profile_ == Profile::toy) {
    return toy_scalar(toy_mulmod(toy_scalar_val(a), toy_scalar_val(b), kToyQ));
  }
  crypto_core_ristretto255_scalar_mul(r.b.data(), a.b.data(), b.b.data());
  return r;
}

Scalar Group::s_neg(const Scalar& a) const {
  Scalar r;
  if (profile_ == Profile::toy) {
    uint64_t av = toy_scalar_val(a);
    return toy_scalar(av == 0 ? 0 : kToyQ - av);
  }
  crypto_core_ristretto255_scalar_negate(r.b.data(), a.b.data());
  return r;
}

Scalar Group::s_invert(const Scalar& a) const {
  if (s_is_zero(a)) throw ZeroInverse();
  Scalar r;
  if (profile_ == Profile::toy) {
    return toy_scalar(toy_invmod(toy_scalar_val(a), kToyQ));
  }
  if (crypto_core_ristretto255_scalar_invert(r.b.data(), a.b.data()) != 0) throw ZeroInverse();
  return r;
}

bool Group::s_is_zero(const Scalar& a) const { return a == Scalar{}; }

Scalar Group::s_random(Rng& rng) const {
  uint8_t wide[64];
  rng.fill(wide, sizeof(wide));
  return s_reduce512(wide);
}

Scalar Group::s_reduce512(const uint8_t wide[64]) const {
  Scalar r;
  if (profile_ == Profile::toy) {
    return toy_scalar(toy_reduce_bytes(ByteView(wide, 64), kToyQ));
  }
  crypto_core_ristretto255_scalar_reduce(r.b.data(), wide);
  return r;
}

std::optional<Scalar> Group::s_decode(ByteView in) const {
  if (in.size() != 32) return std::nullopt;
  Scalar s;
  std::memcpy(s.b.data(), in.data(), 32);
  if (profile_ == Profile::toy) {
    if (!upper_zero(s.b) || toy_scalar_val(s) >= kToyQ) return std::nullopt;
    return s;
  }
  // canonical iff reducing is a no-op
  uint8_t wide[64] = {};
  std::memcpy(wide, in.data(), 32);
  Scalar reduced;
  crypto_core_ristretto255_scalar_reduce(reduced.b.data(), wide);
  if (!(reduced == s)) return std::nullopt;
  return s;
}

Element Group::identity() const {
  if (profile_ == Profile::toy) return toy_element(1);
  return Element{};  // all-zero string is the canonical ristretto identity
}

Element Group::generator() const {
  if (profile_ == Profile::toy) return toy_element(kToyG);
  Element e;
  Scalar one = s_one();
  crypto_scalarmult_ristretto255_base(e.b.data(), one.b.data());
  return e;
}

bool Group::is_identity(const Element& a) const { return a == identity(); }

Element Group::mul(const Element& a, const Element& b) const {
  Element r;
  if (profile_ == Profile::toy) {
    return toy_element(toy_mulmod(toy_element_val(a), toy_element_val(b), kToyP));
  }
  if (crypto_core_ristretto255_add(r.b.data(), a.b.data(), b.b.data()) != 0)
    throw InvalidEncoding("group mul on invalid element");
  return r;
}

Element Group::div(const Element& a, const Element& b) const {
  Element r;
  if (profile_ == Profile::toy) {
    uint64_t binv = toy_invmod(toy_element_val(b), kToyP);
    return toy_element(toy_mulmod(toy_element_val(a), binv, kToyP));
  }
  if (crypto_core_ristretto255_sub(r.b.data(), a.b.data(), b.b.data()) != 0)
    throw InvalidEncoding("group div on invalid element");
  return r;
}

Element Group::inv(const Element& a) const { return div(identity(), a); }

Element Group::exp(const Element& base, const Scalar& e) const {
  if (profile_ == Profile::toy) {
    return toy_element(toy_powmod(toy_element_val(base), toy_scalar_val(e), kToyP));
  }
  Element r;
  // libsodium reports an identity result (including e = 0) as failure;
  // distinguish that from an invalid base.
  if (crypto_scalarmult_ristretto255(r.b.data(), e.b.data(), base.b.data()) != 0) {
    if (!crypto_core_ristretto255_is_valid_point(base.b.data()))
      throw InvalidEncoding("exp on invalid element");
    return identity();
  }
  return r;
}

Element Group::exp_g(const Scalar& e) const {
  if (profile_ == Profile::toy) return exp(generator(), e);
  Element r;
  if (crypto_scalarmult_ristretto255_base(r.b.data(), e.b.data()) != 0) return identity();
  return r;
}

std::optional<Element> Group::e_decode(ByteView in) const {
  if (in.size() != 32) return std::nullopt;
  Element e;
  std::memcpy(e.b.data(), in.data(), 32);
  if (profile_ == Profile::toy) {
    if (!upper_zero(e.b) || !toy_is_member(toy_element_val(e))) return std::nullopt;
    return e;
  }
  if (is_identity(e)) return e;
  if (!crypto_core_ristretto255_is_valid_point(e.b.data())) return std::nullopt;
  return e;
}

Element Group::hash_to_group(std::string_view domain, ByteView msg) const {
  uint8_t wide[64];
  domain_hash512(domain, msg, wide);
  if (profile_ == Profile::toy) {
    // try-and-increment, squaring into the QR subgroup
    Bytes buf(wide, wide + 64);
    buf.push_back(0);
    for (uint32_t ctr = 0;; ctr++) {
      buf[64] = uint8_t(ctr);
      uint8_t h[64];
      crypto_hash_sha512(h, buf.data(), buf.size());
      uint64_t x = toy_reduce_bytes(ByteView(h, 64), kToyP);
      uint64_t sq = toy_mulmod(x, x, kToyP);
      if (sq != 0 && sq != 1) return toy_element(sq);
    }
  }
  Element e;
  crypto_core_ristretto255_from_hash(e.b.data(), wide);
  return e;
}

Scalar Group::hash_to_scalar(std::string_view domain, ByteView msg) const {
  uint8_t wide[64];
  domain_hash512(domain, msg, wide);
  return s_reduce512(wide);
}

GeneratorSet derive_generators(const Group& grp, ByteView seed, size_t count) {
  if (count < 1) throw std::invalid_argument("derive_generators: count must be >= 1");
  GeneratorSet out;
  out.g = grp.generator();
  std::vector<Element> seen{out.g};
  for (size_t i = 0; i < count + 1; i++) {
    Bytes material(seed.begin(), seed.end());
    append_u32be(material, uint32_t(i));
    Element e = grp.hash_to_group("atmcash/gens", view(material));
    // hash-to-group makes collisions negligible at production size; the toy
    // group is small enough that we re-derive on a hit
    for (uint32_t bump = 0; std::find(seen.begin(), seen.end(), e) != seen.end(); bump++) {
      Bytes retry = material;
      append_u32be(retry, bump);
      e = grp.hash_to_group("atmcash/gens", view(retry));
    }
    seen.push_back(e);
    if (i < count)
      out.gs.push_back(e);
    else
      out.gprime = e;
  }
  return out;
}

}  // namespace atmcash::group
