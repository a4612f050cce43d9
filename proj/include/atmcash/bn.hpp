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

#ifndef ATMCASH_BN_HPP_
#define ATMCASH_BN_HPP_

#include <openssl/bn.h>

#include <memory>

#include "atmcash/bytes.hpp"
#include "atmcash/rng.hpp"

namespace atmcash {

// Value-semantics wrapper over OpenSSL BIGNUM for the RSA-group schemes.
class Bn {
 public:
  Bn() : p_(BN_new()) { check(); }
  explicit Bn(uint64_t v) : p_(BN_new()) {
    check();
    if (!BN_set_word(p_.get(), v)) throw std::runtime_error("BN_set_word");
  }
  Bn(const Bn& o) : p_(BN_dup(o.p_.get())) { check(); }
  Bn(Bn&&) noexcept = default;
  Bn& operator=(const Bn& o) {
    if (this != &o) p_.reset(BN_dup(o.p_.get()));
    return *this;
  }
  Bn& operator=(Bn&&) noexcept = default;

  BIGNUM* get() { return p_.get(); }
  const BIGNUM* get() const { return p_.get(); }

  bool operator==(const Bn& o) const { return BN_cmp(p_.get(), o.p_.get()) == 0; }
  bool is_zero() const { return BN_is_zero(p_.get()); }
  int bits() const { return BN_num_bits(p_.get()); }

  static Bn from_be(ByteView b) {
    Bn r;
    if (!BN_bin2bn(b.data(), int(b.size()), r.p_.get())) throw std::runtime_error("BN_bin2bn");
    return r;
  }
  Bytes to_be() const {
    Bytes out(size_t(BN_num_bytes(p_.get())));
    BN_bn2bin(p_.get(), out.data());
    return out;
  }
  // Fixed-width big-endian (left padded), for canonical encodings.
  Bytes to_be_padded(size_t width) const {
    Bytes out(width, 0);
    if (size_t(BN_num_bytes(p_.get())) > width) throw std::runtime_error("Bn wider than field");
    BN_bn2binpad(p_.get(), out.data(), int(width));
    return out;
  }

  // Uniform value in [0, bound) drawn from rng (not OpenSSL's own RNG, so
  // seeded runs stay deterministic).
  static Bn random_below(Rng& rng, const Bn& bound);
  static Bn random_bits(Rng& rng, int bits);  // uniform in [0, 2^bits)

 private:
  struct Free {
    void operator()(BIGNUM* b) const { BN_free(b); }
  };
  void check() const {
    if (!p_) throw std::bad_alloc();
  }
  std::unique_ptr<BIGNUM, Free> p_;
};

// Shared modular arithmetic helpers (allocate a ctx per call chain).
class BnCtx {
 public:
  BnCtx() : ctx_(BN_CTX_new()) {
    if (!ctx_) throw std::bad_alloc();
  }
  BN_CTX* get() { return ctx_.get(); }

  Bn mod(const Bn& a, const Bn& m);
  Bn mod_mul(const Bn& a, const Bn& b, const Bn& m);
  Bn mod_exp(const Bn& a, const Bn& e, const Bn& m);
  Bn mod_inverse(const Bn& a, const Bn& m);  // throws if not invertible
  Bn mul(const Bn& a, const Bn& b);
  Bn add(const Bn& a, const Bn& b);
  Bn sub(const Bn& a, const Bn& b);
  Bn div(const Bn& a, const Bn& b);
  Bn gcd(const Bn& a, const Bn& b);
  bool is_prime(const Bn& a);

 private:
  struct Free {
    void operator()(BN_CTX* c) const { BN_CTX_free(c); }
  };
  std::unique_ptr<BN_CTX, Free> ctx_;
};

// Deterministic probable prime of exactly `bits` bits from rng.
Bn gen_prime(Rng& rng, int bits);

}  // namespace atmcash

#endif  // ATMCASH_BN_HPP_
