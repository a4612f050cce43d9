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

#ifndef ATMCASH_GROUP_HPP_
#define ATMCASH_GROUP_HPP_

#include <optional>

#include "atmcash/bytes.hpp"
#include "atmcash/rng.hpp"

namespace atmcash::group {

// production: ristretto255, prime order ~2^252 (128-bit security class).
// toy: the order-q subgroup of Z_P^* for a 62-bit safe prime P = 2q+1.
// Same code paths, brute-forceable parameters; test profiles only.
enum class Profile : uint8_t { production = 0, toy = 1 };

struct ZeroInverse : std::domain_error {
  ZeroInverse() : std::domain_error("scalar inversion of zero") {}
};
struct InvalidEncoding : std::runtime_error {
  explicit InvalidEncoding(const char* what) : std::runtime_error(what) {}
};

// Scalars and elements are immutable 32-byte values in the backend's
// canonical little-endian / compressed encoding. Values are kept canonical at
// construction, so equality is byte equality.
struct Scalar {
  Bytes32 b{};
  bool operator==(const Scalar&) const = default;
};

struct Element {
  Bytes32 b{};
  bool operator==(const Element&) const = default;
};

class Group {
 public:
  explicit Group(Profile profile);

  Profile profile() const { return profile_; }
  // Order of the group (also the scalar field modulus), as big-endian bytes.
  Bytes order_be() const;

  // --- scalar field ---
  Scalar s_zero() const;
  Scalar s_one() const;
  Scalar s_from_u64(uint64_t v) const;
  Scalar s_add(const Scalar& a, const Scalar& b) const;
  Scalar s_sub(const Scalar& a, const Scalar& b) const;
  Scalar s_mul(const Scalar& a, const Scalar& b) const;
  Scalar s_neg(const Scalar& a) const;
  Scalar s_invert(const Scalar& a) const;  // throws ZeroInverse
  bool s_is_zero(const Scalar& a) const;
  Scalar s_random(Rng& rng) const;
  // Uniform scalar from a 64-byte string.
  Scalar s_reduce512(const uint8_t wide[64]) const;
  // Canonical 32-byte little-endian decoding; rejects values >= order.
  std::optional<Scalar> s_decode(ByteView in) const;

  // --- group ---
  Element identity() const;
  Element generator() const;
  bool is_identity(const Element& a) const;
  Element mul(const Element& a, const Element& b) const;       // group op
  Element div(const Element& a, const Element& b) const;       // a * b^-1
  Element inv(const Element& a) const;
  Element exp(const Element& base, const Scalar& e) const;     // base^e
  Element exp_g(const Scalar& e) const;                        // generator^e
  // Validated canonical decoding.
  std::optional<Element> e_decode(ByteView in) const;

  // Uniform map to the group, domain separated; discrete logs between
  // outputs of distinct inputs are unknown to everyone.
  Element hash_to_group(std::string_view domain, ByteView msg) const;

  // Deterministic uniform scalar from a domain-separated hash.
  Scalar hash_to_scalar(std::string_view domain, ByteView msg) const;

 private:
  Profile profile_;
};

// n + 1 independent generators for multi-message Pedersen commitments plus the
// group's base generator. Derived by hash-to-group so nobody knows discrete
// log relations among them.
struct GeneratorSet {
  Element g;                  // base generator
  std::vector<Element> gs;    // g1..gn (message bases)
  Element gprime;             // blinding base
  size_t count() const { return gs.size(); }
};

GeneratorSet derive_generators(const Group& grp, ByteView seed, size_t count);

}  // namespace atmcash::group

#endif  // ATMCASH_GROUP_HPP_
