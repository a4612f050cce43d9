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

#include "atmcash/rng.hpp"

#include <sodium.h>

namespace atmcash {

namespace {

void ensure_sodium() {
  static const int rc = sodium_init();
  if (rc < 0) throw std::runtime_error("libsodium initialization failed");
}

}  // namespace

Rng::Rng() : deterministic_(false) { ensure_sodium(); }

Rng::Rng(const Bytes32& seed) : deterministic_(true), seed_(seed) { ensure_sodium(); }

Rng::Rng(uint64_t seed) : deterministic_(true) {
  ensure_sodium();
  uint8_t in[8];
  for (int i = 0; i < 8; i++) in[i] = uint8_t(seed >> (8 * i));
  crypto_hash_sha256(seed_.data(), in, sizeof(in));
}

void Rng::fill(void* buf, size_t len) {
  if (!deterministic_) {
    randombytes_buf(buf, len);
    return;
  }
  // Per-call subseed: H(seed || counter). randombytes_buf_deterministic
  // expands a 32-byte seed into an arbitrary-length stream.
  uint8_t block[40];
  std::memcpy(block, seed_.data(), 32);
  uint64_t c = counter_++;
  for (int i = 0; i < 8; i++) block[32 + i] = uint8_t(c >> (8 * i));
  Bytes32 sub;
  crypto_hash_sha256(sub.data(), block, sizeof(block));
  randombytes_buf_deterministic(buf, len, sub.data());
}

Bytes32 Rng::bytes32() {
  Bytes32 out;
  fill(out.data(), out.size());
  return out;
}

Bytes Rng::bytes(size_t len) {
  Bytes out(len);
  if (len > 0) fill(out.data(), len);
  return out;
}

uint64_t Rng::u64() {
  uint64_t v;
  fill(&v, sizeof(v));
  return v;
}

uint64_t Rng::uniform(uint64_t bound) {
  if (bound == 0) throw std::invalid_argument("uniform: zero bound");
  // rejection sampling on the top multiple of bound
  uint64_t limit = UINT64_MAX - UINT64_MAX % bound;
  for (;;) {
    uint64_t v = u64();
    if (v < limit) return v % bound;
  }
}

Rng Rng::fork(std::string_view label) {
  Bytes block;
  block.insert(block.end(), seed_.begin(), seed_.end());
  block.push_back(0xFF);
  append(block, view(label));
  if (!deterministic_) {
    // fork of a system rng is another system rng
    return Rng();
  }
  Bytes32 sub;
  crypto_hash_sha256(sub.data(), block.data(), block.size());
  return Rng(sub);
}

std::string to_hex(ByteView b) {
  static const char* digits = "0123456789abcdef";
  std::string out;
  out.reserve(b.size() * 2);
  for (uint8_t c : b) {
    out.push_back(digits[c >> 4]);
    out.push_back(digits[c & 0xF]);
  }
  return out;
}

Bytes from_hex(std::string_view s) {
  auto nibble = [](char c) -> int {
    if (c >= '0' && c <= '9') return c - '0';
    if (c >= 'a' && c <= 'f') return c - 'a' + 10;
    if (c >= 'A' && c <= 'F') return c - 'A' + 10;
    return -1;
  };
  if (s.size() % 2 != 0) throw std::invalid_argument("from_hex: odd length");
  Bytes out(s.size() / 2);
  for (size_t i = 0; i < out.size(); i++) {
    int hi = nibble(s[2 * i]), lo = nibble(s[2 * i + 1]);
    if (hi < 0 || lo < 0) throw std::invalid_argument("from_hex: bad digit");
    out[i] = uint8_t(hi << 4 | lo);
  }
  return out;
}

bool contains_bytes(ByteView hay, ByteView needle) {
  if (needle.empty() || needle.size() > hay.size()) return false;
  for (size_t i = 0; i + needle.size() <= hay.size(); i++) {
    if (std::memcmp(hay.data() + i, needle.data(), needle.size()) == 0) return true;
  }
  return false;
}

}  // namespace atmcash
