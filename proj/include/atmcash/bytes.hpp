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

#ifndef ATMCASH_BYTES_HPP_
#define ATMCASH_BYTES_HPP_

#include <array>
#include <cstdint>
#include <cstring>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace atmcash {

using Bytes = std::vector<uint8_t>;
using Bytes32 = std::array<uint8_t, 32>;
using ByteView = std::span<const uint8_t>;

inline ByteView view(const Bytes& b) { return ByteView(b.data(), b.size()); }
inline ByteView view(const Bytes32& b) { return ByteView(b.data(), b.size()); }
inline ByteView view(std::string_view s) {
  return ByteView(reinterpret_cast<const uint8_t*>(s.data()), s.size());
}

inline void append(Bytes& out, ByteView in) { out.insert(out.end(), in.begin(), in.end()); }

inline void append_u32be(Bytes& out, uint32_t v) {
  out.push_back(uint8_t(v >> 24));
  out.push_back(uint8_t(v >> 16));
  out.push_back(uint8_t(v >> 8));
  out.push_back(uint8_t(v));
}

inline uint32_t read_u32be(const uint8_t* p) {
  return uint32_t(p[0]) << 24 | uint32_t(p[1]) << 16 | uint32_t(p[2]) << 8 | uint32_t(p[3]);
}

// Length-prefixed framing used for every hash transcript, so no two distinct
// field sequences can produce the same byte stream.
class Transcript {
 public:
  explicit Transcript(std::string_view label) { add(view(label)); }
  void add(ByteView field) {
    append_u32be(buf_, uint32_t(field.size()));
    append(buf_, field);
  }
  void add(std::string_view field) { add(view(field)); }
  const Bytes& bytes() const { return buf_; }

 private:
  Bytes buf_;
};

std::string to_hex(ByteView b);
Bytes from_hex(std::string_view s);

// True iff `needle` occurs as a contiguous byte substring of `hay`.
bool contains_bytes(ByteView hay, ByteView needle);

}  // namespace atmcash

#endif  // ATMCASH_BYTES_HPP_
