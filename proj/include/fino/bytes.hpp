#pragma once

#include <array>
#include <cstdint>
#include <cstring>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "fino/errors.hpp"

namespace fino {

using Bytes = std::vector<std::uint8_t>;
using ByteSpan = std::span<const std::uint8_t>;
using Digest = std::array<std::uint8_t, 32>;

inline ByteSpan as_span(const Bytes& b) { return ByteSpan(b.data(), b.size()); }
inline ByteSpan as_span(const Digest& d) { return ByteSpan(d.data(), d.size()); }
inline ByteSpan as_span(std::string_view s) {
  return ByteSpan(reinterpret_cast<const std::uint8_t*>(s.data()), s.size());
}

std::string to_hex(ByteSpan data);

/// Big-endian, length-prefixed encoder. All wire formats in this project go
/// through this writer so the byte layout is identical on every platform.
class ByteWriter {
 public:
  void u8(std::uint8_t v) { buf_.push_back(v); }
  void u32(std::uint32_t v) {
    for (int i = 3; i >= 0; --i) buf_.push_back(static_cast<std::uint8_t>(v >> (8 * i)));
  }
  void u64(std::uint64_t v) {
    for (int i = 7; i >= 0; --i) buf_.push_back(static_cast<std::uint8_t>(v >> (8 * i)));
  }
  void raw(ByteSpan data) { buf_.insert(buf_.end(), data.begin(), data.end()); }
  void var_bytes(ByteSpan data) {
    u32(static_cast<std::uint32_t>(data.size()));
    raw(data);
  }

  Bytes take() { return std::move(buf_); }
  const Bytes& bytes() const { return buf_; }

 private:
  Bytes buf_;
};

/// Mirror of ByteWriter; throws DecodeError on truncated input.
class ByteReader {
 public:
  explicit ByteReader(ByteSpan data) : data_(data) {}

  std::uint8_t u8() { return take(1)[0]; }
  std::uint32_t u32() {
    auto s = take(4);
    std::uint32_t v = 0;
    for (auto b : s) v = (v << 8) | b;
    return v;
  }
  std::uint64_t u64() {
    auto s = take(8);
    std::uint64_t v = 0;
    for (auto b : s) v = (v << 8) | b;
    return v;
  }
  ByteSpan raw(std::size_t n) { return take(n); }
  Bytes var_bytes() {
    auto n = u32();
    auto s = take(n);
    return Bytes(s.begin(), s.end());
  }
  bool done() const { return pos_ == data_.size(); }

 private:
  ByteSpan take(std::size_t n) {
    if (pos_ + n > data_.size()) throw DecodeError("truncated input");
    ByteSpan s = data_.subspan(pos_, n);
    pos_ += n;
    return s;
  }

  ByteSpan data_;
  std::size_t pos_ = 0;
};

}  // namespace fino
