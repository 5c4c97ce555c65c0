#pragma once

#include <initializer_list>
#include <string_view>

#include "fino/bytes.hpp"

namespace fino {

/// Incremental SHA-256.
class Sha256 {
 public:
  Sha256();
  Sha256(const Sha256&) = delete;
  Sha256& operator=(const Sha256&) = delete;
  ~Sha256();

  Sha256& update(ByteSpan data);
  Sha256& update(std::string_view s) { return update(as_span(s)); }
  Digest finish();

 private:
  void* ctx_;
};

Digest sha256(ByteSpan data);

/// Domain-separated hash: H(len(tag) ‖ tag ‖ part_0 ‖ part_1 ‖ ...).
/// Every hash in the protocol carries a distinct tag.
Digest hash_tagged(std::string_view tag, std::initializer_list<ByteSpan> parts);

/// Counter-mode expansion of SHA-256 into an arbitrary-length stream.
Bytes kdf_stream(std::string_view tag, ByteSpan key, std::size_t out_len);

}  // namespace fino
