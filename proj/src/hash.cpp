#include "fino/hash.hpp"

#include <openssl/evp.h>

#include <cassert>

namespace fino {

Sha256::Sha256() {
  auto* ctx = EVP_MD_CTX_new();
  EVP_DigestInit_ex(ctx, EVP_sha256(), nullptr);
  ctx_ = ctx;
}

Sha256::~Sha256() { EVP_MD_CTX_free(static_cast<EVP_MD_CTX*>(ctx_)); }

Sha256& Sha256::update(ByteSpan data) {
  EVP_DigestUpdate(static_cast<EVP_MD_CTX*>(ctx_), data.data(), data.size());
  return *this;
}

Digest Sha256::finish() {
  Digest out{};
  unsigned int len = 0;
  EVP_DigestFinal_ex(static_cast<EVP_MD_CTX*>(ctx_), out.data(), &len);
  assert(len == out.size());
  return out;
}

Digest sha256(ByteSpan data) { return Sha256().update(data).finish(); }

Digest hash_tagged(std::string_view tag, std::initializer_list<ByteSpan> parts) {
  Sha256 h;
  std::uint8_t tag_len = static_cast<std::uint8_t>(tag.size());
  h.update(ByteSpan(&tag_len, 1));
  h.update(tag);
  for (const auto& p : parts) h.update(p);
  return h.finish();
}

Bytes kdf_stream(std::string_view tag, ByteSpan key, std::size_t out_len) {
  Bytes out;
  out.reserve(out_len);
  std::uint32_t counter = 0;
  while (out.size() < out_len) {
    std::uint8_t ctr[4] = {static_cast<std::uint8_t>(counter >> 24),
                           static_cast<std::uint8_t>(counter >> 16),
                           static_cast<std::uint8_t>(counter >> 8),
                           static_cast<std::uint8_t>(counter)};
    Digest block = hash_tagged(tag, {key, ByteSpan(ctr, 4)});
    std::size_t want = std::min(block.size(), out_len - out.size());
    out.insert(out.end(), block.begin(), block.begin() + want);
    ++counter;
  }
  return out;
}

std::string to_hex(ByteSpan data) {
  static const char* digits = "0123456789abcdef";
  std::string s;
  s.reserve(data.size() * 2);
  for (auto b : data) {
    s.push_back(digits[b >> 4]);
    s.push_back(digits[b & 0xf]);
  }
  return s;
}

}  // namespace fino
