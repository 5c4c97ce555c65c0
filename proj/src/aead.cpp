#include "fino/aead.hpp"

#include <openssl/evp.h>

#include <cassert>
#include <stdexcept>

#include "fino/hash.hpp"

namespace fino {

namespace {
constexpr std::size_t kTagLen = 16;
const std::uint8_t kZeroNonce[12] = {};
}  // namespace

Bytes payload_key(ByteSpan tx_key_bytes) {
  Digest d = hash_tagged("fino-payload-key", {tx_key_bytes});
  return Bytes(d.begin(), d.end());
}

Bytes aead_encrypt(ByteSpan key32, ByteSpan plaintext) {
  if (key32.size() != 32) throw std::invalid_argument("aead_encrypt: key must be 32 bytes");
  EVP_CIPHER_CTX* ctx = EVP_CIPHER_CTX_new();
  EVP_EncryptInit_ex(ctx, EVP_aes_256_gcm(), nullptr, key32.data(), kZeroNonce);
  Bytes out(plaintext.size() + kTagLen);
  int len = 0;
  EVP_EncryptUpdate(ctx, out.data(), &len, plaintext.data(), static_cast<int>(plaintext.size()));
  int fin = 0;
  EVP_EncryptFinal_ex(ctx, out.data() + len, &fin);
  assert(len + fin == static_cast<int>(plaintext.size()));
  EVP_CIPHER_CTX_ctrl(ctx, EVP_CTRL_GCM_GET_TAG, kTagLen, out.data() + plaintext.size());
  EVP_CIPHER_CTX_free(ctx);
  return out;
}

std::optional<Bytes> aead_decrypt(ByteSpan key32, ByteSpan ciphertext) {
  if (key32.size() != 32) throw std::invalid_argument("aead_decrypt: key must be 32 bytes");
  if (ciphertext.size() < kTagLen) return std::nullopt;
  std::size_t ct_len = ciphertext.size() - kTagLen;
  EVP_CIPHER_CTX* ctx = EVP_CIPHER_CTX_new();
  EVP_DecryptInit_ex(ctx, EVP_aes_256_gcm(), nullptr, key32.data(), kZeroNonce);
  Bytes out(ct_len);
  int len = 0;
  EVP_DecryptUpdate(ctx, out.data(), &len, ciphertext.data(), static_cast<int>(ct_len));
  Bytes tag(ciphertext.begin() + static_cast<std::ptrdiff_t>(ct_len), ciphertext.end());
  EVP_CIPHER_CTX_ctrl(ctx, EVP_CTRL_GCM_SET_TAG, kTagLen, tag.data());
  int fin = 0;
  int ok = EVP_DecryptFinal_ex(ctx, out.data() + len, &fin);
  EVP_CIPHER_CTX_free(ctx);
  if (ok != 1) return std::nullopt;
  out.resize(static_cast<std::size_t>(len + fin));
  return out;
}

}  // namespace fino
