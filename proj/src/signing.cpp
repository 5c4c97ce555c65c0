#include "fino/signing.hpp"

#include "fino/hash.hpp"

namespace fino {

Signature KeyedHashScheme::sign(std::uint32_t signer, ByteSpan msg) const {
  ByteWriter w;
  w.u64(domain_seed_);
  w.u32(signer);
  Digest key = hash_tagged("fino-sig-key", {as_span(w.bytes())});
  return hash_tagged("fino-sig", {as_span(key), msg});
}

bool KeyedHashScheme::verify(std::uint32_t signer, ByteSpan msg, const Signature& sig) const {
  return sign(signer, msg) == sig;
}

}  // namespace fino
