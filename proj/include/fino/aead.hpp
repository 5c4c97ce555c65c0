#pragma once

#include <optional>

#include "fino/bytes.hpp"

namespace fino {

/// AES-256-GCM with a zero nonce. Keys are fresh per transaction (derived
/// from tx-key), so nonce reuse cannot occur. Output is ciphertext ‖ 16-byte
/// tag.
Bytes aead_encrypt(ByteSpan key32, ByteSpan plaintext);

/// nullopt on authentication failure — a wrong reconstructed key surfaces
/// here as a deterministic rejection.
std::optional<Bytes> aead_decrypt(ByteSpan key32, ByteSpan ciphertext);

/// Payload key from the shared tx-key bytes.
Bytes payload_key(ByteSpan tx_key_bytes);

}  // namespace fino
