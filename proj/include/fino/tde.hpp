#pragma once

#include <vector>

#include "fino/group.hpp"

namespace fino {

/// Threshold-ElGamal public material: h = g^sk, a second generator for the
/// ciphertext validity proof, and one verification key per validator.
struct TdePublicKey {
  std::shared_ptr<const SchnorrGroup> group;
  GroupElement h;
  GroupElement g_bar;
  std::vector<GroupElement> vks;  // vks[i] = g^{sk_i}
  std::uint32_t k = 0;
  std::uint32_t n = 0;
};

struct TdeSecretShare {
  std::uint32_t validator_id = 0;
  FieldElement sk_i;  // scalar share under a degree-(k-1) polynomial
};

/// (c1, u_bar, e, f) is the encryptor's proof of knowledge of r with
/// c1 = g^r and u_bar = g_bar^r, Fiat-Shamir-bound to c2 and the label.
struct TdeCiphertext {
  GroupElement c1;
  GroupElement u_bar;
  Bytes c2;  // (m ‖ integrity tag) XOR KDF(h^r, label)
  Bytes label;
  FieldElement e;
  FieldElement f;

  Bytes to_bytes() const;
  static TdeCiphertext from_bytes(const std::shared_ptr<const SchnorrGroup>& g, ByteSpan data);
  Digest digest() const;
  bool operator==(const TdeCiphertext& o) const;
};

/// u_i = c1^{sk_i} plus a DLEQ proof that log_g(vk_i) = log_{c1}(u_i),
/// bound to the ciphertext digest.
struct DecryptionShare {
  std::uint32_t validator_id = 0;
  GroupElement u_i;
  FieldElement e;
  FieldElement f;

  Bytes to_bytes() const;
  static DecryptionShare from_bytes(const std::shared_ptr<const SchnorrGroup>& g, ByteSpan data);
  bool operator==(const DecryptionShare& o) const;
};

/// Shamir-share a fresh secret key in the exponent.
std::pair<TdePublicKey, std::vector<TdeSecretShare>> tde_keygen(
    const std::shared_ptr<const SchnorrGroup>& group, std::uint32_t k, std::uint32_t n, Rng& rng);

/// Deterministic given `randomness` — the Hybrid scheme re-encrypts with a
/// KDF-derived scalar and compares ciphertexts bit-exactly.
TdeCiphertext tde_enc(const TdePublicKey& pk, ByteSpan m, ByteSpan label,
                      const FieldElement& randomness);

bool tde_verify_ciphertext(const TdePublicKey& pk, const TdeCiphertext& c);

/// Throws InvalidCiphertext if the ciphertext's validity proof fails
/// (verified before contributing a share).
DecryptionShare tde_share_gen(const TdePublicKey& pk, const TdeSecretShare& sk,
                              const TdeCiphertext& c);

bool tde_share_verify(const TdePublicKey& pk, std::uint32_t validator_id, const TdeCiphertext& c,
                      const DecryptionShare& ds);

/// Combine k decryption shares (sorted by validator id, first k distinct) and
/// unmask. `verify_shares` re-checks every DLEQ proof; callers that already
/// verified pass false. Throws NotEnoughShares / ShareVerificationFailed /
/// InvalidCiphertext.
Bytes tde_dec(const TdePublicKey& pk, const TdeCiphertext& c, std::vector<DecryptionShare> shares,
              bool verify_shares = true);

/// r = H(tx-key ‖ "te-reenc") as a scalar: the re-encryption randomness for
/// Hybrid post-verification.
FieldElement tde_reenc_randomness(const TdePublicKey& pk, ByteSpan key_bytes);

}  // namespace fino
