#pragma once

#include <gmpxx.h>

#include <memory>
#include <string_view>

#include "fino/field.hpp"

namespace fino {

class GroupElement;

/// Prime-order subgroup of Z_p^* for a safe prime p = 2q + 1 ("Schnorr
/// group"). Scalars live in GF(q). Behind this interface so an
/// elliptic-curve backend could be swapped in without touching callers.
class SchnorrGroup : public std::enable_shared_from_this<SchnorrGroup> {
 public:
  /// Well-known MODP safe-prime groups (1536/2048/3072/4096 bits),
  /// reconstructed from their defining formula and verified prime.
  /// Generator 2 has prime order q = (p-1)/2.
  static std::shared_ptr<const SchnorrGroup> modp(int bits);

  /// Deterministically generated safe-prime group for tests and simulation
  /// runs, where modexp speed matters more than key size.
  static std::shared_ptr<const SchnorrGroup> generate(int bits, std::uint64_t seed);

  /// modp() for bits >= 1536, generate() below that.
  static std::shared_ptr<const SchnorrGroup> for_bits(int bits, std::uint64_t seed = 0);

  const mpz_class& p() const { return p_; }
  const mpz_class& q() const { return q_; }
  GroupElement generator() const;
  GroupElement identity() const;
  const std::shared_ptr<const Field>& scalar_field() const { return scalar_field_; }
  std::size_t element_byte_len() const { return elem_byte_len_; }

  GroupElement exp(const GroupElement& base, const FieldElement& scalar) const;
  GroupElement exp_g(const FieldElement& scalar) const;  // generator^scalar
  GroupElement mul(const GroupElement& a, const GroupElement& b) const;
  GroupElement inv(const GroupElement& a) const;

  /// Deterministic scalar from bytes (uniform mod q up to negligible bias).
  FieldElement hash_to_scalar(std::string_view tag, std::initializer_list<ByteSpan> parts) const;

  /// Deterministic subgroup element with unknown discrete log w.r.t. g.
  GroupElement hash_to_group(std::string_view tag) const;

  /// Range-checked decode (1 <= v < p). Subgroup membership is not enforced;
  /// proof verification fails for non-subgroup inputs.
  GroupElement element_from_bytes(ByteSpan data) const;

  bool operator==(const SchnorrGroup& o) const { return p_ == o.p_ && g_ == o.g_; }

 protected:
  SchnorrGroup(mpz_class p, mpz_class q, mpz_class g);

 private:
  mpz_class p_, q_, g_;
  std::shared_ptr<const Field> scalar_field_;
  std::size_t elem_byte_len_;
};

class GroupElement {
 public:
  GroupElement() = default;

  const mpz_class& value() const { return v_; }
  const std::shared_ptr<const SchnorrGroup>& group() const { return group_; }
  bool is_identity() const { return v_ == 1; }

  bool operator==(const GroupElement& o) const;
  Bytes to_bytes() const;  // fixed-width big-endian

 private:
  friend class SchnorrGroup;
  GroupElement(mpz_class v, std::shared_ptr<const SchnorrGroup> g)
      : v_(std::move(v)), group_(std::move(g)) {}

  mpz_class v_;
  std::shared_ptr<const SchnorrGroup> group_;
};

}  // namespace fino
