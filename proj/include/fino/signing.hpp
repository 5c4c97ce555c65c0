#pragma once

#include <cstdint>
#include <string_view>

#include "fino/bytes.hpp"

namespace fino {

using Signature = Digest;

/// Abstract signing so a real scheme can be swapped in for benchmarks.
/// Signer ids cover validators (0..N-1) and clients (N..).
class SignatureScheme {
 public:
  virtual ~SignatureScheme() = default;
  virtual Signature sign(std::uint32_t signer, ByteSpan msg) const = 0;
  virtual bool verify(std::uint32_t signer, ByteSpan msg, const Signature& sig) const = 0;
};

/// Keyed-hash scheme for the simulator trust domain: every party's key is
/// derived from a shared domain seed, so verification is recomputation.
/// Deterministic and fast; unforgeability is a model assumption here, not a
/// cryptographic one.
class KeyedHashScheme final : public SignatureScheme {
 public:
  explicit KeyedHashScheme(std::uint64_t domain_seed) : domain_seed_(domain_seed) {}

  Signature sign(std::uint32_t signer, ByteSpan msg) const override;
  bool verify(std::uint32_t signer, ByteSpan msg, const Signature& sig) const override;

 private:
  std::uint64_t domain_seed_;
};

}  // namespace fino
