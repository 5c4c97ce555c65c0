#pragma once

#include <cstdint>
#include <vector>

#include "fino/polynomial.hpp"

namespace fino {

/// One evaluation of the sharing polynomial. The evaluation point for
/// validator i is fixed at x = i + 1 (never 0, where the secret lives).
struct Share {
  std::uint32_t validator_id = 0;
  FieldElement x;
  FieldElement y;

  /// Fixed-width big-endian: validator_id ‖ x ‖ y. This is the Merkle leaf
  /// encoding, so it must be bit-exact between dealer and verifier.
  Bytes to_bytes() const;
  static Share from_bytes(const std::shared_ptr<const Field>& field, ByteSpan data);

  bool operator==(const Share& o) const = default;
};

/// (k, n) Shamir split: shares are evaluations of a fresh degree-(k-1)
/// polynomial with P(0) = secret.
std::vector<Share> sss_split(const FieldElement& secret, std::size_t k, std::size_t n, Rng& rng);

/// Shares of a caller-supplied polynomial (deterministic dealings, tests).
std::vector<Share> sss_shares_of(const Polynomial& poly, std::size_t n);

/// Reconstruct the secret from the first k shares after sorting by
/// validator_id (deterministic selection). Throws NotEnoughShares /
/// DuplicateAbscissa.
FieldElement sss_combine(std::vector<Share> shares, std::size_t k);

/// Interpolate the full polynomial through all given shares.
Polynomial sss_interpolate(const std::vector<Share>& shares);

/// Interpolate from exactly k shares, then re-evaluate at every x = 1..n.
/// For an honest dealing the result is identical for every k-subset; an
/// inconsistent dealing produces subset-dependent output, which is what
/// post-verification catches.
std::vector<Share> sss_regenerate_all(const std::vector<Share>& shares, std::size_t n);

}  // namespace fino
