#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <random>
#include <string_view>

#include "fino/bytes.hpp"

namespace fino {

/// Seeded, reproducible randomness stream. All protocol randomness
/// (polynomial coefficients, encryption nonces, network delays) flows through
/// one of these so a run is a pure function of its seed.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : gen_(seed) {}

  /// Independent substream: seed' = trunc64(SHA-256(label ‖ seed ‖ index)).
  static Rng derive(std::uint64_t seed, std::string_view label, std::uint64_t index = 0);

  std::uint64_t next_u64() { return gen_(); }

  /// Uniform in [0, n) by rejection sampling.
  std::uint64_t below_u64(std::uint64_t n);

  Bytes bytes(std::size_t n);

  /// Uniform in [0, n) for arbitrary-precision n, by rejection sampling over
  /// bit-length-masked draws. Independent of the GMP internal generator so the
  /// stream is stable across library versions.
  mpz_class below(const mpz_class& n);

 private:
  std::mt19937_64 gen_;
};

}  // namespace fino
