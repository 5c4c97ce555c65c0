#include "fino/rng.hpp"

#include <stdexcept>

#include "fino/hash.hpp"

namespace fino {

Rng Rng::derive(std::uint64_t seed, std::string_view label, std::uint64_t index) {
  ByteWriter w;
  w.u64(seed);
  w.u64(index);
  Digest d = hash_tagged("fino-rng-derive", {as_span(label), as_span(w.bytes())});
  std::uint64_t s = 0;
  for (int i = 0; i < 8; ++i) s = (s << 8) | d[i];
  return Rng(s);
}

std::uint64_t Rng::below_u64(std::uint64_t n) {
  if (n == 0) throw std::invalid_argument("Rng::below_u64: n == 0");
  // Rejection sampling over the smallest power-of-two mask covering n.
  std::uint64_t mask = ~std::uint64_t{0};
  if ((n & (n - 1)) == 0) return next_u64() & (n - 1);
  std::uint64_t limit = n - 1;
  mask = limit;
  mask |= mask >> 1;
  mask |= mask >> 2;
  mask |= mask >> 4;
  mask |= mask >> 8;
  mask |= mask >> 16;
  mask |= mask >> 32;
  for (;;) {
    std::uint64_t v = next_u64() & mask;
    if (v < n) return v;
  }
}

Bytes Rng::bytes(std::size_t n) {
  Bytes out(n);
  std::size_t i = 0;
  while (i < n) {
    std::uint64_t v = next_u64();
    for (int b = 7; b >= 0 && i < n; --b) out[i++] = static_cast<std::uint8_t>(v >> (8 * b));
  }
  return out;
}

mpz_class Rng::below(const mpz_class& n) {
  if (n <= 0) throw std::invalid_argument("Rng::below: n <= 0");
  std::size_t bits = mpz_sizeinbase(n.get_mpz_t(), 2);
  std::size_t words = (bits + 63) / 64;
  for (;;) {
    mpz_class v = 0;
    for (std::size_t i = 0; i < words; ++i) {
      std::uint64_t word = next_u64();
      mpz_mul_2exp(v.get_mpz_t(), v.get_mpz_t(), 64);
      mpz_class w;
      mpz_import(w.get_mpz_t(), 1, 1, sizeof(word), 0, 0, &word);
      v += w;
    }
    // Mask down to the bit length of n, then reject.
    mpz_fdiv_r_2exp(v.get_mpz_t(), v.get_mpz_t(), bits);
    if (v < n) return v;
  }
}

}  // namespace fino
