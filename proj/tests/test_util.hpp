#pragma once

// Test-only oracles, deliberately independent of the library implementations
// they check.

#include <cstdint>
#include <utility>
#include <vector>

namespace fino::testutil {

inline std::int64_t mod_pos(std::int64_t v, std::int64_t p) {
  std::int64_t r = v % p;
  return r < 0 ? r + p : r;
}

inline std::int64_t mod_pow(std::int64_t b, std::int64_t e, std::int64_t p) {
  std::int64_t r = 1;
  b = mod_pos(b, p);
  while (e > 0) {
    if (e & 1) r = r * b % p;
    b = b * b % p;
    e >>= 1;
  }
  return r;
}

// Fermat inverse; p must be prime and v nonzero mod p.
inline std::int64_t mod_inv(std::int64_t v, std::int64_t p) { return mod_pow(v, p - 2, p); }

// Direct Lagrange evaluation at x0 through the given points, entirely in
// int64 arithmetic. Small fields only.
inline std::int64_t lagrange_at(const std::vector<std::pair<std::int64_t, std::int64_t>>& pts,
                                std::int64_t x0, std::int64_t p) {
  std::int64_t acc = 0;
  for (std::size_t i = 0; i < pts.size(); ++i) {
    std::int64_t num = 1, den = 1;
    for (std::size_t j = 0; j < pts.size(); ++j) {
      if (j == i) continue;
      num = num * mod_pos(x0 - pts[j].first, p) % p;
      den = den * mod_pos(pts[i].first - pts[j].first, p) % p;
    }
    acc = (acc + pts[i].second % p * num % p * mod_inv(den, p)) % p;
  }
  return mod_pos(acc, p);
}

// Evaluate a coefficient list (lowest degree first) by plain substitution.
inline std::int64_t poly_eval_direct(const std::vector<std::int64_t>& coeffs, std::int64_t x,
                                     std::int64_t p) {
  std::int64_t acc = 0;
  for (std::size_t d = 0; d < coeffs.size(); ++d)
    acc = (acc + coeffs[d] % p * mod_pow(x, static_cast<std::int64_t>(d), p)) % p;
  return mod_pos(acc, p);
}

// All index subsets of size k from [0, n).
inline std::vector<std::vector<std::size_t>> subsets_of_size(std::size_t n, std::size_t k) {
  std::vector<std::vector<std::size_t>> out;
  std::vector<std::size_t> cur;
  auto rec = [&](auto&& self, std::size_t start) -> void {
    if (cur.size() == k) {
      out.push_back(cur);
      return;
    }
    for (std::size_t i = start; i < n; ++i) {
      cur.push_back(i);
      self(self, i + 1);
      cur.pop_back();
    }
  };
  rec(rec, 0);
  return out;
}

}  // namespace fino::testutil
