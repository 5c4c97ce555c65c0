#pragma once

#include <utility>
#include <vector>

#include "fino/field.hpp"

namespace fino {

/// Polynomial over a prime field, coefficients lowest-degree first.
/// Normalized: trailing zero coefficients are trimmed (the zero polynomial
/// keeps a single zero coefficient). When used for secret sharing the
/// constant term is the hidden secret.
class Polynomial {
 public:
  explicit Polynomial(std::vector<FieldElement> coefficients);

  /// Constant term = secret, remaining `degree` coefficients drawn uniformly
  /// from rng.
  static Polynomial from_secret(const FieldElement& secret, std::size_t degree, Rng& rng);

  /// Unique polynomial of degree <= points-1 through all (x, y) pairs
  /// (Lagrange). Throws DuplicateAbscissa if two x coincide.
  static Polynomial interpolate(const std::vector<std::pair<FieldElement, FieldElement>>& points);

  /// Horner evaluation.
  FieldElement eval(const FieldElement& x) const;

  std::size_t degree() const { return coeffs_.size() - 1; }
  const std::vector<FieldElement>& coefficients() const { return coeffs_; }
  const FieldElement& constant_term() const { return coeffs_.front(); }

  bool operator==(const Polynomial& o) const { return coeffs_ == o.coeffs_; }

 private:
  std::vector<FieldElement> coeffs_;
};

/// Lagrange basis coefficients at x = 0 for the given abscissas, i.e. the
/// weights w_i with f(0) = sum w_i * y_i. Shared by SSS combine and the
/// threshold-decryption exponent combination.
std::vector<FieldElement> lagrange_weights_at_zero(const std::vector<FieldElement>& xs);

}  // namespace fino
