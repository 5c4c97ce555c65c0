#include "fino/polynomial.hpp"

#include <stdexcept>

#include "fino/errors.hpp"

namespace fino {

Polynomial::Polynomial(std::vector<FieldElement> coefficients) : coeffs_(std::move(coefficients)) {
  if (coeffs_.empty()) throw std::invalid_argument("Polynomial: no coefficients");
  while (coeffs_.size() > 1 && coeffs_.back().is_zero()) coeffs_.pop_back();
}

Polynomial Polynomial::from_secret(const FieldElement& secret, std::size_t degree, Rng& rng) {
  std::vector<FieldElement> coeffs;
  coeffs.reserve(degree + 1);
  coeffs.push_back(secret);
  const Field& f = *secret.field();
  for (std::size_t i = 0; i < degree; ++i) coeffs.push_back(f.random(rng));
  return Polynomial(std::move(coeffs));
}

Polynomial Polynomial::interpolate(
    const std::vector<std::pair<FieldElement, FieldElement>>& points) {
  if (points.empty()) throw std::invalid_argument("interpolate: no points");
  const auto field = points.front().first.field();
  for (std::size_t i = 0; i < points.size(); ++i)
    for (std::size_t j = i + 1; j < points.size(); ++j)
      if (points[i].first == points[j].first)
        throw DuplicateAbscissa("interpolate: duplicate x");

  // Accumulate sum_i y_i * prod_{j!=i} (X - x_j)/(x_i - x_j) as coefficient
  // vectors.
  std::size_t n = points.size();
  std::vector<FieldElement> acc(n, field->zero());
  for (std::size_t i = 0; i < n; ++i) {
    // Numerator polynomial prod_{j!=i} (X - x_j), built incrementally.
    std::vector<FieldElement> num;
    num.push_back(field->one());
    FieldElement denom = field->one();
    for (std::size_t j = 0; j < n; ++j) {
      if (j == i) continue;
      const FieldElement& xj = points[j].first;
      // num *= (X - xj)
      std::vector<FieldElement> next(num.size() + 1, field->zero());
      for (std::size_t d = 0; d < num.size(); ++d) {
        next[d + 1] = next[d + 1] + num[d];
        next[d] = next[d] - num[d] * xj;
      }
      num = std::move(next);
      denom = denom * (points[i].first - xj);
    }
    FieldElement scale = points[i].second / denom;
    for (std::size_t d = 0; d < num.size(); ++d) acc[d] = acc[d] + num[d] * scale;
  }
  return Polynomial(std::move(acc));
}

FieldElement Polynomial::eval(const FieldElement& x) const {
  FieldElement r = coeffs_.back();
  for (std::size_t i = coeffs_.size() - 1; i-- > 0;) r = r * x + coeffs_[i];
  return r;
}

std::vector<FieldElement> lagrange_weights_at_zero(const std::vector<FieldElement>& xs) {
  for (std::size_t i = 0; i < xs.size(); ++i)
    for (std::size_t j = i + 1; j < xs.size(); ++j)
      if (xs[i] == xs[j]) throw DuplicateAbscissa("lagrange: duplicate x");
  std::vector<FieldElement> ws;
  ws.reserve(xs.size());
  for (std::size_t i = 0; i < xs.size(); ++i) {
    FieldElement num = xs[i].field()->one();
    FieldElement den = xs[i].field()->one();
    for (std::size_t j = 0; j < xs.size(); ++j) {
      if (j == i) continue;
      num = num * (-xs[j]);
      den = den * (xs[i] - xs[j]);
    }
    ws.push_back(num / den);
  }
  return ws;
}

}  // namespace fino
