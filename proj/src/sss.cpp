#include "fino/sss.hpp"

#include <algorithm>

#include "fino/errors.hpp"

namespace fino {

Bytes Share::to_bytes() const {
  ByteWriter w;
  w.u32(validator_id);
  w.raw(as_span(x.to_bytes()));
  w.raw(as_span(y.to_bytes()));
  return w.take();
}

Share Share::from_bytes(const std::shared_ptr<const Field>& field, ByteSpan data) {
  ByteReader r(data);
  Share s;
  s.validator_id = r.u32();
  s.x = field->from_bytes(r.raw(field->byte_len()));
  s.y = field->from_bytes(r.raw(field->byte_len()));
  if (!r.done()) throw DecodeError("Share: trailing bytes");
  return s;
}

std::vector<Share> sss_split(const FieldElement& secret, std::size_t k, std::size_t n, Rng& rng) {
  if (k < 1 || k > n) throw BadThreshold("sss_split: need 1 <= k <= n");
  Polynomial poly = Polynomial::from_secret(secret, k - 1, rng);
  return sss_shares_of(poly, n);
}

std::vector<Share> sss_shares_of(const Polynomial& poly, std::size_t n) {
  const auto& field = poly.constant_term().field();
  std::vector<Share> shares;
  shares.reserve(n);
  for (std::size_t i = 0; i < n; ++i) {
    FieldElement x = field->elem(static_cast<std::uint64_t>(i + 1));
    shares.push_back(Share{static_cast<std::uint32_t>(i), x, poly.eval(x)});
  }
  return shares;
}

FieldElement sss_combine(std::vector<Share> shares, std::size_t k) {
  if (k < 1) throw BadThreshold("sss_combine: k < 1");
  if (shares.size() < k) throw NotEnoughShares("sss_combine: fewer than k shares");
  std::sort(shares.begin(), shares.end(),
            [](const Share& a, const Share& b) { return a.validator_id < b.validator_id; });
  shares.resize(k);
  std::vector<FieldElement> xs;
  xs.reserve(k);
  for (const auto& s : shares) xs.push_back(s.x);
  std::vector<FieldElement> ws = lagrange_weights_at_zero(xs);
  FieldElement acc = shares.front().y.field()->zero();
  for (std::size_t i = 0; i < k; ++i) acc = acc + ws[i] * shares[i].y;
  return acc;
}

Polynomial sss_interpolate(const std::vector<Share>& shares) {
  if (shares.empty()) throw NotEnoughShares("sss_interpolate: no shares");
  std::vector<std::pair<FieldElement, FieldElement>> pts;
  pts.reserve(shares.size());
  for (const auto& s : shares) pts.emplace_back(s.x, s.y);
  return Polynomial::interpolate(pts);
}

std::vector<Share> sss_regenerate_all(const std::vector<Share>& shares, std::size_t n) {
  if (shares.empty()) throw NotEnoughShares("sss_regenerate_all: no shares");
  return sss_shares_of(sss_interpolate(shares), n);
}

}  // namespace fino
