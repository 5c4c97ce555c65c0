#include "fino/tde.hpp"

#include <algorithm>

#include "fino/errors.hpp"
#include "fino/hash.hpp"
#include "fino/polynomial.hpp"

namespace fino {

namespace {

Bytes mask_stream(const GroupElement& s, ByteSpan label, std::size_t len) {
  ByteWriter w;
  w.var_bytes(as_span(s.to_bytes()));
  w.var_bytes(label);
  return kdf_stream("fino-tde-mask", as_span(w.bytes()), len);
}

Digest integrity_tag(const GroupElement& s, ByteSpan m) {
  return hash_tagged("fino-tde-tag", {as_span(s.to_bytes()), m});
}

FieldElement ciphertext_challenge(const TdePublicKey& pk, ByteSpan c2, ByteSpan label,
                                  const GroupElement& c1, const GroupElement& u_bar,
                                  const GroupElement& w, const GroupElement& w_bar) {
  return pk.group->hash_to_scalar(
      "fino-tde-e", {c2, label, as_span(c1.to_bytes()), as_span(u_bar.to_bytes()),
                     as_span(w.to_bytes()), as_span(w_bar.to_bytes())});
}

FieldElement share_challenge(const TdePublicKey& pk, const Digest& cdig, std::uint32_t vid,
                             const GroupElement& u_i, const GroupElement& w1,
                             const GroupElement& w2) {
  ByteWriter idw;
  idw.u32(vid);
  return pk.group->hash_to_scalar(
      "fino-tde-dleq", {as_span(cdig), as_span(idw.bytes()), as_span(u_i.to_bytes()),
                        as_span(w1.to_bytes()), as_span(w2.to_bytes())});
}

}  // namespace

std::pair<TdePublicKey, std::vector<TdeSecretShare>> tde_keygen(
    const std::shared_ptr<const SchnorrGroup>& group, std::uint32_t k, std::uint32_t n, Rng& rng) {
  if (k < 1 || k > n) throw BadThreshold("tde_keygen: need 1 <= k <= n");
  const auto& sf = group->scalar_field();
  FieldElement sk = sf->random(rng);
  Polynomial poly = Polynomial::from_secret(sk, k - 1, rng);
  TdePublicKey pk;
  pk.group = group;
  pk.h = group->exp_g(sk);
  pk.g_bar = group->hash_to_group("fino-tde-gbar");
  pk.k = k;
  pk.n = n;
  std::vector<TdeSecretShare> shares;
  shares.reserve(n);
  for (std::uint32_t i = 0; i < n; ++i) {
    FieldElement sk_i = poly.eval(sf->elem(static_cast<std::uint64_t>(i) + 1));
    pk.vks.push_back(group->exp_g(sk_i));
    shares.push_back(TdeSecretShare{i, sk_i});
  }
  return {std::move(pk), std::move(shares)};
}

TdeCiphertext tde_enc(const TdePublicKey& pk, ByteSpan m, ByteSpan label,
                      const FieldElement& randomness) {
  const auto& g = pk.group;
  TdeCiphertext c;
  c.c1 = g->exp_g(randomness);
  c.u_bar = g->exp(pk.g_bar, randomness);
  GroupElement s = g->exp(pk.h, randomness);

  Digest tag = integrity_tag(s, m);
  Bytes plain(m.begin(), m.end());
  plain.insert(plain.end(), tag.begin(), tag.end());
  Bytes mask = mask_stream(s, label, plain.size());
  c.c2.resize(plain.size());
  for (std::size_t i = 0; i < plain.size(); ++i) c.c2[i] = plain[i] ^ mask[i];
  c.label.assign(label.begin(), label.end());

  // Fiat-Shamir proof of r: derandomized nonce, bound to c2 and label.
  FieldElement t =
      g->hash_to_scalar("fino-tde-nonce", {as_span(randomness.to_bytes()), as_span(c.c2), label});
  GroupElement w = g->exp_g(t);
  GroupElement w_bar = g->exp(pk.g_bar, t);
  c.e = ciphertext_challenge(pk, as_span(c.c2), label, c.c1, c.u_bar, w, w_bar);
  c.f = t + randomness * c.e;
  return c;
}

bool tde_verify_ciphertext(const TdePublicKey& pk, const TdeCiphertext& c) {
  const auto& g = pk.group;
  // w = g^f * c1^{-e}, w_bar = g_bar^f * u_bar^{-e}
  GroupElement w = g->mul(g->exp_g(c.f), g->exp(c.c1, -c.e));
  GroupElement w_bar = g->mul(g->exp(pk.g_bar, c.f), g->exp(c.u_bar, -c.e));
  return ciphertext_challenge(pk, as_span(c.c2), as_span(c.label), c.c1, c.u_bar, w, w_bar) == c.e;
}

DecryptionShare tde_share_gen(const TdePublicKey& pk, const TdeSecretShare& sk,
                              const TdeCiphertext& c) {
  if (!tde_verify_ciphertext(pk, c)) throw InvalidCiphertext("tde_share_gen: invalid ciphertext");
  const auto& g = pk.group;
  DecryptionShare ds;
  ds.validator_id = sk.validator_id;
  ds.u_i = g->exp(c.c1, sk.sk_i);
  Digest cdig = c.digest();
  FieldElement t =
      g->hash_to_scalar("fino-tde-sh-nonce", {as_span(sk.sk_i.to_bytes()), as_span(cdig)});
  GroupElement w1 = g->exp_g(t);
  GroupElement w2 = g->exp(c.c1, t);
  ds.e = share_challenge(pk, cdig, ds.validator_id, ds.u_i, w1, w2);
  ds.f = t + sk.sk_i * ds.e;
  return ds;
}

bool tde_share_verify(const TdePublicKey& pk, std::uint32_t validator_id, const TdeCiphertext& c,
                      const DecryptionShare& ds) {
  if (validator_id >= pk.vks.size() || ds.validator_id != validator_id) return false;
  const auto& g = pk.group;
  GroupElement w1 = g->mul(g->exp_g(ds.f), g->exp(pk.vks[validator_id], -ds.e));
  GroupElement w2 = g->mul(g->exp(c.c1, ds.f), g->exp(ds.u_i, -ds.e));
  return share_challenge(pk, c.digest(), validator_id, ds.u_i, w1, w2) == ds.e;
}

Bytes tde_dec(const TdePublicKey& pk, const TdeCiphertext& c, std::vector<DecryptionShare> shares,
              bool verify_shares) {
  std::sort(shares.begin(), shares.end(), [](const DecryptionShare& a, const DecryptionShare& b) {
    return a.validator_id < b.validator_id;
  });
  shares.erase(std::unique(shares.begin(), shares.end(),
                           [](const DecryptionShare& a, const DecryptionShare& b) {
                             return a.validator_id == b.validator_id;
                           }),
               shares.end());
  if (shares.size() < pk.k) throw NotEnoughShares("tde_dec: fewer than k distinct shares");
  shares.resize(pk.k);
  if (verify_shares) {
    for (const auto& ds : shares)
      if (!tde_share_verify(pk, ds.validator_id, c, ds))
        throw ShareVerificationFailed("tde_dec: bad decryption share");
  }

  const auto& g = pk.group;
  const auto& sf = g->scalar_field();
  std::vector<FieldElement> xs;
  xs.reserve(shares.size());
  for (const auto& ds : shares)
    xs.push_back(sf->elem(static_cast<std::uint64_t>(ds.validator_id) + 1));
  std::vector<FieldElement> ws = lagrange_weights_at_zero(xs);
  GroupElement s = g->identity();
  for (std::size_t i = 0; i < shares.size(); ++i)
    s = g->mul(s, g->exp(shares[i].u_i, ws[i]));

  if (c.c2.size() < 32) throw InvalidCiphertext("tde_dec: short ciphertext");
  Bytes mask = mask_stream(s, as_span(c.label), c.c2.size());
  Bytes plain(c.c2.size());
  for (std::size_t i = 0; i < plain.size(); ++i) plain[i] = c.c2[i] ^ mask[i];
  Bytes m(plain.begin(), plain.end() - 32);
  Digest tag = integrity_tag(s, as_span(m));
  if (!std::equal(tag.begin(), tag.end(), plain.end() - 32))
    throw InvalidCiphertext("tde_dec: integrity tag mismatch");
  return m;
}

FieldElement tde_reenc_randomness(const TdePublicKey& pk, ByteSpan key_bytes) {
  return pk.group->hash_to_scalar("fino-tde-reenc", {key_bytes});
}

Bytes TdeCiphertext::to_bytes() const {
  ByteWriter w;
  w.raw(as_span(c1.to_bytes()));
  w.raw(as_span(u_bar.to_bytes()));
  w.raw(as_span(e.to_bytes()));
  w.raw(as_span(f.to_bytes()));
  w.var_bytes(as_span(label));
  w.var_bytes(as_span(c2));
  return w.take();
}

TdeCiphertext TdeCiphertext::from_bytes(const std::shared_ptr<const SchnorrGroup>& g,
                                        ByteSpan data) {
  ByteReader r(data);
  TdeCiphertext c;
  c.c1 = g->element_from_bytes(r.raw(g->element_byte_len()));
  c.u_bar = g->element_from_bytes(r.raw(g->element_byte_len()));
  c.e = g->scalar_field()->from_bytes(r.raw(g->scalar_field()->byte_len()));
  c.f = g->scalar_field()->from_bytes(r.raw(g->scalar_field()->byte_len()));
  c.label = r.var_bytes();
  c.c2 = r.var_bytes();
  if (!r.done()) throw DecodeError("TdeCiphertext: trailing bytes");
  return c;
}

Digest TdeCiphertext::digest() const { return hash_tagged("fino-tde-ct", {as_span(to_bytes())}); }

bool TdeCiphertext::operator==(const TdeCiphertext& o) const { return to_bytes() == o.to_bytes(); }

Bytes DecryptionShare::to_bytes() const {
  ByteWriter w;
  w.u32(validator_id);
  w.raw(as_span(u_i.to_bytes()));
  w.raw(as_span(e.to_bytes()));
  w.raw(as_span(f.to_bytes()));
  return w.take();
}

DecryptionShare DecryptionShare::from_bytes(const std::shared_ptr<const SchnorrGroup>& g,
                                            ByteSpan data) {
  ByteReader r(data);
  DecryptionShare ds;
  ds.validator_id = r.u32();
  ds.u_i = g->element_from_bytes(r.raw(g->element_byte_len()));
  ds.e = g->scalar_field()->from_bytes(r.raw(g->scalar_field()->byte_len()));
  ds.f = g->scalar_field()->from_bytes(r.raw(g->scalar_field()->byte_len()));
  if (!r.done()) throw DecodeError("DecryptionShare: trailing bytes");
  return ds;
}

bool DecryptionShare::operator==(const DecryptionShare& o) const {
  return to_bytes() == o.to_bytes();
}

}  // namespace fino
