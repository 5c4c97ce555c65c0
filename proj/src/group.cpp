#include "fino/group.hpp"

#include <mpfr.h>

#include <map>
#include <mutex>
#include <stdexcept>

#include "fino/errors.hpp"
#include "fino/hash.hpp"

namespace fino {

namespace {

struct GroupAccess : SchnorrGroup {
  GroupAccess(mpz_class p, mpz_class q, mpz_class g)
      : SchnorrGroup(std::move(p), std::move(q), std::move(g)) {}
};

bool is_prime(const mpz_class& n) { return mpz_probab_prime_p(n.get_mpz_t(), 25) != 0; }

// floor(2^exp * pi)
mpz_class pi_floor_shifted(unsigned long exp) {
  mpfr_t pi;
  mpfr_init2(pi, exp + 96);
  mpfr_const_pi(pi, MPFR_RNDN);
  mpfr_mul_2exp(pi, pi, exp, MPFR_RNDN);
  mpz_class out;
  mpfr_get_z(out.get_mpz_t(), pi, MPFR_RNDZ);
  mpfr_clear(pi);
  return out;
}

// p = 2^bits - 2^(bits-64) - 1 + 2^64 * (floor(2^(bits-130) * pi) + offset)
mpz_class modp_prime(int bits, unsigned long offset) {
  mpz_class p = (mpz_class(1) << bits) - (mpz_class(1) << (bits - 64)) - 1;
  mpz_class mid = pi_floor_shifted(static_cast<unsigned long>(bits - 130)) + offset;
  p += mid << 64;
  return p;
}

}  // namespace

SchnorrGroup::SchnorrGroup(mpz_class p, mpz_class q, mpz_class g)
    : p_(std::move(p)), q_(std::move(q)), g_(std::move(g)) {
  if (!is_prime(p_) || !is_prime(q_)) throw std::invalid_argument("SchnorrGroup: p or q not prime");
  if (p_ != 2 * q_ + 1) throw std::invalid_argument("SchnorrGroup: p != 2q+1");
  mpz_class check;
  mpz_powm(check.get_mpz_t(), g_.get_mpz_t(), q_.get_mpz_t(), p_.get_mpz_t());
  if (g_ <= 1 || check != 1) throw std::invalid_argument("SchnorrGroup: generator order != q");
  scalar_field_ = Field::make(q_);
  elem_byte_len_ = (mpz_sizeinbase(p_.get_mpz_t(), 2) + 7) / 8;
}

std::shared_ptr<const SchnorrGroup> SchnorrGroup::modp(int bits) {
  static std::mutex mu;
  static std::map<int, std::shared_ptr<const SchnorrGroup>> cache;
  std::lock_guard<std::mutex> lock(mu);
  auto it = cache.find(bits);
  if (it != cache.end()) return it->second;

  unsigned long offset;
  switch (bits) {
    case 1536: offset = 741804; break;
    case 2048: offset = 124476; break;
    case 3072: offset = 1690314; break;
    case 4096: offset = 240904; break;
    default: throw std::invalid_argument("SchnorrGroup::modp: unsupported size");
  }
  mpz_class p = modp_prime(bits, offset);
  mpz_class q = (p - 1) / 2;
  auto grp = std::make_shared<const GroupAccess>(std::move(p), std::move(q), mpz_class(2));
  cache.emplace(bits, grp);
  return grp;
}

std::shared_ptr<const SchnorrGroup> SchnorrGroup::generate(int bits, std::uint64_t seed) {
  if (bits < 16) throw std::invalid_argument("SchnorrGroup::generate: too small");
  static std::mutex mu;
  static std::map<std::pair<int, std::uint64_t>, std::shared_ptr<const SchnorrGroup>> cache;
  std::lock_guard<std::mutex> lock(mu);
  auto key = std::make_pair(bits, seed);
  auto it = cache.find(key);
  if (it != cache.end()) return it->second;

  Rng rng = Rng::derive(seed, "schnorr-group", static_cast<std::uint64_t>(bits));
  mpz_class q = rng.below(mpz_class(1) << (bits - 1));
  mpz_setbit(q.get_mpz_t(), bits - 2);  // keep the size
  mpz_class p;
  for (;;) {
    mpz_nextprime(q.get_mpz_t(), q.get_mpz_t());
    p = 2 * q + 1;
    if (is_prime(p)) break;
  }
  mpz_class g;
  for (mpz_class h = 2;; ++h) {
    g = h * h % p;
    if (g != 1) break;
  }
  auto grp = std::make_shared<const GroupAccess>(std::move(p), std::move(q), std::move(g));
  cache.emplace(key, grp);
  return grp;
}

std::shared_ptr<const SchnorrGroup> SchnorrGroup::for_bits(int bits, std::uint64_t seed) {
  if (bits >= 1536) return modp(bits);
  return generate(bits, seed);
}

GroupElement SchnorrGroup::generator() const { return GroupElement(g_, shared_from_this()); }
GroupElement SchnorrGroup::identity() const { return GroupElement(mpz_class(1), shared_from_this()); }

GroupElement SchnorrGroup::exp(const GroupElement& base, const FieldElement& scalar) const {
  if (!(*base.group() == *this)) throw AlgebraMismatch("exp: element from another group");
  if (!(*scalar.field() == *scalar_field_)) throw AlgebraMismatch("exp: scalar not mod q");
  mpz_class r;
  mpz_powm(r.get_mpz_t(), base.value().get_mpz_t(), scalar.value().get_mpz_t(), p_.get_mpz_t());
  return GroupElement(std::move(r), shared_from_this());
}

GroupElement SchnorrGroup::exp_g(const FieldElement& scalar) const {
  return exp(generator(), scalar);
}

GroupElement SchnorrGroup::mul(const GroupElement& a, const GroupElement& b) const {
  if (!(*a.group() == *this) || !(*b.group() == *this))
    throw AlgebraMismatch("mul: element from another group");
  mpz_class r = a.value() * b.value() % p_;
  return GroupElement(std::move(r), shared_from_this());
}

GroupElement SchnorrGroup::inv(const GroupElement& a) const {
  mpz_class r;
  if (mpz_invert(r.get_mpz_t(), a.value().get_mpz_t(), p_.get_mpz_t()) == 0)
    throw std::domain_error("inv: not invertible");
  return GroupElement(std::move(r), shared_from_this());
}

FieldElement SchnorrGroup::hash_to_scalar(std::string_view tag,
                                          std::initializer_list<ByteSpan> parts) const {
  Sha256 h;
  std::uint8_t tl = static_cast<std::uint8_t>(tag.size());
  h.update(ByteSpan(&tl, 1));
  h.update(tag);
  for (const auto& p : parts) h.update(p);
  Digest d = h.finish();
  // Expand past q's size to keep the mod-q bias negligible.
  Bytes wide = kdf_stream("fino-h2s-expand", as_span(d), scalar_field_->byte_len() + 16);
  return scalar_field_->from_bytes(as_span(wide));
}

GroupElement SchnorrGroup::hash_to_group(std::string_view tag) const {
  ByteWriter w;
  Bytes pb(elem_byte_len_, 0);
  std::size_t cnt = 0;
  mpz_export(pb.data(), &cnt, 1, 1, 0, 0, p_.get_mpz_t());
  w.raw(as_span(pb));
  for (std::uint32_t salt = 0;; ++salt) {
    ByteWriter s;
    s.raw(as_span(w.bytes()));
    s.u32(salt);
    Bytes wide = kdf_stream(tag, as_span(s.bytes()), elem_byte_len_ + 16);
    mpz_class v;
    mpz_import(v.get_mpz_t(), wide.size(), 1, 1, 0, 0, wide.data());
    v %= p_;
    // Square into the order-q subgroup (cofactor 2).
    v = v * v % p_;
    if (v != 1 && v != 0) return GroupElement(std::move(v), shared_from_this());
  }
}

GroupElement SchnorrGroup::element_from_bytes(ByteSpan data) const {
  if (data.size() != elem_byte_len_) throw DecodeError("group element: bad length");
  mpz_class v;
  mpz_import(v.get_mpz_t(), data.size(), 1, 1, 0, 0, data.data());
  if (v < 1 || v >= p_) throw DecodeError("group element: out of range");
  return GroupElement(std::move(v), shared_from_this());
}

bool GroupElement::operator==(const GroupElement& o) const {
  if (!group_ || !o.group_) return !group_ && !o.group_;
  return *group_ == *o.group_ && v_ == o.v_;
}

Bytes GroupElement::to_bytes() const {
  Bytes out(group_->element_byte_len(), 0);
  if (v_ != 0) {
    std::size_t need = (mpz_sizeinbase(v_.get_mpz_t(), 2) + 7) / 8;
    std::size_t cnt = 0;
    mpz_export(out.data() + (out.size() - need), &cnt, 1, 1, 0, 0, v_.get_mpz_t());
  }
  return out;
}

}  // namespace fino
