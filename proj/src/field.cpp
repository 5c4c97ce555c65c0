#include "fino/field.hpp"

#include <stdexcept>

#include "fino/errors.hpp"

namespace fino {

namespace {
struct FieldAccess : Field {
  explicit FieldAccess(const mpz_class& p) : Field(p) {}
};
}  // namespace

Field::Field(mpz_class prime) : p_(std::move(prime)) {
  if (p_ < 2 || mpz_probab_prime_p(p_.get_mpz_t(), 30) == 0)
    throw std::invalid_argument("Field: modulus is not prime");
  byte_len_ = (mpz_sizeinbase(p_.get_mpz_t(), 2) + 7) / 8;
}

std::shared_ptr<const Field> Field::make(const mpz_class& prime) {
  return std::make_shared<const FieldAccess>(prime);
}

std::shared_ptr<const Field> Field::make(std::uint64_t prime) {
  mpz_class p;
  mpz_import(p.get_mpz_t(), 1, 1, sizeof(prime), 0, 0, &prime);
  return make(p);
}

std::shared_ptr<const Field> Field::tx_key_field() {
  static const std::shared_ptr<const Field> f = [] {
    mpz_class p = (mpz_class(1) << 255) - 19;
    return make(p);
  }();
  return f;
}

FieldElement Field::elem(const mpz_class& v) const {
  mpz_class r;
  mpz_fdiv_r(r.get_mpz_t(), v.get_mpz_t(), p_.get_mpz_t());
  return FieldElement(std::move(r), shared_from_this());
}

FieldElement Field::elem(std::uint64_t v) const {
  mpz_class m;
  mpz_import(m.get_mpz_t(), 1, 1, sizeof(v), 0, 0, &v);
  return elem(m);
}

FieldElement Field::zero() const { return FieldElement(mpz_class(0), shared_from_this()); }
FieldElement Field::one() const { return elem(mpz_class(1)); }

FieldElement Field::random(Rng& rng) const {
  return FieldElement(rng.below(p_), shared_from_this());
}

FieldElement Field::from_bytes(ByteSpan data) const {
  mpz_class v;
  if (!data.empty())
    mpz_import(v.get_mpz_t(), data.size(), 1, 1, 0, 0, data.data());
  return elem(v);
}

void FieldElement::check_same_field(const FieldElement& o) const {
  if (!field_ || !o.field_ || !(*field_ == *o.field_))
    throw AlgebraMismatch("FieldElement: mixed fields");
}

FieldElement FieldElement::operator+(const FieldElement& o) const {
  check_same_field(o);
  mpz_class r = v_ + o.v_;
  if (r >= field_->prime()) r -= field_->prime();
  return FieldElement(std::move(r), field_);
}

FieldElement FieldElement::operator-(const FieldElement& o) const {
  check_same_field(o);
  mpz_class r = v_ - o.v_;
  if (r < 0) r += field_->prime();
  return FieldElement(std::move(r), field_);
}

FieldElement FieldElement::operator*(const FieldElement& o) const {
  check_same_field(o);
  mpz_class r;
  mpz_mul(r.get_mpz_t(), v_.get_mpz_t(), o.v_.get_mpz_t());
  mpz_fdiv_r(r.get_mpz_t(), r.get_mpz_t(), field_->prime().get_mpz_t());
  return FieldElement(std::move(r), field_);
}

FieldElement FieldElement::operator/(const FieldElement& o) const { return *this * o.inverse(); }

FieldElement FieldElement::operator-() const {
  if (v_ == 0) return *this;
  return FieldElement(field_->prime() - v_, field_);
}

FieldElement FieldElement::inverse() const {
  if (v_ == 0) throw std::domain_error("FieldElement: inverse of zero");
  mpz_class r;
  if (mpz_invert(r.get_mpz_t(), v_.get_mpz_t(), field_->prime().get_mpz_t()) == 0)
    throw std::domain_error("FieldElement: not invertible");
  return FieldElement(std::move(r), field_);
}

FieldElement FieldElement::pow(const mpz_class& e) const {
  mpz_class r;
  if (e < 0) {
    mpz_class pe = -e;
    FieldElement inv = inverse();
    mpz_powm(r.get_mpz_t(), inv.v_.get_mpz_t(), pe.get_mpz_t(), field_->prime().get_mpz_t());
  } else {
    mpz_powm(r.get_mpz_t(), v_.get_mpz_t(), e.get_mpz_t(), field_->prime().get_mpz_t());
  }
  return FieldElement(std::move(r), field_);
}

bool FieldElement::operator==(const FieldElement& o) const {
  if (!field_ || !o.field_) return !field_ && !o.field_;
  return *field_ == *o.field_ && v_ == o.v_;
}

Bytes FieldElement::to_bytes() const {
  Bytes out(field_->byte_len(), 0);
  std::size_t count = 0;
  if (v_ != 0) {
    // mpz_export writes only the significant bytes; right-align them.
    std::size_t need = (mpz_sizeinbase(v_.get_mpz_t(), 2) + 7) / 8;
    mpz_export(out.data() + (out.size() - need), &count, 1, 1, 0, 0, v_.get_mpz_t());
  }
  return out;
}

}  // namespace fino
