#pragma once

#include <gmpxx.h>

#include <memory>

#include "fino/bytes.hpp"
#include "fino/rng.hpp"

namespace fino {

class FieldElement;

/// A prime field GF(p). Immutable; created once per run (or per test) and
/// shared by every element. The prime is a run-wide constant.
class Field : public std::enable_shared_from_this<Field> {
 public:
  static std::shared_ptr<const Field> make(const mpz_class& prime);
  static std::shared_ptr<const Field> make(std::uint64_t prime);

  /// 2^255 - 19, the default field for transaction keys.
  static std::shared_ptr<const Field> tx_key_field();

  const mpz_class& prime() const { return p_; }
  std::size_t byte_len() const { return byte_len_; }

  FieldElement elem(const mpz_class& v) const;
  FieldElement elem(std::uint64_t v) const;
  FieldElement zero() const;
  FieldElement one() const;
  FieldElement random(Rng& rng) const;

  /// Fixed-width big-endian decode; value is reduced mod p.
  FieldElement from_bytes(ByteSpan data) const;

  bool operator==(const Field& other) const { return p_ == other.p_; }

 protected:
  explicit Field(mpz_class prime);

 private:
  mpz_class p_;
  std::size_t byte_len_;
};

class FieldElement {
 public:
  FieldElement() = default;  // empty element; usable only after assignment

  const mpz_class& value() const { return v_; }
  const std::shared_ptr<const Field>& field() const { return field_; }

  FieldElement operator+(const FieldElement& o) const;
  FieldElement operator-(const FieldElement& o) const;
  FieldElement operator*(const FieldElement& o) const;
  FieldElement operator/(const FieldElement& o) const;
  FieldElement operator-() const;
  FieldElement inverse() const;
  FieldElement pow(const mpz_class& e) const;

  bool operator==(const FieldElement& o) const;
  bool is_zero() const { return v_ == 0; }

  /// Fixed-width big-endian encoding (field().byte_len() bytes).
  Bytes to_bytes() const;

 private:
  friend class Field;
  FieldElement(mpz_class v, std::shared_ptr<const Field> f)
      : v_(std::move(v)), field_(std::move(f)) {}

  void check_same_field(const FieldElement& o) const;

  mpz_class v_;
  std::shared_ptr<const Field> field_;
};

}  // namespace fino
