#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "fino/errors.hpp"
#include "fino/field.hpp"
#include "fino/polynomial.hpp"
#include "test_util.hpp"

using namespace fino;
namespace tu = fino::testutil;

namespace {
Polynomial make_poly(const std::shared_ptr<const Field>& f, std::vector<std::uint64_t> cs) {
  std::vector<FieldElement> es;
  for (auto c : cs) es.push_back(f->elem(c));
  return Polynomial(std::move(es));
}
}  // namespace

TEST_CASE("field element basics and byte round trip") {
  auto f = Field::make(std::uint64_t{13});
  CHECK(f->byte_len() == 1);
  CHECK(f->elem(27).value() == 1);
  CHECK((f->elem(5) + f->elem(11)).value() == 3);
  CHECK((f->elem(5) - f->elem(11)).value() == 7);
  CHECK((f->elem(5) * f->elem(11)).value() == 3);
  CHECK((f->elem(5) / f->elem(5)).value() == 1);
  CHECK((-f->elem(5)).value() == 8);
  CHECK_THROWS_AS(f->elem(0).inverse(), std::domain_error);

  auto big = Field::tx_key_field();
  CHECK(big->byte_len() == 32);
  Rng rng(7);
  for (int i = 0; i < 20; ++i) {
    FieldElement e = big->random(rng);
    CHECK(big->from_bytes(as_span(e.to_bytes())) == e);
    CHECK(e.to_bytes().size() == 32);
  }
}

TEST_CASE("field axioms on randomized triples") {
  for (std::uint64_t p : {7ull, 13ull, (1ull << 31) - 1}) {
    auto f = Field::make(p);
    Rng rng(p);
    for (int i = 0; i < 50; ++i) {
      FieldElement a = f->random(rng), b = f->random(rng), c = f->random(rng);
      CHECK((a + b) + c == a + (b + c));
      CHECK((a * b) * c == a * (b * c));
      CHECK(a * (b + c) == a * b + a * c);
      CHECK(a + (-a) == f->zero());
      if (!a.is_zero()) CHECK(a * a.inverse() == f->one());
    }
  }
}

TEST_CASE("poly_eval matches direct substitution") {
  auto gf7 = Field::make(std::uint64_t{7});
  CHECK(make_poly(gf7, {5}).eval(gf7->elem(100)) == gf7->elem(5));
  // 1 + 6 mod 7 = 0
  CHECK(make_poly(gf7, {1, 1}).eval(gf7->elem(6)) == gf7->zero());
  // 3 + 2*2 + 1*4 = 11 = 4 mod 7
  CHECK(make_poly(gf7, {3, 2, 1}).eval(gf7->elem(2)) == gf7->elem(4));

  // Direct-substitution oracle over random polynomials.
  Rng rng(99);
  for (int i = 0; i < 30; ++i) {
    std::vector<std::int64_t> cs;
    std::vector<FieldElement> es;
    std::size_t deg = rng.below_u64(5);
    for (std::size_t d = 0; d <= deg; ++d) {
      auto c = static_cast<std::int64_t>(rng.below_u64(7));
      cs.push_back(c);
      es.push_back(gf7->elem(static_cast<std::uint64_t>(c)));
    }
    Polynomial poly{es};
    for (std::int64_t x = 0; x < 7; ++x)
      CHECK(poly.eval(gf7->elem(static_cast<std::uint64_t>(x))).value() ==
            tu::poly_eval_direct(cs, x, 7));
  }
}

TEST_CASE("poly_from_secret forces constant term and is seed deterministic") {
  auto gf7 = Field::make(std::uint64_t{7});
  Rng r0(42);
  Polynomial a = Polynomial::from_secret(gf7->elem(3), 2, r0);
  CHECK(a.constant_term() == gf7->elem(3));
  Rng r1(42);
  Polynomial b = Polynomial::from_secret(gf7->elem(3), 2, r1);
  CHECK(a == b);

  Rng rz(1);
  CHECK(Polynomial::from_secret(gf7->elem(5), 0, rz) == make_poly(gf7, {5}));

  // Any 3 of 6 evaluation points recover the secret, checked against the
  // independent Lagrange oracle.
  std::vector<std::pair<std::int64_t, std::int64_t>> pts;
  for (std::int64_t x = 1; x <= 6; ++x)
    pts.emplace_back(x, static_cast<std::int64_t>(
                            a.eval(gf7->elem(static_cast<std::uint64_t>(x))).value().get_ui()));
  for (const auto& idx : tu::subsets_of_size(6, 3)) {
    std::vector<std::pair<std::int64_t, std::int64_t>> sub;
    for (auto i : idx) sub.push_back(pts[i]);
    CHECK(tu::lagrange_at(sub, 0, 7) == 3);
  }
}

TEST_CASE("interpolate spec examples") {
  auto gf7 = Field::make(std::uint64_t{7});
  auto f13 = Field::make(std::uint64_t{13});

  Polynomial c = Polynomial::interpolate({{f13->elem(1), f13->elem(5)}, {f13->elem(2), f13->elem(5)}});
  CHECK(c == make_poly(f13, {5}));

  Polynomial single = Polynomial::interpolate({{f13->elem(1), f13->elem(2)}});
  CHECK(single == make_poly(f13, {2}));

  Polynomial p = make_poly(gf7, {3, 2, 1});
  std::vector<std::pair<FieldElement, FieldElement>> pts;
  for (std::uint64_t x = 1; x <= 3; ++x) pts.emplace_back(gf7->elem(x), p.eval(gf7->elem(x)));
  CHECK(Polynomial::interpolate(pts) == p);

  CHECK_THROWS_AS(
      Polynomial::interpolate({{gf7->elem(1), gf7->elem(5)}, {gf7->elem(1), gf7->elem(6)}}),
      DuplicateAbscissa);
}

TEST_CASE("interpolation is exact for every polynomial over small fields") {
  for (std::uint64_t pmod : {7ull, 13ull}) {
    auto f = Field::make(pmod);
    // Exhaust every polynomial of degree <= 2.
    for (std::uint64_t c0 = 0; c0 < pmod; ++c0)
      for (std::uint64_t c1 = 0; c1 < pmod; ++c1)
        for (std::uint64_t c2 = 0; c2 < pmod; ++c2) {
          Polynomial p = make_poly(f, {c0, c1, c2});
          std::vector<std::pair<FieldElement, FieldElement>> pts;
          for (std::uint64_t x = 1; x <= p.degree() + 1; ++x)
            pts.emplace_back(f->elem(x), p.eval(f->elem(x)));
          CHECK(Polynomial::interpolate(pts) == p);
        }
  }
}
