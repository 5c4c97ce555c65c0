#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "fino/group.hpp"

using namespace fino;

TEST_CASE("generated schnorr group laws") {
  auto g = SchnorrGroup::generate(96, 1);
  auto sf = g->scalar_field();

  CHECK(g->exp_g(sf->zero()) == g->identity());
  CHECK(g->exp_g(sf->one()) == g->generator());

  Rng rng(5);
  for (int i = 0; i < 25; ++i) {
    FieldElement a = sf->random(rng), b = sf->random(rng);
    // exponent homomorphism
    CHECK(g->mul(g->exp_g(a), g->exp_g(b)) == g->exp_g(a + b));
    // identity and inverse laws
    GroupElement x = g->exp_g(a);
    CHECK(g->mul(x, g->identity()) == x);
    CHECK(g->mul(x, g->inv(x)) == g->identity());
    // generator (and thus x) has order q
    CHECK(g->exp(x, sf->elem(g->q())) == g->identity());
  }
}

TEST_CASE("hash_to_scalar is deterministic on input bytes") {
  auto g = SchnorrGroup::generate(96, 1);
  Bytes in = {1, 2, 3};
  auto a = g->hash_to_scalar("t", {as_span(in)});
  auto b = g->hash_to_scalar("t", {as_span(in)});
  CHECK(a == b);
  Bytes in2 = {1, 2, 4};
  CHECK(!(a == g->hash_to_scalar("t", {as_span(in2)})));
  CHECK(!(a == g->hash_to_scalar("u", {as_span(in)})));
}

TEST_CASE("hash_to_group lands in the prime-order subgroup") {
  auto g = SchnorrGroup::generate(96, 2);
  GroupElement h = g->hash_to_group("fino-test-h2g");
  CHECK(!h.is_identity());
  CHECK(g->exp(h, g->scalar_field()->elem(g->q())) == g->identity());
}

TEST_CASE("group element byte codec is fixed width") {
  auto g = SchnorrGroup::generate(96, 3);
  Rng rng(11);
  for (int i = 0; i < 10; ++i) {
    GroupElement x = g->exp_g(g->scalar_field()->random(rng));
    Bytes b = x.to_bytes();
    CHECK(b.size() == g->element_byte_len());
    CHECK(g->element_from_bytes(as_span(b)) == x);
  }
}

TEST_CASE("modp 2048 group constructs and verifies") {
  // Construction runs primality and generator-order checks internally.
  auto g = SchnorrGroup::modp(2048);
  CHECK(g->element_byte_len() == 256);
  CHECK(g->generator().value() == 2);
  CHECK(g->p() == 2 * g->q() + 1);
}
