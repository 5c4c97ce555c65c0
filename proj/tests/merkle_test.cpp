#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "fino/errors.hpp"
#include "fino/hash.hpp"
#include "fino/merkle.hpp"
#include "fino/rng.hpp"

using namespace fino;

namespace {
std::vector<Bytes> make_leaves(std::size_t n, std::uint64_t seed) {
  Rng rng(seed);
  std::vector<Bytes> leaves;
  for (std::size_t i = 0; i < n; ++i) leaves.push_back(rng.bytes(24));
  return leaves;
}
}  // namespace

TEST_CASE("single leaf root is the tagged leaf hash") {
  Bytes leaf = {1, 2, 3};
  auto t = MerkleTree::build({leaf});
  CHECK(t.root() == merkle_leaf_hash(as_span(leaf)));
  auto proof = t.prove(0);
  CHECK(proof.siblings.empty());
  CHECK(merkle_verify(t.root(), as_span(leaf), proof));
}

TEST_CASE("same leaves build identical roots; permutation changes the root") {
  auto leaves = make_leaves(16, 4);
  auto a = MerkleTree::build(leaves);
  auto b = MerkleTree::build(leaves);
  CHECK(a.root() == b.root());

  auto permuted = leaves;
  std::swap(permuted[3], permuted[11]);
  CHECK(!(MerkleTree::build(permuted).root() == a.root()));
}

TEST_CASE("round trip proofs for every leaf, including odd widths") {
  for (std::size_t n : {1u, 2u, 3u, 5u, 7u, 8u, 11u, 16u}) {
    auto leaves = make_leaves(n, 100 + n);
    auto t = MerkleTree::build(leaves);
    for (std::size_t i = 0; i < n; ++i) {
      auto proof = t.prove(i);
      CHECK(merkle_verify(t.root(), as_span(leaves[i]), proof));
    }
  }
}

TEST_CASE("single-bit tampering of leaf or path fails verification") {
  for (std::size_t n : {5u, 16u, 32u}) {
    auto leaves = make_leaves(n, 200 + n);
    auto t = MerkleTree::build(leaves);
    for (std::size_t i = 0; i < n; ++i) {
      auto proof = t.prove(i);
      // flip each bit of the leaf
      for (std::size_t byte = 0; byte < leaves[i].size(); ++byte)
        for (int bit = 0; bit < 8; ++bit) {
          Bytes bad = leaves[i];
          bad[byte] ^= static_cast<std::uint8_t>(1 << bit);
          CHECK(!merkle_verify(t.root(), as_span(bad), proof));
        }
      // flip one bit in every proof node
      for (std::size_t s = 0; s < proof.siblings.size(); ++s) {
        auto bad = proof;
        bad.siblings[s][0] ^= 1;
        CHECK(!merkle_verify(t.root(), as_span(leaves[i]), bad));
      }
    }
  }
}

TEST_CASE("proof for index i rejects other leaves") {
  auto leaves = make_leaves(16, 300);
  auto t = MerkleTree::build(leaves);
  for (std::size_t i = 0; i < 16; ++i) {
    auto proof = t.prove(i);
    for (std::size_t j = 0; j < 16; ++j) {
      if (j == i) continue;
      CHECK(!merkle_verify(t.root(), as_span(leaves[j]), proof));
    }
  }
}

TEST_CASE("errors and codec") {
  CHECK_THROWS_AS(MerkleTree::build({}), EmptyLeaves);
  auto leaves = make_leaves(4, 9);
  auto t = MerkleTree::build(leaves);
  CHECK_THROWS_AS(t.prove(4), IndexOutOfRange);

  auto proof = t.prove(2);
  auto round = MerkleProof::from_bytes(as_span(proof.to_bytes()));
  CHECK(round == proof);
}
