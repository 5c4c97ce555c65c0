#pragma once

#include <vector>

#include "fino/bytes.hpp"

namespace fino {

struct MerkleProof {
  std::uint32_t index = 0;
  std::vector<Digest> siblings;  // leaf level upward; side = (index >> level) & 1

  Bytes to_bytes() const;
  static MerkleProof from_bytes(ByteSpan data);
  bool operator==(const MerkleProof& o) const = default;
};

/// Binary Merkle tree with domain-separated leaf/node hashing and the
/// duplicate-last-node convention on odd levels. The dealer and the
/// post-verifier must produce bit-identical roots, so there is exactly one
/// way to build this tree.
class MerkleTree {
 public:
  static MerkleTree build(const std::vector<Bytes>& leaves);

  const Digest& root() const { return levels_.back().front(); }
  std::size_t leaf_count() const { return leaf_count_; }
  MerkleProof prove(std::size_t index) const;

 private:
  MerkleTree() = default;
  std::size_t leaf_count_ = 0;
  std::vector<std::vector<Digest>> levels_;  // levels_[0] = leaf hashes
};

Digest merkle_leaf_hash(ByteSpan leaf);
bool merkle_verify(const Digest& root, ByteSpan leaf, const MerkleProof& proof);

}  // namespace fino
