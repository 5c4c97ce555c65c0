#include "fino/merkle.hpp"

#include "fino/errors.hpp"
#include "fino/hash.hpp"

namespace fino {

namespace {
Digest node_hash(const Digest& l, const Digest& r) {
  return hash_tagged("fino-merkle-node", {as_span(l), as_span(r)});
}
}  // namespace

Digest merkle_leaf_hash(ByteSpan leaf) { return hash_tagged("fino-merkle-leaf", {leaf}); }

MerkleTree MerkleTree::build(const std::vector<Bytes>& leaves) {
  if (leaves.empty()) throw EmptyLeaves("MerkleTree: no leaves");
  MerkleTree t;
  t.leaf_count_ = leaves.size();
  std::vector<Digest> level;
  level.reserve(leaves.size());
  for (const auto& l : leaves) level.push_back(merkle_leaf_hash(as_span(l)));
  t.levels_.push_back(level);
  while (t.levels_.back().size() > 1) {
    const auto& prev = t.levels_.back();
    std::vector<Digest> next;
    next.reserve((prev.size() + 1) / 2);
    for (std::size_t i = 0; i < prev.size(); i += 2) {
      const Digest& l = prev[i];
      const Digest& r = (i + 1 < prev.size()) ? prev[i + 1] : prev[i];  // duplicate last
      next.push_back(node_hash(l, r));
    }
    t.levels_.push_back(std::move(next));
  }
  return t;
}

MerkleProof MerkleTree::prove(std::size_t index) const {
  if (index >= leaf_count_) throw IndexOutOfRange("MerkleTree::prove: index out of range");
  MerkleProof p;
  p.index = static_cast<std::uint32_t>(index);
  std::size_t i = index;
  for (std::size_t lvl = 0; lvl + 1 < levels_.size(); ++lvl) {
    const auto& nodes = levels_[lvl];
    std::size_t sib = (i % 2 == 0) ? i + 1 : i - 1;
    if (sib >= nodes.size()) sib = i;  // odd level, duplicated last node
    p.siblings.push_back(nodes[sib]);
    i /= 2;
  }
  return p;
}

bool merkle_verify(const Digest& root, ByteSpan leaf, const MerkleProof& proof) {
  Digest h = merkle_leaf_hash(leaf);
  std::size_t i = proof.index;
  for (const auto& sib : proof.siblings) {
    h = (i % 2 == 0) ? node_hash(h, sib) : node_hash(sib, h);
    i /= 2;
  }
  return h == root && i == 0;
}

Bytes MerkleProof::to_bytes() const {
  ByteWriter w;
  w.u32(index);
  w.u32(static_cast<std::uint32_t>(siblings.size()));
  for (const auto& s : siblings) w.raw(as_span(s));
  return w.take();
}

MerkleProof MerkleProof::from_bytes(ByteSpan data) {
  ByteReader r(data);
  MerkleProof p;
  p.index = r.u32();
  std::uint32_t n = r.u32();
  for (std::uint32_t i = 0; i < n; ++i) {
    Digest d{};
    auto s = r.raw(d.size());
    std::copy(s.begin(), s.end(), d.begin());
    p.siblings.push_back(d);
  }
  if (!r.done()) throw DecodeError("MerkleProof: trailing bytes");
  return p;
}

}  // namespace fino
