#pragma once

#include <map>
#include <optional>
#include <set>
#include <variant>
#include <vector>

#include "fino/merkle.hpp"
#include "fino/signing.hpp"
#include "fino/sss.hpp"
#include "fino/tde.hpp"

namespace fino {

enum class Scheme : std::uint8_t { Threshold = 0, AvidM = 1, Hybrid = 2 };

const char* scheme_name(Scheme s);
std::optional<Scheme> scheme_from_name(std::string_view name);

/// Shared cryptographic setup for one run: the tx-key field, and (for
/// schemes that need it) the threshold-encryption keys dealt at setup time.
struct CryptoContext {
  std::shared_ptr<const Field> field;
  std::shared_ptr<const SchnorrGroup> group;
  std::optional<TdePublicKey> tde_pk;
  std::vector<TdeSecretShare> tde_sks;  // indexed by validator
  const SignatureScheme* sigs = nullptr;
  std::uint32_t n = 0;
  std::uint32_t f = 0;

  std::uint32_t k() const { return f + 1; }  // reconstruction threshold

  static CryptoContext make(std::uint32_t n, std::uint32_t f, Scheme scheme,
                            const SignatureScheme* sigs, std::uint64_t seed, int group_bits = 160);
};

/// Public dealing record: everything every validator needs to validate
/// reveals and post-verify. Rides inside DAG message batches.
struct TxRecord {
  Digest tx_id{};
  Scheme scheme = Scheme::AvidM;
  std::uint32_t dealer_id = 0;
  Bytes payload_ciphertext;
  std::optional<Digest> merkle_root;       // AvidM / Hybrid
  std::optional<TdeCiphertext> tde_ct;     // Threshold / Hybrid
  Signature dealer_sig{};                  // over tx_id

  Bytes to_bytes() const;
  static TxRecord from_bytes(const CryptoContext& ctx, ByteSpan data);
  bool operator==(const TxRecord& o) const { return to_bytes() == o.to_bytes(); }
};

/// Per-validator private part of a dispersal.
struct Envelope {
  Digest tx_id{};
  std::optional<std::pair<Share, MerkleProof>> sss_part;
};

struct DispersalBundle {
  TxRecord record;
  std::vector<std::optional<Envelope>> envelopes;  // index = validator id
};

struct SssReveal {
  Share share;
  MerkleProof proof;
};
struct TdeReveal {
  DecryptionShare ds;
};

struct RevealedShare {
  Digest tx_id{};
  std::uint32_t revealer = 0;
  std::variant<SssReveal, TdeReveal> kind;

  bool is_sss() const { return std::holds_alternative<SssReveal>(kind); }
  Bytes to_bytes() const;
  static RevealedShare from_bytes(const CryptoContext& ctx, ByteSpan data);
};

struct OpenOutcome {
  Digest tx_id{};
  bool opened = false;   // false = Rejected (tombstone)
  Bytes plaintext;       // empty when rejected

  bool operator==(const OpenOutcome& o) const = default;
};

/// Dealer-side construction knobs. Anything other than Honest produces a
/// dealing that passes dispersal-time checks but must be caught (or
/// tolerated) downstream.
struct DisperseOptions {
  enum class Mode { Honest, OffPolynomial, SplitBrainHybrid, BadRoot };
  Mode mode = Mode::Honest;
  std::set<std::uint32_t> skip_validators;  // no envelope for these (Hybrid fallback path)
};

/// Split tx-key, encrypt the payload, build scheme commitments and sign.
DispersalBundle client_disperse(const CryptoContext& ctx, std::uint32_t dealer_id,
                                ByteSpan tx_plain, Scheme scheme, Rng& rng,
                                const DisperseOptions& opts = {});

/// Record-level checks shared by every consumer: tx_id recomputes, dealer
/// signature verifies, scheme parts are present, ciphertext validity holds.
bool validate_record(const CryptoContext& ctx, const TxRecord& record);

enum class EnvelopeAction : std::uint8_t { Ack, Drop };

/// Dispersal-time check: Merkle proof against the signed root and/or
/// ciphertext validity. Deliberately no polynomial-consistency check — that
/// is deferred to post-verification.
EnvelopeAction on_receive_envelope(const CryptoContext& ctx, const TxRecord& record,
                                   const std::optional<Envelope>& envelope);

inline bool disperse_complete(std::size_t acks, std::uint32_t n, std::uint32_t f) {
  return acks >= static_cast<std::size_t>(n) - f;
}

bool validate_reveal(const CryptoContext& ctx, const TxRecord& record, const RevealedShare& r);

/// Rebuild all n shares from the polynomial and compare the re-encoded tree
/// root with the dealer's signed root, bit-exactly.
bool post_verify_avidm(const CryptoContext& ctx, const Polynomial& poly, std::uint32_t n,
                       const Digest& signed_root);

/// Hybrid dual check from the reconstructed key alone: re-derive the sharing
/// polynomial, re-encode the tree, and deterministically re-encrypt the key;
/// both must match the dealer's commitments.
bool post_verify_hybrid(const CryptoContext& ctx, const FieldElement& key, const TxRecord& record);

/// The Hybrid sharing polynomial is a deterministic function of the key so
/// that either track can re-encode the full sharing.
Polynomial hybrid_derived_polynomial(const CryptoContext& ctx, const FieldElement& key);

enum class HybridTrack : std::uint8_t { FastSss, SlowTde };

/// FastSss while SSS shares may still reach F+1 before the reveal timeout;
/// SlowTde afterwards.
HybridTrack hybrid_track_select(std::size_t valid_sss, std::size_t valid_tde,
                                bool timeout_elapsed, std::uint32_t k);

/// The Retrieve functionality as a pure function of the dealing and a set of
/// revealed shares: nullopt while pending, otherwise an outcome that is
/// independent of which valid F+1 shares were supplied.
std::optional<OpenOutcome> retrieve(const CryptoContext& ctx, const TxRecord& record,
                                    const std::vector<RevealedShare>& revealed,
                                    bool timeout_elapsed);

/// Per-validator retrieval state: records, own envelopes, accumulated
/// reveals, resolve-once outcome cache.
class RetrievalEngine {
 public:
  RetrievalEngine(const CryptoContext* ctx, std::uint32_t my_id) : ctx_(ctx), my_id_(my_id) {}

  bool knows(const Digest& tx_id) const { return txs_.count(tx_id) != 0; }
  const TxRecord* record_of(const Digest& tx_id) const;

  /// Returns false for invalid records (ignored thereafter).
  bool add_record(const TxRecord& record);

  EnvelopeAction on_envelope(const TxRecord& record, const std::optional<Envelope>& envelope);

  /// Echo-availability rule: does this validator hold what its scheme
  /// requires before acknowledging a batch containing tx?
  bool has_availability(const Digest& tx_id) const;

  /// This validator's reveal payload(s) for a committed tx. SSS share when
  /// held; TDE share when the scheme has a threshold part and either no SSS
  /// share is held or the slow track opened.
  std::vector<RevealedShare> make_reveals(const Digest& tx_id, bool slow_track) const;

  /// Validated and deduplicated; returns true if the reveal was new and
  /// valid. `now_tick` timestamps the F+1 quorum for latency metrics.
  bool add_reveal(const RevealedShare& reveal, std::uint64_t now_tick);

  /// max(valid SSS count, valid TDE count) — the viewB gate quantity.
  std::size_t usable_reveal_count(const Digest& tx_id) const;
  std::optional<std::uint64_t> reveal_quorum_tick(const Digest& tx_id) const;

  /// Resolve-once retrieve; the cached outcome never changes.
  std::optional<OpenOutcome> try_open(const Digest& tx_id, bool timeout_elapsed);

 private:
  struct TxState {
    TxRecord record;
    bool record_valid = false;
    std::optional<Envelope> own_envelope;
    bool acked = false;
    std::vector<RevealedShare> valid_reveals;
    std::set<std::string> seen_keys;  // dedupe: kind ‖ x-or-vid
    std::optional<std::uint64_t> quorum_tick;
    std::optional<OpenOutcome> outcome;
  };

  const TxState* find(const Digest& tx_id) const;
  std::size_t count_kind(const TxState& st, bool sss) const;

  const CryptoContext* ctx_;
  std::uint32_t my_id_;
  std::map<Digest, TxState> txs_;
  std::map<Digest, std::vector<RevealedShare>> pending_reveals_;  // record not yet known
};

}  // namespace fino
