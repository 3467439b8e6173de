#pragma once

#include <compare>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "minerva/bytes.hpp"

namespace minerva {

using ReplicaId = uint32_t;
using EpochId = int64_t;

// Version tag for a key that has never been written.
inline constexpr EpochId kEidNever = -1;
// Sentinel for "no batch" in cut vectors and log heads.
inline constexpr int64_t kNoBatch = -1;

struct TxnId {
  ReplicaId rid = 0;
  uint64_t seq = 0;

  auto operator<=>(const TxnId&) const = default;
};

struct BatchId {
  ReplicaId rid = 0;
  int64_t bid = 0;

  auto operator<=>(const BatchId&) const = default;
};

// A registered deterministic one-shot procedure invocation: identical
// params and identical read values always produce identical writes.
struct ProcedureCall {
  std::string proc_name;
  std::string params;

  bool operator==(const ProcedureCall&) const = default;
};

struct ReadTag {
  enum class Source : uint8_t { kSnapshot = 0, kTemp = 1 };

  std::string key;
  Source source = Source::kSnapshot;
  EpochId eid = kEidNever;  // valid when source == kSnapshot (kEidNever = absent key)
  TxnId writer;             // valid when source == kTemp

  bool operator==(const ReadTag&) const = default;
};

struct WriteOp {
  std::string key;
  bool is_delete = false;
  std::string value;  // empty when is_delete

  bool operator==(const WriteOp&) const = default;
};

struct TxnRecord {
  TxnId tid;
  ProcedureCall input;
  std::vector<ReadTag> read_set;
  std::vector<WriteOp> write_set;   // keys only (values empty) when probed in high-contention mode
  std::vector<TxnId> dependencies;  // sorted, deduplicated, same rid as tid
  std::string client_tag;

  bool operator==(const TxnRecord&) const = default;
};

struct Batch {
  BatchId id;
  std::vector<TxnRecord> txns;  // seq ascending
  bool hc_flag = false;         // produced under high-contention mode, write values absent

  bool operator==(const Batch&) const = default;
};

// Strict total order used for deterministic re-execution: lexicographic on
// (source replica priority, rid, seq), identical at every replica.
struct GlobalOrderKey {
  uint32_t priority = 0;
  TxnId tid;

  auto operator<=>(const GlobalOrderKey&) const = default;
};

inline std::strong_ordering compare_global_order(const GlobalOrderKey& a,
                                                 const GlobalOrderKey& b) {
  return a <=> b;
}

std::vector<std::string> validate_batch_structure(const Batch& b);

// Canonical encodings (wire format and dump format share these).
void encode_txn_id(ByteWriter& w, const TxnId& t);
TxnId decode_txn_id(ByteReader& r);
void encode_txn_record(ByteWriter& w, const TxnRecord& t);
TxnRecord decode_txn_record(ByteReader& r);
void encode_batch(ByteWriter& w, const Batch& b);
Batch decode_batch(ByteReader& r);

size_t encoded_size(const TxnRecord& t);
size_t encoded_size(const Batch& b);

std::string format_tid(const TxnId& t);

}  // namespace minerva
