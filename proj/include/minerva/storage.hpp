#pragma once

#include <cstdint>
#include <map>
#include <mutex>
#include <optional>
#include <string>
#include <unordered_map>
#include <vector>

#include "minerva/types.hpp"

namespace minerva {

struct ReadResult {
  enum class Provenance : uint8_t { kAbsent = 0, kSnapshot = 1, kTemp = 2 };

  Provenance provenance = Provenance::kAbsent;
  std::optional<std::string> value;  // nullopt for absent keys and tombstones
  EpochId eid = kEidNever;           // snapshot version (kSnapshot), kEidNever otherwise
  TxnId writer;                      // valid when kTemp
};

// Per-replica committed store. Deleted keys stay as tombstones so that a
// later read-version check can still see the delete epoch.
class SnapshotStore {
 public:
  struct Entry {
    std::optional<std::string> value;  // nullopt = tombstone
    EpochId eid = 0;
  };

  explicit SnapshotStore(EpochId initial_eid = 1) : current_eid_(initial_eid) {}

  // Preload a key as part of the initial database (version 0).
  void preload(const std::string& key, std::string value) {
    map_[key] = Entry{std::move(value), 0};
  }

  ReadResult read(const std::string& key) const;
  EpochId last_write_eid(const std::string& key) const;

  // Applies committed write-sets in order (later entries win) with version
  // `eid`, which must be the epoch currently being committed.
  void apply_committed(const std::vector<WriteOp>& writes, EpochId eid);

  EpochId current_eid() const { return current_eid_; }
  void set_current_eid(EpochId e) { current_eid_ = e; }

  size_t size() const { return map_.size(); }
  const std::map<std::string, Entry>& entries() const { return map_; }

  // Order-independent digest over (key, value, eid) triples, maintained
  // incrementally; used for cheap per-epoch convergence checks.
  uint64_t digest() const { return digest_; }

  std::string dump() const;                       // sorted, hex-printed, one record per line
  static SnapshotStore load(const std::string&);  // inverse of dump

  std::string canonical_bytes() const;  // sorted binary image for byte-compare

 private:
  uint64_t entry_hash(const std::string& key, const Entry& e) const;

  std::map<std::string, Entry> map_;
  EpochId current_eid_;
  uint64_t digest_ = 0;
};

// Uncommitted local writes of the current epoch, overlaid on the snapshot.
class TempState {
 public:
  struct Entry {
    std::optional<std::string> value;  // nullopt = uncommitted delete
    TxnId writer;
  };

  void write(const std::string& key, std::optional<std::string> value, TxnId writer) {
    map_[key] = Entry{std::move(value), writer};
  }

  const Entry* find(const std::string& key) const {
    auto it = map_.find(key);
    return it == map_.end() ? nullptr : &it->second;
  }

  void clear() { map_.clear(); }
  size_t size() const { return map_.size(); }
  const std::unordered_map<std::string, Entry>& entries() const { return map_; }

 private:
  std::unordered_map<std::string, Entry> map_;
};

// One replica's storage: OCC reads resolve against the overlay first. The
// mutex covers individual read/write operations so executor workers can run
// concurrently; apply_committed/advance_epoch are called by the serialized
// commit path.
class ReplicaStorage {
 public:
  explicit ReplicaStorage(EpochId initial_eid = 1) : snapshot_(initial_eid) {}

  ReadResult read(const std::string& key) const;
  void temp_write(const std::string& key, std::optional<std::string> value, TxnId writer);

  void apply_committed(const std::vector<WriteOp>& writes, EpochId eid);
  EpochId advance_epoch();

  SnapshotStore& snapshot() { return snapshot_; }
  const SnapshotStore& snapshot() const { return snapshot_; }
  TempState& temp() { return temp_; }
  const TempState& temp() const { return temp_; }

 private:
  mutable std::mutex mu_;
  SnapshotStore snapshot_;
  TempState temp_;
};

}  // namespace minerva
