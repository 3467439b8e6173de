#include "minerva/types.hpp"

#include <set>
#include <unordered_set>

namespace minerva {

std::vector<std::string> validate_batch_structure(const Batch& b) {
  std::vector<std::string> violations;

  for (size_t i = 0; i < b.txns.size(); i++) {
    const TxnRecord& t = b.txns[i];
    if (t.tid.rid != b.id.rid)
      violations.push_back("txn " + format_tid(t.tid) + ": foreign source rid");
    if (i > 0 && b.txns[i - 1].tid.seq >= t.tid.seq)
      violations.push_back("txn " + format_tid(t.tid) + ": seq not ascending");

    for (const TxnId& dep : t.dependencies) {
      if (dep.rid != b.id.rid) {
        violations.push_back("txn " + format_tid(t.tid) + ": foreign dependency " +
                             format_tid(dep));
      } else if (dep.seq >= t.tid.seq) {
        violations.push_back("txn " + format_tid(t.tid) + ": dependency " +
                             format_tid(dep) + " not earlier");
      }
    }

    std::set<std::string> keys;
    for (const WriteOp& wop : t.write_set) {
      if (!keys.insert(wop.key).second)
        violations.push_back("txn " + format_tid(t.tid) + ": duplicate write key");
    }
  }
  return violations;
}

void encode_txn_id(ByteWriter& w, const TxnId& t) {
  w.u32(t.rid);
  w.u64(t.seq);
}

TxnId decode_txn_id(ByteReader& r) {
  TxnId t;
  t.rid = r.u32();
  t.seq = r.u64();
  return t;
}

static void encode_read_tag(ByteWriter& w, const ReadTag& t) {
  w.bytes(t.key);
  w.u8(static_cast<uint8_t>(t.source));
  if (t.source == ReadTag::Source::kSnapshot)
    w.i64(t.eid);
  else
    encode_txn_id(w, t.writer);
}

static ReadTag decode_read_tag(ByteReader& r) {
  ReadTag t;
  t.key = r.bytes();
  uint8_t s = r.u8();
  if (s > 1) throw std::invalid_argument("bad read tag source");
  t.source = static_cast<ReadTag::Source>(s);
  if (t.source == ReadTag::Source::kSnapshot)
    t.eid = r.i64();
  else
    t.writer = decode_txn_id(r);
  return t;
}

static void encode_write_op(ByteWriter& w, const WriteOp& op) {
  w.bytes(op.key);
  w.u8(op.is_delete ? 1 : 0);
  if (!op.is_delete) w.bytes(op.value);
}

static WriteOp decode_write_op(ByteReader& r) {
  WriteOp op;
  op.key = r.bytes();
  uint8_t d = r.u8();
  if (d > 1) throw std::invalid_argument("bad write op flag");
  op.is_delete = d == 1;
  if (!op.is_delete) op.value = r.bytes();
  return op;
}

void encode_txn_record(ByteWriter& w, const TxnRecord& t) {
  encode_txn_id(w, t.tid);
  w.bytes(t.input.proc_name);
  w.bytes(t.input.params);
  w.u32(static_cast<uint32_t>(t.read_set.size()));
  for (const ReadTag& rt : t.read_set) encode_read_tag(w, rt);
  w.u32(static_cast<uint32_t>(t.write_set.size()));
  for (const WriteOp& op : t.write_set) encode_write_op(w, op);
  w.u32(static_cast<uint32_t>(t.dependencies.size()));
  for (const TxnId& d : t.dependencies) encode_txn_id(w, d);
  w.bytes(t.client_tag);
}

TxnRecord decode_txn_record(ByteReader& r) {
  TxnRecord t;
  t.tid = decode_txn_id(r);
  t.input.proc_name = r.bytes();
  t.input.params = r.bytes();
  uint32_t nr = r.u32();
  t.read_set.reserve(nr);
  for (uint32_t i = 0; i < nr; i++) t.read_set.push_back(decode_read_tag(r));
  uint32_t nw = r.u32();
  t.write_set.reserve(nw);
  for (uint32_t i = 0; i < nw; i++) t.write_set.push_back(decode_write_op(r));
  uint32_t nd = r.u32();
  t.dependencies.reserve(nd);
  for (uint32_t i = 0; i < nd; i++) t.dependencies.push_back(decode_txn_id(r));
  t.client_tag = r.bytes();
  return t;
}

void encode_batch(ByteWriter& w, const Batch& b) {
  w.u32(b.id.rid);
  w.i64(b.id.bid);
  w.u8(b.hc_flag ? 1 : 0);
  w.u32(static_cast<uint32_t>(b.txns.size()));
  for (const TxnRecord& t : b.txns) encode_txn_record(w, t);
}

Batch decode_batch(ByteReader& r) {
  Batch b;
  b.id.rid = r.u32();
  b.id.bid = r.i64();
  b.hc_flag = r.u8() != 0;
  uint32_t n = r.u32();
  b.txns.reserve(n);
  for (uint32_t i = 0; i < n; i++) b.txns.push_back(decode_txn_record(r));
  return b;
}

size_t encoded_size(const TxnRecord& t) {
  ByteWriter w;
  encode_txn_record(w, t);
  return w.size();
}

size_t encoded_size(const Batch& b) {
  ByteWriter w;
  encode_batch(w, b);
  return w.size();
}

std::string format_tid(const TxnId& t) {
  return std::to_string(t.rid) + ":" + std::to_string(t.seq);
}

}  // namespace minerva
