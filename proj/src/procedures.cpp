#include "minerva/procedures.hpp"

#include <stdexcept>

#include "minerva/bytes.hpp"

namespace minerva {

void ProcedureCatalog::register_procedure(const std::string& name, Procedure p) {
  if (!p.body || !p.probe)
    throw std::invalid_argument("procedure " + name + " must declare body and probe");
  procs_[name] = std::move(p);
}

const Procedure& ProcedureCatalog::get(const std::string& name) const {
  auto it = procs_.find(name);
  if (it == procs_.end()) throw std::invalid_argument("unknown procedure " + name);
  return it->second;
}

void ProcedureCatalog::execute(const ProcedureCall& call, TxnContext& ctx) const {
  get(call.proc_name).body(ctx, call.params);
}

StaticSets ProcedureCatalog::probe_static_sets(const ProcedureCall& call) const {
  return get(call.proc_name).probe(call.params);
}

std::vector<std::string> ProcedureCatalog::names() const {
  std::vector<std::string> out;
  for (const auto& [name, _] : procs_) out.push_back(name);
  return out;
}

std::string encode_i64_value(int64_t v) {
  ByteWriter w;
  w.i64(v);
  return w.take();
}

int64_t decode_i64_value(const std::optional<std::string>& v) {
  if (!v) return 0;
  ByteReader r(*v);
  return r.i64();
}

std::string make_put_params(const std::string& key, const std::string& value) {
  ByteWriter w;
  w.bytes(key);
  w.bytes(value);
  return w.take();
}

std::string make_del_params(const std::string& key) {
  ByteWriter w;
  w.bytes(key);
  return w.take();
}

std::string make_increment_params(const std::vector<std::string>& keys) {
  ByteWriter w;
  w.u32(static_cast<uint32_t>(keys.size()));
  for (const auto& k : keys) w.bytes(k);
  return w.take();
}

std::string make_sum_put_params(const std::string& src, const std::string& dst,
                                int64_t addend) {
  ByteWriter w;
  w.bytes(src);
  w.bytes(dst);
  w.i64(addend);
  return w.take();
}

std::string make_ycsb_params(const std::vector<YcsbOp>& ops) {
  ByteWriter w;
  w.u32(static_cast<uint32_t>(ops.size()));
  for (const YcsbOp& op : ops) {
    w.u8(op.is_write ? 1 : 0);
    w.bytes(op.key);
    if (op.is_write) w.bytes(op.value);
  }
  return w.take();
}

std::vector<YcsbOp> parse_ycsb_params(const std::string& params) {
  ByteReader r(params);
  uint32_t n = r.u32();
  std::vector<YcsbOp> ops;
  ops.reserve(n);
  for (uint32_t i = 0; i < n; i++) {
    YcsbOp op;
    op.is_write = r.u8() != 0;
    op.key = r.bytes();
    if (op.is_write) op.value = r.bytes();
    ops.push_back(std::move(op));
  }
  return ops;
}

std::string make_new_order_params(const std::string& order_key,
                                  const std::vector<NewOrderLine>& lines) {
  ByteWriter w;
  w.bytes(order_key);
  w.u32(static_cast<uint32_t>(lines.size()));
  for (const NewOrderLine& l : lines) {
    w.bytes(l.item_key);
    w.bytes(l.stock_key);
    w.i64(l.quantity);
  }
  return w.take();
}

std::string make_payment_params(const std::string& warehouse_key,
                                const std::string& district_key,
                                const std::string& customer_key, int64_t amount) {
  ByteWriter w;
  w.bytes(warehouse_key);
  w.bytes(district_key);
  w.bytes(customer_key);
  w.i64(amount);
  return w.take();
}

ProcedureCatalog ProcedureCatalog::builtin() {
  ProcedureCatalog cat;

  cat.register_procedure(
      "put", Procedure{
                 [](TxnContext& ctx, const std::string& params) {
                   ByteReader r(params);
                   std::string key = r.bytes();
                   ctx.write(key, r.bytes());
                 },
                 [](const std::string& params) {
                   ByteReader r(params);
                   StaticSets s;
                   s.write_keys.push_back(r.bytes());
                   return s;
                 }});

  cat.register_procedure(
      "del", Procedure{
                 [](TxnContext& ctx, const std::string& params) {
                   ByteReader r(params);
                   ctx.remove(r.bytes());
                 },
                 [](const std::string& params) {
                   ByteReader r(params);
                   StaticSets s;
                   s.write_keys.push_back(r.bytes());
                   return s;
                 }});

  cat.register_procedure(
      "increment",
      Procedure{[](TxnContext& ctx, const std::string& params) {
                  ByteReader r(params);
                  uint32_t n = r.u32();
                  for (uint32_t i = 0; i < n; i++) {
                    std::string key = r.bytes();
                    int64_t v = decode_i64_value(ctx.read(key));
                    ctx.write(key, encode_i64_value(v + 1));
                  }
                },
                [](const std::string& params) {
                  ByteReader r(params);
                  StaticSets s;
                  uint32_t n = r.u32();
                  for (uint32_t i = 0; i < n; i++) {
                    std::string key = r.bytes();
                    s.read_keys.push_back(key);
                    s.write_keys.push_back(key);
                  }
                  return s;
                }});

  cat.register_procedure(
      "sum_put", Procedure{
                     [](TxnContext& ctx, const std::string& params) {
                       ByteReader r(params);
                       std::string src = r.bytes();
                       std::string dst = r.bytes();
                       int64_t addend = r.i64();
                       int64_t v = decode_i64_value(ctx.read(src));
                       ctx.write(dst, encode_i64_value(v + addend));
                     },
                     [](const std::string& params) {
                       ByteReader r(params);
                       StaticSets s;
                       s.read_keys.push_back(r.bytes());
                       s.write_keys.push_back(r.bytes());
                       return s;
                     }});

  cat.register_procedure(
      "ycsb", Procedure{
                  [](TxnContext& ctx, const std::string& params) {
                    // Writes are blind: values come from params, reads are
                    // not consulted (YCSB-A update semantics).
                    for (YcsbOp& op : parse_ycsb_params(params)) {
                      if (op.is_write)
                        ctx.write(op.key, std::move(op.value));
                      else
                        ctx.read(op.key);
                    }
                  },
                  [](const std::string& params) {
                    StaticSets s;
                    for (const YcsbOp& op : parse_ycsb_params(params)) {
                      if (op.is_write)
                        s.write_keys.push_back(op.key);
                      else
                        s.read_keys.push_back(op.key);
                    }
                    return s;
                  }});

  cat.register_procedure(
      "tpcc_new_order",
      Procedure{[](TxnContext& ctx, const std::string& params) {
                  ByteReader r(params);
                  std::string order_key = r.bytes();
                  uint32_t n = r.u32();
                  int64_t total = 0;
                  ByteWriter order_row;
                  order_row.u32(n);
                  for (uint32_t i = 0; i < n; i++) {
                    std::string item_key = r.bytes();
                    std::string stock_key = r.bytes();
                    int64_t qty = r.i64();
                    int64_t price = decode_i64_value(ctx.read(item_key));
                    int64_t stock = decode_i64_value(ctx.read(stock_key));
                    ctx.write(stock_key, encode_i64_value(stock - qty));
                    total += price * qty;
                    order_row.bytes(item_key);
                    order_row.i64(qty);
                  }
                  order_row.i64(total);
                  ctx.write(order_key, order_row.take());
                },
                [](const std::string& params) {
                  ByteReader r(params);
                  StaticSets s;
                  std::string order_key = r.bytes();
                  uint32_t n = r.u32();
                  for (uint32_t i = 0; i < n; i++) {
                    s.read_keys.push_back(r.bytes());  // item
                    std::string stock_key = r.bytes();
                    s.read_keys.push_back(stock_key);
                    s.write_keys.push_back(stock_key);
                    r.i64();
                  }
                  s.write_keys.push_back(order_key);
                  return s;
                }});

  cat.register_procedure(
      "tpcc_payment",
      Procedure{[](TxnContext& ctx, const std::string& params) {
                  ByteReader r(params);
                  std::string wkey = r.bytes();
                  std::string dkey = r.bytes();
                  std::string ckey = r.bytes();
                  int64_t amount = r.i64();
                  ctx.write(wkey, encode_i64_value(decode_i64_value(ctx.read(wkey)) + amount));
                  ctx.write(dkey, encode_i64_value(decode_i64_value(ctx.read(dkey)) + amount));
                  ctx.write(ckey, encode_i64_value(decode_i64_value(ctx.read(ckey)) - amount));
                },
                [](const std::string& params) {
                  ByteReader r(params);
                  StaticSets s;
                  for (int i = 0; i < 3; i++) {
                    std::string k = r.bytes();
                    s.read_keys.push_back(k);
                    s.write_keys.push_back(k);
                  }
                  return s;
                }});

  return cat;
}

}  // namespace minerva
