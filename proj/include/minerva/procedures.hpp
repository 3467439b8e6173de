#pragma once

#include <cstdint>
#include <functional>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "minerva/types.hpp"

namespace minerva {

// Execution surface handed to a procedure body. Reads and writes go through
// here so the same body runs unchanged under OCC, deterministic re-execution,
// and the serial replay oracle.
class TxnContext {
 public:
  virtual ~TxnContext() = default;
  virtual std::optional<std::string> read(const std::string& key) = 0;
  virtual void write(const std::string& key, std::string value) = 0;
  virtual void remove(const std::string& key) = 0;
};

struct StaticSets {
  std::vector<std::string> read_keys;
  std::vector<std::string> write_keys;
};

// Deterministic one-shot procedure: body(params) drives reads/writes through
// the context; probe(params) reports the full key sets without executing.
struct Procedure {
  std::function<void(TxnContext&, const std::string& params)> body;
  std::function<StaticSets(const std::string& params)> probe;
};

class ProcedureCatalog {
 public:
  // Both body and probe are required: deterministic locking and the
  // high-contention path rely on statically known key sets.
  void register_procedure(const std::string& name, Procedure p);

  const Procedure& get(const std::string& name) const;
  bool has(const std::string& name) const { return procs_.count(name) > 0; }

  void execute(const ProcedureCall& call, TxnContext& ctx) const;
  StaticSets probe_static_sets(const ProcedureCall& call) const;

  std::vector<std::string> names() const;

  // Catalog with the built-in procedures registered (see below).
  static ProcedureCatalog builtin();

 private:
  std::map<std::string, Procedure> procs_;
};

// Built-in procedures. Param encodings use the canonical byte format.
//
//   put        one blind write: key, value
//   del        one delete: key
//   increment  read-modify-write +1 on each listed key (absent reads as 0)
//   sum_put    dst = read(src) + addend (absent src reads as 0)
//   ycsb       list of ops: reads and blind writes with inline values
//   tpcc_new_order  read item prices, decrement stocks, insert order row
//   tpcc_payment    add amount to warehouse/district ytd, subtract from customer

std::string make_put_params(const std::string& key, const std::string& value);
std::string make_del_params(const std::string& key);
std::string make_increment_params(const std::vector<std::string>& keys);
std::string make_sum_put_params(const std::string& src, const std::string& dst,
                                int64_t addend);

struct YcsbOp {
  bool is_write = false;
  std::string key;
  std::string value;  // writes only
};
std::string make_ycsb_params(const std::vector<YcsbOp>& ops);
std::vector<YcsbOp> parse_ycsb_params(const std::string& params);

struct NewOrderLine {
  std::string item_key;
  std::string stock_key;
  int64_t quantity = 0;
};
std::string make_new_order_params(const std::string& order_key,
                                  const std::vector<NewOrderLine>& lines);
std::string make_payment_params(const std::string& warehouse_key,
                                const std::string& district_key,
                                const std::string& customer_key, int64_t amount);

// int64 values stored as 8-byte little-endian strings; absent decodes as 0.
std::string encode_i64_value(int64_t v);
int64_t decode_i64_value(const std::optional<std::string>& v);

}  // namespace minerva
