#pragma once

// Plain-text instance files.
//
//   # comment
//   p gvc <n> <m> <kind>
//   v <i> <c>                 1-based vertex, cost
//   e <i> <j> <q0> <q1> <q2>  weights are decimals or "inf"
//   b <i> L|R                 optional bipartition side
//   offset <value>            optional, written by reductions
//
//   p ubqp <n>      with  a <i> <v>  and  q <i> <j> <v>
//   p bqp01 <m> <n> with  a <i> <v>, b <j> <v>, q <i> <j> <v>
//
// serialize() is canonical (sorted lines, shortest round-trip decimals)
// and parse(serialize(x)) == x.

#include <iosfwd>
#include <optional>
#include <string>

#include "gvc/instance.hpp"

namespace gvc {

struct InstanceFile {
  enum class Type { Gvc, Ubqp, Bqp01 };
  Type type = Type::Gvc;
  GvcInstance gvc;
  ProblemKind kind = ProblemKind::GVC;
  std::optional<BipartitePartition> partition;
  UbqpInstance ubqp;
  Bqp01Instance bqp01;
  std::optional<double> offset;
};

InstanceFile parse_instance(std::istream& in);
InstanceFile parse_instance(const std::string& text);
InstanceFile load_instance(const std::string& path);  // Error on I/O failure

std::string serialize(const GvcInstance& inst, ProblemKind kind,
                      const std::optional<BipartitePartition>& partition = {},
                      std::optional<double> offset = {});
std::string serialize(const UbqpInstance& inst,
                      std::optional<double> offset = {});
std::string serialize(const Bqp01Instance& inst,
                      std::optional<double> offset = {});
std::string serialize(const InstanceFile& file);

// Shortest round-trip decimal; integers without a point; "inf".
std::string format_weight(double w);

// FNV-1a over the canonical serialization, as fixed-width hex.
std::string instance_digest(const InstanceFile& file);

}  // namespace gvc
