#include "gvc/io.hpp"

#include <charconv>
#include <cstdint>
#include <fstream>
#include <limits>
#include <sstream>
#include <vector>

namespace gvc {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

struct Tokenizer {
  std::istream& in;
  int lineNo = 0;
  std::vector<std::string> fields = {};

  bool next_line() {
    std::string line;
    while (std::getline(in, line)) {
      ++lineNo;
      const std::size_t hash = line.find('#');
      if (hash != std::string::npos) line.erase(hash);
      fields.clear();
      std::istringstream split(line);
      std::string tok;
      while (split >> tok) fields.push_back(tok);
      if (!fields.empty()) return true;
    }
    return false;
  }
};

[[noreturn]] void fail(const Tokenizer& tk, const std::string& msg) {
  throw ParseError("line " + std::to_string(tk.lineNo) + ": " + msg, tk.lineNo);
}

double parse_weight(const Tokenizer& tk, const std::string& tok) {
  if (tok == "inf" || tok == "+inf") return kInf;
  double value = 0.0;
  const char* begin = tok.data();
  const char* end = begin + tok.size();
  const auto [ptr, ec] = std::from_chars(begin, end, value);
  if (ec != std::errc() || ptr != end)
    fail(tk, "bad number '" + tok + "'");
  return value;
}

long long parse_int(const Tokenizer& tk, const std::string& tok) {
  long long value = 0;
  const char* begin = tok.data();
  const char* end = begin + tok.size();
  const auto [ptr, ec] = std::from_chars(begin, end, value);
  if (ec != std::errc() || ptr != end)
    fail(tk, "bad integer '" + tok + "'");
  return value;
}

int parse_index(const Tokenizer& tk, const std::string& tok, long long n,
                const char* what) {
  const long long i = parse_int(tk, tok);
  if (i < 1 || i > n)
    fail(tk, std::string(what) + " index " + tok + " out of range 1.." +
                 std::to_string(n));
  return static_cast<int>(i - 1);
}

InstanceFile parse_gvc(Tokenizer& tk) {
  if (tk.fields.size() != 5) fail(tk, "expected: p gvc <n> <m> <kind>");
  const long long n = parse_int(tk, tk.fields[2]);
  const long long m = parse_int(tk, tk.fields[3]);
  if (n < 0 || m < 0) fail(tk, "negative instance shape");
  const auto kind = kind_from_name(tk.fields[4]);
  if (!kind) fail(tk, "unknown kind '" + tk.fields[4] + "'");

  std::vector<double> c(n, 0.0);
  std::vector<char> seenV(n, 0);
  std::vector<Edge> edges;
  std::vector<double> q0, q1, q2;
  std::vector<int> side(n, -1);
  bool anySide = false;
  std::optional<double> offset;

  while (tk.next_line()) {
    const std::string& tag = tk.fields[0];
    if (tag == "v") {
      if (tk.fields.size() != 3) fail(tk, "expected: v <i> <c>");
      const int i = parse_index(tk, tk.fields[1], n, "vertex");
      if (seenV[i]) fail(tk, "duplicate v line for vertex " + tk.fields[1]);
      seenV[i] = 1;
      c[i] = parse_weight(tk, tk.fields[2]);
    } else if (tag == "e") {
      if (tk.fields.size() != 6) fail(tk, "expected: e <i> <j> <q0> <q1> <q2>");
      const int u = parse_index(tk, tk.fields[1], n, "vertex");
      const int v = parse_index(tk, tk.fields[2], n, "vertex");
      edges.push_back({u, v});
      q0.push_back(parse_weight(tk, tk.fields[3]));
      q1.push_back(parse_weight(tk, tk.fields[4]));
      q2.push_back(parse_weight(tk, tk.fields[5]));
    } else if (tag == "b") {
      if (tk.fields.size() != 3 ||
          (tk.fields[2] != "L" && tk.fields[2] != "R"))
        fail(tk, "expected: b <i> L|R");
      const int i = parse_index(tk, tk.fields[1], n, "vertex");
      if (side[i] != -1) fail(tk, "duplicate b line for vertex " + tk.fields[1]);
      side[i] = tk.fields[2] == "L" ? 0 : 1;
      anySide = true;
    } else if (tag == "offset") {
      if (tk.fields.size() != 2) fail(tk, "expected: offset <value>");
      offset = parse_weight(tk, tk.fields[1]);
    } else {
      fail(tk, "unexpected line '" + tag + "'");
    }
  }
  if (static_cast<long long>(edges.size()) != m)
    fail(tk, "edge count " + std::to_string(edges.size()) +
                 " does not match header m=" + std::to_string(m));

  InstanceFile file;
  file.type = InstanceFile::Type::Gvc;
  file.kind = *kind;
  file.offset = offset;
  try {
    file.gvc = make_instance(static_cast<int>(n), std::move(edges),
                             std::move(c), std::move(q0), std::move(q1),
                             std::move(q2));
    validate_kind(file.gvc, file.kind);
  } catch (const Error& err) {
    fail(tk, err.what());
  }
  if (anySide) {
    BipartitePartition part;
    for (int v = 0; v < static_cast<int>(n); ++v) {
      if (side[v] == -1)
        fail(tk, "vertex " + std::to_string(v + 1) + " has no b line");
      (side[v] == 0 ? part.left : part.right).push_back(v);
    }
    file.partition = std::move(part);
  }
  return file;
}

InstanceFile parse_ubqp(Tokenizer& tk) {
  if (tk.fields.size() != 3) fail(tk, "expected: p ubqp <n>");
  const long long n = parse_int(tk, tk.fields[2]);
  if (n < 0) fail(tk, "negative instance shape");
  std::vector<double> a(n, 0.0);
  std::vector<char> seenA(n, 0);
  std::vector<Edge> pairs;
  std::vector<double> q;
  std::optional<double> offset;
  while (tk.next_line()) {
    const std::string& tag = tk.fields[0];
    if (tag == "a") {
      if (tk.fields.size() != 3) fail(tk, "expected: a <i> <v>");
      const int i = parse_index(tk, tk.fields[1], n, "variable");
      if (seenA[i]) fail(tk, "duplicate a line");
      seenA[i] = 1;
      a[i] = parse_weight(tk, tk.fields[2]);
    } else if (tag == "q") {
      if (tk.fields.size() != 4) fail(tk, "expected: q <i> <j> <v>");
      const int i = parse_index(tk, tk.fields[1], n, "variable");
      const int j = parse_index(tk, tk.fields[2], n, "variable");
      pairs.push_back({i, j});
      q.push_back(parse_weight(tk, tk.fields[3]));
    } else if (tag == "offset") {
      if (tk.fields.size() != 2) fail(tk, "expected: offset <value>");
      offset = parse_weight(tk, tk.fields[1]);
    } else {
      fail(tk, "unexpected line '" + tag + "'");
    }
  }
  InstanceFile file;
  file.type = InstanceFile::Type::Ubqp;
  file.offset = offset;
  try {
    file.ubqp =
        make_ubqp(static_cast<int>(n), std::move(a), std::move(pairs), std::move(q));
  } catch (const Error& err) {
    fail(tk, err.what());
  }
  return file;
}

InstanceFile parse_bqp01(Tokenizer& tk) {
  if (tk.fields.size() != 4) fail(tk, "expected: p bqp01 <m> <n>");
  const long long m = parse_int(tk, tk.fields[2]);
  const long long n = parse_int(tk, tk.fields[3]);
  if (m < 0 || n < 0) fail(tk, "negative instance shape");
  std::vector<double> a(m, 0.0), b(n, 0.0);
  std::vector<std::vector<double>> q(m, std::vector<double>(n, 0.0));
  std::optional<double> offset;
  while (tk.next_line()) {
    const std::string& tag = tk.fields[0];
    if (tag == "a") {
      if (tk.fields.size() != 3) fail(tk, "expected: a <i> <v>");
      a[parse_index(tk, tk.fields[1], m, "row")] =
          parse_weight(tk, tk.fields[2]);
    } else if (tag == "b") {
      if (tk.fields.size() != 3) fail(tk, "expected: b <j> <v>");
      b[parse_index(tk, tk.fields[1], n, "column")] =
          parse_weight(tk, tk.fields[2]);
    } else if (tag == "q") {
      if (tk.fields.size() != 4) fail(tk, "expected: q <i> <j> <v>");
      const int i = parse_index(tk, tk.fields[1], m, "row");
      const int j = parse_index(tk, tk.fields[2], n, "column");
      q[i][j] = parse_weight(tk, tk.fields[3]);
    } else if (tag == "offset") {
      if (tk.fields.size() != 2) fail(tk, "expected: offset <value>");
      offset = parse_weight(tk, tk.fields[1]);
    } else {
      fail(tk, "unexpected line '" + tag + "'");
    }
  }
  InstanceFile file;
  file.type = InstanceFile::Type::Bqp01;
  file.offset = offset;
  try {
    file.bqp01 = make_bqp01(static_cast<int>(m), static_cast<int>(n),
                            std::move(a), std::move(b), std::move(q));
  } catch (const Error& err) {
    fail(tk, err.what());
  }
  return file;
}

}  // namespace

InstanceFile parse_instance(std::istream& in) {
  Tokenizer tk{in};
  if (!tk.next_line()) throw ParseError("empty instance file", 0);
  if (tk.fields[0] != "p" || tk.fields.size() < 2)
    fail(tk, "first line must be a p header");
  if (tk.fields[1] == "gvc") return parse_gvc(tk);
  if (tk.fields[1] == "ubqp") return parse_ubqp(tk);
  if (tk.fields[1] == "bqp01") return parse_bqp01(tk);
  fail(tk, "unknown format '" + tk.fields[1] + "'");
}

InstanceFile parse_instance(const std::string& text) {
  std::istringstream in(text);
  return parse_instance(in);
}

InstanceFile load_instance(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error("cannot open '" + path + "'");
  return parse_instance(in);
}

std::string format_weight(double w) {
  if (w == kInf) return "inf";
  char buf[64];
  const auto res = std::to_chars(buf, buf + sizeof buf, w);
  return std::string(buf, res.ptr);
}

std::string serialize(const GvcInstance& inst, ProblemKind kind,
                      const std::optional<BipartitePartition>& partition,
                      std::optional<double> offset) {
  std::string out = "p gvc " + std::to_string(inst.n) + " " +
                    std::to_string(inst.m()) + " " + kind_name(kind) + "\n";
  for (int v = 0; v < inst.n; ++v)
    out += "v " + std::to_string(v + 1) + " " + format_weight(inst.c[v]) + "\n";
  for (int e = 0; e < inst.m(); ++e)
    out += "e " + std::to_string(inst.edges[e].u + 1) + " " +
           std::to_string(inst.edges[e].v + 1) + " " +
           format_weight(inst.q0[e]) + " " + format_weight(inst.q1[e]) + " " +
           format_weight(inst.q2[e]) + "\n";
  if (partition) {
    std::vector<char> isRight(inst.n, 0);
    for (int v : partition->right) isRight[v] = 1;
    for (int v = 0; v < inst.n; ++v)
      out += "b " + std::to_string(v + 1) + (isRight[v] ? " R" : " L") + "\n";
  }
  if (offset) out += "offset " + format_weight(*offset) + "\n";
  return out;
}

std::string serialize(const UbqpInstance& inst, std::optional<double> offset) {
  std::string out = "p ubqp " + std::to_string(inst.n) + "\n";
  for (int v = 0; v < inst.n; ++v)
    out += "a " + std::to_string(v + 1) + " " + format_weight(inst.a[v]) + "\n";
  for (std::size_t p = 0; p < inst.pairs.size(); ++p)
    out += "q " + std::to_string(inst.pairs[p].u + 1) + " " +
           std::to_string(inst.pairs[p].v + 1) + " " +
           format_weight(inst.q[p]) + "\n";
  if (offset) out += "offset " + format_weight(*offset) + "\n";
  return out;
}

std::string serialize(const Bqp01Instance& inst, std::optional<double> offset) {
  std::string out =
      "p bqp01 " + std::to_string(inst.m) + " " + std::to_string(inst.n) + "\n";
  for (int i = 0; i < inst.m; ++i)
    out += "a " + std::to_string(i + 1) + " " + format_weight(inst.a[i]) + "\n";
  for (int j = 0; j < inst.n; ++j)
    out += "b " + std::to_string(j + 1) + " " + format_weight(inst.b[j]) + "\n";
  for (int i = 0; i < inst.m; ++i)
    for (int j = 0; j < inst.n; ++j)
      if (inst.q[i][j] != 0.0)
        out += "q " + std::to_string(i + 1) + " " + std::to_string(j + 1) +
               " " + format_weight(inst.q[i][j]) + "\n";
  if (offset) out += "offset " + format_weight(*offset) + "\n";
  return out;
}

std::string serialize(const InstanceFile& file) {
  switch (file.type) {
    case InstanceFile::Type::Gvc:
      return serialize(file.gvc, file.kind, file.partition, file.offset);
    case InstanceFile::Type::Ubqp:
      return serialize(file.ubqp, file.offset);
    default:
      return serialize(file.bqp01, file.offset);
  }
}

std::string instance_digest(const InstanceFile& file) {
  const std::string text = serialize(file);
  std::uint64_t hash = 1469598103934665603ull;
  for (unsigned char ch : text) {
    hash ^= ch;
    hash *= 1099511628211ull;
  }
  char buf[17];
  static const char* hex = "0123456789abcdef";
  for (int i = 15; i >= 0; --i) {
    buf[i] = hex[hash & 0xf];
    hash >>= 4;
  }
  buf[16] = '\0';
  return std::string(buf);
}

}  // namespace gvc
