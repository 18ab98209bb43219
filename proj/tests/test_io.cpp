#include <doctest.h>

#include <cmath>
#include <limits>
#include <sstream>

#include "gvc/io.hpp"
#include "gvc/oracle.hpp"

using namespace gvc;

namespace {
const double kInf = std::numeric_limits<double>::infinity();
}

TEST_CASE("weight formatting is shortest round-trip") {
  CHECK(format_weight(3) == "3");
  CHECK(format_weight(-7) == "-7");
  CHECK(format_weight(0.5) == "0.5");
  CHECK(format_weight(-0.25) == "-0.25");
  CHECK(format_weight(kInf) == "inf");
  CHECK(format_weight(1e100) == "1e+100");
}

TEST_CASE("vertex-subset files round-trip") {
  const GvcInstance g = make_instance(3, {{0, 1}, {1, 2}}, {1.5, -2, 0},
                                      {kInf, 0}, {3, -1}, {0, 0.25});
  const std::string text = serialize(g, ProblemKind::GVC);
  const InstanceFile file = parse_instance(text);
  CHECK(file.type == InstanceFile::Type::Gvc);
  CHECK(file.kind == ProblemKind::GVC);
  CHECK(file.gvc == g);
  CHECK(serialize(file) == text);
}

TEST_CASE("partitions and offsets survive the round-trip") {
  const GvcInstance g =
      make_instance(2, {{0, 1}}, {1, 2}, {0}, {0}, {0});
  const BipartitePartition part{{0}, {1}};
  const std::string text = serialize(g, ProblemKind::MWVCP, part, -2.5);
  const InstanceFile file = parse_instance(text);
  CHECK(file.kind == ProblemKind::MWVCP);
  REQUIRE(file.partition.has_value());
  CHECK(*file.partition == part);
  REQUIRE(file.offset.has_value());
  CHECK(*file.offset == -2.5);
}

TEST_CASE("quadratic files round-trip") {
  const UbqpInstance u = make_ubqp(3, {1, -2, 0}, {{0, 2}, {1, 2}}, {0.5, -3});
  const InstanceFile file = parse_instance(serialize(u, 4));
  CHECK(file.type == InstanceFile::Type::Ubqp);
  CHECK(file.ubqp == u);
  CHECK(file.offset == 4.0);

  const Bqp01Instance b =
      make_bqp01(2, 2, {1, 0}, {-1, 2}, {{3, 0}, {0, -4}});
  const InstanceFile back = parse_instance(serialize(b));
  CHECK(back.type == InstanceFile::Type::Bqp01);
  CHECK(back.bqp01 == b);
}

TEST_CASE("comments and blank lines are ignored") {
  const std::string text =
      "# header comment\n"
      "p gvc 2 1 gvc2\n"
      "\n"
      "v 1 1  # inline trailing comment\n"
      "v 2 -2\n"
      "e 1 2 0 0 3\n";
  const InstanceFile file = parse_instance(text);
  CHECK(file.kind == ProblemKind::GVC2);
  CHECK(file.gvc.c == std::vector<double>{1, -2});
  CHECK(file.gvc.q2 == std::vector<double>{3});
}

TEST_CASE("infinity token never becomes a numeral") {
  const GvcInstance g =
      make_instance(2, {{0, 1}}, {0, 0}, {kInf}, {0}, {0});
  const std::string text = serialize(g, ProblemKind::GVC);
  CHECK(text.find("inf") != std::string::npos);
  CHECK(text.find("1e") == std::string::npos);
  const InstanceFile file = parse_instance(text);
  CHECK(std::isinf(file.gvc.q0[0]));
}

TEST_CASE("parse errors carry line numbers") {
  auto lineOf = [](const std::string& text) {
    try {
      parse_instance(text);
    } catch (const ParseError& e) {
      return e.line;
    }
    return -1;
  };
  CHECK(lineOf("p gvc 2 1 gvc\nv 1 oops\n") == 2);
  CHECK(lineOf("p gvc 2 1 nope\n") == 1);
  CHECK(lineOf("p gvc 2 1 gvc\nv 1 0\nv 2 0\ne 1 3 0 0 0\n") == 4);
  CHECK(lineOf("p gvc 2 2 gvc\nv 1 0\nv 2 0\ne 1 2 0 0 0\n") > 0);
  CHECK(lineOf("p gvc 2 1 gvc\nv 1 0\nv 1 1\ne 1 2 0 0 0\n") == 3);
  CHECK(lineOf("q 1 2 3\n") == 1);
  CHECK(lineOf("") == 0);
  // a partition must place every vertex
  CHECK(lineOf("p gvc 2 1 gvc\nv 1 0\nv 2 0\ne 1 2 0 0 0\nb 1 L\n") > 0);
}

TEST_CASE("kind invariants are checked at parse time") {
  // gvc1 forbids one- and both-endpoint weights
  const std::string text =
      "p gvc 2 1 gvc1\nv 1 0\nv 2 0\ne 1 2 0 1 0\n";
  CHECK_THROWS_AS(parse_instance(text), ParseError);
}

TEST_CASE("digest is stable and ignores cosmetics") {
  GeneratorConfig cfg;
  cfg.family = Family::General;
  cfg.n = 6;
  cfg.seed = 8;
  const GeneratedInstance g = generate(cfg);
  const std::string text = serialize(g.inst, g.kind);
  const InstanceFile a = parse_instance(text);
  const InstanceFile b = parse_instance("# cosmetic preamble\n" + text);
  CHECK(instance_digest(a) == instance_digest(b));
  CHECK(instance_digest(a).size() == 16);

  GeneratorConfig other = cfg;
  other.seed = 9;
  const GeneratedInstance h = generate(other);
  const InstanceFile c = parse_instance(serialize(h.inst, h.kind));
  CHECK(instance_digest(a) != instance_digest(c));
}

TEST_CASE("load_instance reports missing files") {
  CHECK_THROWS_AS(load_instance("/nonexistent/path.gvc"), Error);
}
