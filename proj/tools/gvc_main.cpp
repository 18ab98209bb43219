// Command line front end: solve / reduce / lp / gen / verify over the
// line-oriented instance format documented in gvc/io.hpp.
//
// Exit codes: 0 success, 2 parse error, 3 precondition failure,
// 4 verification-suite failure.

#include <chrono>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "gvc/instance.hpp"
#include "gvc/io.hpp"
#include "gvc/lp.hpp"
#include "gvc/oracle.hpp"
#include "gvc/reductions.hpp"
#include "gvc/solvers.hpp"
#include "gvc/verify.hpp"

namespace {

using namespace gvc;

using Clock = std::chrono::steady_clock;

double elapsed_ms(Clock::time_point start) {
  return std::chrono::duration<double, std::milli>(Clock::now() - start)
      .count();
}

std::string subset_text(const std::vector<int>& members) {
  std::string out = "{";
  for (std::size_t i = 0; i < members.size(); ++i)
    out += (i ? ", " : "") + std::to_string(members[i] + 1);
  return out + "}";
}

std::string subset_machine(const std::vector<int>& members) {
  if (members.empty()) return "-";
  std::string out;
  for (std::size_t i = 0; i < members.size(); ++i)
    out += (i ? "," : "") + std::to_string(members[i] + 1);
  return out;
}

// Aligned text plus a single machine-readable key=value line.
struct Report {
  struct Field {
    std::string key, text, machine;
  };
  std::vector<Field> fields;

  void add(const std::string& key, const std::string& text) {
    fields.push_back({key, text, text});
  }
  void add(const std::string& key, const std::string& text,
           const std::string& machine) {
    fields.push_back({key, text, machine});
  }
  void add(const std::string& key, double value) {
    add(key, format_weight(value));
  }

  void print(std::ostream& out) const {
    std::size_t width = 0;
    for (const Field& f : fields) width = std::max(width, f.key.size());
    for (const Field& f : fields)
      out << f.key << std::string(width - f.key.size() + 2, ' ') << f.text
          << "\n";
    out << "\n";
    for (std::size_t i = 0; i < fields.size(); ++i)
      out << (i ? " " : "") << fields[i].key << "=" << fields[i].machine;
    out << "\n";
  }
};

void write_output(const std::string& path, const std::string& text) {
  if (path.empty() || path == "-") {
    std::cout << text;
    return;
  }
  std::ofstream out(path);
  if (!out) throw Error("cannot write '" + path + "'");
  out << text;
}

ProblemKind require_unrestricted(const InstanceFile& file, const char* method) {
  if (file.type != InstanceFile::Type::Gvc)
    throw PreconditionError(std::string(method) +
                            " expects a vertex-subset instance");
  const ProblemKind kind = file.kind;
  if (kind_info(kind).feasible != Feasible::AnySubset)
    throw PreconditionError(std::string(method) +
                            " works on the unrestricted kinds only");
  return kind;
}

UbqpReduction fold_to_ubqp(const GvcInstance& inst, ProblemKind kind) {
  switch (kind) {
    case ProblemKind::GVC1:
      return gvc1_to_ubqp(inst);
    case ProblemKind::GVC2:
      return gvc2_to_ubqp(inst);
    default:
      return gvc_to_ubqp(inst);
  }
}

BipartitePartition partition_for(const InstanceFile& file) {
  if (file.partition) return *file.partition;
  const auto part = two_color(file.gvc);
  if (!part)
    throw PreconditionError(
        "instance is not bipartite and carries no b lines");
  return *part;
}

int cmd_solve(const std::string& path, const std::string& method, int depth) {
  const InstanceFile file = load_instance(path);
  Report report;
  report.add("method", method);
  report.add("instance", instance_digest(file));

  const auto start = Clock::now();
  if (file.type == InstanceFile::Type::Bqp01) {
    if (method != "brute")
      throw PreconditionError("two-sided instances support --method brute");
    const Bqp01Result res = brute_force_bqp01_small_side(file.bqp01);
    if (evaluate_bqp01(file.bqp01, res.left, res.right) != res.value)
      throw Error("internal: value failed re-validation");
    report.add("value", res.value);
    report.add("left", subset_text(res.left), subset_machine(res.left));
    report.add("right", subset_text(res.right), subset_machine(res.right));
    report.add("optima", std::to_string(res.optimaCount));
    report.add("time_ms", elapsed_ms(start));
    report.print(std::cout);
    return 0;
  }

  if (file.type == InstanceFile::Type::Ubqp) {
    const UbqpInstance& inst = file.ubqp;
    OracleResult res;
    if (method == "brute")
      res = brute_force_ubqp(inst);
    else if (method == "mincut")
      res = solve_mincut_case(inst);
    else
      throw PreconditionError(
          "quadratic instances support --method brute or mincut");
    if (evaluate_ubqp(inst, res.subset) != res.value)
      throw Error("internal: value failed re-validation");
    report.add("value", res.value);
    report.add("subset", subset_text(res.subset), subset_machine(res.subset));
    report.add("time_ms", elapsed_ms(start));
    report.print(std::cout);
    return 0;
  }

  const GvcInstance& inst = file.gvc;
  const ProblemKind kind = file.kind;
  report.add("kind", kind_name(kind));

  if (method == "lp") {
    const LpSolution sol = solve_lp(build(inst, kind));
    if (sol.status != LpSolution::Status::Optimal)
      throw Error("internal: relaxation did not report an optimum");
    report.add("value", sol.reported);
    report.add("note", "relaxation bound; no subset");
    report.add("time_ms", elapsed_ms(start));
    report.print(std::cout);
    return 0;
  }

  double value = 0.0;
  std::vector<int> subset;
  std::optional<double> oracleValue;

  if (method == "brute") {
    const OracleResult res = brute_force(inst, kind);
    value = res.value;
    subset = res.subset;
  } else if (method == "mincut") {
    const UbqpReduction red =
        fold_to_ubqp(inst, require_unrestricted(file, "mincut"));
    const OracleResult res = solve_mincut_case(red.target);
    value = res.value + red.offset;
    subset = res.subset;
  } else if (method == "bipartite-flow") {
    require_unrestricted(file, "bipartite-flow");
    const OracleResult res = solve_bipartite_flow(inst, partition_for(file));
    value = res.value;
    subset = res.subset;
  } else if (method == "branch") {
    if (kind != ProblemKind::GVC2)
      throw PreconditionError("branch expects the both-endpoint kind");
    const OracleResult res = branch_solve(inst, depth, [](const GvcInstance& g) {
      return brute_force(g, ProblemKind::GVC2);
    });
    value = res.value;
    subset = res.subset;
    report.add("depth", std::to_string(depth));
  } else if (method == "round") {
    require_unrestricted(file, "round");
    const RoundResult res = round_gvc(inst);
    value = res.rounded.value;
    subset = res.rounded.members;
    report.add("lp_value", res.lp.reported);
    if (inst.n <= kOracleMaxN) {
      oracleValue = brute_force(inst, kind).value;
    }
  } else {
    throw PreconditionError("unknown method '" + method + "'");
  }

  if (evaluate(inst, kind, subset).value != value)
    throw Error("internal: value failed re-validation");
  report.add("value", value);
  report.add("subset", subset_text(subset), subset_machine(subset));
  if (oracleValue) {
    report.add("oracle", *oracleValue);
    if (*oracleValue > 0.0) report.add("ratio", value / *oracleValue);
  }
  report.add("time_ms", elapsed_ms(start));
  report.print(std::cout);
  return 0;
}

int cmd_reduce(const std::string& path, const std::string& target,
               const std::string& outPath) {
  const InstanceFile file = load_instance(path);
  std::string text;

  if (file.type == InstanceFile::Type::Bqp01)
    throw PreconditionError("no reductions start from two-sided instances");

  if (file.type == InstanceFile::Type::Ubqp) {
    if (target != "gvc2")
      throw PreconditionError(
          "quadratic instances reduce to the both-endpoint kind only");
    const GvcReduction red = ubqp_to_gvc2(file.ubqp);
    text = serialize(red.target, red.targetKind, std::nullopt, red.offset);
    write_output(outPath, text);
    return 0;
  }

  const GvcInstance& inst = file.gvc;
  const ProblemKind kind = file.kind;
  const bool unrestricted = kind_info(kind).feasible == Feasible::AnySubset;
  const bool coverKind = kind == ProblemKind::VCPNEW ||
                         kind == ProblemKind::VCOP || kind == ProblemKind::VCUP;
  const bool indepKind = kind == ProblemKind::ISPNEW ||
                         kind == ProblemKind::ISOP || kind == ProblemKind::ISUP;

  if (target == "gvc1" || target == "gvc2") {
    if (!unrestricted)
      throw PreconditionError("'" + target +
                              "' expects an unrestricted source kind");
    const GvcReduction red = target == "gvc1" ? gvc_to_gvc1(inst)
                                              : gvc_to_gvc2(inst);
    text = serialize(red.target, red.targetKind, std::nullopt, red.offset);
  } else if (target == "ubqp") {
    if (!unrestricted)
      throw PreconditionError("'ubqp' expects an unrestricted source kind");
    const UbqpReduction red = fold_to_ubqp(inst, kind);
    text = serialize(red.target, red.offset);
  } else if (target == "bqp01") {
    if (!unrestricted)
      throw PreconditionError("'bqp01' expects an unrestricted source kind");
    const Bqp01Reduction red =
        bipartite_to_bqp01(inst, partition_for(file), kind);
    text = serialize(red.target, red.offset);
  } else if (target == "mwvcp") {
    if (!coverKind)
      throw PreconditionError("'mwvcp' expects a cover kind");
    const GvcReduction red = vcpnew_to_mwvcp(inst);
    text = serialize(red.target, red.targetKind, std::nullopt, red.offset);
  } else if (target == "mwisp") {
    if (!indepKind)
      throw PreconditionError("'mwisp' expects an independent-set kind");
    const GvcReduction red = ispnew_to_mwisp(inst);
    text = serialize(red.target, red.targetKind, std::nullopt, red.offset);
  } else if (target == "complement") {
    if (kind == ProblemKind::GVC1 || kind == ProblemKind::GVC2) {
      const GvcReduction red = gvc1_complement_gvc2(inst, kind);
      text = serialize(red.target, red.targetKind, std::nullopt, red.offset);
      text += "# back-map: complement of the reported subset\n";
    } else if (indepKind) {
      const GvcReduction red = ispnew_complement_vcpnew(inst);
      text = serialize(red.target, red.targetKind, std::nullopt, red.offset);
      text +=
          "# back-map: complement; source value = offset - target value\n";
    } else {
      throw PreconditionError(
          "'complement' expects gvc1, gvc2 or an independent-set kind");
    }
  } else {
    throw PreconditionError("unknown reduction target '" + target + "'");
  }

  write_output(outPath, text);
  return 0;
}

int cmd_lp(const std::string& path, std::string formulation, bool cuts,
           bool checkHalfIntegral, const std::string& exportPath) {
  const InstanceFile file = load_instance(path);
  if (file.type != InstanceFile::Type::Gvc)
    throw PreconditionError("lp expects a vertex-subset instance");
  const GvcInstance& inst = file.gvc;

  ProblemKind tag = file.kind;
  if (!formulation.empty()) {
    const auto parsed = kind_from_name(formulation);
    if (!parsed)
      throw PreconditionError("unknown formulation '" + formulation + "'");
    tag = *parsed;
  }

  const LpModel model = build(inst, tag);
  if (!exportPath.empty()) {
    std::ostringstream text;
    export_lp(model, text);
    write_output(exportPath, text.str());
  }

  const auto start = Clock::now();
  const LpSolution sol = solve_lp(model);
  if (sol.status != LpSolution::Status::Optimal)
    throw Error("internal: relaxation did not report an optimum");

  Report report;
  report.add("formulation", kind_name(tag));
  report.add("instance", instance_digest(file));
  report.add("value", sol.reported);
  std::string xs = "(";
  std::string xm;
  for (int v = 0; v < inst.n; ++v) {
    xs += (v ? ", " : "") + format_weight(sol.values[model.xVar[v]]);
    xm += (v ? "," : "") + format_weight(sol.values[model.xVar[v]]);
  }
  report.add("x", xs + ")", xm);
  report.add("iterations", std::to_string(sol.iterations));

  bool halfIntegralFailed = false;
  if (checkHalfIntegral) {
    const HalfIntegralCheck hc = check_half_integral(model, sol);
    halfIntegralFailed = !hc.ok;
    report.add("half_integral", hc.ok ? "pass" : "FAIL");
    if (!hc.ok)
      report.add("worst_x", "x_" + std::to_string(hc.worstVertex + 1) +
                                " off by " + format_weight(hc.worstDist));
  }
  if (cuts) {
    const CutPool pool = clique_cuts(inst, 4);
    const LpSolution strengthened = solve_lp_with_cuts(inst, model, pool);
    report.add("cliques", std::to_string(pool.cliques.size()));
    report.add("cut_value", strengthened.reported);
  }
  report.add("time_ms", elapsed_ms(start));
  report.print(std::cout);
  return halfIntegralFailed ? 4 : 0;
}

int cmd_gen(const GeneratorConfig& cfg, const std::string& outPath) {
  const GeneratedInstance out = generate(cfg);
  write_output(outPath,
               serialize(out.inst, out.kind, out.partition, std::nullopt));
  return 0;
}

int cmd_verify(const std::string& suite, int trials, std::uint64_t seed) {
  for (const SuiteEntry& entry : verify_suites()) {
    if (suite != entry.name) continue;
    const SuiteResult result = entry.run(trials, seed);
    std::cout << format_suite(result) << "\n";
    return result.pass() ? 0 : 4;
  }
  throw PreconditionError("unknown suite '" + suite + "'");
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Solver toolkit for vertex-subset problems with per-edge "
               "cover penalties"};
  app.require_subcommand(1);

  std::string path, method = "brute", target, formulation, outPath;
  std::string suite;
  int depth = 2;
  bool cuts = false, checkHalfIntegral = false;
  std::string exportPath;
  int trials = 100;
  std::uint64_t seed = 1;
  GeneratorConfig cfg;
  std::string familyName = "general";

  CLI::App* solve = app.add_subcommand("solve", "solve an instance file");
  solve->add_option("file", path)->required();
  solve->add_option("--method", method)
      ->check(CLI::IsMember(
          {"brute", "mincut", "bipartite-flow", "branch", "round", "lp"}));
  solve->add_option("--depth", depth, "branching depth for --method branch");

  CLI::App* reduce =
      app.add_subcommand("reduce", "rewrite an instance into another kind");
  reduce->add_option("file", path)->required();
  reduce->add_option("--to", target)
      ->required()
      ->check(CLI::IsMember({"gvc1", "gvc2", "ubqp", "bqp01", "mwvcp", "mwisp",
                             "complement"}));
  reduce->add_option("-o,--output", outPath);

  CLI::App* lp = app.add_subcommand("lp", "solve a relaxation");
  lp->add_option("file", path)->required();
  lp->add_option("--formulation", formulation,
                 "defaults to the kind named in the file");
  lp->add_flag("--cuts", cuts, "strengthen with clique inequalities");
  lp->add_flag("--check-half-integral", checkHalfIntegral);
  lp->add_option("--export-lp", exportPath, "write the model in LP format");

  CLI::App* genCmd = app.add_subcommand("gen", "generate a random instance");
  genCmd->add_option("--family", familyName);
  genCmd->add_option("--n", cfg.n);
  genCmd->add_option("--density", cfg.density);
  genCmd->add_option("--lo", cfg.weightLo);
  genCmd->add_option("--hi", cfg.weightHi);
  genCmd->add_option("--alpha", cfg.alpha);
  genCmd->add_option("--beta", cfg.beta);
  genCmd->add_option("--K", cfg.bandK);
  genCmd->add_option("--gamma", cfg.gamma);
  genCmd->add_option("--delta", cfg.delta);
  genCmd->add_option("--seed", cfg.seed);
  genCmd->add_option("-o,--output", outPath);

  CLI::App* verify = app.add_subcommand("verify", "run a property suite");
  std::vector<std::string> suiteNames;
  for (const gvc::SuiteEntry& entry : gvc::verify_suites())
    suiteNames.push_back(entry.name);
  verify->add_option("--suite", suite)
      ->required()
      ->check(CLI::IsMember(suiteNames));
  verify->add_option("--trials", trials);
  verify->add_option("--seed", seed);

  try {
    app.parse(argc, argv);
    if (solve->parsed()) return cmd_solve(path, method, depth);
    if (reduce->parsed()) return cmd_reduce(path, target, outPath);
    if (lp->parsed())
      return cmd_lp(path, formulation, cuts, checkHalfIntegral, exportPath);
    if (genCmd->parsed()) {
      const auto family = gvc::family_from_name(familyName);
      if (!family)
        throw gvc::ConfigError("unknown family '" + familyName + "'");
      cfg.family = *family;
      return cmd_gen(cfg, outPath);
    }
    if (verify->parsed()) return cmd_verify(suite, trials, seed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  } catch (const gvc::ParseError& e) {
    std::cerr << "parse error: " << e.what() << "\n";
    return 2;
  } catch (const gvc::FeasibilityError& e) {
    std::cerr << "infeasible: " << e.what() << "\n";
    return 3;
  } catch (const gvc::PreconditionError& e) {
    std::cerr << "precondition: " << e.what() << "\n";
    return 3;
  } catch (const gvc::CapacityError& e) {
    std::cerr << "capacity: " << e.what() << "\n";
    return 3;
  } catch (const gvc::ConfigError& e) {
    std::cerr << "config: " << e.what() << "\n";
    return 3;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 0;
}
