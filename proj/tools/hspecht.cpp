// Command-line front end: verification suites, object printing, single
// operator applications and the decomposition report.

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <optional>
#include <string>

#include "hspecht/chart.hpp"
#include "hspecht/decomposition.hpp"
#include "hspecht/dunkl.hpp"
#include "hspecht/specht.hpp"
#include "hspecht/suites.hpp"
#include "hspecht/text.hpp"
#include "report_json.hpp"

using namespace hspecht;
using nlohmann::ordered_json;

namespace {

void check_n(const std::optional<std::size_t>& n, int actual) {
  if (n && *n != static_cast<std::size_t>(actual))
    throw InvalidArgument("--n " + std::to_string(*n) + " does not match the shape size " + std::to_string(actual));
}

void check_r(int r, const RDiagram& shape) {
  if (shape.r() != r) throw InvalidArgument("shape has " + std::to_string(shape.r()) + " components, r = " + std::to_string(r));
}

void emit(const ordered_json& j, const std::string& path) {
  if (path.empty() || path == "-") {
    std::cout << j.dump(2) << "\n";
    return;
  }
  std::ofstream out(path);
  if (!out) throw InvalidArgument("cannot write " + path);
  out << j.dump(2) << "\n";
}

int run_suite_command(const SuiteConfig& cfg, const std::string& json_path, bool timing) {
  SuiteReport rep = run_suite(cfg);
  for (const auto& c : rep.checks) {
    std::cerr << "[" << to_string(c.status) << "] " << c.name;
    if (!c.witness.empty()) std::cerr << "  (" << c.witness << ")";
    std::cerr << "\n";
  }
  std::cerr << rep.suite << ": " << rep.count(Status::Pass) << " pass, " << rep.count(Status::Fail) << " fail, "
            << rep.count(Status::Inconclusive) << " inconclusive\n";
  if (!json_path.empty()) emit(tool::report_json(rep, timing), json_path);
  return rep.failed() ? 1 : 0;
}

std::vector<std::string> print_object(const std::string& kind, int r, std::optional<std::size_t> n,
                                      const std::string& shape_text, std::optional<std::size_t> index) {
  std::vector<std::string> lines;
  if (kind == "delta") {
    if (!n) throw InvalidArgument("delta needs --n");
    lines.push_back(build_chart(*n).delta->to_string());
    return lines;
  }
  if (shape_text.empty()) throw InvalidArgument(kind + " needs --shape");
  RDiagram shape = parse_rdiagram(shape_text);
  check_n(n, shape.size());
  if (kind == "tableaux") {
    for (const auto& t : enumerate_standard_tableaux(shape)) lines.push_back(t.to_string());
    return lines;
  }
  check_r(r, shape);
  auto tabs = enumerate_standard_tableaux(shape);
  if (index && (*index < 1 || *index > tabs.size()))
    throw InvalidArgument("--index must lie in 1.." + std::to_string(tabs.size()));
  if (kind == "specht") {
    for (std::size_t i = 0; i < tabs.size(); ++i)
      if (!index || *index == i + 1) lines.push_back(higher_specht(tabs.front(), tabs[i], r).value.to_string());
    return lines;
  }
  if (kind == "idempotent") {
    auto rep = rep_matrices(shape, tabs.front(), r);
    auto prim = primitive_idempotents(rep, r);
    for (std::size_t i = 0; i < prim.size(); ++i)
      if (!index || *index == i + 1) lines.push_back(prim[i].to_string());
    return lines;
  }
  throw InvalidArgument("unknown kind '" + kind + "' (specht, idempotent, delta, tableaux)");
}

ordered_json decompose_report(int r, std::size_t n, int degree, bool& passed) {
  auto d = build_decomposition(r, n);
  ordered_json j;
  j["r"] = r;
  j["n"] = n;
  j["degree"] = degree;
  auto shapes = ordered_json::array();
  for (const auto& b : d.blocks) {
    ordered_json s;
    s["shape"] = b.rep.shape.to_string();
    s["dimension"] = b.rep.dimension();
    s["S"] = b.rep.S.to_string();
    auto ts = ordered_json::array();
    for (const auto& t : b.rep.tableaux) ts.push_back(t.to_string());
    s["tableaux"] = ts;
    shapes.push_back(s);
  }
  j["shapes"] = shapes;
  passed = true;
  auto graded = graded_direct_sum_check(d, degree);
  auto degrees = ordered_json::array();
  for (const auto& gd : graded.degrees) {
    ordered_json g;
    g["degree"] = gd.degree;
    g["ranks"] = gd.ranks;
    g["sum"] = gd.sum;
    g["joint_rank"] = gd.joint_rank;
    g["dimension"] = gd.dimension;
    g["passed"] = gd.passed();
    degrees.push_back(g);
  }
  j["degrees"] = degrees;
  passed = passed && graded.passed;
  auto invariants = ordered_json::array();
  for (const auto& list : {validate_idempotents(d), idempotent_on_specht(d), character_orthogonality(d)})
    for (const auto& c : list) {
      ordered_json cj;
      cj["name"] = c.name;
      cj["passed"] = c.passed;
      if (!c.passed) cj["witness"] = c.witness;
      invariants.push_back(cj);
      passed = passed && c.passed;
    }
  j["invariants"] = invariants;
  j["passed"] = passed;
  return j;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Higher Specht polynomials, Dunkl operators and idempotent decompositions"};
  app.require_subcommand(0, 1);

  SuiteConfig cfg;
  std::string c_short = "1/2", c_long = "1/3", json_path;
  int degree = -1;
  bool no_timing = false, list = false;
  app.add_option("--suite", cfg.suite, "Verification suite to run");
  app.add_option("--r", cfg.r, "Order of the roots of unity");
  app.add_option("--n", cfg.n, "Rank");
  app.add_option("--degree", degree, "Degree bound (suite default when omitted)");
  app.add_option("--c-short", c_short, "Coupling on short roots, p/q");
  app.add_option("--c-long", c_long, "Coupling on long roots, p/q");
  app.add_option("--seed", cfg.seed, "Seed for randomized checks");
  app.add_option("--json", json_path, "Write the JSON report here ('-' for stdout)");
  app.add_flag("--no-timing", no_timing, "Write 0 for every timing so reports are byte-identical");
  app.add_flag("--list", list, "List the suite names");

  auto* specht = app.add_subcommand("specht", "Print F_T^S");
  int sp_r = 1;
  std::optional<std::size_t> sp_n;
  std::string sp_shape, sp_S, sp_T;
  specht->add_option("--r", sp_r);
  specht->add_option("--n", sp_n);
  specht->add_option("--shape", sp_shape)->required();
  specht->add_option("--S", sp_S);
  specht->add_option("--T", sp_T);

  auto* dunkl = app.add_subcommand("dunkl", "Apply Dunkl or Olshanetsky-Perelomov operators for B_n");
  std::string dk_group = "B", dk_apply, dk_op, dk_cs = "1/2", dk_cl = "1/3";
  std::size_t dk_n = 2;
  dunkl->add_option("--group", dk_group)->check(CLI::IsMember({"B"}));
  dunkl->add_option("--n", dk_n);
  dunkl->add_option("--c-short", dk_cs);
  dunkl->add_option("--c-long", dk_cl);
  dunkl->add_option("--apply", dk_apply)->required();
  dunkl->add_option("--op", dk_op, "D<i> or L<j>; every D_i when omitted");

  auto* decompose = app.add_subcommand("decompose", "Idempotent decomposition report");
  int dc_r = 2, dc_degree = 6;
  std::size_t dc_n = 2;
  bool dc_json = false;
  decompose->add_option("--r", dc_r);
  decompose->add_option("--n", dc_n);
  decompose->add_option("--degree", dc_degree);
  decompose->add_flag("--json", dc_json, "Print the report as JSON");

  auto* print = app.add_subcommand("print", "Canonical text of an object");
  std::string pr_kind, pr_shape;
  int pr_r = 2;
  std::optional<std::size_t> pr_n, pr_index;
  print->add_option("kind", pr_kind, "specht | idempotent | delta | tableaux")->required();
  print->add_option("--r", pr_r);
  print->add_option("--n", pr_n);
  print->add_option("--shape", pr_shape);
  print->add_option("--index", pr_index, "1-based tableau position");

  CLI11_PARSE(app, argc, argv);

  try {
    if (list) {
      for (const auto& s : suite_names()) std::cout << s << "\n";
      return 0;
    }
    if (*specht) {
      RDiagram shape = parse_rdiagram(sp_shape);
      check_n(sp_n, shape.size());
      check_r(sp_r, shape);
      auto tabs = enumerate_standard_tableaux(shape);
      RTableau S = sp_S.empty() ? tabs.front() : parse_rtableau(sp_S);
      if (!sp_T.empty()) {
        std::cout << higher_specht(S, parse_rtableau(sp_T), sp_r).value.to_string() << "\n";
      } else {
        for (const auto& T : tabs) std::cout << T.to_string() << "  " << higher_specht(S, T, sp_r).value.to_string() << "\n";
      }
      return 0;
    }
    if (*dunkl) {
      auto rs = make_B(dk_n);
      CouplingMap c{parse_rational(dk_cs), parse_rational(dk_cl)};
      MultiPoly f = parse_poly(dk_apply, dk_n);
      auto apply = [&](const std::string& op) {
        if (op.size() < 2 || (op[0] != 'D' && op[0] != 'L')) throw InvalidArgument("--op must be D<i> or L<j>");
        int k = std::stoi(op.substr(1));
        if (k < 1 || static_cast<std::size_t>(k) > dk_n) throw InvalidArgument("operator index out of range");
        return op[0] == 'D' ? dunkl_apply(unit_vector(dk_n, static_cast<std::size_t>(k)), f, rs, c)
                            : olshanetsky_apply(k, f, rs, c);
      };
      if (!dk_op.empty()) {
        std::cout << apply(dk_op).to_string() << "\n";
      } else {
        for (std::size_t i = 1; i <= dk_n; ++i) std::cout << "D" << i << ": " << apply("D" + std::to_string(i)).to_string() << "\n";
      }
      return 0;
    }
    if (*decompose) {
      bool passed = false;
      auto j = decompose_report(dc_r, dc_n, dc_degree, passed);
      if (dc_json) {
        std::cout << j.dump(2) << "\n";
      } else {
        for (const auto& s : j["shapes"]) std::cout << s["shape"].get<std::string>() << "  f = " << s["dimension"] << "\n";
        for (const auto& g : j["degrees"])
          std::cout << "degree " << g["degree"] << ": ranks " << g["ranks"].dump() << " sum " << g["sum"] << " of "
                    << g["dimension"] << (g["passed"].get<bool>() ? "" : "  FAILED") << "\n";
        std::cout << (passed ? "all invariants hold" : "some invariant failed") << "\n";
      }
      return passed ? 0 : 1;
    }
    if (*print) {
      for (const auto& line : print_object(pr_kind, pr_r, pr_n, pr_shape, pr_index)) std::cout << line << "\n";
      return 0;
    }
    if (cfg.suite.empty()) {
      std::cerr << app.help();
      return 2;
    }
    if (degree >= 0) cfg.degree = degree;
    cfg.c_short = parse_rational(c_short);
    cfg.c_long = parse_rational(c_long);
    return run_suite_command(cfg, json_path, !no_timing);
  } catch (const AlgebraError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
}
