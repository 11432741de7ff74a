// contactlab: exact-arithmetic analysis of contact Lie algebras given by
// rational structure constants. See README for the file format.

#include <fstream>
#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "contactlab/analysis.hpp"
#include "contactlab/catalog.hpp"
#include "contactlab/constructions.hpp"
#include "contactlab/fuzz.hpp"
#include "contactlab/io.hpp"
#include "contactlab/report.hpp"

using namespace contactlab;

namespace {

// Exit codes are stable API: 0 ok, 1 identity/jacobi failure, 2 parse,
// 3 no contact form, 4 wrong dimension, 5 construction gate, 6 unknown
// catalog name.
constexpr int kExitOk = 0;
constexpr int kExitIdentity = 1;
constexpr int kExitParse = 2;
constexpr int kExitNoContactForm = 3;
constexpr int kExitWrongDim = 4;
constexpr int kExitConstructionGate = 5;
constexpr int kExitUnknownCatalogName = 6;

int cmd_validate(const std::string& path) {
  AlgebraFile f;
  try {
    f = load_algebra_file(path);
  } catch (const ParseError& ex) {
    std::cerr << "parse error: " << ex.what() << "\n";
    return kExitParse;
  }
  LieAlgebra L = to_lie_algebra(f);
  auto violations = L.validate_jacobi();
  if (violations.empty()) {
    std::cout << f.name << ": ok (dim " << f.dim << ", " << f.brackets.size() << " brackets)\n";
    return kExitOk;
  }
  std::cout << f.name << ": Jacobi identity fails on " << violations.size() << " triple(s)\n";
  for (const auto& v : violations)
    std::cout << "  (" << v.i << "," << v.j << "," << v.k << ") residual " << vec_str(v.residual) << "\n";
  return kExitIdentity;
}

int cmd_analyze(const std::string& path, const std::string& report_path) {
  AlgebraFile f;
  try {
    f = load_algebra_file(path);
  } catch (const ParseError& ex) {
    std::cerr << "parse error: " << ex.what() << "\n";
    return kExitParse;
  }
  AnalysisOutcome outcome = analyze(f);
  if (!report_path.empty()) {
    std::ofstream out(report_path);
    if (!out) {
      std::cerr << "cannot write " << report_path << "\n";
      return kExitParse;
    }
    out << outcome.report.dump(2) << "\n";
  }
  std::cout << outcome.report.dump(2) << "\n";
  if (outcome.exit_code == kExitNoContactForm)
    std::cerr << "no contact form: none supplied and the heuristic search found none\n";
  return outcome.exit_code;
}

int cmd_classify5(const std::string& path) {
  AlgebraFile f;
  try {
    f = load_algebra_file(path);
  } catch (const ParseError& ex) {
    std::cerr << "parse error: " << ex.what() << "\n";
    return kExitParse;
  }
  if (f.dim != 5) {
    std::cerr << "classify5: dim " << f.dim << " != 5\n";
    return kExitWrongDim;
  }
  LieAlgebra L = to_lie_algebra(f);
  auto violations = L.validate_jacobi();
  if (!violations.empty()) {
    std::cerr << "classify5: Jacobi identity fails\n";
    return kExitIdentity;
  }
  std::optional<KForm> eta = contact_form_of(f);
  if (!eta) eta = report_detail::contact_form_search(L);
  if (!eta || !is_contact(L, *eta)) {
    std::cerr << "classify5: no contact form\n";
    return kExitNoContactForm;
  }
  std::cout << classify_dim5(make_contact(L, *eta)).label << "\n";
  return kExitOk;
}

Matrix load_matrix_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open " + path);
  nlohmann::json j;
  try {
    in >> j;
  } catch (const nlohmann::json::exception& ex) {
    throw ParseError(path + ": " + ex.what());
  }
  if (!j.is_array() || j.empty()) throw ParseError(path + ": expected a nonempty array of rows");
  std::vector<Vec> rows;
  for (const auto& row : j) {
    if (!row.is_array()) throw ParseError(path + ": expected rows as arrays");
    Vec r;
    for (const auto& cell : row) r.push_back(Rational::parse(cell.get<std::string>()));
    rows.push_back(std::move(r));
  }
  return Matrix::from_rows(rows);
}

int cmd_realize(const std::string& mode, const std::string& frobenius_path, const std::string& a_path,
                int z_index, int m, const std::string& out_path) {
  AlgebraFile ff;
  Matrix a_op;
  try {
    ff = load_algebra_file(frobenius_path);
    a_op = load_matrix_file(a_path);
  } catch (const ParseError& ex) {
    std::cerr << "parse error: " << ex.what() << "\n";
    return kExitParse;
  }
  try {
    LieAlgebra a = to_lie_algebra(ff);
    std::optional<KForm> primitive = primitive_of(ff);
    if (!primitive) {
      std::cerr << "realize: gate failed: the frobenius input file must carry a \"primitive\" 1-form\n";
      return kExitConstructionGate;
    }
    FrobeniusInput f = make_frobenius(a, *primitive);
    Realization r = [&] {
      if (mode == "q2") return realize_q2(f, a_op);
      if (mode == "line-ideal") {
        if (z_index < 0 || z_index >= a.dim())
          throw ConstructionError("realize: --z index out of range");
        return realize_line_ideal(f, a.basis_vector(z_index), m, a_op);
      }
      throw ConstructionError("realize: unknown --mode (use q2 or line-ideal)");
    }();
    AlgebraFile out_file = to_algebra_file(r.contact.algebra, r.contact.eta, ff.name + "_realized_" + mode);
    AnalysisOutcome outcome = analyze(out_file);
    if (outcome.exit_code != 0) {
      std::cerr << "realize: constructed algebra failed its own analysis (exit " << outcome.exit_code
                << "); not writing\n";
      return kExitIdentity;
    }
    save_algebra_file(out_file, out_path);
    std::cout << "wrote " << out_path << " (dim " << out_file.dim << ", analysis clean)\n";
    return kExitOk;
  } catch (const ConstructionError& ex) {
    std::cerr << "realize: gate failed: " << ex.what() << "\n";
    return kExitConstructionGate;
  }
}

int cmd_catalog(bool list, const std::string& emit, const std::string& out_path) {
  if (list) {
    for (const auto& e : catalog()) {
      std::cout << e.name << " (dim " << e.algebra.dim() << (e.contact_form ? ", contact" : "") << ")\n";
      std::cout << "    " << e.provenance << "\n";
    }
    return kExitOk;
  }
  auto entry = catalog_find(emit);
  if (!entry) {
    std::cerr << "catalog: unknown name \"" << emit << "\"\n";
    return kExitUnknownCatalogName;
  }
  AlgebraFile f = to_algebra_file(entry->algebra, entry->contact_form, entry->name);
  save_algebra_file(f, out_path);
  std::cout << "wrote " << out_path << "\n";
  return kExitOk;
}

int cmd_fuzz(std::uint64_t seed, int count, int max_dim) {
  auto dump = [&](const FuzzInstance& inst, int index) {
    AlgebraFile f = to_algebra_file(inst.algebra, inst.eta, inst.description);
    std::string path = "fuzz_fail_" + std::to_string(seed) + "_" + std::to_string(index) + ".json";
    save_algebra_file(f, path);
    std::cerr << "dumped failing instance to " << path << "\n";
  };
  FuzzSummary sum = run_fuzz(seed, count, max_dim, dump);
  for (const auto& line : sum.lines) std::cout << line << "\n";
  std::cout << "fuzz: " << sum.count << " instances, " << sum.failures << " failures (seed " << seed << ")\n";
  return sum.failures == 0 ? kExitOk : kExitIdentity;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"contactlab: exact analysis of contact Lie algebras over Q"};
  app.require_subcommand(1);

  std::string path, report_path, mode, frobenius_path, a_path, out_path, emit_name;
  int z_index = -1, m = 1, max_dim = 0, count = 100;
  std::uint64_t seed = 1;
  bool list = false;

  auto* validate = app.add_subcommand("validate", "parse a file and check the Jacobi identity");
  validate->add_option("path", path)->required();

  auto* analyze_cmd = app.add_subcommand("analyze", "full analysis report");
  analyze_cmd->add_option("path", path)->required();
  analyze_cmd->add_option("--report", report_path, "write the JSON report here");

  auto* classify = app.add_subcommand("classify5", "classify a 5-dimensional contact algebra");
  classify->add_option("path", path)->required();

  auto* realize = app.add_subcommand("realize", "realize a Frobenius algebra as a DS-contact algebra");
  realize->add_option("--mode", mode, "q2 or line-ideal")->required();
  realize->add_option("--frobenius", frobenius_path, "algebra file with a \"primitive\" 1-form")->required();
  realize->add_option("--A", a_path, "JSON matrix of rational strings")->required();
  realize->add_option("--z", z_index, "basis index spanning the 1-dim ideal (line-ideal mode)");
  realize->add_option("--m", m, "half the dimension of q (line-ideal mode)");
  realize->add_option("--out", out_path, "output algebra file")->required();

  auto* cat = app.add_subcommand("catalog", "list or emit the built-in examples");
  cat->add_flag("--list", list);
  cat->add_option("--emit", emit_name);
  cat->add_option("--out", out_path);

  auto* fuzz = app.add_subcommand("fuzz", "generate contact algebras and audit the theorems on each");
  fuzz->add_option("--seed", seed);
  fuzz->add_option("--count", count);
  fuzz->add_option("--max-dim", max_dim);

  CLI11_PARSE(app, argc, argv);

  try {
    if (validate->parsed()) return cmd_validate(path);
    if (analyze_cmd->parsed()) return cmd_analyze(path, report_path);
    if (classify->parsed()) return cmd_classify5(path);
    if (realize->parsed()) return cmd_realize(mode, frobenius_path, a_path, z_index, m, out_path);
    if (cat->parsed()) {
      if (!list && emit_name.empty()) {
        std::cerr << "catalog: need --list or --emit\n";
        return 2;
      }
      if (!list && out_path.empty()) {
        std::cerr << "catalog: --emit needs --out\n";
        return 2;
      }
      return cmd_catalog(list, emit_name, out_path);
    }
    if (fuzz->parsed()) return cmd_fuzz(seed, count, max_dim);
  } catch (const std::exception& ex) {
    std::cerr << "error: " << ex.what() << "\n";
    return 1;
  }
  return 0;
}
