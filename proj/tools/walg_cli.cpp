#include <CLI11.hpp>

#include <cstdio>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "walg/errors.hpp"
#include "walg/liealg.hpp"
#include "walg/rootdata.hpp"
#include "walg/suites.hpp"
#include "walg/whittaker.hpp"

namespace {

int write_out(const std::string& path, const std::string& payload) {
  if (path.empty()) {
    std::cout << payload;
    return 0;
  }
  std::ofstream out(path, std::ios::binary);
  if (!out) {
    std::cerr << "error: cannot open '" << path << "' for writing\n";
    return 2;
  }
  out << payload;
  return 0;
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw walg::ConfigError("cannot read '" + path + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

int cmd_verify(const std::vector<std::string>& wanted, int degree, std::uint64_t seed,
               const std::string& format, const std::string& out_path) {
  walg::SuiteOptions opt;
  opt.seed = seed;
  opt.degree = degree;
  std::vector<std::string> names = wanted.empty() ? walg::suite_names() : wanted;
  for (const std::string& n : names)
    if (!walg::is_suite(n)) {
      std::cerr << "error: unknown suite '" << n << "'; run 'walg suites' for the catalog\n";
      return 2;
    }
  std::vector<walg::SuiteResult> results;
  std::size_t failures = 0;
  for (const std::string& n : names) {
    results.push_back(walg::run_suite(n, opt));
    failures += results.back().failures();
  }
  const std::string payload =
      format == "json" ? walg::report_json(results, opt) : walg::report_text(results, opt);
  int rc = write_out(out_path, payload);
  if (rc != 0) return rc;
  return failures == 0 ? 0 : 1;
}

int cmd_suites() {
  for (const std::string& n : walg::suite_names()) std::cout << n << "\n";
  return 0;
}

int cmd_branching() {
  using walg::SimpleType;
  const std::vector<walg::TypeRank> rows = {
      {SimpleType::A, 4}, {SimpleType::B, 4}, {SimpleType::C, 4},
      {SimpleType::D, 5}, {SimpleType::E, 6}, {SimpleType::E, 7},
      {SimpleType::E, 8}, {SimpleType::F, 4}, {SimpleType::G, 2}};
  std::printf("%-6s %-22s %8s %6s %8s\n", "g", "g(0)", "dim g(1)", "d", "dim g");
  for (const walg::TypeRank& tr : rows) {
    walg::HighestRootRow row = walg::highest_root_row(tr);
    std::string g0;
    for (const walg::DiagramComponent& c : row.components) {
      if (!g0.empty()) g0 += " + ";
      g0 += c.label.str();
    }
    for (int i = 0; i < row.center_dim; ++i) g0 += g0.empty() ? "k" : " + k";
    if (g0.empty()) g0 = "0";
    std::printf("%-6s %-22s %8zu %6zu %8zu\n", row.g.str().c_str(), g0.c_str(), row.dim_g1,
                row.d_invariant, row.dim_g);
  }
  return 0;
}

int cmd_derive(const std::string& type, int rank, int degree, const std::string& out_path) {
  walg::LieAlgebra L;
  if ((type == "A" || type == "a") && rank >= 2 && rank <= 3)
    L = walg::sl_n(rank + 1);
  else if ((type == "C" || type == "c") && rank == 2)
    L = walg::sp4();
  else
    throw walg::ConfigError("no built-in simple algebra of type " + type + std::to_string(rank) +
                            "; available: A2, A3, C2");
  walg::WhittakerModel M = walg::build_whittaker_model(L);
  walg::MinimalWData data = walg::derive_minimal_w(M);
  walg::Presentation W = walg::build_minimal_w(data);
  walg::ConsistencyReport rep = W.check_consistency(degree);
  if (!rep.ok) {
    std::cerr << "error: derived table fails confluence: " << rep.witness << "\n";
    return 1;
  }
  std::cerr << "derived " << W.size() << " generators; " << rep.overlaps_checked
            << " overlaps and " << rep.words_checked << " words resolve\n";
  return write_out(out_path, walg::serialize_minimal_w(data));
}

int cmd_check_def(const std::string& path, int degree) {
  const std::string text = read_file(path);
  bool minimal_w = false;
  {
    auto pos = text.find("\"kind\"");
    if (pos != std::string::npos && text.find("minimal-w", pos) != std::string::npos)
      minimal_w = true;
  }
  walg::ConsistencyReport rep;
  std::string normalized;
  if (minimal_w) {
    walg::MinimalWData data = walg::parse_minimal_w(text);
    walg::Presentation W = walg::build_minimal_w(data);
    rep = W.check_consistency(degree);
    normalized = walg::serialize_minimal_w(data);
  } else {
    walg::AlgebraDef def = walg::parse_algebra_def(text);
    rep = def.pres.check_consistency(degree);
    normalized = walg::serialize_algebra_def(def.pres, def.name);
  }
  std::cout << normalized;
  if (!rep.ok) {
    std::cerr << "fail: " << rep.witness << "\n";
    return 1;
  }
  std::cerr << "ok: " << rep.overlaps_checked << " overlaps and " << rep.words_checked
            << " words resolve\n";
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact verification toolkit for filtered algebras with PBW bases"};
  app.require_subcommand(1);

  auto* verify = app.add_subcommand("verify", "run verification suites and emit a report");
  std::vector<std::string> suites;
  int degree = 0;
  std::uint64_t seed = 42;
  std::string format = "text";
  std::string out_path;
  verify->add_option("suites", suites, "suites to run (default: all)");
  verify->add_option("--degree", degree, "override the per-suite degree window");
  verify->add_option("--seed", seed, "seed for randomized checks");
  verify->add_option("--format", format, "report format")
      ->check(CLI::IsMember({"json", "text"}));
  verify->add_option("--out", out_path, "write the report to a file instead of stdout");

  auto* list = app.add_subcommand("suites", "list the suite catalog");

  auto* branch = app.add_subcommand("branching", "print the graded dimension table");

  auto* derive = app.add_subcommand("derive-walgebra",
                                    "derive a finite W-algebra presentation from a built-in "
                                    "simple Lie algebra");
  std::string dtype;
  int drank = 0;
  int ddegree = 4;
  std::string dout;
  derive->add_option("type", dtype, "simple type letter (A or C)")->required();
  derive->add_option("rank", drank, "rank")->required();
  derive->add_option("--degree", ddegree, "confluence check depth");
  derive->add_option("--out", dout, "write the presentation document to a file");

  auto* checkdef = app.add_subcommand("check-def", "check a definition document for confluence");
  std::string cpath;
  int cdegree = 4;
  checkdef->add_option("file", cpath, "definition document (JSON)")->required();
  checkdef->add_option("--degree", cdegree, "confluence check depth");

  CLI11_PARSE(app, argc, argv);

  try {
    if (*verify) return cmd_verify(suites, degree, seed, format, out_path);
    if (*list) return cmd_suites();
    if (*branch) return cmd_branching();
    if (*derive) return cmd_derive(dtype, drank, ddegree, dout);
    if (*checkdef) return cmd_check_def(cpath, cdegree);
  } catch (const walg::ParseError& e) {
    std::cerr << "parse error: " << e.what() << "\n";
    return 2;
  } catch (const walg::UnknownGenerator& e) {
    std::cerr << "parse error: " << e.what() << "\n";
    return 2;
  } catch (const walg::ConfigError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const walg::WalgError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 2;
}
