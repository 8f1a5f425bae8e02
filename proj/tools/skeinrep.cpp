// Command-line surface: dimensions, representation matrices, Gram and Hopf
// data, verification suites, and signatures.  All output is exact and
// deterministic; floating point appears only under an explicit --embedding.
//
// Exit codes: 0 success, 1 verification failure, 2 usage error.

#include "skeinrep/colorings.hpp"
#include "skeinrep/pairing.hpp"
#include "skeinrep/representation.hpp"
#include "skeinrep/serialize.hpp"
#include "skeinrep/suites.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <memory>
#include <sstream>
#include <string>
#include <vector>

namespace {

using namespace skeinrep;

std::vector<int> parse_color_list(const std::string& s) {
  std::vector<int> out;
  std::stringstream ss(s);
  std::string tok;
  while (std::getline(ss, tok, ',')) {
    if (tok.empty()) continue;
    out.push_back(std::stoi(tok));
  }
  return out;
}

int write_output(const std::string& text, const std::string& path) {
  if (path.empty()) {
    std::cout << text;
    return 0;
  }
  std::ofstream os(path, std::ios::binary);
  if (!os) {
    std::cerr << "cannot open output file: " << path << "\n";
    return 2;
  }
  os << text;
  return 0;
}

int cmd_verlinde(long r, int genus, const std::string& boundary) {
  if (!boundary.empty()) {
    const std::vector<int> colors = parse_color_list(boundary);
    const TrivalentGraph g = marked_standard_graph(genus, static_cast<int>(colors.size()));
    const auto basis = enumerate_admissible(g, r, colors);
    std::cout << "enumeration " << basis.size() << "\n";
    return 0;
  }
  const long formula = verlinde_formula_value(genus, r);
  const auto basis = enumerate_admissible(standard_graph(genus), r);
  const bool agree = formula == static_cast<long>(basis.size());
  std::cout << "formula " << formula << "\n";
  std::cout << "enumeration " << basis.size() << "\n";
  std::cout << "agree " << (agree ? "true" : "false") << "\n";
  return agree ? 0 : 1;
}

int cmd_rep(long r, int genus, const std::string& format, const std::string& output) {
  std::vector<std::pair<std::string, RepMatrix>> twists;
  std::vector<std::pair<std::string, RepMatrix>> operators;
  if (genus == 1) {
    auto [ta, tb] = genus1_rep(r);
    twists.emplace_back("t_alpha", std::move(ta));
    twists.emplace_back("t_beta", std::move(tb));
    operators.emplace_back("phi_z", curve_operator_genus1(r));
  } else {
    auto mats = genus2_rep(r);
    twists.emplace_back("t_a", std::move(mats[0]));
    twists.emplace_back("t_b", std::move(mats[1]));
    twists.emplace_back("t_c", std::move(mats[2]));
    twists.emplace_back("t_ab", std::move(mats[3]));
    twists.emplace_back("t_bc", std::move(mats[4]));
    operators.emplace_back("phi_ab", curve_operator_genus2(r));
    operators.emplace_back("phi_bc", curve_operator_genus2_bc(r));
  }
  const GramForm gram = gram_form(standard_graph(genus), r);
  const Polynomial q = interpolation_Q(r);

  if (format == "json") {
    json basis = json::array();
    for (const auto& c : gram.basis) basis.push_back(coloring_to_json(c));
    json norms = json::array();
    for (const auto& n : gram.norms) norms.push_back(coeff_list(n));
    json qc = json::array();
    for (int k = 0; k <= q.degree(); ++k) qc.push_back(coeff_list(q.coeff(k)));
    json ops = json::object(), tws = json::object();
    for (const auto& [name, m] : operators) ops[name] = matrix_entries_to_json(m.mat);
    for (const auto& [name, m] : twists) tws[name] = matrix_entries_to_json(m.mat);
    const json out{{"r", r},        {"genus", genus},          {"basis", basis},
                   {"gram", norms}, {"interpolation_Q", qc},   {"curve_operators", ops},
                   {"twists", tws}};
    return write_output(out.dump(2) + "\n", output);
  }
  if (format == "csv") {
    std::ostringstream os;
    for (std::size_t i = 0; i < gram.basis.size(); ++i) {
      os << "basis," << i << ",,";
      const auto& vals = gram.basis[i].values;
      for (std::size_t k = 0; k < vals.size(); ++k) os << (k ? "|" : "") << vals[k];
      os << "\n";
    }
    for (std::size_t i = 0; i < gram.norms.size(); ++i)
      os << "gram," << i << ",," << coeff_string(gram.norms[i]) << "\n";
    for (int k = 0; k <= q.degree(); ++k)
      os << "Q," << k << ",," << coeff_string(q.coeff(k)) << "\n";
    for (const auto& [name, m] : operators) matrix_to_csv(os, name, m.mat);
    for (const auto& [name, m] : twists) matrix_to_csv(os, name, m.mat);
    return write_output(os.str(), output);
  }
  std::cerr << "unknown format: " << format << "\n";
  return 2;
}

int cmd_check(long r, const std::string& suite) {
  std::vector<std::string> to_run;
  if (suite.empty()) {
    for (const auto& name : suite_names()) {
      if (suite_applicable(name, r)) to_run.push_back(name);
    }
  } else {
    to_run.push_back(suite);  // run_suite rejects unknown or inapplicable names
  }
  long failures = 0, total = 0;
  for (const auto& name : to_run) {
    for (const auto& res : run_suite(name, r)) {
      ++total;
      if (!res.pass) ++failures;
      std::cout << (res.pass ? "PASS " : "FAIL ") << res.name;
      if (!res.detail.empty()) std::cout << " (" << res.detail << ")";
      std::cout << "\n";
    }
  }
  std::cout << total << " checks, " << failures << " failed\n";
  return failures == 0 ? 0 : 1;
}

int cmd_signature(long r, int genus, long embedding) {
  const GramForm gram = gram_form(standard_graph(genus), r);
  const auto [p, q] = signature(gram, embedding);
  std::cout << "p " << p << "\n";
  std::cout << "q " << q << "\n";
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact quantum representations of mapping class groups from skein theory"};
  app.require_subcommand(1);

  long r = 0;
  int genus = 1;
  std::string boundary, format = "json", output, suite;
  long embedding = 1;

  auto* verlinde = app.add_subcommand("verlinde", "dimension formula vs exact enumeration");
  verlinde->add_option("--r", r, "level (>= 2)")->required();
  verlinde->add_option("--genus", genus, "surface genus (>= 1)")->required();
  verlinde->add_option("--boundary-colors", boundary,
                       "comma-separated marked-point colors; reports enumeration only");

  auto* rep = app.add_subcommand("rep", "twist matrices, curve operators, Q, and Gram form");
  rep->add_option("--r", r, "level (>= 2)")->required();
  rep->add_option("--genus", genus, "surface genus (1 or 2)")->required();
  rep->add_option("--format", format, "json or csv");
  rep->add_option("--output", output, "output path (default stdout)");

  auto* check = app.add_subcommand("check", "run verification suites");
  check->add_option("--r", r, "level (>= 2)")->required();
  check->add_option("--suite", suite, "run one named suite");

  auto* sig = app.add_subcommand("signature", "signature of the Hermitian form");
  sig->add_option("--r", r, "level (>= 2)")->required();
  sig->add_option("--genus", genus, "surface genus")->required();
  sig->add_option("--embedding", embedding, "embedding index m, coprime to 4r")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return e.get_exit_code() == 0 ? 0 : 2;
  }

  try {
    if (r < 2) {
      std::cerr << "level must be >= 2\n";
      return 2;
    }
    if (verlinde->parsed()) return cmd_verlinde(r, genus, boundary);
    if (rep->parsed()) {
      if (genus != 1 && genus != 2) {
        std::cerr << "rep supports genus 1 and 2\n";
        return 2;
      }
      return cmd_rep(r, genus, format, output);
    }
    if (check->parsed()) return cmd_check(r, suite);
    if (sig->parsed()) return cmd_signature(r, genus, embedding);
  } catch (const std::invalid_argument& e) {
    std::cerr << "usage error: " << e.what() << "\n";
    return 2;
  } catch (const std::out_of_range& e) {
    std::cerr << "usage error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 2;
}
