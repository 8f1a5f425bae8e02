// Acceptance suite: one pass/fail line per criterion, nonzero exit on any
// failure.  Criterion 11 drives the CLI binary named by SKEINREP_BIN.

#include "skeinrep/serialize.hpp"
#include "skeinrep/suites.hpp"
#include "support/subprocess.hpp"

#include <chrono>
#include <iomanip>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

namespace {

using namespace skeinrep;
using Clock = std::chrono::steady_clock;

int failures = 0;

void report(int id, bool pass, const std::string& label, const std::string& note = "") {
  std::cout << (pass ? "PASS" : "FAIL") << " criterion " << id << ": " << label;
  if (!note.empty()) std::cout << " [" << note << "]";
  std::cout << std::endl;
  if (!pass) ++failures;
}

bool all_pass(const std::vector<CheckResult>& results, std::string* why = nullptr) {
  for (const auto& r : results) {
    if (!r.pass) {
      if (why) *why = r.name + " (" + r.detail + ")";
      return false;
    }
  }
  return true;
}

double elapsed(Clock::time_point start) {
  return std::chrono::duration<double>(Clock::now() - start).count();
}

std::string secs(double t) {
  std::ostringstream os;
  os << std::fixed << std::setprecision(1) << t << "s";
  return os.str();
}

}  // namespace

int main() {
  // 1. Jones-Wenzl identities, exact, r = 3..10, n <= min(9, r-1), under 60 s.
  {
    const auto t0 = Clock::now();
    bool ok = true;
    std::string why;
    for (long r = 3; r <= 10 && ok; ++r) ok = all_pass(suite_jones_wenzl(r, 9), &why);
    const double t = elapsed(t0);
    report(1, ok && t < 60.0, "Jones-Wenzl suite exact for r=3..10, n<=min(9,r-1)",
           secs(t) + (ok ? "" : "; " + why));
  }

  // 2. The three epsilon values, exact for n <= 6.
  {
    bool ok = true;
    std::string why;
    for (long r : {8L, 10L}) ok = ok && all_pass(suite_epsilon_values(r, 6), &why);
    report(2, ok, "epsilon values of partial trace, encircle, full twist for n<=6",
           ok ? "" : why);
  }

  // 3. tr(f_{r-1} x) = 0 for 100 pseudorandom x, r = 3,4,5.
  {
    bool ok = true;
    std::string why;
    for (long r : {3L, 4L, 5L}) ok = ok && all_pass(suite_vanishing(r, 100), &why);
    report(3, ok, "trace vanishing against f_{r-1}, 100 random elements, r=3,4,5",
           ok ? "" : why);
  }

  // 4. annulus closure of f_n equals S_n for n <= 8.
  {
    std::string why;
    const bool ok = all_pass(suite_chebyshev(10, 8), &why);
    report(4, ok, "annulus closure of f_n equals the Chebyshev polynomial, n<=8",
           ok ? "" : why);
  }

  // 5. dimension formula equals enumeration for g=1..3, r=2..10, under 30 s.
  {
    const auto t0 = Clock::now();
    bool ok = true;
    for (int g = 1; g <= 3 && ok; ++g) {
      for (long r = 2; r <= 10 && ok; ++r) {
        try {
          const long v = verlinde_dim(g, r);
          if (g == 1 && v != r - 1) ok = false;
        } catch (const std::exception&) {
          ok = false;
        }
      }
    }
    ok = ok && verlinde_dim(2, 3) == 4 && verlinde_dim(2, 4) == 10;
    const double t = elapsed(t0);
    report(5, ok && t < 30.0, "dimension formula matches enumeration, g=1..3, r=2..10",
           secs(t));
  }

  // 6. Hopf pairing identities for r <= 12.
  {
    bool ok = true;
    std::string why;
    for (long r = 2; r <= 12 && ok; ++r) ok = all_pass(suite_hopf(r), &why);
    report(6, ok, "Hopf matrix symmetric, conj-invariant, square identity, r<=12",
           ok ? "" : why);
  }

  // 7. Genus-1 representation, r <= 12.
  {
    bool ok = true;
    std::string why;
    for (long r = 2; r <= 12 && ok; ++r) ok = all_pass(suite_genus1(r), &why);
    report(7, ok, "genus-1 char poly, unitarity, braid and sixth-power relations, r<=12",
           ok ? "" : why);
  }

  // 8. Genus-2 representation, r = 3..8.
  {
    bool ok = true;
    std::string why;
    for (long r = 3; r <= 8 && ok; ++r) ok = all_pass(suite_genus2(r), &why);
    report(8, ok, "genus-2 self-adjointness, spectrum, unitarity, relations, r=3..8",
           ok ? "" : why);
  }

  // 9. Irreducibility at odd primes 3, 5, 7 in genus 1 and 2.
  {
    bool ok = true;
    std::string why;
    for (long r : {3L, 5L, 7L}) ok = ok && all_pass(suite_irreducibility(r), &why);
    report(9, ok, "commutant dimension 1 and eigenvalue distinctness, r=3,5,7",
           ok ? "" : why);
  }

  // 10. Integrality at r = 3, 5, 7, 11.
  {
    bool ok = true;
    std::string why;
    for (long r : {3L, 5L, 7L, 11L}) ok = ok && all_pass(suite_integrality(r), &why);
    report(10, ok, "quantum-integer units and integral idempotent coefficients, r=3,5,7,11",
           ok ? "" : why);
  }

  // 11. CLI determinism, JSON round-trip, exit codes.
  {
    bool ok = true;
    std::string why;
    // library-level round-trip identity
    for (long r : {3L, 5L}) {
      const auto [ta, tb] = genus1_rep(r);
      if (!(repmatrix_from_json(repmatrix_to_json(tb)).mat == tb.mat)) {
        ok = false;
        why = "rep matrix round-trip";
      }
      const GramForm g = gram_form(standard_graph(2), r);
      const GramForm back = gram_from_json(gram_to_json(g));
      if (!(back.norms == g.norms && back.basis == g.basis)) {
        ok = false;
        why = "gram round-trip";
      }
    }
    try {
      using skeinrep::test::run_cli;
      for (const std::string args :
           {std::string("rep --r 3 --genus 1"), std::string("rep --r 3 --genus 2"),
            std::string("rep --r 3 --genus 2 --format csv")}) {
        const auto a = run_cli(args);
        const auto b = run_cli(args);
        if (a.exit_code != 0 || a.out.empty() || a.out != b.out) {
          ok = false;
          why = "determinism: " + args;
        }
      }
      if (run_cli("verlinde --r 4 --genus 2").exit_code != 0) {
        ok = false;
        why = "verlinde exit code";
      }
      if (run_cli("rep --r 3 --genus 3").exit_code != 2 ||
          run_cli("signature --r 3 --genus 1 --embedding 2").exit_code != 2 ||
          run_cli("check --r 5 --suite nope").exit_code != 2) {
        ok = false;
        why = "usage-error exit codes";
      }
      if (run_cli("check --r 5 --suite jones-wenzl").exit_code != 0) {
        ok = false;
        why = "check exit code";
      }
    } catch (const std::exception& e) {
      ok = false;
      why = e.what();
    }
    report(11, ok, "CLI determinism, JSON round-trip, exit-code contract", ok ? "" : why);
  }

  std::cout << (failures == 0 ? "acceptance: all criteria passed"
                              : "acceptance: " + std::to_string(failures) + " criteria failed")
            << std::endl;
  return failures == 0 ? 0 : 1;
}
