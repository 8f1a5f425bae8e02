// Exercises the command-line contract through the built binary: exit codes,
// byte determinism, and output shape.  The binary path arrives in
// SKEINREP_BIN (set by ctest).

#include "support/subprocess.hpp"

#include <json.hpp>

#include <iostream>
#include <string>

namespace {

int failures = 0;

void expect(bool ok, const std::string& what) {
  std::cout << (ok ? "ok   " : "FAIL ") << what << "\n";
  if (!ok) ++failures;
}

}  // namespace

int main() {
  using skeinrep::test::run_cli;
  try {
    auto v = run_cli("verlinde --r 3 --genus 2");
    expect(v.exit_code == 0, "verlinde exits 0");
    expect(v.out.find("formula 4") != std::string::npos, "verlinde formula value");
    expect(v.out.find("agree true") != std::string::npos, "verlinde agreement");

    auto v5 = run_cli("verlinde --r 5 --genus 1");
    expect(v5.out.find("formula 4") != std::string::npos, "genus-1 r=5 dimension 4");

    auto marked = run_cli("verlinde --r 5 --genus 1 --boundary-colors 2");
    expect(marked.exit_code == 0, "marked verlinde exits 0");
    expect(marked.out.find("enumeration 2") != std::string::npos,
           "punctured torus count c=2, r=5");

    for (const std::string args :
         {std::string("rep --r 3 --genus 1"), std::string("rep --r 3 --genus 2"),
          std::string("rep --r 4 --genus 2 --format csv")}) {
      auto a = run_cli(args);
      auto b = run_cli(args);
      expect(a.exit_code == 0, args + " exits 0");
      expect(!a.out.empty() && a.out == b.out, args + " byte-identical across runs");
    }

    auto repj = run_cli("rep --r 3 --genus 1");
    auto parsed = nlohmann::json::parse(repj.out);
    expect(parsed.at("r") == 3, "rep json carries r");
    expect(parsed.at("basis").size() == 2, "rep json carries the basis");
    expect(parsed.at("twists").contains("t_alpha") && parsed.at("twists").contains("t_beta"),
           "rep json carries both twists");
    expect(nlohmann::json::parse(repj.out).dump() == parsed.dump(), "rep json reparses");

    auto sig = run_cli("signature --r 5 --genus 1 --embedding 1");
    expect(sig.exit_code == 0, "signature exits 0");
    expect(sig.out == "p 4\nq 0\n", "genus-1 r=5 signature (4,0)");

    auto chk = run_cli("check --r 5 --suite hopf");
    expect(chk.exit_code == 0, "check hopf exits 0");
    expect(chk.out.find("PASS hopf/square-identity") != std::string::npos,
           "hopf identity reported");

    // usage errors exit 2
    expect(run_cli("rep --r 3 --genus 3").exit_code == 2, "unsupported genus exits 2");
    expect(run_cli("signature --r 3 --genus 1 --embedding 2").exit_code == 2,
           "non-coprime embedding exits 2");
    expect(run_cli("check --r 5 --suite nope").exit_code == 2, "unknown suite exits 2");
    expect(run_cli("check --r 4 --suite integrality").exit_code == 2,
           "inapplicable suite exits 2");
    expect(run_cli("verlinde --r 1 --genus 1").exit_code == 2, "bad level exits 2");
    expect(run_cli("nonsense").exit_code == 2, "unknown subcommand exits 2");
  } catch (const std::exception& e) {
    std::cerr << "contract test error: " << e.what() << "\n";
    return 1;
  }
  std::cout << (failures == 0 ? "all contract checks passed\n" : "contract checks FAILED\n");
  return failures == 0 ? 0 : 1;
}
