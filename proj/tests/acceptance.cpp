// Acceptance suite: one line per criterion. Each criterion must pass its
// checks and finish inside its wall-clock budget; any failure prints the
// offending report and flips the exit code.

#include <chrono>
#include <cstdio>
#include <functional>
#include <string>
#include <vector>

#include "qreflect/suites.hpp"

using namespace qreflect;

int main() {
  struct Criterion {
    std::string name;
    double budget_s;
    std::function<Report()> run;
  };
  const std::vector<Criterion> criteria{
      {"1 example 6.3: both quantales, unit join gap, constant map", 1.0,
       [] { return suites::example_63(); }},
      {"2 example 6.4: 20 ideals, 10 closed sets, g collapses", 5.0,
       [] { return suites::example_64(); }},
      {"3 example 6.2: 8 D-ideals, 15 marked ideals, 20 lower sets", 5.0,
       [] { return suites::example_62(); }},
      {"4 example 6.5: D-preserving but not closure preserving", 1.0,
       [] { return suites::example_65(); }},
      {"5 example 6.1: word joins distribute one-sidedly only", 5.0,
       [] { return suites::example_61(); }},
      {"6 nucleus laws and the ideal-closure oracle", 20.0,
       [] { return suites::nucleus_laws(); }},
      {"7 quantale axioms for every computed quantale", 10.0,
       [] { return suites::quantale_axiom_suite(); }},
      {"8 reflections: triangles, uniqueness, isomorphisms", 20.0,
       [] { return suites::reflection_suite(); }},
      {"9 closure-preservation equivalences", 10.0,
       [] { return suites::equivalence_suite(); }},
      {"10 inclusion of closed sets in ideals; star closure", 10.0,
       [] { return suites::inclusion_star_suite(); }},
  };

  bool all_ok = true;
  for (const Criterion& c : criteria) {
    auto start = std::chrono::steady_clock::now();
    Report r = c.run();
    double elapsed =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start)
            .count();
    bool ok = r.ok() && elapsed < c.budget_s;
    std::printf("[%s] criterion %s (%.1f ms, budget %.0f s)\n",
                ok ? "PASS" : "FAIL", c.name.c_str(), elapsed * 1e3,
                c.budget_s);
    if (!ok) {
      all_ok = false;
      for (const Check& chk : r.checks())
        if (chk.outcome == Outcome::fail)
          std::printf("        failed: %s%s%s\n", chk.name.c_str(),
                      chk.detail.empty() ? "" : " -- ", chk.detail.c_str());
      if (elapsed >= c.budget_s) std::printf("        over budget\n");
    }
  }
  return all_ok ? 0 : 1;
}
