// Acceptance gate: one line per criterion, nonzero exit if any line fails.
#include "qdyn/cli/suites.hpp"

#include <chrono>
#include <cstdio>
#include <functional>
#include <string>
#include <vector>

using namespace qdyn;

namespace {

struct Criterion {
  int id;
  const char* title;
  double limit_s;
  std::function<void(std::vector<Check>&)> run;
};

}  // namespace

int main() {
  const unsigned long long seed = 0;
  std::vector<Criterion> criteria{
      {1, "root vector relations (n<=5) and mixed relations with powers k<=4 (n<=4)", 60,
       [](auto& out) {
         for (int n = 1; n <= 5; ++n) relations_commutation(out, n, true);
         for (int n = 1; n <= 4; ++n) relations_cross(out, n, 4);
       }},
      {2, "q-Jacobi on 200 random samples; adjacent-vector and xyyz lemmas (n<=4)", 30,
       [&](auto& out) {
         appendix_jacobi(out, 200, seed);
         for (int n = 1; n <= 4; ++n) appendix_lemmas(out, n);
       }},
      {3, "antipode of modified root vectors (n<=4)", 10,
       [](auto& out) {
         for (int n = 1; n <= 4; ++n) antipode_tilde(out, n);
       }},
      {4, "pairing equals the closed form, mixed pairings vanish, plain and y~ bases (n<=3, |m|<=5)", 120,
       [](auto& out) {
         for (int n = 1; n <= 3; ++n) pairing_checks(out, n, 5);
       }},
      {5, "quantum plane relations and q-multinomial expansion (n<=3, m<=4)", 60,
       [](auto& out) {
         for (int n = 1; n <= 3; ++n) qplane_checks(out, n, 4);
       }},
      {6, "twist coefficients invert the pairing diagonal (n<=2, |m|<=5)", 60,
       [](auto& out) {
         for (int n = 1; n <= 2; ++n) twist_checks(out, n, 5);
       }},
      {7, "classical star product: unit, associativity, commutator, invariance (n<=3)", 120,
       [&](auto& out) {
         for (int n = 1; n <= 3; ++n) star_checks(out, n, 50, seed);
       }},
      {8, "Bordemann series comparison to order 10 and symmetric function identities", 30,
       [&](auto& out) { bordemann_checks(out, 10, 20, seed); }},
      {9, "classical limit of the twist coefficients (m<=5)", 10,
       [](auto& out) { classical_limit_checks(out, 5); }},
  };

  int failed = 0;
  for (const auto& c : criteria) {
    std::vector<Check> checks;
    auto t0 = std::chrono::steady_clock::now();
    std::string error;
    try {
      c.run(checks);
    } catch (const std::exception& e) {
      error = e.what();
    }
    double s = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    const Check* bad = nullptr;
    for (const auto& ch : checks)
      if (!ch.pass && !bad) bad = &ch;
    bool ok = error.empty() && !bad && !checks.empty() && s <= c.limit_s;
    if (!ok) ++failed;
    std::printf("%s  criterion %d: %s (%zu checks, %.2f s, limit %.0f s)\n", ok ? "PASS" : "FAIL", c.id, c.title,
                checks.size(), s, c.limit_s);
    if (!error.empty()) std::printf("      exception: %s\n", error.c_str());
    if (bad) std::printf("      %s: %s\n", bad->id.c_str(), bad->witness.c_str());
    if (s > c.limit_s) std::printf("      over the time limit\n");
  }
  std::printf("%d/%zu criteria passed\n", static_cast<int>(criteria.size()) - failed, criteria.size());
  return failed == 0 ? 0 : 1;
}
