#pragma once

#include <string>
#include <vector>

namespace qdyn {

struct Check {
  std::string id;
  std::string description;
  std::string anchor;  // the statement being checked
  bool pass = true;
  std::string witness;  // inputs and both values on failure
};

struct Report {
  std::string suite;
  std::vector<Check> checks;
  double seconds = 0;
  bool ok() const;
  int failures() const;
};

struct SuiteOptions {
  int n = 3;
  int degree = 3;
  int order = 10;
  unsigned long long seed = 0;
  int samples = 50;
};

const std::vector<std::string>& suite_names();
bool is_suite(const std::string& name);
// Throws std::invalid_argument for an unknown suite. "all" runs every suite in order.
Report run_suite(const std::string& name, const SuiteOptions& opt);

// Pieces used by the acceptance gate.
void relations_commutation(std::vector<Check>& out, int n, bool with_shuffle);
void relations_cross(std::vector<Check>& out, int n, int kmax);
void antipode_tilde(std::vector<Check>& out, int n);
void appendix_jacobi(std::vector<Check>& out, int samples, unsigned long long seed);
void appendix_lemmas(std::vector<Check>& out, int n);
void pairing_checks(std::vector<Check>& out, int n, int degree);
void qplane_checks(std::vector<Check>& out, int n, int m);
void twist_checks(std::vector<Check>& out, int n, int M);
void classical_limit_checks(std::vector<Check>& out, int m);
void star_checks(std::vector<Check>& out, int n, int samples, unsigned long long seed);
void bordemann_checks(std::vector<Check>& out, int order, int samples, unsigned long long seed);

}  // namespace qdyn
