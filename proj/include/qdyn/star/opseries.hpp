#pragma once

#include "qdyn/exact/ratfun.hpp"

#include <map>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace qdyn {

// Coefficients c(r, s) of t^r (x (x) y)^s, rational in mu.
struct OperatorSeries {
  int R = 0;
  std::map<std::pair<int, int>, RatFun> entries;

  RatFun at(int r, int s) const;
  void add(int r, int s, const RatFun& c);
};

struct MismatchAt : std::runtime_error {
  int r, s;
  RatFun left, right;
  MismatchAt(int r_, int s_, RatFun l, RatFun rr);
};

// id + sum_r (-t/2mu)^r sum_{s<=r} sum_{k<=s} (-1)^{r-k} k^{r-1} / (s!(s-k)!(k-1)!) (x (x) y)^s
OperatorSeries bordemann_series(int R);
// sum_m (-t)^m / (m! prod_{j<m} (lambda - j t)) (x (x) y)^m with lambda := 2 mu - t, expanded in t
OperatorSeries twist_series(int R);
// Throws MismatchAt on the first differing entry (ordered by r, then s).
void compare_series(const OperatorSeries& a, const OperatorSeries& b);
void compare_series(int R);

// sum_{k_1+..+k_m = k} a_1^{k_1}...a_m^{k_m}
Rat complete_homogeneous(const std::vector<Rat>& a, int k);
// sum_i a_i^{k+m-1} / prod_{j != i}(a_i - a_j)
Rat partial_fraction_side(const std::vector<Rat>& a, int k);
// sum_k (-1)^{m-k} k^{r-1} / ((k-1)!(m-k)!)
Rat integer_point_side(int m, int r);

// Both identities for all 1 <= m <= max_m, m <= r <= max_r, on `samples` random distinct
// rational tuples per m drawn from the seed.
struct HsymResult {
  bool ok = true;
  std::string witness;
  int checked = 0;
};
HsymResult hsym_identities(int max_m, int max_r, int samples, unsigned long long seed);

}  // namespace qdyn
