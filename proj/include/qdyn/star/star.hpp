#pragma once

#include "qdyn/star/chart.hpp"

#include <map>
#include <random>
#include <utility>
#include <vector>

namespace qdyn {

// How y_j acts on y^m g. The chart formula for y_j is derived for H-invariant functions;
// y^m g is not invariant, and the Levi part of the shifted point contributes
// -|m| zeta_j y^m g - sum_i m_i zeta_i y^{m - e_i + e_j} g. `naive` drops these terms.
enum class YIteration { weighted, naive };

// y_n^{m_n} ... y_1^{m_1} g, y_1 applied first.
ChartPoly apply_y_word(const ChartPoly& g, const std::vector<int>& m, YIteration mode = YIteration::weighted);

// (-t)^{|m|} / (prod m_i! prod_{j<|m|} (lambda - j t))
RatFun star_coeff(const std::vector<int>& m);

ChartPoly star_classical(const ChartPoly& f, const ChartPoly& g, YIteration mode = YIteration::weighted);

// Operator realizing E_ab (0 <= a,b <= n) of gl(n+1) on chart functions: the linear field
// z_b d/dz_a - w_a d/dw_b pushed through zeta_k = -z_0 w_k, omega_k = z_k / z_0.
DiffOp gl_field(int a, int b, int n);

// Restriction of d/dz_c or d/dw_c to homogeneous functions phi(zeta/b, omega) at b = 1,
// keyed by the power of the chart coordinate a = z_0.
std::map<int, DiffOp> restricted_partial(bool is_w, int c, int n);

// sum_c (d/dz_c f)(d/dw_c g) for homogeneous f, g, c = 0..n
ChartPoly bivector_apply(const ChartPoly& f, const ChartPoly& g);

// sum_i (x_i f)(y_i g)
ChartPoly xy_apply(const ChartPoly& f, const ChartPoly& g);

// Random chart polynomial of total degree <= degree with small integer coefficients, a few of
// them multiplied by lambda or t.
ChartPoly random_chart_poly(int n, int degree, std::mt19937_64& rng, int max_terms = 4);

}  // namespace qdyn
