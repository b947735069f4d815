#include "qdyn/star/star.hpp"

#include <functional>
#include <numeric>

namespace qdyn {

namespace {

// Chart images W(m) of y^m g. The chart formula for y_j holds on H-invariant functions; on
// y^m g the Cartan part of the shifted point adds [Z, y_i] = -zeta_i y_j - zeta_j y_i for each
// factor, Z being the velocity of the Levi component.
class YTable {
 public:
  YTable(const ChartPoly& g, int n, YIteration mode) : n_(n), mode_(mode) {
    memo_.emplace(std::vector<int>(static_cast<std::size_t>(n), 0), g);
  }

  const ChartPoly& at(const std::vector<int>& m) {
    if (auto it = memo_.find(m); it != memo_.end()) return it->second;
    std::size_t j = 0;
    while (m[j] == 0) ++j;
    std::vector<int> prev = m;
    --prev[j];
    ChartPoly u = at(prev);
    ChartPoly r = vf_y(n_, static_cast<int>(j) + 1).apply(u);
    if (mode_ == YIteration::weighted) {
      int k = std::accumulate(prev.begin(), prev.end(), 0);
      if (k > 0) r = r - (ChartPoly::zeta(n_, static_cast<int>(j) + 1) * u).scaled(RatFun(k));
      for (std::size_t i = 0; i < prev.size(); ++i) {
        if (prev[i] == 0) continue;
        std::vector<int> swapped = prev;
        --swapped[i];
        ++swapped[j];
        r = r - (ChartPoly::zeta(n_, static_cast<int>(i) + 1) * at(swapped)).scaled(RatFun(prev[i]));
      }
    }
    return memo_.emplace(m, std::move(r)).first->second;
  }

 private:
  int n_;
  YIteration mode_;
  std::map<std::vector<int>, ChartPoly> memo_;
};

// Laurent polynomial in the chart coordinate a with chart-function coefficients.
using AExpr = std::map<int, ChartPoly>;

void add_to(AExpr& x, int p, const ChartPoly& c) {
  if (c.is_zero()) return;
  auto [it, ins] = x.try_emplace(p, c);
  if (!ins) {
    it->second = it->second + c;
    if (it->second.is_zero()) x.erase(it);
  }
}

AExpr mul(const AExpr& x, const AExpr& y) {
  AExpr r;
  for (const auto& [p, c] : x)
    for (const auto& [s, d] : y) add_to(r, p + s, c * d);
  return r;
}

AExpr plus(const AExpr& x, const AExpr& y, int sign = 1) {
  AExpr r = x;
  for (const auto& [p, c] : y) add_to(r, p, sign > 0 ? c : -c);
  return r;
}

AExpr mono(int n, int p, const ChartPoly& c) {
  AExpr r;
  add_to(r, p, c.is_zero() ? ChartPoly(n) : c);
  return r;
}

struct Coordinates {
  int n;
  std::vector<AExpr> z, w;
  explicit Coordinates(int n_) : n(n_) {
    ChartPoly pairing(n, RatFun(1));
    for (int i = 1; i <= n; ++i) pairing = pairing + ChartPoly::omega(n, i) * ChartPoly::zeta(n, i);
    z.push_back(mono(n, 1, ChartPoly(n, RatFun(1))));
    w.push_back(mono(n, -1, pairing));
    for (int i = 1; i <= n; ++i) {
      z.push_back(mono(n, 1, ChartPoly::omega(n, i)));
      w.push_back(mono(n, -1, -ChartPoly::zeta(n, i)));
    }
  }
};

// Collects sum_k X(zeta_k) d/dzeta_k + X(omega_k) d/domega_k keyed by a-power.
std::map<int, DiffOp> assemble(int n, const std::vector<AExpr>& dzeta, const std::vector<AExpr>& domega) {
  std::map<int, DiffOp> out;
  auto put = [&](const AExpr& x, std::size_t var) {
    for (const auto& [p, c] : x) {
      auto it = out.try_emplace(p, DiffOp(n)).first;
      it->second += DiffOp::partial(n, var).times(c);
      if (it->second.is_zero()) out.erase(it);
    }
  };
  for (int k = 0; k < n; ++k) {
    put(dzeta[static_cast<std::size_t>(k)], static_cast<std::size_t>(k));
    put(domega[static_cast<std::size_t>(k)], static_cast<std::size_t>(n + k));
  }
  return out;
}

}  // namespace

ChartPoly apply_y_word(const ChartPoly& g, const std::vector<int>& m, YIteration mode) {
  YTable table(g, static_cast<int>(m.size()), mode);
  return table.at(m);
}

RatFun star_coeff(const std::vector<int>& m) {
  int d = std::accumulate(m.begin(), m.end(), 0);
  RatFun c = RatFun::var(Sym::t).pow(d);
  if (d % 2) c = -c;
  for (int mi : m) c /= RatFun(factorial(mi));
  RatFun lam = RatFun::var(Sym::lambda), t = RatFun::var(Sym::t);
  for (int j = 0; j < d; ++j) c /= lam - t * RatFun(j);
  return c;
}

ChartPoly star_classical(const ChartPoly& f, const ChartPoly& g, YIteration mode) {
  int n = std::max(f.rank(), g.rank());
  ChartPoly out(n);
  if (f.is_zero() || g.is_zero()) return out;
  YTable ys(g, n, mode);
  std::vector<int> m(static_cast<std::size_t>(n), 0);
  // x-derivatives of f vanish once |m| exceeds its zeta-degree
  std::function<void(int, const ChartPoly&)> rec = [&](int i, const ChartPoly& xf) {
    if (i > n) {
      const ChartPoly& yg = ys.at(m);
      if (!yg.is_zero()) out = out + (xf * yg).scaled(star_coeff(m));
      return;
    }
    ChartPoly a = xf;
    for (int c = 0; !a.is_zero(); ++c) {
      m[static_cast<std::size_t>(i - 1)] = c;
      rec(i + 1, a);
      a = a.derivative(static_cast<std::size_t>(i - 1));
    }
    m[static_cast<std::size_t>(i - 1)] = 0;
  };
  rec(1, f);
  return out;
}

DiffOp gl_field(int a, int b, int n) {
  if (a < 0 || a > n || b < 0 || b > n)
    throw IndexOutOfRange("gl field index outside 0.." + std::to_string(n));
  Coordinates X(n);
  auto Xz = [&](int c) { return c == a ? X.z[static_cast<std::size_t>(b)] : AExpr{}; };
  auto Xw = [&](int c) {
    AExpr r;
    if (c == b)
      for (const auto& [p, v] : X.w[static_cast<std::size_t>(a)]) add_to(r, p, -v);
    return r;
  };
  AExpr inv_z0 = mono(n, -1, ChartPoly(n, RatFun(1)));
  std::vector<AExpr> dzeta, domega;
  for (int k = 1; k <= n; ++k) {
    AExpr dz = plus(mul(Xz(0), X.w[static_cast<std::size_t>(k)]), mul(X.z[0], Xw(k)));
    AExpr neg;
    for (const auto& [p, v] : dz) add_to(neg, p, -v);
    dzeta.push_back(neg);
    AExpr dom = plus(mul(Xz(k), inv_z0), mul(mul(X.z[static_cast<std::size_t>(k)], Xz(0)), mul(inv_z0, inv_z0)), -1);
    domega.push_back(dom);
  }
  auto parts = assemble(n, dzeta, domega);
  if (parts.empty()) return DiffOp(n);
  if (parts.size() != 1 || parts.begin()->first != 0)
    throw std::logic_error("gl field depends on the fibre coordinate a");
  return parts.begin()->second;
}

std::map<int, DiffOp> restricted_partial(bool is_w, int c, int n) {
  if (c < 0 || c > n) throw IndexOutOfRange("partial index outside 0.." + std::to_string(n));
  Coordinates X(n);
  AExpr inv_z0 = mono(n, -1, ChartPoly(n, RatFun(1)));
  // d(zeta_k / b) = d zeta_k - zeta_k d b at b = 1; d b/dz_c = w_c, d b/dw_c = z_c
  const AExpr& db = is_w ? X.z[static_cast<std::size_t>(c)] : X.w[static_cast<std::size_t>(c)];
  std::vector<AExpr> dzeta, domega;
  for (int k = 1; k <= n; ++k) {
    AExpr dz;
    if (!is_w && c == 0)
      for (const auto& [p, v] : X.w[static_cast<std::size_t>(k)]) add_to(dz, p, -v);
    if (is_w && c == k)
      for (const auto& [p, v] : X.z[0]) add_to(dz, p, -v);
    dz = plus(dz, mul(mono(n, 0, ChartPoly::zeta(n, k)), db), -1);
    dzeta.push_back(dz);
    AExpr dom;
    if (!is_w && c == k) dom = inv_z0;
    if (!is_w && c == 0) dom = plus(dom, mul(X.z[static_cast<std::size_t>(k)], mul(inv_z0, inv_z0)), -1);
    domega.push_back(dom);
  }
  return assemble(n, dzeta, domega);
}

ChartPoly bivector_apply(const ChartPoly& f, const ChartPoly& g) {
  int n = std::max(f.rank(), g.rank());
  AExpr acc;
  for (int c = 0; c <= n; ++c) {
    auto dz = restricted_partial(false, c, n), dw = restricted_partial(true, c, n);
    for (const auto& [p, A] : dz)
      for (const auto& [s, B] : dw) add_to(acc, p + s, A.apply(f) * B.apply(g));
  }
  if (acc.empty()) return ChartPoly(n);
  if (acc.size() != 1 || acc.begin()->first != 0) throw std::logic_error("bivector depends on a");
  return acc.begin()->second;
}

ChartPoly xy_apply(const ChartPoly& f, const ChartPoly& g) {
  int n = std::max(f.rank(), g.rank());
  ChartPoly out(n);
  for (int i = 1; i <= n; ++i) out = out + vf_x(n, i).apply(f) * vf_y(n, i).apply(g);
  return out;
}

ChartPoly random_chart_poly(int n, int degree, std::mt19937_64& rng, int max_terms) {
  std::uniform_int_distribution<int> nterms(1, max_terms), var(0, 2 * n - 1), deg(0, degree), coef(-3, 3), kind(0, 5);
  ChartPoly p(n);
  int k = nterms(rng);
  for (int i = 0; i < k; ++i) {
    ChartPoly::Key e(2 * static_cast<std::size_t>(n), 0);
    int d = deg(rng);
    for (int j = 0; j < d; ++j) ++e[static_cast<std::size_t>(var(rng))];
    int c = coef(rng);
    if (c == 0) c = 1;
    RatFun rc(c);
    int kd = kind(rng);
    if (kd == 0) rc *= RatFun::var(Sym::lambda);
    if (kd == 1) rc *= RatFun::var(Sym::t);
    p.add(e, rc);
  }
  return p;
}

}  // namespace qdyn
