#include "qdyn/exact/series.hpp"

#include <stdexcept>

namespace qdyn {

namespace {

// Coefficients of p viewed as a polynomial in x.
std::vector<MPoly> split(const MPoly& p, Sym x) {
  int k = static_cast<int>(x);
  std::vector<MPolyBuilder> parts(static_cast<std::size_t>(std::max(p.degree(x), 0) + 1));
  for (const auto& t : p.terms()) {
    Exps e = t.exps;
    int d = e[k];
    e[k] = 0;
    parts[static_cast<std::size_t>(d)].add(e, t.coeff);
  }
  std::vector<MPoly> out;
  for (auto& b : parts) out.push_back(b.build());
  return out;
}

int valuation(const std::vector<RatFun>& s) {
  for (std::size_t i = 0; i < s.size(); ++i)
    if (!s[i].is_zero()) return static_cast<int>(i);
  return -1;
}

// eps-expansion of (1+eps)^(a + b*lambda), coefficients 0..order.
std::vector<MPoly> binomial_series(int a, int b, int order) {
  MPoly x = MPoly(Rat(a)) + MPoly::var(Sym::lambda).scaled(Rat(b));
  std::vector<MPoly> out;
  MPoly falling(1);
  for (int k = 0; k <= order; ++k) {
    out.push_back(falling.scaled(Rat(1) / factorial(k)));
    falling = falling * (x - MPoly(Rat(k)));
  }
  return out;
}

std::vector<RatFun> eps_series(const MPoly& p, int order) {
  std::vector<RatFun> out(static_cast<std::size_t>(order + 1));
  const int iq = static_cast<int>(Sym::q), iL = static_cast<int>(Sym::L);
  for (const auto& t : p.terms()) {
    Exps rest = t.exps;
    int a = rest[iq], b = rest[iL];
    rest[iq] = rest[iL] = 0;
    MPoly base = MPoly::monomial(rest, t.coeff);
    auto bs = binomial_series(a, b, order);
    for (int k = 0; k <= order; ++k) out[static_cast<std::size_t>(k)] += RatFun(base * bs[static_cast<std::size_t>(k)]);
  }
  return out;
}

std::vector<RatFun> truncated_product(const std::vector<RatFun>& a, const std::vector<RatFun>& b) {
  std::vector<RatFun> out(a.size());
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; i + j < a.size(); ++j) out[i + j] += a[i] * b[j];
  return out;
}

}  // namespace

std::vector<RatFun> series_coefficients(const RatFun& f, Sym x, int order) {
  if (is_laurent(x)) throw std::invalid_argument("series expansion needs a polynomial symbol");
  auto num = split(f.num(), x);
  auto den = split(f.den(), x);
  std::size_t vn = 0, vd = 0;
  while (vn < num.size() && num[vn].is_zero()) ++vn;
  while (vd < den.size() && den[vd].is_zero()) ++vd;
  std::vector<RatFun> out(static_cast<std::size_t>(order + 1));
  if (vn == num.size()) return out;
  if (vn < vd) throw std::domain_error("rational function has a pole at the expansion point");
  int shift = static_cast<int>(vn - vd);
  RatFun d0(den[vd]);
  std::vector<RatFun> c;
  for (int r = 0; r + shift <= order; ++r) {
    std::size_t nr = vn + static_cast<std::size_t>(r);
    RatFun acc = nr < num.size() ? RatFun(num[nr]) : RatFun(0);
    for (int i = 1; i <= r; ++i) {
      std::size_t di = vd + static_cast<std::size_t>(i);
      if (di < den.size() && !den[di].is_zero()) acc -= RatFun(den[di]) * c[static_cast<std::size_t>(r - i)];
    }
    c.push_back(acc / d0);
    out[static_cast<std::size_t>(r + shift)] = c.back();
  }
  return out;
}

RatFun classical_limit(const RatFun& f) {
  if (f.is_zero()) return RatFun(0);
  for (int order = 4; order <= 256; order *= 2) {
    std::vector<RatFun> den(static_cast<std::size_t>(order + 1));
    den[0] = RatFun(1);
    for (const auto& fac : f.den_factors()) {
      auto s = eps_series(fac.atom, order);
      for (int m = 0; m < fac.mult; ++m) den = truncated_product(den, s);
    }
    int vd = valuation(den);
    if (vd < 0) continue;
    auto num = eps_series(f.num(), order);
    int vn = valuation(num);
    if (vn < 0 || vn > vd) return RatFun(0);
    if (vn < vd) throw std::domain_error("classical limit diverges");
    return num[static_cast<std::size_t>(vn)] / den[static_cast<std::size_t>(vd)];
  }
  throw std::domain_error("classical limit: denominator vanishes to high order");
}

}  // namespace qdyn
