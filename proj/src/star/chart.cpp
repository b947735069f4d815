#include "qdyn/star/chart.hpp"

#include "qdyn/exact/rat.hpp"

#include <sstream>

namespace qdyn {

namespace {

void check_index(int n, int i) {
  if (i < 1 || i > n) throw IndexOutOfRange("chart index " + std::to_string(i) + " outside 1.." + std::to_string(n));
}

std::string monomial_str(int n, const ChartPoly::Key& k) {
  std::string s;
  for (int v = 0; v < 2 * n; ++v) {
    auto e = k[static_cast<std::size_t>(v)];
    if (e == 0) continue;
    if (!s.empty()) s += "*";
    s += (v < n ? "zt" : "om") + std::to_string(v < n ? v + 1 : v - n + 1);
    if (e > 1) s += "^" + std::to_string(e);
  }
  return s;
}

}  // namespace

ChartPoly ChartPoly::zeta(int n, int i, unsigned power) {
  check_index(n, i);
  return {n, SparsePoly::var(2 * static_cast<std::size_t>(n), static_cast<std::size_t>(i - 1), power)};
}

ChartPoly ChartPoly::omega(int n, int i, unsigned power) {
  check_index(n, i);
  return {n, SparsePoly::var(2 * static_cast<std::size_t>(n), static_cast<std::size_t>(n + i - 1), power)};
}

std::string ChartPoly::str() const {
  if (is_zero()) return "0";
  std::string out;
  // highest degree first
  std::vector<std::pair<Key, RatFun>> ts(terms().begin(), terms().end());
  std::stable_sort(ts.begin(), ts.end(), [](const auto& a, const auto& b) {
    int da = 0, db = 0;
    for (auto e : a.first) da += e;
    for (auto e : b.first) db += e;
    if (da != db) return da > db;
    return a.first > b.first;
  });
  for (const auto& [k, c] : ts) {
    std::string mono = monomial_str(n_, k);
    RatFun coef = c;
    bool neg = false;
    if (coef.num().size() == 1 && coef.num().leading().coeff.sign() < 0) {
      neg = true;
      coef = -coef;
    }
    std::string cs;
    if (mono.empty())
      cs = coef.str();
    else if (coef == RatFun(1))
      cs = mono;
    else {
      std::string r = coef.str();
      bool simple = coef.num().size() == 1 && coef.den_factors().size() <= 1;
      cs = (simple ? r : "(" + r + ")") + "*" + mono;
    }
    if (out.empty())
      out = neg ? "-" + cs : cs;
    else
      out += (neg ? " - " : " + ") + cs;
  }
  return out;
}

DiffOp DiffOp::partial(int n, std::size_t var) {
  DiffOp d(n);
  MultiIndex a(2 * static_cast<std::size_t>(n), 0);
  a.at(var) = 1;
  d.add(a, ChartPoly(n, RatFun(1)));
  return d;
}

DiffOp DiffOp::multiplication(const ChartPoly& c) {
  DiffOp d(c.rank());
  d.add(MultiIndex(2 * static_cast<std::size_t>(c.rank()), 0), c);
  return d;
}

void DiffOp::add(const MultiIndex& alpha, const ChartPoly& c) {
  if (c.is_zero()) return;
  auto [it, inserted] = terms_.try_emplace(alpha, c);
  if (!inserted) {
    it->second = it->second + c;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

int DiffOp::order() const {
  int o = 0;
  for (const auto& [a, c] : terms_) {
    int s = 0;
    for (auto e : a) s += e;
    o = std::max(o, s);
  }
  return o;
}

DiffOp& DiffOp::operator+=(const DiffOp& o) {
  if (n_ == 0) n_ = o.n_;
  for (const auto& [a, c] : o.terms_) add(a, c);
  return *this;
}

DiffOp operator-(const DiffOp& a, const DiffOp& b) { return a + b.scaled(RatFun(-1)); }

DiffOp DiffOp::scaled(const RatFun& c) const {
  DiffOp d(n_);
  for (const auto& [a, p] : terms_) d.add(a, p.scaled(c));
  return d;
}

DiffOp DiffOp::times(const ChartPoly& c) const {
  DiffOp d(n_);
  for (const auto& [a, p] : terms_) d.add(a, c * p);
  return d;
}

ChartPoly DiffOp::apply(const ChartPoly& f) const {
  ChartPoly out(n_);
  for (const auto& [a, c] : terms_) {
    ChartPoly g = f;
    for (std::size_t v = 0; v < a.size() && !g.is_zero(); ++v)
      if (a[v]) g = g.derivative(v, a[v]);
    if (!g.is_zero()) out = out + c * g;
  }
  return out;
}

DiffOp DiffOp::compose(const DiffOp& b) const {
  // c d^alpha (p d^beta) = c sum_{gamma <= alpha} binom(alpha, gamma) (d^gamma p) d^{alpha - gamma + beta}
  DiffOp out(n_);
  for (const auto& [alpha, c] : terms_)
    for (const auto& [beta, p] : b.terms_) {
      MultiIndex gamma(alpha.size(), 0);
      while (true) {
        Rat binom(1);
        ChartPoly dp = p;
        for (std::size_t v = 0; v < alpha.size(); ++v) {
          binom *= binomial(alpha[v], gamma[v]);
          if (gamma[v]) dp = dp.derivative(v, gamma[v]);
        }
        if (!dp.is_zero()) {
          MultiIndex idx(alpha.size());
          for (std::size_t v = 0; v < alpha.size(); ++v)
            idx[v] = static_cast<std::uint16_t>(alpha[v] - gamma[v] + beta[v]);
          out.add(idx, (c * dp).scaled(RatFun(binom)));
        }
        std::size_t v = 0;
        while (v < gamma.size() && gamma[v] == alpha[v]) gamma[v++] = 0;
        if (v == gamma.size()) break;
        ++gamma[v];
      }
    }
  return out;
}

bool operator==(const DiffOp& a, const DiffOp& b) {
  if (a.terms_.size() != b.terms_.size()) return false;
  for (auto ia = a.terms_.begin(), ib = b.terms_.begin(); ia != a.terms_.end(); ++ia, ++ib)
    if (ia->first != ib->first || !(ia->second == ib->second)) return false;
  return true;
}

std::string DiffOp::str() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
    if (!first) os << " + ";
    first = false;
    os << "(" << it->second.str() << ")";
    for (int v = 0; v < 2 * n_; ++v) {
      auto e = it->first[static_cast<std::size_t>(v)];
      if (!e) continue;
      os << "*d" << (v < n_ ? "zt" : "om") << (v < n_ ? v + 1 : v - n_ + 1);
      if (e > 1) os << "^" << e;
    }
  }
  return os.str();
}

DiffOp vf_x(int n, int i) {
  check_index(n, i);
  return DiffOp::partial(n, static_cast<std::size_t>(i - 1));
}

DiffOp euler_zeta(int n) {
  DiffOp e(n);
  for (int k = 1; k <= n; ++k) e += vf_x(n, k).times(ChartPoly::zeta(n, k));
  return e;
}

DiffOp vf_y(int n, int i) {
  check_index(n, i);
  return DiffOp::partial(n, static_cast<std::size_t>(n + i - 1)) + euler_zeta(n).times(ChartPoly::zeta(n, i));
}

}  // namespace qdyn
