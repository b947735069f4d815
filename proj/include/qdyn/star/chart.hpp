#pragma once

#include "qdyn/exact/ratfun.hpp"

#include <cstdint>
#include <map>
#include <stdexcept>
#include <string>
#include <vector>

namespace qdyn {

struct IndexOutOfRange : std::out_of_range {
  using std::out_of_range::out_of_range;
};

// Sparse commutative polynomial with coefficients in C. Exponent vectors all have the same
// length (the number of variables).
template <class C>
class SparsePoly {
 public:
  using Key = std::vector<std::uint16_t>;
  using Terms = std::map<Key, C>;

  SparsePoly() = default;
  explicit SparsePoly(std::size_t nvars) : nvars_(nvars) {}
  SparsePoly(std::size_t nvars, const C& c) : nvars_(nvars) { add(Key(nvars, 0), c); }

  static SparsePoly var(std::size_t nvars, std::size_t i, unsigned power = 1) {
    Key k(nvars, 0);
    k.at(i) = static_cast<std::uint16_t>(power);
    SparsePoly p(nvars);
    p.add(k, C(1));
    return p;
  }

  std::size_t nvars() const { return nvars_; }
  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }

  void add(const Key& k, const C& c) {
    if (c.is_zero()) return;
    auto [it, inserted] = terms_.try_emplace(k, c);
    if (!inserted) {
      it->second += c;
      if (it->second.is_zero()) terms_.erase(it);
    }
  }

  C coeff(const Key& k) const {
    auto it = terms_.find(k);
    return it == terms_.end() ? C(0) : it->second;
  }

  SparsePoly& operator+=(const SparsePoly& o) {
    adopt(o);
    for (const auto& [k, c] : o.terms_) add(k, c);
    return *this;
  }
  SparsePoly& operator-=(const SparsePoly& o) {
    adopt(o);
    for (const auto& [k, c] : o.terms_) add(k, -c);
    return *this;
  }
  SparsePoly operator-() const {
    SparsePoly r(nvars_);
    for (const auto& [k, c] : terms_) r.terms_.emplace(k, -c);
    return r;
  }
  friend SparsePoly operator+(SparsePoly a, const SparsePoly& b) { return a += b; }
  friend SparsePoly operator-(SparsePoly a, const SparsePoly& b) { return a -= b; }
  friend SparsePoly operator*(const SparsePoly& a, const SparsePoly& b) {
    SparsePoly r(std::max(a.nvars_, b.nvars_));
    for (const auto& [ka, ca] : a.terms_)
      for (const auto& [kb, cb] : b.terms_) {
        Key k = ka;
        for (std::size_t i = 0; i < k.size(); ++i) k[i] = static_cast<std::uint16_t>(k[i] + kb[i]);
        r.add(k, ca * cb);
      }
    return r;
  }
  SparsePoly scaled(const C& c) const {
    SparsePoly r(nvars_);
    if (c.is_zero()) return r;
    for (const auto& [k, v] : terms_) r.add(k, v * c);
    return r;
  }

  // d/dx_i applied `order` times
  SparsePoly derivative(std::size_t i, unsigned order = 1) const {
    SparsePoly r(nvars_);
    for (const auto& [k, c] : terms_) {
      if (k[i] < order) continue;
      long f = 1;
      for (unsigned j = 0; j < order; ++j) f *= k[i] - static_cast<long>(j);
      Key kk = k;
      kk[i] = static_cast<std::uint16_t>(kk[i] - order);
      r.add(kk, c * C(Rat(f)));
    }
    return r;
  }

  int total_degree() const {
    int d = -1;
    for (const auto& [k, c] : terms_) {
      int s = 0;
      for (auto e : k) s += e;
      d = std::max(d, s);
    }
    return d;
  }

  friend bool operator==(const SparsePoly& a, const SparsePoly& b) {
    if (a.terms_.size() != b.terms_.size()) return false;
    for (auto ia = a.terms_.begin(), ib = b.terms_.begin(); ia != a.terms_.end(); ++ia, ++ib)
      if (ia->first != ib->first || !(ia->second == ib->second)) return false;
    return true;
  }

 private:
  std::size_t nvars_ = 0;
  Terms terms_;

  void adopt(const SparsePoly& o) {
    if (nvars_ == 0) nvars_ = o.nvars_;
  }
};

// Polynomial in zeta_1..zeta_n, omega_1..omega_n (variables 0..n-1 and n..2n-1) over Q(lambda, t).
class ChartPoly : public SparsePoly<RatFun> {
 public:
  ChartPoly() = default;
  explicit ChartPoly(int n) : SparsePoly(2 * static_cast<std::size_t>(n)), n_(n) {}
  ChartPoly(int n, const RatFun& c) : SparsePoly(2 * static_cast<std::size_t>(n), c), n_(n) {}
  ChartPoly(int n, SparsePoly p) : SparsePoly(std::move(p)), n_(n) {}

  static ChartPoly zeta(int n, int i, unsigned power = 1);
  static ChartPoly omega(int n, int i, unsigned power = 1);

  int rank() const { return n_; }
  // "2*zt1*om1 - t/lambda" style, variables zt1.., om1..
  std::string str() const;

  friend ChartPoly operator+(const ChartPoly& a, const ChartPoly& b) { return {a.n_, SparsePoly(a) + b}; }
  friend ChartPoly operator-(const ChartPoly& a, const ChartPoly& b) { return {a.n_, SparsePoly(a) - b}; }
  friend ChartPoly operator*(const ChartPoly& a, const ChartPoly& b) {
    return {std::max(a.n_, b.n_), static_cast<const SparsePoly&>(a) * b};
  }
  ChartPoly operator-() const { return {n_, SparsePoly::operator-()}; }
  ChartPoly scaled(const RatFun& c) const { return {n_, SparsePoly::scaled(c)}; }
  ChartPoly derivative(std::size_t i, unsigned order = 1) const { return {n_, SparsePoly::derivative(i, order)}; }

 private:
  int n_ = 0;
};

// Sum of coefficient * d^alpha over the 2n chart variables.
class DiffOp {
 public:
  using MultiIndex = std::vector<std::uint16_t>;

  DiffOp() = default;
  explicit DiffOp(int n) : n_(n) {}

  static DiffOp partial(int n, std::size_t var);
  static DiffOp multiplication(const ChartPoly& c);

  int rank() const { return n_; }
  const std::map<MultiIndex, ChartPoly>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  void add(const MultiIndex& alpha, const ChartPoly& c);
  int order() const;

  DiffOp& operator+=(const DiffOp& o);
  friend DiffOp operator+(DiffOp a, const DiffOp& b) { return a += b; }
  friend DiffOp operator-(const DiffOp& a, const DiffOp& b);
  DiffOp scaled(const RatFun& c) const;
  // left multiplication by a chart function
  DiffOp times(const ChartPoly& c) const;

  ChartPoly apply(const ChartPoly& f) const;
  // (a.compose(b))(f) = a(b(f))
  DiffOp compose(const DiffOp& b) const;

  friend bool operator==(const DiffOp& a, const DiffOp& b);
  std::string str() const;

 private:
  int n_ = 0;
  std::map<MultiIndex, ChartPoly> terms_;
};

// x_i = d/dzeta_i
DiffOp vf_x(int n, int i);
// y_i = d/domega_i + zeta_i * sum_k zeta_k d/dzeta_k
DiffOp vf_y(int n, int i);
// sum_k zeta_k d/dzeta_k
DiffOp euler_zeta(int n);

}  // namespace qdyn
