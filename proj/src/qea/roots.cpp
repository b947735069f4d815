#include "qdyn/qea/roots.hpp"

namespace qdyn {

CartanWeight CartanWeight::of_root(int n, const PosRoot& r) {
  // eps_i - eps_j = beta_{j-1} - beta_{i-1}, beta_0 = 0
  CartanWeight w = zero(n);
  w.c[static_cast<std::size_t>(r.j - 2)] += Rat(1);
  if (r.i >= 2) w.c[static_cast<std::size_t>(r.i - 2)] -= Rat(1);
  return w;
}

bool CartanWeight::is_zero() const {
  for (const auto& x : c)
    if (!x.is_zero()) return false;
  return true;
}

CartanWeight CartanWeight::operator-() const {
  CartanWeight r = *this;
  for (auto& x : r.c) x = -x;
  return r;
}

CartanWeight& CartanWeight::operator+=(const CartanWeight& o) {
  if (o.c.size() != c.size()) throw RankError("Cartan weights of different rank");
  for (std::size_t k = 0; k < c.size(); ++k) c[k] += o.c[k];
  return *this;
}

CartanWeight CartanWeight::scaled(const Rat& s) const {
  CartanWeight r = *this;
  for (auto& x : r.c) x *= s;
  return r;
}

std::string CartanWeight::str() const {
  std::string s = "K(";
  for (std::size_t k = 0; k < c.size(); ++k) {
    if (k) s += ",";
    s += c[k].str();
  }
  return s + ")";
}

Rat inner(const CartanWeight& u, const CartanWeight& v) {
  if (u.c.size() != v.c.size()) throw RankError("Cartan weights of different rank");
  Rat dot(0), su(0), sv(0);
  for (std::size_t k = 0; k < u.c.size(); ++k) {
    dot += u.c[k] * v.c[k];
    su += u.c[k];
    sv += v.c[k];
  }
  return dot + su * sv;
}

Rat eps1_pairing(const CartanWeight& w) {
  Rat s(0);
  for (const auto& x : w.c) s += x;
  return s;
}

int integral_exponent(const Rat& r, const char* what) {
  if (!r.is_integer()) throw std::domain_error(std::string("non-integral exponent in ") + what + ": " + r.str());
  return static_cast<int>(r.to_long());
}

RootSystem::RootSystem(int n) : n_(n) {
  if (n < 1) throw RankError("rank must be at least 1");
  for (int i = 1; i <= n + 1; ++i)
    for (int j = i + 1; j <= n + 1; ++j) {
      roots_.push_back(PosRoot{i, j});
      weights_.push_back(CartanWeight::of_root(n, PosRoot{i, j}));
    }
  gram_.resize(roots_.size() * roots_.size());
  for (std::size_t a = 0; a < roots_.size(); ++a)
    for (std::size_t b = 0; b < roots_.size(); ++b)
      gram_[a * roots_.size() + b] = integral_exponent(inner(weights_[a], weights_[b]), "root pairing");
}

int RootSystem::index(const PosRoot& r) const {
  if (!contains(r)) throw RankError("no positive root " + r.str() + " in rank " + std::to_string(n_));
  // lexicographic position
  int idx = 0;
  for (int a = 1; a < r.i; ++a) idx += n_ + 1 - a;
  return idx + (r.j - r.i - 1);
}

}  // namespace qdyn
