#pragma once

#include "qdyn/exact/rat.hpp"

#include <compare>
#include <stdexcept>
#include <string>
#include <vector>

namespace qdyn {

class RankError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// Positive root eps_i - eps_j of gl(n+1), 1 <= i < j <= n+1.
struct PosRoot {
  int i = 1;
  int j = 2;
  int height() const { return j - i; }
  bool simple() const { return j == i + 1; }
  friend auto operator<=>(const PosRoot&, const PosRoot&) = default;
  std::string str() const { return "(" + std::to_string(i) + "," + std::to_string(j) + ")"; }
};

// Cartan weight in coordinates over beta_k = eps_1 - eps_{k+1}, k = 1..n.
struct CartanWeight {
  std::vector<Rat> c;

  static CartanWeight zero(int n) { return CartanWeight{std::vector<Rat>(static_cast<std::size_t>(n))}; }
  static CartanWeight of_root(int n, const PosRoot& r);
  bool is_zero() const;
  int rank() const { return static_cast<int>(c.size()); }

  CartanWeight operator-() const;
  CartanWeight& operator+=(const CartanWeight& o);
  friend CartanWeight operator+(CartanWeight a, const CartanWeight& b) { return a += b; }
  friend CartanWeight operator-(CartanWeight a, const CartanWeight& b) { return a += -b; }
  CartanWeight scaled(const Rat& s) const;

  friend auto operator<=>(const CartanWeight&, const CartanWeight&) = default;
  friend bool operator==(const CartanWeight&, const CartanWeight&) = default;
  std::string str() const;
};

// (beta_i, beta_j) = 1 + delta_ij.
Rat inner(const CartanWeight& u, const CartanWeight& v);
// (eps_1, w); this is the exponent of L in the character of v_lambda.
Rat eps1_pairing(const CartanWeight& w);
// Integer value of an exponent that must be integral; throws otherwise.
int integral_exponent(const Rat& r, const char* what);

// Positive roots of gl(n+1) in lexicographic order.
class RootSystem {
 public:
  explicit RootSystem(int n);
  int rank() const { return n_; }
  int size() const { return static_cast<int>(roots_.size()); }
  const PosRoot& root(int idx) const { return roots_[static_cast<std::size_t>(idx)]; }
  int index(const PosRoot& r) const;  // throws RankError
  int index(int i, int j) const { return index(PosRoot{i, j}); }
  bool contains(const PosRoot& r) const { return r.i >= 1 && r.i < r.j && r.j <= n_ + 1; }
  const CartanWeight& weight(int idx) const { return weights_[static_cast<std::size_t>(idx)]; }
  // (root idx, root jdx) as an integer.
  int pairing(int idx, int jdx) const { return gram_[static_cast<std::size_t>(idx * size() + jdx)]; }

 private:
  int n_;
  std::vector<PosRoot> roots_;
  std::vector<CartanWeight> weights_;
  std::vector<int> gram_;
};

}  // namespace qdyn
