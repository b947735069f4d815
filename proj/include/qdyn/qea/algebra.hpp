#pragma once

#include "qdyn/exact/ratfun.hpp"
#include "qdyn/qea/roots.hpp"

#include <cstdint>
#include <map>
#include <mutex>
#include <set>
#include <string>
#include <vector>

namespace qdyn {

using Exponents = std::vector<std::uint16_t>;

// F-part (ascending root order) * q^{h_k} * E-part (ascending root order).
struct NormalMonomial {
  Exponents f;
  CartanWeight k;
  Exponents e;
  friend auto operator<=>(const NormalMonomial&, const NormalMonomial&) = default;
  friend bool operator==(const NormalMonomial&, const NormalMonomial&) = default;
};

class AlgElt {
 public:
  using Terms = std::map<NormalMonomial, RatFun>;

  AlgElt() = default;
  AlgElt(const NormalMonomial& m, const RatFun& c) { add(m, c); }

  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  std::size_t size() const { return terms_.size(); }
  void add(const NormalMonomial& m, const RatFun& c);
  // Coefficient of m (zero if absent).
  RatFun coeff(const NormalMonomial& m) const;

  AlgElt operator-() const;
  AlgElt& operator+=(const AlgElt& o);
  AlgElt& operator-=(const AlgElt& o);
  friend AlgElt operator+(AlgElt a, const AlgElt& b) { return a += b; }
  friend AlgElt operator-(AlgElt a, const AlgElt& b) { return a -= b; }
  AlgElt scaled(const RatFun& c) const;

  friend bool operator==(const AlgElt& a, const AlgElt& b);

 private:
  Terms terms_;
};

struct Gen {
  enum class Kind : std::uint8_t { E, F, K };
  Kind kind = Kind::E;
  int root = -1;
  CartanWeight w;
};

// U_q(gl(n+1)) with PBW normal ordering. Instances own memo tables and are internally
// synchronized; elements are plain values.
class Algebra {
 public:
  explicit Algebra(int n);
  Algebra(const Algebra&) = delete;
  Algebra& operator=(const Algebra&) = delete;

  int rank() const { return roots_.rank(); }
  const RootSystem& roots() const { return roots_; }

  NormalMonomial unit_monomial() const;
  NormalMonomial e_monomial(int root, int power = 1) const;
  NormalMonomial f_monomial(int root, int power = 1) const;
  NormalMonomial k_monomial(const CartanWeight& w) const;

  AlgElt one() const { return AlgElt(unit_monomial(), RatFun(1)); }
  AlgElt scalar(const RatFun& c) const { return AlgElt(unit_monomial(), c); }
  AlgElt E(const PosRoot& r) const { return AlgElt(e_monomial(roots_.index(r)), RatFun(1)); }
  AlgElt F(const PosRoot& r) const { return AlgElt(f_monomial(roots_.index(r)), RatFun(1)); }
  AlgElt K(const CartanWeight& w) const { return AlgElt(k_monomial(w), RatFun(1)); }
  // (q^{h_a} - q^{-h_a})/(q - q^-1)
  AlgElt cartan_bracket(const PosRoot& r) const;

  AlgElt multiply(const AlgElt& a, const AlgElt& b);
  AlgElt multiply_monomials(const NormalMonomial& a, const NormalMonomial& b);
  AlgElt pow(const AlgElt& a, int k);
  // [x, y]_a = xy - a yx
  AlgElt qbracket(const AlgElt& x, const AlgElt& y, const RatFun& a);

  // [E(mu), F(nu)] in normal form.
  AlgElt cross(int mu, int nu);

  AlgElt omega(const AlgElt& a);
  AlgElt antipode(const AlgElt& a);
  RatFun counit(const AlgElt& a) const;

  // Generator word of a normal monomial, left to right.
  std::vector<Gen> word(const NormalMonomial& m) const;
  // Weight of a root-exponent vector.
  CartanWeight weight_of(const Exponents& x) const;

  std::string render(const AlgElt& a) const;
  std::string render(const NormalMonomial& m) const;

  // omega(E(mu)) = omega_scale(mu) F(mu)
  RatFun omega_scale(int root) const;

 private:
  struct RuleTerm {
    RatFun coeff;
    std::vector<int> roots;  // ascending
  };
  using EMap = std::map<Exponents, RatFun>;

  RootSystem roots_;
  std::vector<std::vector<std::vector<RuleTerm>>> e_rule_, f_rule_;  // [hi][lo]
  std::map<std::pair<Exponents, int>, EMap> ee_cache_, ff_cache_;
  std::map<std::pair<Exponents, int>, AlgElt> ef_cache_;
  std::map<std::pair<int, int>, AlgElt> cross_cache_;
  std::set<std::pair<int, int>> cross_pending_;
  std::map<int, AlgElt> gamma_e_, gamma_f_;
  mutable std::recursive_mutex mu_;

  void build_rules();
  std::vector<RuleTerm> e_rule(int lo, int hi) const;
  const EMap& straighten(bool e_side, const Exponents& m, int root);
  EMap times_word(bool e_side, const Exponents& a, const Exponents& b);
  const AlgElt& e_times_f(const Exponents& m, int nu);
  AlgElt mono_times_gen(const NormalMonomial& m, const Gen& g);
  AlgElt times_gen(const AlgElt& a, const Gen& g);
  const AlgElt& gamma_root(bool e_side, int root);
  int pair_with(const CartanWeight& w, const Exponents& x) const;
};

}  // namespace qdyn
