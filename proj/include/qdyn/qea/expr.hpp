#pragma once

#include "qdyn/qea/algebra.hpp"

#include <vector>

namespace qdyn {

// Expression tree over the algebra; QBr(x, y, a) means xy - a yx.
struct Expr {
  enum class Kind { Scalar, E, F, TE, K, Sum, Prod, QBr };
  Kind kind = Kind::Scalar;
  RatFun scalar;  // Scalar value, or the QBr parameter
  PosRoot root;
  CartanWeight weight;
  std::vector<Expr> args;

  static Expr number(const RatFun& c);
  static Expr e(const PosRoot& r);
  static Expr f(const PosRoot& r);
  static Expr te(const PosRoot& r);
  static Expr k(const CartanWeight& w);
  static Expr sum(std::vector<Expr> xs);
  static Expr prod(std::vector<Expr> xs);
  static Expr qbr(Expr x, Expr y, const RatFun& a);
};

Expr operator+(Expr a, Expr b);
Expr operator-(Expr a, Expr b);
Expr operator*(Expr a, Expr b);

// e_mu = [e_i, [e_{i+1}, ... [e_{j-2}, e_{j-1}]_q ...]_q]_q
Expr root_e(const PosRoot& r);
// q^{2(h-1)} [e_i, [ ... ]_{q^-1}]_{q^-1}
Expr root_e_tilde(const PosRoot& r);
// f_mu = [f_{j-1}, [f_{j-2}, ... [f_{i+1}, f_i]_{q^-1} ...]_{q^-1}]_{q^-1}
Expr root_f(const PosRoot& r);

AlgElt evaluate(Algebra& alg, const Expr& x);

}  // namespace qdyn
