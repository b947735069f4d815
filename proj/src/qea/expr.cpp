#include "qdyn/qea/expr.hpp"

#include "qdyn/exact/qnumbers.hpp"

namespace qdyn {

Expr Expr::number(const RatFun& c) {
  Expr x;
  x.kind = Kind::Scalar;
  x.scalar = c;
  return x;
}

namespace {
Expr gen(Expr::Kind k, const PosRoot& r) {
  Expr x;
  x.kind = k;
  x.root = r;
  return x;
}
}  // namespace

Expr Expr::e(const PosRoot& r) { return gen(Kind::E, r); }
Expr Expr::f(const PosRoot& r) { return gen(Kind::F, r); }
Expr Expr::te(const PosRoot& r) { return gen(Kind::TE, r); }

Expr Expr::k(const CartanWeight& w) {
  Expr x;
  x.kind = Kind::K;
  x.weight = w;
  return x;
}

Expr Expr::sum(std::vector<Expr> xs) {
  Expr x;
  x.kind = Kind::Sum;
  x.args = std::move(xs);
  return x;
}

Expr Expr::prod(std::vector<Expr> xs) {
  Expr x;
  x.kind = Kind::Prod;
  x.args = std::move(xs);
  return x;
}

Expr Expr::qbr(Expr a, Expr b, const RatFun& s) {
  if (s.is_zero()) throw std::invalid_argument("q-bracket parameter must be nonzero");
  Expr x;
  x.kind = Kind::QBr;
  x.scalar = s;
  x.args = {std::move(a), std::move(b)};
  return x;
}

Expr operator+(Expr a, Expr b) { return Expr::sum({std::move(a), std::move(b)}); }
Expr operator-(Expr a, Expr b) {
  return Expr::sum({std::move(a), Expr::prod({Expr::number(RatFun(-1)), std::move(b)})});
}
Expr operator*(Expr a, Expr b) { return Expr::prod({std::move(a), std::move(b)}); }

namespace {
Expr nested_e(const PosRoot& r, const RatFun& a) {
  if (r.simple()) return Expr::e(r);
  return Expr::qbr(Expr::e(PosRoot{r.i, r.i + 1}), nested_e(PosRoot{r.i + 1, r.j}, a), a);
}
}  // namespace

Expr root_e(const PosRoot& r) { return nested_e(r, qpow(1)); }

Expr root_e_tilde(const PosRoot& r) {
  if (r.simple()) return Expr::e(r);
  return Expr::prod({Expr::number(qpow(2 * (r.height() - 1))), nested_e(r, qpow(-1))});
}

Expr root_f(const PosRoot& r) {
  if (r.simple()) return Expr::f(r);
  return Expr::qbr(Expr::f(PosRoot{r.j - 1, r.j}), root_f(PosRoot{r.i, r.j - 1}), qpow(-1));
}

AlgElt evaluate(Algebra& alg, const Expr& x) {
  switch (x.kind) {
    case Expr::Kind::Scalar: return alg.scalar(x.scalar);
    case Expr::Kind::E: return alg.E(x.root);
    case Expr::Kind::F: return alg.F(x.root);
    case Expr::Kind::TE: alg.roots().index(x.root); return evaluate(alg, root_e_tilde(x.root));
    case Expr::Kind::K: return alg.K(x.weight);
    case Expr::Kind::Sum: {
      AlgElt s;
      for (const auto& a : x.args) s += evaluate(alg, a);
      return s;
    }
    case Expr::Kind::Prod: {
      AlgElt p = alg.one();
      for (const auto& a : x.args) {
        if (a.kind == Expr::Kind::Scalar)
          p = p.scaled(a.scalar);
        else
          p = alg.multiply(p, evaluate(alg, a));
      }
      return p;
    }
    case Expr::Kind::QBr:
      return alg.qbracket(evaluate(alg, x.args[0]), evaluate(alg, x.args[1]), x.scalar);
  }
  return {};
}

}  // namespace qdyn
