#include "qdyn/qea/tensor.hpp"

namespace qdyn {

void TensorElt::add(const NormalMonomial& a, const NormalMonomial& b, const RatFun& c) {
  if (c.is_zero()) return;
  auto [it, inserted] = terms_.try_emplace(Key{a, b}, c);
  if (!inserted) {
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

TensorElt& TensorElt::operator+=(const TensorElt& o) {
  for (const auto& [k, c] : o.terms_) add(k.first, k.second, c);
  return *this;
}

TensorElt& TensorElt::operator-=(const TensorElt& o) {
  for (const auto& [k, c] : o.terms_) add(k.first, k.second, -c);
  return *this;
}

TensorElt TensorElt::scaled(const RatFun& c) const {
  TensorElt r;
  if (c.is_zero()) return r;
  for (const auto& [k, x] : terms_) r.terms_.emplace(k, x * c);
  return r;
}

bool operator==(const TensorElt& a, const TensorElt& b) {
  if (a.terms_.size() != b.terms_.size()) return false;
  auto i = a.terms_.begin();
  auto j = b.terms_.begin();
  for (; i != a.terms_.end(); ++i, ++j)
    if (!(i->first == j->first) || !(i->second == j->second)) return false;
  return true;
}

TensorElt tensor(const AlgElt& a, const AlgElt& b) {
  TensorElt t;
  for (const auto& [ma, ca] : a.terms())
    for (const auto& [mb, cb] : b.terms()) t.add(ma, mb, ca * cb);
  return t;
}

TensorElt multiply(Algebra& alg, const TensorElt& a, const TensorElt& b) {
  TensorElt out;
  for (const auto& [ka, ca] : a.terms())
    for (const auto& [kb, cb] : b.terms()) {
      AlgElt left = alg.multiply_monomials(ka.first, kb.first);
      AlgElt right = alg.multiply_monomials(ka.second, kb.second);
      RatFun c = ca * cb;
      for (const auto& [ml, cl] : left.terms())
        for (const auto& [mr, cr] : right.terms()) out.add(ml, mr, c * cl * cr);
    }
  return out;
}

TensorElt tensor_pow(Algebra& alg, const TensorElt& a, int k) {
  TensorElt r = tensor(alg.one(), alg.one());
  for (int i = 0; i < k; ++i) r = multiply(alg, r, a);
  return r;
}

TensorElt coproduct(Algebra& alg, const Expr& x) {
  switch (x.kind) {
    case Expr::Kind::Scalar: return tensor(alg.scalar(x.scalar), alg.one());
    case Expr::Kind::E: {
      if (!x.root.simple()) return coproduct(alg, root_e(x.root));
      CartanWeight w = CartanWeight::of_root(alg.rank(), x.root);
      return tensor(alg.E(x.root), alg.one()) + tensor(alg.K(w), alg.E(x.root));
    }
    case Expr::Kind::F: {
      if (!x.root.simple()) return coproduct(alg, root_f(x.root));
      CartanWeight w = CartanWeight::of_root(alg.rank(), x.root);
      return tensor(alg.F(x.root), alg.K(-w)) + tensor(alg.one(), alg.F(x.root));
    }
    case Expr::Kind::TE: return coproduct(alg, root_e_tilde(x.root));
    case Expr::Kind::K: return tensor(alg.K(x.weight), alg.K(x.weight));
    case Expr::Kind::Sum: {
      TensorElt s;
      for (const auto& a : x.args) s += coproduct(alg, a);
      return s;
    }
    case Expr::Kind::Prod: {
      TensorElt p = tensor(alg.one(), alg.one());
      for (const auto& a : x.args) p = multiply(alg, p, coproduct(alg, a));
      return p;
    }
    case Expr::Kind::QBr: {
      TensorElt a = coproduct(alg, x.args[0]), b = coproduct(alg, x.args[1]);
      return multiply(alg, a, b) - multiply(alg, b, a).scaled(x.scalar);
    }
  }
  return {};
}

AlgElt counit_left(Algebra& alg, const TensorElt& t) {
  AlgElt out;
  for (const auto& [k, c] : t.terms()) {
    RatFun e = alg.counit(AlgElt(k.first, RatFun(1)));
    if (!e.is_zero()) out.add(k.second, c * e);
  }
  return out;
}

AlgElt counit_right(Algebra& alg, const TensorElt& t) {
  AlgElt out;
  for (const auto& [k, c] : t.terms()) {
    RatFun e = alg.counit(AlgElt(k.second, RatFun(1)));
    if (!e.is_zero()) out.add(k.first, c * e);
  }
  return out;
}

AlgElt antipode_left(Algebra& alg, const TensorElt& t) {
  AlgElt out;
  for (const auto& [k, c] : t.terms())
    out += alg.multiply(alg.antipode(AlgElt(k.first, c)), AlgElt(k.second, RatFun(1)));
  return out;
}

AlgElt antipode_right(Algebra& alg, const TensorElt& t) {
  AlgElt out;
  for (const auto& [k, c] : t.terms())
    out += alg.multiply(AlgElt(k.first, c), alg.antipode(AlgElt(k.second, RatFun(1))));
  return out;
}

}  // namespace qdyn
