#pragma once

#include "qdyn/qea/expr.hpp"

#include <map>
#include <utility>

namespace qdyn {

class TensorElt {
 public:
  using Key = std::pair<NormalMonomial, NormalMonomial>;
  using Terms = std::map<Key, RatFun>;

  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  std::size_t size() const { return terms_.size(); }
  void add(const NormalMonomial& a, const NormalMonomial& b, const RatFun& c);

  TensorElt& operator+=(const TensorElt& o);
  TensorElt& operator-=(const TensorElt& o);
  friend TensorElt operator+(TensorElt a, const TensorElt& b) { return a += b; }
  friend TensorElt operator-(TensorElt a, const TensorElt& b) { return a -= b; }
  TensorElt scaled(const RatFun& c) const;
  friend bool operator==(const TensorElt& a, const TensorElt& b);

 private:
  Terms terms_;
};

TensorElt tensor(const AlgElt& a, const AlgElt& b);
TensorElt multiply(Algebra& alg, const TensorElt& a, const TensorElt& b);
TensorElt tensor_pow(Algebra& alg, const TensorElt& a, int k);

// Coproduct on simple generators and Cartan elements, extended multiplicatively along the
// expression (composite root vectors go through their defining brackets).
TensorElt coproduct(Algebra& alg, const Expr& x);

// (counit x id) and (id x counit)
AlgElt counit_left(Algebra& alg, const TensorElt& t);
AlgElt counit_right(Algebra& alg, const TensorElt& t);
// m o (antipode x id) and m o (id x antipode)
AlgElt antipode_left(Algebra& alg, const TensorElt& t);
AlgElt antipode_right(Algebra& alg, const TensorElt& t);

}  // namespace qdyn
