#include "qdyn/exact/qnumbers.hpp"

#include <cstdlib>
#include <stdexcept>

namespace qdyn {

RatFun qpow(int k) { return RatFun(MPoly::var(Sym::q, k)); }
RatFun Lpow(int k) { return RatFun(MPoly::var(Sym::L, k)); }

RatFun qint(int k) {
  int a = std::abs(k);
  MPoly r;
  for (int i = 0; i < a; ++i) r += MPoly::var(Sym::q, a - 1 - 2 * i);
  return RatFun(k < 0 ? -r : r);
}

RatFun qhat(int k) {
  if (k < 0) throw std::invalid_argument("qhat of a negative integer");
  MPoly r;
  for (int i = 0; i < k; ++i) r += MPoly::var(Sym::q, 2 * i);
  return RatFun(r);
}

RatFun qfact(int k) {
  if (k < 0) throw std::invalid_argument("qfact of a negative integer");
  RatFun r(1);
  for (int j = 1; j <= k; ++j) r *= qint(j);
  return r;
}

RatFun qhatfact(int k) {
  if (k < 0) throw std::invalid_argument("qhatfact of a negative integer");
  RatFun r(1);
  for (int j = 1; j <= k; ++j) r *= qhat(j);
  return r;
}

RatFun qbracket_weight(int j) {
  Exps a{}, b{};
  a[static_cast<int>(Sym::L)] = 1;
  a[static_cast<int>(Sym::q)] = -j;
  b[static_cast<int>(Sym::L)] = -1;
  b[static_cast<int>(Sym::q)] = j;
  MPoly num = MPoly::monomial(a, Rat(1)) - MPoly::monomial(b, Rat(1));
  return RatFun::fraction(num, MPoly::var(Sym::q) - MPoly::var(Sym::q, -1));
}

RatFun zq(int m, int shift) {
  if (m < 0) throw std::invalid_argument("zq with negative m");
  if (m == 0) return RatFun(0);
  return qint(m) * qbracket_weight(shift + m - 1);
}

}  // namespace qdyn
