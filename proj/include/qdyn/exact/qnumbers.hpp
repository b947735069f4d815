#pragma once

#include "qdyn/exact/ratfun.hpp"

namespace qdyn {

// [k]_q = (q^k - q^-k)/(q - q^-1)
RatFun qint(int k);
// k^ = q^(k-1)[k]_q = 1 + q^2 + ... + q^(2k-2)
RatFun qhat(int k);
RatFun qfact(int k);
RatFun qhatfact(int k);
// [lambda - j]_q with L = q^lambda
RatFun qbracket_weight(int j);
// Z_q[m, z] = [m]_q [z - m + 1]_q for z = lambda - shift
RatFun zq(int m, int shift = 0);

// Convenience: q^k, L^k as rational functions.
RatFun qpow(int k);
RatFun Lpow(int k);

}  // namespace qdyn
