#pragma once

#include "qdyn/exact/ratfun.hpp"

#include <vector>

namespace qdyn {

// Taylor coefficients c_0..c_order of f around x = 0 for a polynomial symbol x; the
// coefficients are rational functions of the remaining symbols.
std::vector<RatFun> series_coefficients(const RatFun& f, Sym x, int order);

// Limit q -> 1 with L = q^lambda and lambda kept formal. Throws std::domain_error on a pole.
RatFun classical_limit(const RatFun& f);

}  // namespace qdyn
