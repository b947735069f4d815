#include "qdyn/exact/rat.hpp"

#include <functional>

namespace qdyn {

Rat::Rat(long num, long den) {
  if (den == 0) throw DenominatorZero("rational with zero denominator");
  v_ = mpq_class(num, den);
  v_.canonicalize();
}

Rat Rat::parse(std::string_view text) {
  std::string s(text);
  if (s.empty()) throw std::invalid_argument("empty rational literal");
  mpq_class v;
  if (v.set_str(s, 10) != 0) throw std::invalid_argument("bad rational literal: " + s);
  if (v.get_den() == 0) throw DenominatorZero("rational with zero denominator");
  v.canonicalize();
  return Rat(v);
}

long Rat::to_long() const {
  if (!is_integer() || !v_.get_num().fits_slong_p())
    throw std::range_error("rational is not a machine integer: " + str());
  return v_.get_num().get_si();
}

Rat& Rat::operator/=(const Rat& o) {
  if (o.is_zero()) throw DenominatorZero("division by zero rational");
  v_ /= o.v_;
  return *this;
}

Rat Rat::pow(long e) const {
  if (e < 0) {
    if (is_zero()) throw DenominatorZero("zero to a negative power");
    return Rat(1) / pow(-e);
  }
  mpz_class n, d;
  mpz_pow_ui(n.get_mpz_t(), v_.get_num_mpz_t(), static_cast<unsigned long>(e));
  mpz_pow_ui(d.get_mpz_t(), v_.get_den_mpz_t(), static_cast<unsigned long>(e));
  return Rat(mpq_class(n, d));
}

std::size_t Rat::hash() const {
  std::size_t h1 = std::hash<std::string>{}(v_.get_num().get_str(16));
  std::size_t h2 = std::hash<std::string>{}(v_.get_den().get_str(16));
  return h1 ^ (h2 * 0x9e3779b97f4a7c15ULL);
}

Rat factorial(long k) {
  if (k < 0) throw std::invalid_argument("factorial of a negative integer");
  mpz_class r;
  mpz_fac_ui(r.get_mpz_t(), static_cast<unsigned long>(k));
  return Rat(r);
}

Rat binomial(long n, long k) {
  if (k < 0 || n < 0 || k > n) return Rat(0);
  mpz_class r;
  mpz_bin_uiui(r.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
  return Rat(r);
}

}  // namespace qdyn
