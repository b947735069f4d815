#pragma once

#include "qdyn/exact/mpoly.hpp"

#include <string>
#include <vector>

namespace qdyn {

// Rational function num / (prod atoms^mult). Atoms are primitive polynomials with positive
// leading coefficient and no monomial factor in q or L; every Laurent monomial and every
// rational constant lives in the numerator.
class RatFun {
 public:
  struct Factor {
    MPoly atom;
    int mult = 1;
    friend bool operator==(const Factor&, const Factor&) = default;
  };

  RatFun() = default;
  RatFun(int c) : num_(Rat(c)) {}
  RatFun(Rat c) : num_(std::move(c)) {}
  RatFun(MPoly p) : num_(std::move(p)) {}
  static RatFun var(Sym s, int power = 1);
  static RatFun fraction(const MPoly& num, const MPoly& den);

  const MPoly& num() const { return num_; }
  const std::vector<Factor>& den_factors() const { return den_; }
  MPoly den() const;

  bool is_zero() const { return num_.is_zero(); }
  bool is_polynomial() const { return den_.empty(); }
  bool is_constant() const { return den_.empty() && num_.is_constant(); }
  // A monomial unit: single-term numerator, no denominator, only Laurent symbols.
  bool is_unit_monomial() const;

  RatFun operator-() const;
  RatFun& operator+=(const RatFun& o);
  RatFun& operator-=(const RatFun& o);
  RatFun& operator*=(const RatFun& o);
  RatFun& operator/=(const RatFun& o);
  friend RatFun operator+(RatFun a, const RatFun& b) { return a += b; }
  friend RatFun operator-(RatFun a, const RatFun& b) { return a -= b; }
  friend RatFun operator*(RatFun a, const RatFun& b) { return a *= b; }
  friend RatFun operator/(RatFun a, const RatFun& b) { return a /= b; }

  RatFun inverse() const;
  RatFun pow(int e) const;

  Rat eval(const Assignment& a) const;
  RatFun substitute(Sym s, const RatFun& value) const;

  friend bool operator==(const RatFun& a, const RatFun& b);

  std::string str() const;

 private:
  MPoly num_;
  std::vector<Factor> den_;  // sorted by atom

  void absorb_denominator(const MPoly& p, int mult);
  void cancel();
};

// Substitute every symbol of a polynomial by a rational function.
RatFun substitute_poly(const MPoly& p, Sym s, const RatFun& value);

}  // namespace qdyn
