#pragma once

#include "qdyn/verma/verma.hpp"

#include <map>
#include <string>
#include <vector>

namespace qdyn {

// Combinations of ordered monomials D_n^{k_n} ... D_1^{k_1}, with D_j D_i = q^2 D_i D_j for j < i.
class QPlaneElt {
 public:
  explicit QPlaneElt(int n) : n_(n) {}
  static QPlaneElt generator(int n, int i);
  static QPlaneElt monomial(const ExpVec& k, const RatFun& c = RatFun(1));

  int rank() const { return n_; }
  const std::map<ExpVec, RatFun>& terms() const { return terms_; }
  void add(const ExpVec& k, const RatFun& c);
  RatFun coeff(const ExpVec& k) const;

  QPlaneElt& operator+=(const QPlaneElt& o);
  friend QPlaneElt operator+(QPlaneElt a, const QPlaneElt& b) { return a += b; }
  friend QPlaneElt operator*(const QPlaneElt& a, const QPlaneElt& b);
  QPlaneElt pow(int m) const;
  friend bool operator==(const QPlaneElt& a, const QPlaneElt& b);

 private:
  int n_;
  std::map<ExpVec, RatFun> terms_;
};

// m^! / (m_1^! ... m_n^!)
RatFun q_multinomial(const ExpVec& m);

bool q_binomial_abstract(int n, int m);
// Same expansion for D_i = y~_i (x) x~_i inside U (x) U (Cartan part of y~_i only; the scalar
// L-power is central and factors out of both sides).
bool q_binomial_concrete(ParabolicVerma& v, int m);

// (-1)^m q^{(lambda+1)m - m^2} / ([m]_q! prod_{j<m} [lambda - j]_q)
RatFun twist_coeff(int m);

// Coefficient of y~^m (x) x~^m (y~^m = y~_n^{m_n}...y~_1^{m_1}) in the twist truncated at |m| <= M.
std::map<ExpVec, RatFun> twist_element(int M, int n);

struct InverseFormResult {
  bool ok = true;
  std::string witness;
  int checked = 0;
};
// coefficient * closed_form_coeff(m) == 1 for all |m| <= M; with a module, the pairing is
// recomputed by the tilde-basis oracle instead of the closed form.
InverseFormResult inverse_form_check(int M, int n, ParabolicVerma* oracle = nullptr);

// q -> 1 with L = q^lambda, then lambda -> lambda/t
RatFun twist_coeff_classical(int m);
// (-t)^m / (m! prod_{j<m} (lambda - j t))
RatFun classical_star_coeff(int m);

}  // namespace qdyn
