#pragma once

#include "qdyn/qea/tensor.hpp"

#include <map>
#include <stdexcept>
#include <vector>

namespace qdyn {

// Exponents of y_n ... y_1 (or x~_n ... x~_1); entry i-1 belongs to index i.
using ExpVec = std::vector<int>;
int total_degree(const ExpVec& m);
// All exponent vectors of length n with |m| = d, in lexicographic order.
std::vector<ExpVec> exponent_vectors(int n, int d);

class SingularSystem : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct VermaVector {
  enum class Side { plus, minus };
  enum class Basis { plain, tilde };
  Side side = Side::plus;
  Basis basis = Basis::plain;
  std::map<ExpVec, RatFun> terms;

  void add(const ExpVec& m, const RatFun& c);
  RatFun coeff(const ExpVec& m) const;
  bool is_zero() const { return terms.empty(); }
};

struct EtaData {
  std::vector<CartanWeight> eta;
  std::vector<std::vector<Rat>> B;  // eta_i = sum_k B[i][k] beta_k
};

// eta_i from (eta_j, beta_i) = -2 + (eta_i, beta_j) for j < i and (eta_i, beta_j) = 0 for i >= j.
EtaData eta_compute(int n);

// (-1)^|m| L^-|m| q^{(|m|^2-|m|)/2} prod m_i^! prod_{j<|m|} [lambda - j]_q
RatFun closed_form_coeff(const ExpVec& m);

// Scalar parabolic Verma module M+_lambda for the Levi gl(n) + gl(1) and its pairing with M-_{-lambda}.
class ParabolicVerma {
 public:
  explicit ParabolicVerma(Algebra& alg);

  Algebra& algebra() { return alg_; }
  int rank() const { return alg_.rank(); }
  const EtaData& eta() const { return eta_; }

  PosRoot nil_root(int i) const { return PosRoot{1, i + 1}; }
  AlgElt y(int i) { return alg_.F(nil_root(i)); }
  AlgElt x_tilde(int i);
  // y_i q^{h_{eta_i}}; the full tilde generator is L^{tilde_scalar(i)} times this.
  // With q^{-h_{eta_i}} instead the D_i would q-commute with q^{-2}.
  AlgElt tilde_y_body(int i);
  Rat tilde_scalar(int i) const { return -eps1_pairing(eta_.eta[static_cast<std::size_t>(i - 1)]); }

  // y_n^{m_n} ... y_1^{m_1} and x~_n^{k_n} ... x~_1^{k_1}
  AlgElt y_word(const ExpVec& m);
  AlgElt x_tilde_word(const ExpVec& k);

  VermaVector highest() const;
  VermaVector basis_vector(const ExpVec& m) const;
  // u acting on a plus-side vector in the plain basis.
  VermaVector act(const AlgElt& u, const VermaVector& v);
  // ỹ^m v_lambda expanded in the plain basis.
  VermaVector tilde_vector(const ExpVec& m);

  // <x~^k v_{-lambda}, y^m v_lambda>, by successive action of antipode(x~_i) on y^m v_lambda.
  RatFun pairing_basis(const ExpVec& k, const ExpVec& m);
  // Same value through the full algebra: antipode of the x~-word times the y-word, projected.
  RatFun pairing_via_algebra(const ExpVec& k, const ExpVec& m);
  // All <x~^k, y^m> for |k| = |m|, for one m.
  std::map<ExpVec, RatFun> pairing_row(const ExpVec& m);
  RatFun pairing(const VermaVector& u, const VermaVector& w);

 private:
  Algebra& alg_;
  EtaData eta_;
  std::map<ExpVec, RatFun> y_order_factor_;  // y-word = factor * ascending normal monomial
  std::map<int, AlgElt> gamma_x_;
  std::map<std::pair<int, ExpVec>, VermaVector> gamma_x_action_;

  RatFun y_factor(const ExpVec& m);
  VermaVector act_monomial(const AlgElt& u, const ExpVec& m, const Rat& extra_L);
  const VermaVector& gamma_x_on(int i, const ExpVec& m);
  NormalMonomial ascending(const ExpVec& m) const;
};

// Checks D_j D_i = q^2 D_i D_j (j < i) for D_i = ỹ_i (x) x~_i; returns the failing pairs.
std::vector<std::pair<int, int>> quantum_plane_failures(ParabolicVerma& v);
// Checks that y_i (x) x~_i commute pairwise; returns the failing pairs.
std::vector<std::pair<int, int>> plain_tensor_failures(ParabolicVerma& v);
TensorElt d_tensor(ParabolicVerma& v, int i);

}  // namespace qdyn
