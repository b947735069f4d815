#include "qdyn/star/qplane.hpp"

#include "qdyn/exact/qnumbers.hpp"
#include "qdyn/exact/series.hpp"
#include "qdyn/star/star.hpp"

namespace qdyn {

QPlaneElt QPlaneElt::generator(int n, int i) {
  ExpVec k(static_cast<std::size_t>(n), 0);
  k.at(static_cast<std::size_t>(i - 1)) = 1;
  return monomial(k);
}

QPlaneElt QPlaneElt::monomial(const ExpVec& k, const RatFun& c) {
  QPlaneElt e(static_cast<int>(k.size()));
  e.add(k, c);
  return e;
}

void QPlaneElt::add(const ExpVec& k, const RatFun& c) {
  if (c.is_zero()) return;
  auto [it, ins] = terms_.try_emplace(k, c);
  if (!ins) {
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

RatFun QPlaneElt::coeff(const ExpVec& k) const {
  auto it = terms_.find(k);
  return it == terms_.end() ? RatFun(0) : it->second;
}

QPlaneElt& QPlaneElt::operator+=(const QPlaneElt& o) {
  for (const auto& [k, c] : o.terms_) add(k, c);
  return *this;
}

QPlaneElt operator*(const QPlaneElt& a, const QPlaneElt& b) {
  QPlaneElt r(a.n_);
  for (const auto& [ka, ca] : a.terms_)
    for (const auto& [kb, cb] : b.terms_) {
      // D_i^{b_i} moves left past D_j^{a_j} for every j < i
      int e = 0;
      for (std::size_t i = 0; i < kb.size(); ++i)
        for (std::size_t j = 0; j < i; ++j) e += ka[j] * kb[i];
      ExpVec k = ka;
      for (std::size_t i = 0; i < k.size(); ++i) k[i] += kb[i];
      r.add(k, ca * cb * qpow(2 * e));
    }
  return r;
}

QPlaneElt QPlaneElt::pow(int m) const {
  QPlaneElt r = monomial(ExpVec(static_cast<std::size_t>(n_), 0));
  for (int i = 0; i < m; ++i) r = r * *this;
  return r;
}

bool operator==(const QPlaneElt& a, const QPlaneElt& b) {
  if (a.terms_.size() != b.terms_.size()) return false;
  for (auto ia = a.terms_.begin(), ib = b.terms_.begin(); ia != a.terms_.end(); ++ia, ++ib)
    if (ia->first != ib->first || !(ia->second == ib->second)) return false;
  return true;
}

RatFun q_multinomial(const ExpVec& m) {
  RatFun r = qhatfact(total_degree(m));
  for (int mi : m) r /= qhatfact(mi);
  return r;
}

bool q_binomial_abstract(int n, int m) {
  QPlaneElt sum(n);
  for (int i = 1; i <= n; ++i) sum += QPlaneElt::generator(n, i);
  QPlaneElt rhs(n);
  for (const auto& k : exponent_vectors(n, m)) rhs.add(k, q_multinomial(k));
  return sum.pow(m) == rhs;
}

bool q_binomial_concrete(ParabolicVerma& v, int m) {
  Algebra& alg = v.algebra();
  int n = v.rank();
  std::vector<TensorElt> D;
  TensorElt sum;
  for (int i = 1; i <= n; ++i) {
    D.push_back(d_tensor(v, i));
    sum += D.back();
  }
  TensorElt rhs;
  for (const auto& k : exponent_vectors(n, m)) {
    TensorElt word = tensor(alg.one(), alg.one());
    for (int i = n; i >= 1; --i)
      for (int c = 0; c < k[static_cast<std::size_t>(i - 1)]; ++c) word = multiply(alg, word, D[static_cast<std::size_t>(i - 1)]);
    rhs += word.scaled(q_multinomial(k));
  }
  return tensor_pow(alg, sum, m) == rhs;
}

RatFun twist_coeff(int m) {
  RatFun c = Lpow(m) * qpow(m - m * m) / qfact(m);
  if (m % 2) c = -c;
  for (int j = 0; j < m; ++j) c /= qbracket_weight(j);
  return c;
}

std::map<ExpVec, RatFun> twist_element(int M, int n) {
  std::map<ExpVec, RatFun> out;
  for (int d = 0; d <= M; ++d) {
    RatFun c = twist_coeff(d);
    for (const auto& k : exponent_vectors(n, d)) out.emplace(k, c * q_multinomial(k));
  }
  return out;
}

InverseFormResult inverse_form_check(int M, int n, ParabolicVerma* oracle) {
  InverseFormResult res;
  for (const auto& [m, c] : twist_element(M, n)) {
    RatFun pairing;
    if (oracle) {
      VermaVector u, w;
      u.side = VermaVector::Side::minus;
      u.add(m, RatFun(1));
      w.basis = VermaVector::Basis::tilde;
      w.add(m, RatFun(1));
      pairing = oracle->pairing(u, w);
    } else {
      pairing = closed_form_coeff(m);
    }
    ++res.checked;
    RatFun prod = c * pairing;
    if (!(prod == RatFun(1))) {
      std::string ms;
      for (int x : m) ms += std::to_string(x) + ",";
      res.ok = false;
      res.witness = "m=(" + ms + ") coefficient*pairing = " + prod.str();
      return res;
    }
  }
  return res;
}

RatFun twist_coeff_classical(int m) {
  RatFun lim = classical_limit(twist_coeff(m));
  return lim.substitute(Sym::lambda, RatFun::var(Sym::lambda) / RatFun::var(Sym::t));
}

RatFun classical_star_coeff(int m) { return star_coeff(std::vector<int>{m}); }

}  // namespace qdyn
