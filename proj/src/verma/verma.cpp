#include "qdyn/verma/verma.hpp"

#include "qdyn/exact/qnumbers.hpp"

#include <functional>
#include <numeric>

namespace qdyn {

int total_degree(const ExpVec& m) { return std::accumulate(m.begin(), m.end(), 0); }

std::vector<ExpVec> exponent_vectors(int n, int d) {
  std::vector<ExpVec> out;
  ExpVec cur(static_cast<std::size_t>(n), 0);
  std::function<void(int, int)> rec = [&](int pos, int left) {
    if (pos == n - 1) {
      cur[static_cast<std::size_t>(pos)] = left;
      out.push_back(cur);
      return;
    }
    for (int v = left; v >= 0; --v) {
      cur[static_cast<std::size_t>(pos)] = v;
      rec(pos + 1, left - v);
    }
  };
  if (n >= 1) rec(0, d);
  std::sort(out.begin(), out.end());
  return out;
}

void VermaVector::add(const ExpVec& m, const RatFun& c) {
  if (c.is_zero()) return;
  auto [it, inserted] = terms.try_emplace(m, c);
  if (!inserted) {
    it->second += c;
    if (it->second.is_zero()) terms.erase(it);
  }
}

RatFun VermaVector::coeff(const ExpVec& m) const {
  auto it = terms.find(m);
  return it == terms.end() ? RatFun(0) : it->second;
}

// ---- eta -------------------------------------------------------------------------

namespace {

// Solves A x = b exactly; throws SingularSystem if A is not invertible.
std::vector<Rat> solve(std::vector<std::vector<Rat>> A, std::vector<Rat> b) {
  std::size_t n = A.size();
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t piv = col;
    while (piv < n && A[piv][col].is_zero()) ++piv;
    if (piv == n) throw SingularSystem("linear system for eta is singular");
    std::swap(A[piv], A[col]);
    std::swap(b[piv], b[col]);
    for (std::size_t r = 0; r < n; ++r) {
      if (r == col || A[r][col].is_zero()) continue;
      Rat f = A[r][col] / A[col][col];
      for (std::size_t c = col; c < n; ++c) A[r][c] -= f * A[col][c];
      b[r] -= f * b[col];
    }
  }
  std::vector<Rat> x(n);
  for (std::size_t i = 0; i < n; ++i) x[i] = b[i] / A[i][i];
  return x;
}

Rat gram(int k, int j) { return Rat(k == j ? 2 : 1); }

}  // namespace

EtaData eta_compute(int n) {
  if (n < 1) throw RankError("rank must be at least 1");
  auto N = static_cast<std::size_t>(n);
  // unknown B[a][k] sits at a*n + k; (eta_a, beta_b) = sum_k B[a][k] (beta_k, beta_b)
  auto row_for = [&](int a, int b, Rat s, std::vector<Rat>& row) {
    for (int k = 0; k < n; ++k) row[static_cast<std::size_t>(a * n + k)] += s * gram(k, b);
  };
  std::vector<std::vector<Rat>> A;
  std::vector<Rat> rhs;
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      std::vector<Rat> row(N * N);
      if (j < i) {
        row_for(j, i, Rat(1), row);
        row_for(i, j, Rat(-1), row);
        rhs.push_back(Rat(-2));
      } else {
        row_for(j, i, Rat(1), row);  // (eta_j, beta_i) = 0 for j >= i
        rhs.push_back(Rat(0));
      }
      A.push_back(std::move(row));
    }
  auto x = solve(A, rhs);
  EtaData d;
  d.B.assign(N, std::vector<Rat>(N));
  for (std::size_t a = 0; a < N; ++a) {
    CartanWeight w = CartanWeight::zero(n);
    for (std::size_t k = 0; k < N; ++k) {
      d.B[a][k] = x[a * N + k];
      w.c[k] = x[a * N + k];
    }
    d.eta.push_back(w);
  }
  // re-substitution
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      Rat lhs = inner(d.eta[static_cast<std::size_t>(i)], CartanWeight::of_root(n, PosRoot{1, j + 2}));
      if (i >= j && !lhs.is_zero()) throw SingularSystem("eta re-substitution failed");
      if (j < i) {
        Rat a = inner(d.eta[static_cast<std::size_t>(j)], CartanWeight::of_root(n, PosRoot{1, i + 2}));
        if (a != Rat(-2) + lhs) throw SingularSystem("eta re-substitution failed");
      }
    }
  return d;
}

RatFun closed_form_coeff(const ExpVec& m) {
  int d = total_degree(m);
  RatFun r = qpow((d * d - d) / 2) * Lpow(-d);
  if (d % 2) r = -r;
  for (int mi : m) r *= qhatfact(mi);
  for (int j = 0; j < d; ++j) r *= qbracket_weight(j);
  return r;
}

// ---- module -------------------------------------------------------------------------

ParabolicVerma::ParabolicVerma(Algebra& alg) : alg_(alg), eta_(eta_compute(alg.rank())) {}

AlgElt ParabolicVerma::x_tilde(int i) { return evaluate(alg_, root_e_tilde(nil_root(i))); }

AlgElt ParabolicVerma::tilde_y_body(int i) {
  return alg_.multiply(y(i), alg_.K(eta_.eta[static_cast<std::size_t>(i - 1)]));
}

AlgElt ParabolicVerma::y_word(const ExpVec& m) {
  AlgElt w = alg_.one();
  for (int i = rank(); i >= 1; --i)
    for (int k = 0; k < m[static_cast<std::size_t>(i - 1)]; ++k) w = alg_.multiply(w, y(i));
  return w;
}

AlgElt ParabolicVerma::x_tilde_word(const ExpVec& k) {
  AlgElt w = alg_.one();
  for (int i = rank(); i >= 1; --i) {
    if (k[static_cast<std::size_t>(i - 1)] == 0) continue;
    AlgElt xt = x_tilde(i);
    for (int c = 0; c < k[static_cast<std::size_t>(i - 1)]; ++c) w = alg_.multiply(w, xt);
  }
  return w;
}

NormalMonomial ParabolicVerma::ascending(const ExpVec& m) const {
  NormalMonomial nm = alg_.unit_monomial();
  for (int i = 1; i <= rank(); ++i)
    nm.f[static_cast<std::size_t>(alg_.roots().index(nil_root(i)))] = static_cast<std::uint16_t>(m[static_cast<std::size_t>(i - 1)]);
  return nm;
}

RatFun ParabolicVerma::y_factor(const ExpVec& m) {
  if (auto it = y_order_factor_.find(m); it != y_order_factor_.end()) return it->second;
  AlgElt w = y_word(m);
  if (w.size() != 1 || !(w.terms().begin()->first == ascending(m)))
    throw std::logic_error("nilradical word is not a single normal monomial");
  return y_order_factor_.emplace(m, w.terms().begin()->second).first->second;
}

VermaVector ParabolicVerma::highest() const {
  VermaVector v;
  v.add(ExpVec(static_cast<std::size_t>(rank()), 0), RatFun(1));
  return v;
}

VermaVector ParabolicVerma::basis_vector(const ExpVec& m) const {
  VermaVector v;
  v.add(m, RatFun(1));
  return v;
}

VermaVector ParabolicVerma::act_monomial(const AlgElt& u, const ExpVec& m, const Rat& extra_L) {
  VermaVector out;
  AlgElt prod = alg_.multiply(u, AlgElt(ascending(m), RatFun(1)));
  std::vector<int> nil_index;
  for (int i = 1; i <= rank(); ++i) nil_index.push_back(alg_.roots().index(nil_root(i)));
  for (const auto& [t, c] : prod.terms()) {
    if (std::any_of(t.e.begin(), t.e.end(), [](auto x) { return x != 0; })) continue;
    ExpVec mm(static_cast<std::size_t>(rank()), 0);
    int nil_total = 0;
    for (int i = 0; i < rank(); ++i) {
      mm[static_cast<std::size_t>(i)] = t.f[static_cast<std::size_t>(nil_index[static_cast<std::size_t>(i)])];
      nil_total += mm[static_cast<std::size_t>(i)];
    }
    int all_total = std::accumulate(t.f.begin(), t.f.end(), 0);
    if (all_total != nil_total) continue;  // Levi lowering operators kill v_lambda
    int le = integral_exponent(eps1_pairing(t.k) + extra_L, "character of v_lambda");
    out.add(mm, c * Lpow(le) / y_factor(mm));
  }
  return out;
}

VermaVector ParabolicVerma::act(const AlgElt& u, const VermaVector& v) {
  if (v.side != VermaVector::Side::plus || v.basis != VermaVector::Basis::plain)
    throw std::invalid_argument("act expects a plus-side vector in the plain basis");
  VermaVector out;
  for (const auto& [m, c] : v.terms) {
    RatFun s = c * y_factor(m);
    for (const auto& [mm, d] : act_monomial(u, m, Rat(0)).terms) out.add(mm, s * d);
  }
  return out;
}

VermaVector ParabolicVerma::tilde_vector(const ExpVec& m) {
  AlgElt w = alg_.one();
  Rat extra(0);
  for (int i = rank(); i >= 1; --i) {
    int mi = m[static_cast<std::size_t>(i - 1)];
    if (mi == 0) continue;
    AlgElt body = tilde_y_body(i);
    for (int k = 0; k < mi; ++k) w = alg_.multiply(w, body);
    extra += Rat(mi) * tilde_scalar(i);
  }
  return act_monomial(w, ExpVec(static_cast<std::size_t>(rank()), 0), extra);
}

const VermaVector& ParabolicVerma::gamma_x_on(int i, const ExpVec& m) {
  auto key = std::make_pair(i, m);
  if (auto it = gamma_x_action_.find(key); it != gamma_x_action_.end()) return it->second;
  auto g = gamma_x_.find(i);
  if (g == gamma_x_.end()) g = gamma_x_.emplace(i, alg_.antipode(x_tilde(i))).first;
  return gamma_x_action_.emplace(key, act(g->second, basis_vector(m))).first->second;
}

std::map<ExpVec, RatFun> ParabolicVerma::pairing_row(const ExpVec& m) {
  int n = rank(), d = total_degree(m);
  std::map<ExpVec, RatFun> row;
  ExpVec zero(static_cast<std::size_t>(n), 0), k(static_cast<std::size_t>(n), 0);
  auto apply = [&](int i, const VermaVector& v) {
    VermaVector out;
    for (const auto& [mm, c] : v.terms)
      for (const auto& [m2, c2] : gamma_x_on(i, mm).terms) out.add(m2, c * c2);
    return out;
  };
  // gamma(x~^k) = gamma(x~_1)^{k_1} ... gamma(x~_n)^{k_n}: x~_n acts first.
  std::function<void(int, VermaVector, int)> rec = [&](int i, VermaVector v, int left) {
    if (i == 1) {
      for (int c = 0; c < left && !v.is_zero(); ++c) v = apply(1, v);
      k[0] = left;
      row[k] = v.coeff(zero);
      return;
    }
    for (int ki = 0; ki <= left; ++ki) {
      k[static_cast<std::size_t>(i - 1)] = ki;
      rec(i - 1, v, left - ki);
      if (ki < left) v = apply(i, v);
    }
    k[static_cast<std::size_t>(i - 1)] = 0;
  };
  rec(n, basis_vector(m), d);
  return row;
}

RatFun ParabolicVerma::pairing_basis(const ExpVec& k, const ExpVec& m) {
  if (total_degree(k) != total_degree(m)) return RatFun(0);
  VermaVector v = basis_vector(m);
  for (int i = rank(); i >= 1; --i)
    for (int c = 0; c < k[static_cast<std::size_t>(i - 1)]; ++c) {
      VermaVector out;
      for (const auto& [mm, x] : v.terms)
        for (const auto& [m2, y2] : gamma_x_on(i, mm).terms) out.add(m2, x * y2);
      v = std::move(out);
    }
  return v.coeff(ExpVec(static_cast<std::size_t>(rank()), 0));
}

RatFun ParabolicVerma::pairing_via_algebra(const ExpVec& k, const ExpVec& m) {
  AlgElt p = alg_.multiply(alg_.antipode(x_tilde_word(k)), y_word(m));
  RatFun s(0);
  for (const auto& [t, c] : p.terms()) {
    bool nil = std::any_of(t.f.begin(), t.f.end(), [](auto x) { return x != 0; }) ||
               std::any_of(t.e.begin(), t.e.end(), [](auto x) { return x != 0; });
    if (!nil) s += c * Lpow(integral_exponent(eps1_pairing(t.k), "character of v_lambda"));
  }
  return s;
}

RatFun ParabolicVerma::pairing(const VermaVector& u, const VermaVector& w) {
  if (u.side != VermaVector::Side::minus || w.side != VermaVector::Side::plus)
    throw std::invalid_argument("pairing expects (minus, plus) vectors");
  if (u.basis != VermaVector::Basis::plain) throw std::invalid_argument("minus side uses the x~ basis");
  VermaVector plain;
  for (const auto& [m, c] : w.terms) {
    if (w.basis == VermaVector::Basis::plain) {
      plain.add(m, c);
    } else {
      for (const auto& [mm, d] : tilde_vector(m).terms) plain.add(mm, c * d);
    }
  }
  RatFun s(0);
  for (const auto& [k, a] : u.terms)
    for (const auto& [m, b] : plain.terms)
      if (total_degree(k) == total_degree(m)) s += a * b * pairing_basis(k, m);
  return s;
}

TensorElt d_tensor(ParabolicVerma& v, int i) { return tensor(v.tilde_y_body(i), v.x_tilde(i)); }

std::vector<std::pair<int, int>> quantum_plane_failures(ParabolicVerma& v) {
  Algebra& alg = v.algebra();
  std::vector<std::pair<int, int>> bad;
  for (int i = 1; i <= v.rank(); ++i)
    for (int j = 1; j < i; ++j) {
      TensorElt di = d_tensor(v, i), dj = d_tensor(v, j);
      if (!(multiply(alg, dj, di) == multiply(alg, di, dj).scaled(qpow(2)))) bad.emplace_back(j, i);
    }
  return bad;
}

std::vector<std::pair<int, int>> plain_tensor_failures(ParabolicVerma& v) {
  Algebra& alg = v.algebra();
  std::vector<std::pair<int, int>> bad;
  for (int i = 1; i <= v.rank(); ++i)
    for (int j = 1; j < i; ++j) {
      TensorElt pi = tensor(v.y(i), v.x_tilde(i)), pj = tensor(v.y(j), v.x_tilde(j));
      if (!(multiply(alg, pj, pi) == multiply(alg, pi, pj))) bad.emplace_back(j, i);
    }
  return bad;
}

}  // namespace qdyn
