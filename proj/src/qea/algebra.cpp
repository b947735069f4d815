#include "qdyn/qea/algebra.hpp"

#include "qdyn/exact/qnumbers.hpp"

#include <stdexcept>

namespace qdyn {

namespace {

int last_nonzero(const Exponents& x) {
  for (int i = static_cast<int>(x.size()) - 1; i >= 0; --i)
    if (x[static_cast<std::size_t>(i)]) return i;
  return -1;
}

int first_nonzero(const Exponents& x) {
  for (std::size_t i = 0; i < x.size(); ++i)
    if (x[i]) return static_cast<int>(i);
  return -1;
}

template <class Map>
void accumulate(Map& m, const typename Map::key_type& k, const RatFun& c) {
  if (c.is_zero()) return;
  auto [it, inserted] = m.try_emplace(k, c);
  if (!inserted) {
    it->second += c;
    if (it->second.is_zero()) m.erase(it);
  }
}

}  // namespace

// ---- AlgElt ---------------------------------------------------------------

void AlgElt::add(const NormalMonomial& m, const RatFun& c) { accumulate(terms_, m, c); }

RatFun AlgElt::coeff(const NormalMonomial& m) const {
  auto it = terms_.find(m);
  return it == terms_.end() ? RatFun(0) : it->second;
}

AlgElt AlgElt::operator-() const {
  AlgElt r = *this;
  for (auto& [m, c] : r.terms_) c = -c;
  return r;
}

AlgElt& AlgElt::operator+=(const AlgElt& o) {
  for (const auto& [m, c] : o.terms_) add(m, c);
  return *this;
}

AlgElt& AlgElt::operator-=(const AlgElt& o) {
  for (const auto& [m, c] : o.terms_) add(m, -c);
  return *this;
}

AlgElt AlgElt::scaled(const RatFun& c) const {
  AlgElt r;
  if (c.is_zero()) return r;
  for (const auto& [m, x] : terms_) r.terms_.emplace(m, x * c);
  return r;
}

bool operator==(const AlgElt& a, const AlgElt& b) {
  if (a.terms_.size() != b.terms_.size()) return false;
  auto i = a.terms_.begin();
  auto j = b.terms_.begin();
  for (; i != a.terms_.end(); ++i, ++j)
    if (!(i->first == j->first) || !(i->second == j->second)) return false;
  return true;
}

// ---- Algebra: construction and rules ----------------------------------------

Algebra::Algebra(int n) : roots_(n) { build_rules(); }

NormalMonomial Algebra::unit_monomial() const {
  auto sz = static_cast<std::size_t>(roots_.size());
  return NormalMonomial{Exponents(sz, 0), CartanWeight::zero(rank()), Exponents(sz, 0)};
}

NormalMonomial Algebra::e_monomial(int root, int power) const {
  NormalMonomial m = unit_monomial();
  m.e[static_cast<std::size_t>(root)] = static_cast<std::uint16_t>(power);
  return m;
}

NormalMonomial Algebra::f_monomial(int root, int power) const {
  NormalMonomial m = unit_monomial();
  m.f[static_cast<std::size_t>(root)] = static_cast<std::uint16_t>(power);
  return m;
}

NormalMonomial Algebra::k_monomial(const CartanWeight& w) const {
  if (w.rank() != rank()) throw RankError("Cartan weight has " + std::to_string(w.rank()) + " coordinates, rank is " + std::to_string(rank()));
  NormalMonomial m = unit_monomial();
  m.k = w;
  return m;
}

AlgElt Algebra::cartan_bracket(const PosRoot& r) const {
  CartanWeight w = CartanWeight::of_root(rank(), r);
  RatFun inv = RatFun(1) / (qpow(1) - qpow(-1));
  AlgElt a = K(w).scaled(inv);
  a -= K(-w).scaled(inv);
  return a;
}

RatFun Algebra::omega_scale(int root) const {
  return -qpow(roots_.root(root).height() - 1);
}

// E(hi) E(lo) for lo < hi in lexicographic order, as a combination of ascending words.
std::vector<Algebra::RuleTerm> Algebra::e_rule(int lo, int hi) const {
  const PosRoot a = roots_.root(lo), b = roots_.root(hi);
  RatFun q = qpow(1), qi = qpow(-1);
  if (a.j == b.i)  // adjacent, a on the left
    return {{qi, {lo, hi}}, {-qi, {roots_.index(a.i, b.j)}}};
  if (a.i == b.i || a.j == b.j)  // common endpoint
    return {{q, {lo, hi}}};
  if (b.i < a.j && a.j < b.j)  // overlapping intervals
    return {{RatFun(1), {lo, hi}}, {q - qi, {roots_.index(a.i, b.j), roots_.index(b.i, a.j)}}};
  return {{RatFun(1), {lo, hi}}};  // nested or disjoint
}

void Algebra::build_rules() {
  int N = roots_.size();
  e_rule_.assign(static_cast<std::size_t>(N), std::vector<std::vector<RuleTerm>>(static_cast<std::size_t>(N)));
  f_rule_ = e_rule_;
  for (int hi = 0; hi < N; ++hi)
    for (int lo = 0; lo < hi; ++lo) {
      auto er = e_rule(lo, hi);
      // omega(E(r)) = s_r F(r): F(hi)F(lo) = sum c prod(s) / (s_lo s_hi) word
      std::vector<RuleTerm> fr;
      RatFun denom = omega_scale(lo) * omega_scale(hi);
      for (const auto& t : er) {
        RatFun c = t.coeff;
        for (int r : t.roots) c *= omega_scale(r);
        fr.push_back({c / denom, t.roots});
      }
      e_rule_[static_cast<std::size_t>(hi)][static_cast<std::size_t>(lo)] = std::move(er);
      f_rule_[static_cast<std::size_t>(hi)][static_cast<std::size_t>(lo)] = std::move(fr);
    }
}

// ---- straightening ------------------------------------------------------------

const Algebra::EMap& Algebra::straighten(bool e_side, const Exponents& m, int root) {
  auto& cache = e_side ? ee_cache_ : ff_cache_;
  auto key = std::make_pair(m, root);
  if (auto it = cache.find(key); it != cache.end()) return it->second;
  EMap out;
  int last = last_nonzero(m);
  if (last <= root) {
    Exponents r = m;
    ++r[static_cast<std::size_t>(root)];
    out.emplace(std::move(r), RatFun(1));
  } else {
    Exponents rest = m;
    --rest[static_cast<std::size_t>(last)];
    const auto& rule = (e_side ? e_rule_ : f_rule_)[static_cast<std::size_t>(last)][static_cast<std::size_t>(root)];
    for (const auto& t : rule) {
      EMap cur{{rest, t.coeff}};
      for (int r : t.roots) {
        EMap next;
        for (const auto& [x, c] : cur)
          for (const auto& [y, d] : straighten(e_side, x, r)) accumulate(next, y, c * d);
        cur = std::move(next);
      }
      for (const auto& [x, c] : cur) accumulate(out, x, c);
    }
  }
  return cache.emplace(std::move(key), std::move(out)).first->second;
}

Algebra::EMap Algebra::times_word(bool e_side, const Exponents& a, const Exponents& b) {
  int fa = last_nonzero(a), fb = first_nonzero(b);
  if (fb < 0) return EMap{{a, RatFun(1)}};
  if (fa <= fb) {
    Exponents r = a;
    for (std::size_t i = 0; i < r.size(); ++i) r[i] = static_cast<std::uint16_t>(r[i] + b[i]);
    return EMap{{std::move(r), RatFun(1)}};
  }
  EMap cur{{a, RatFun(1)}};
  for (std::size_t r = 0; r < b.size(); ++r)
    for (int k = 0; k < b[r]; ++k) {
      EMap next;
      for (const auto& [x, c] : cur)
        for (const auto& [y, d] : straighten(e_side, x, static_cast<int>(r))) accumulate(next, y, c * d);
      cur = std::move(next);
    }
  return cur;
}

int Algebra::pair_with(const CartanWeight& w, const Exponents& x) const {
  Rat s(0);
  for (std::size_t r = 0; r < x.size(); ++r)
    if (x[r]) s += Rat(x[r]) * inner(w, roots_.weight(static_cast<int>(r)));
  return integral_exponent(s, "Cartan commutation");
}

CartanWeight Algebra::weight_of(const Exponents& x) const {
  CartanWeight w = CartanWeight::zero(rank());
  for (std::size_t r = 0; r < x.size(); ++r)
    if (x[r]) w += roots_.weight(static_cast<int>(r)).scaled(Rat(x[r]));
  return w;
}

const AlgElt& Algebra::e_times_f(const Exponents& m, int nu) {
  auto key = std::make_pair(m, nu);
  if (auto it = ef_cache_.find(key); it != ef_cache_.end()) return it->second;
  AlgElt out;
  int mu = last_nonzero(m);
  if (mu < 0) {
    out.add(f_monomial(nu), RatFun(1));
  } else {
    Exponents rest = m;
    --rest[static_cast<std::size_t>(mu)];
    // (rest F(nu)) E(mu)
    Gen emu{Gen::Kind::E, mu, {}};
    AlgElt first = e_times_f(rest, nu);
    for (const auto& [t, c] : first.terms()) out += mono_times_gen(t, emu).scaled(c);
    // rest [E(mu), F(nu)]
    AlgElt cr = cross(mu, nu);
    NormalMonomial left = unit_monomial();
    left.e = rest;
    for (const auto& [t, c] : cr.terms()) out += multiply_monomials(left, t).scaled(c);
  }
  return ef_cache_.emplace(std::move(key), std::move(out)).first->second;
}

AlgElt Algebra::mono_times_gen(const NormalMonomial& m, const Gen& g) {
  AlgElt out;
  switch (g.kind) {
    case Gen::Kind::K: {
      NormalMonomial r = m;
      r.k += g.w;
      out.add(r, qpow(-pair_with(g.w, m.e)));
      break;
    }
    case Gen::Kind::E: {
      for (const auto& [x, c] : straighten(true, m.e, g.root)) out.add(NormalMonomial{m.f, m.k, x}, c);
      break;
    }
    case Gen::Kind::F: {
      AlgElt ef = e_times_f(m.e, g.root);
      for (const auto& [t, c] : ef.terms()) {
        RatFun coeff = c * qpow(-pair_with(m.k, t.f));
        CartanWeight k = m.k + t.k;
        for (const auto& [x, d] : times_word(false, m.f, t.f)) out.add(NormalMonomial{x, k, t.e}, coeff * d);
      }
      break;
    }
  }
  return out;
}

AlgElt Algebra::times_gen(const AlgElt& a, const Gen& g) {
  AlgElt out;
  for (const auto& [m, c] : a.terms()) out += mono_times_gen(m, g).scaled(c);
  return out;
}

std::vector<Gen> Algebra::word(const NormalMonomial& m) const {
  std::vector<Gen> w;
  for (std::size_t r = 0; r < m.f.size(); ++r)
    for (int k = 0; k < m.f[r]; ++k) w.push_back(Gen{Gen::Kind::F, static_cast<int>(r), {}});
  if (!m.k.is_zero()) w.push_back(Gen{Gen::Kind::K, -1, m.k});
  for (std::size_t r = 0; r < m.e.size(); ++r)
    for (int k = 0; k < m.e[r]; ++k) w.push_back(Gen{Gen::Kind::E, static_cast<int>(r), {}});
  return w;
}

AlgElt Algebra::multiply_monomials(const NormalMonomial& a, const NormalMonomial& b) {
  std::lock_guard lock(mu_);
  AlgElt cur(a, RatFun(1));
  for (const auto& g : word(b)) cur = times_gen(cur, g);
  return cur;
}

AlgElt Algebra::multiply(const AlgElt& a, const AlgElt& b) {
  std::lock_guard lock(mu_);
  AlgElt out;
  for (const auto& [mb, cb] : b.terms()) {
    auto w = word(mb);
    AlgElt cur = a.scaled(cb);
    for (const auto& g : w) cur = times_gen(cur, g);
    out += cur;
  }
  return out;
}

AlgElt Algebra::pow(const AlgElt& a, int k) {
  if (k < 0) throw std::invalid_argument("negative power of an algebra element");
  AlgElt r = one();
  for (int i = 0; i < k; ++i) r = multiply(r, a);
  return r;
}

AlgElt Algebra::qbracket(const AlgElt& x, const AlgElt& y, const RatFun& a) {
  return multiply(x, y) - multiply(y, x).scaled(a);
}

AlgElt Algebra::cross(int mu, int nu) {
  std::lock_guard lock(mu_);
  auto key = std::make_pair(mu, nu);
  if (auto it = cross_cache_.find(key); it != cross_cache_.end()) return it->second;
  if (!cross_pending_.insert(key).second) throw std::logic_error("cyclic cross-commutator recursion");
  const PosRoot a = roots_.root(mu), b = roots_.root(nu);
  AlgElt x;
  if (a.simple() && b.simple()) {
    if (mu == nu) x = cartan_bracket(a);
  } else {
    if (!a.simple()) {
      // E(mu) = E(A) E(B) - q E(B) E(A)
      AlgElt ea = E(PosRoot{a.i, a.i + 1}), eb = E(PosRoot{a.i + 1, a.j}), fn = F(b);
      x = multiply(ea, multiply(eb, fn)) - multiply(eb, multiply(ea, fn)).scaled(qpow(1));
    } else {
      // F(nu) = F(top) F(low) - q^-1 F(low) F(top)
      AlgElt em = E(a), ft = F(PosRoot{b.j - 1, b.j}), fl = F(PosRoot{b.i, b.j - 1});
      x = multiply(multiply(em, ft), fl) - multiply(multiply(em, fl), ft).scaled(qpow(-1));
    }
    NormalMonomial fe = unit_monomial();
    fe.f[static_cast<std::size_t>(nu)] = 1;
    fe.e[static_cast<std::size_t>(mu)] = 1;
    x.add(fe, RatFun(-1));
  }
  cross_pending_.erase(key);
  return cross_cache_.emplace(key, std::move(x)).first->second;
}

// ---- involution, antipode, counit ----------------------------------------------

AlgElt Algebra::omega(const AlgElt& a) {
  std::lock_guard lock(mu_);
  AlgElt out;
  for (const auto& [m, c] : a.terms()) {
    RatFun s = c;
    for (std::size_t r = 0; r < m.f.size(); ++r)
      if (m.f[r]) s *= omega_scale(static_cast<int>(r)).pow(-m.f[r]);
    for (std::size_t r = 0; r < m.e.size(); ++r)
      if (m.e[r]) s *= omega_scale(static_cast<int>(r)).pow(m.e[r]);
    // omega(F K E) = E' K^-1 F'
    NormalMonomial left = unit_monomial(), right = unit_monomial();
    left.e = m.f;
    right.f = m.e;
    AlgElt x = times_gen(AlgElt(left, s), Gen{Gen::Kind::K, -1, -m.k});
    out += multiply(x, AlgElt(right, RatFun(1)));
  }
  return out;
}

const AlgElt& Algebra::gamma_root(bool e_side, int root) {
  auto& cache = e_side ? gamma_e_ : gamma_f_;
  if (auto it = cache.find(root); it != cache.end()) return it->second;
  const PosRoot r = roots_.root(root);
  AlgElt x;
  if (r.simple()) {
    CartanWeight w = CartanWeight::of_root(rank(), r);
    x = e_side ? -multiply(K(-w), E(r)) : -multiply(F(r), K(w));
  } else if (e_side) {
    // gamma(E(A)E(B) - q E(B)E(A)) = g(B)g(A) - q g(A)g(B)
    AlgElt ga = gamma_root(true, roots_.index(r.i, r.i + 1));
    AlgElt gb = gamma_root(true, roots_.index(r.i + 1, r.j));
    x = multiply(gb, ga) - multiply(ga, gb).scaled(qpow(1));
  } else {
    AlgElt gt = gamma_root(false, roots_.index(r.j - 1, r.j));
    AlgElt gl = gamma_root(false, roots_.index(r.i, r.j - 1));
    x = multiply(gl, gt) - multiply(gt, gl).scaled(qpow(-1));
  }
  return cache.emplace(root, std::move(x)).first->second;
}

AlgElt Algebra::antipode(const AlgElt& a) {
  std::lock_guard lock(mu_);
  AlgElt out;
  for (const auto& [m, c] : a.terms()) {
    auto w = word(m);
    AlgElt cur = scalar(c);
    for (auto it = w.rbegin(); it != w.rend(); ++it) {
      switch (it->kind) {
        case Gen::Kind::K: cur = times_gen(cur, Gen{Gen::Kind::K, -1, -it->w}); break;
        case Gen::Kind::E: cur = multiply(cur, gamma_root(true, it->root)); break;
        case Gen::Kind::F: cur = multiply(cur, gamma_root(false, it->root)); break;
      }
    }
    out += cur;
  }
  return out;
}

RatFun Algebra::counit(const AlgElt& a) const {
  RatFun s(0);
  for (const auto& [m, c] : a.terms())
    if (first_nonzero(m.f) < 0 && first_nonzero(m.e) < 0) s += c;
  return s;
}

// ---- rendering -----------------------------------------------------------------

std::string Algebra::render(const NormalMonomial& m) const {
  std::string s;
  auto part = [&](const Exponents& x, const char* name) {
    for (std::size_t r = 0; r < x.size(); ++r) {
      if (!x[r]) continue;
      if (!s.empty()) s += "*";
      const PosRoot& pr = roots_.root(static_cast<int>(r));
      s += std::string(name) + "(" + std::to_string(pr.i) + "," + std::to_string(pr.j) + ")";
      if (x[r] != 1) s += "^" + std::to_string(x[r]);
    }
  };
  part(m.f, "F");
  if (!m.k.is_zero()) {
    if (!s.empty()) s += "*";
    s += m.k.str();
  }
  part(m.e, "E");
  return s.empty() ? "1" : s;
}

std::string Algebra::render(const AlgElt& a) const {
  if (a.is_zero()) return "0";
  std::string s;
  for (const auto& [m, c] : a.terms()) {
    if (!s.empty()) s += " + ";
    std::string mono = render(m);
    if (c == RatFun(1)) {
      s += mono;
    } else {
      s += "(" + c.str() + ")";
      if (mono != "1") s += "*" + mono;
    }
  }
  return s;
}

}  // namespace qdyn
