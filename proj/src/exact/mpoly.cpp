#include "qdyn/exact/mpoly.hpp"

#include <algorithm>
#include <numeric>

namespace qdyn {

namespace {
constexpr const char* kNames[kSymCount] = {"q", "L", "lambda", "t", "mu"};

int total(const Exps& e) { return std::accumulate(e.begin(), e.end(), 0); }

bool divides(const Exps& small, const Exps& big) {
  for (std::size_t i = 0; i < kSymCount; ++i)
    if (small[i] > big[i]) return false;
  return true;
}
}  // namespace

const char* sym_name(Sym s) { return kNames[static_cast<int>(s)]; }

std::optional<Sym> sym_from_name(std::string_view name) {
  for (std::size_t i = 0; i < kSymCount; ++i)
    if (name == kNames[i]) return static_cast<Sym>(i);
  return std::nullopt;
}

std::strong_ordering grlex(const Exps& a, const Exps& b) {
  if (auto c = total(a) <=> total(b); c != 0) return c;
  return a <=> b;
}

MPoly::MPoly(Rat c) {
  if (!c.is_zero()) terms_.push_back(Term{Exps{}, std::move(c)});
}

MPoly MPoly::var(Sym s, int power) {
  Exps e{};
  e[static_cast<int>(s)] = power;
  return monomial(e, Rat(1));
}

MPoly MPoly::monomial(const Exps& e, Rat c) {
  MPoly p;
  if (!c.is_zero()) p.terms_.push_back(Term{e, std::move(c)});
  return p;
}

bool MPoly::is_constant() const {
  return terms_.empty() || (terms_.size() == 1 && terms_[0].exps == Exps{});
}

Rat MPoly::constant_term() const {
  for (const auto& t : terms_)
    if (t.exps == Exps{}) return t.coeff;
  return Rat(0);
}

int MPoly::degree(Sym s) const {
  int i = static_cast<int>(s);
  int d = 0;
  bool first = true;
  for (const auto& t : terms_) {
    if (first || t.exps[i] > d) d = t.exps[i];
    first = false;
  }
  return d;
}

int MPoly::min_degree(Sym s) const {
  int i = static_cast<int>(s);
  int d = 0;
  bool first = true;
  for (const auto& t : terms_) {
    if (first || t.exps[i] < d) d = t.exps[i];
    first = false;
  }
  return d;
}

bool MPoly::uses(Sym s) const {
  int i = static_cast<int>(s);
  return std::any_of(terms_.begin(), terms_.end(), [i](const Term& t) { return t.exps[i] != 0; });
}

void MPoly::normalize() {
  std::sort(terms_.begin(), terms_.end(),
            [](const Term& a, const Term& b) { return grlex(a.exps, b.exps) > 0; });
  std::vector<Term> out;
  out.reserve(terms_.size());
  for (auto& t : terms_) {
    if (!out.empty() && out.back().exps == t.exps) {
      out.back().coeff += t.coeff;
    } else {
      if (!out.empty() && out.back().coeff.is_zero()) out.pop_back();
      out.push_back(std::move(t));
    }
  }
  if (!out.empty() && out.back().coeff.is_zero()) out.pop_back();
  terms_ = std::move(out);
}

MPoly MPoly::operator-() const {
  MPoly r = *this;
  for (auto& t : r.terms_) t.coeff = -t.coeff;
  return r;
}

MPoly& MPoly::operator+=(const MPoly& o) {
  if (o.terms_.empty()) return *this;
  // Both sides are sorted: merge.
  std::vector<Term> out;
  out.reserve(terms_.size() + o.terms_.size());
  std::size_t i = 0, j = 0;
  while (i < terms_.size() || j < o.terms_.size()) {
    if (j == o.terms_.size()) {
      out.push_back(std::move(terms_[i++]));
    } else if (i == terms_.size()) {
      out.push_back(o.terms_[j++]);
    } else {
      auto c = grlex(terms_[i].exps, o.terms_[j].exps);
      if (c > 0) {
        out.push_back(std::move(terms_[i++]));
      } else if (c < 0) {
        out.push_back(o.terms_[j++]);
      } else {
        Rat s = terms_[i].coeff + o.terms_[j].coeff;
        if (!s.is_zero()) out.push_back(Term{terms_[i].exps, std::move(s)});
        ++i;
        ++j;
      }
    }
  }
  terms_ = std::move(out);
  return *this;
}

MPoly& MPoly::operator-=(const MPoly& o) { return *this += -o; }

MPoly operator*(const MPoly& a, const MPoly& b) {
  MPoly r;
  if (a.is_zero() || b.is_zero()) return r;
  if (b.is_monomial()) return a.shifted(b.terms_[0].exps).scaled(b.terms_[0].coeff);
  if (a.is_monomial()) return b.shifted(a.terms_[0].exps).scaled(a.terms_[0].coeff);
  r.terms_.reserve(a.terms_.size() * b.terms_.size());
  for (const auto& x : a.terms_)
    for (const auto& y : b.terms_) {
      MPoly::Term t;
      for (std::size_t k = 0; k < kSymCount; ++k) t.exps[k] = x.exps[k] + y.exps[k];
      t.coeff = x.coeff * y.coeff;
      r.terms_.push_back(std::move(t));
    }
  r.normalize();
  return r;
}

MPoly MPoly::scaled(const Rat& c) const {
  if (c.is_zero()) return MPoly();
  MPoly r = *this;
  if (!c.is_one())
    for (auto& t : r.terms_) t.coeff *= c;
  return r;
}

MPoly MPoly::shifted(const Exps& e) const {
  MPoly r = *this;
  for (auto& t : r.terms_)
    for (std::size_t k = 0; k < kSymCount; ++k) t.exps[k] += e[k];
  return r;  // order preserved: shifting is compatible with grlex
}

MPoly MPoly::pow(unsigned e) const {
  MPoly r(1), base = *this;
  while (e) {
    if (e & 1u) r = r * base;
    e >>= 1;
    if (e) base = base * base;
  }
  return r;
}

Rat MPoly::content() const {
  if (terms_.empty()) return Rat(0);
  mpz_class g = 0, l = 1;
  for (const auto& t : terms_) {
    mpz_class n = t.coeff.num(), d = t.coeff.den();
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), n.get_mpz_t());
    mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), d.get_mpz_t());
  }
  Rat c(mpq_class(g, l));
  return terms_.front().coeff.sign() < 0 ? -c : c;
}

Rat MPoly::eval(const Assignment& a) const {
  Rat sum(0);
  for (const auto& t : terms_) {
    Rat v = t.coeff;
    for (std::size_t k = 0; k < kSymCount; ++k) {
      if (t.exps[k] == 0) continue;
      const auto& x = a.get(static_cast<Sym>(k));
      if (!x) throw std::invalid_argument(std::string("no value assigned to ") + kNames[k]);
      if (t.exps[k] < 0 && x->is_zero()) throw DenominatorZero("Laurent monomial at zero");
      v *= x->pow(t.exps[k]);
    }
    sum += v;
  }
  return sum;
}

bool operator==(const MPoly& a, const MPoly& b) {
  if (a.terms_.size() != b.terms_.size()) return false;
  for (std::size_t i = 0; i < a.terms_.size(); ++i)
    if (a.terms_[i].exps != b.terms_[i].exps || a.terms_[i].coeff != b.terms_[i].coeff) return false;
  return true;
}

std::strong_ordering operator<=>(const MPoly& a, const MPoly& b) {
  std::size_t n = std::min(a.terms_.size(), b.terms_.size());
  for (std::size_t i = 0; i < n; ++i) {
    if (auto c = grlex(a.terms_[i].exps, b.terms_[i].exps); c != 0) return c;
    if (auto c = a.terms_[i].coeff <=> b.terms_[i].coeff; c != 0) return c;
  }
  return a.terms_.size() <=> b.terms_.size();
}

std::string MPoly::str() const {
  if (terms_.empty()) return "0";
  std::string out;
  bool first = true;
  for (const auto& t : terms_) {
    Rat c = t.coeff;
    if (first) {
      if (c.sign() < 0) out += "-";
    } else {
      out += c.sign() < 0 ? " - " : " + ";
    }
    c = c.abs();
    std::string mono;
    for (std::size_t k = 0; k < kSymCount; ++k) {
      if (t.exps[k] == 0) continue;
      if (!mono.empty()) mono += "*";
      mono += kNames[k];
      if (t.exps[k] != 1) mono += "^" + std::to_string(t.exps[k]);
    }
    if (mono.empty())
      out += c.str();
    else if (c.is_one())
      out += mono;
    else
      out += c.str() + "*" + mono;
    first = false;
  }
  return out;
}

void MPolyBuilder::add(const Exps& e, const Rat& c) {
  if (c.is_zero()) return;
  auto [it, inserted] = acc_.try_emplace(e, c);
  if (!inserted) {
    it->second += c;
    if (it->second.is_zero()) acc_.erase(it);
  }
}

void MPolyBuilder::add(const MPoly& p, const Rat& scale, const Exps* shift) {
  for (const auto& t : p.terms()) {
    Exps e = t.exps;
    if (shift)
      for (std::size_t k = 0; k < kSymCount; ++k) e[k] += (*shift)[k];
    add(e, t.coeff * scale);
  }
}

MPoly MPolyBuilder::build() {
  MPoly p;
  p.terms_.reserve(acc_.size());
  for (auto& [e, c] : acc_) p.terms_.push_back(MPoly::Term{e, c});
  acc_.clear();
  p.normalize();
  return p;
}

std::optional<MPoly> divide_exact(const MPoly& a, const MPoly& b) {
  if (b.is_zero()) throw DenominatorZero("division by the zero polynomial");
  if (a.is_zero()) return MPoly();
  if (b.is_monomial()) {
    Exps inv{};
    for (std::size_t k = 0; k < kSymCount; ++k) inv[k] = -b.leading().exps[k];
    MPoly r = a.shifted(inv).scaled(Rat(1) / b.leading().coeff);
    for (std::size_t k = 0; k < kSymCount; ++k)
      if (!is_laurent(static_cast<Sym>(k)) && r.min_degree(static_cast<Sym>(k)) < 0) return std::nullopt;
    return r;
  }
  // Move both into the polynomial ring by clearing Laurent denominators, then divide.
  Exps sa{}, sb{};
  for (Sym s : {Sym::q, Sym::L}) {
    int k = static_cast<int>(s);
    sa[k] = -a.min_degree(s);
    sb[k] = -b.min_degree(s);
  }
  MPoly rem = a.shifted(sa);
  MPoly d = b.shifted(sb);
  for (std::size_t k = 0; k < kSymCount; ++k) {
    Sym s = static_cast<Sym>(k);
    if (d.degree(s) > rem.degree(s)) return std::nullopt;
    if (d.min_degree(s) > rem.min_degree(s)) return std::nullopt;
  }
  const auto& lt = d.leading();
  Rat inv_lc = Rat(1) / lt.coeff;
  MPolyBuilder quot;
  while (!rem.is_zero()) {
    const auto& r = rem.leading();
    if (!divides(lt.exps, r.exps)) return std::nullopt;
    Exps m{};
    for (std::size_t k = 0; k < kSymCount; ++k) m[k] = r.exps[k] - lt.exps[k];
    Rat c = r.coeff * inv_lc;
    quot.add(m, c);
    rem -= d.shifted(m).scaled(c);
  }
  Exps back{};
  for (std::size_t k = 0; k < kSymCount; ++k) back[k] = sb[k] - sa[k];
  return quot.build().shifted(back);
}

}  // namespace qdyn
