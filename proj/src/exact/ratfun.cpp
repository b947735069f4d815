#include "qdyn/exact/ratfun.hpp"

#include <algorithm>

namespace qdyn {

namespace {

void merge_factor(std::vector<RatFun::Factor>& den, MPoly atom, int mult) {
  auto it = std::lower_bound(den.begin(), den.end(), atom,
                             [](const RatFun::Factor& f, const MPoly& a) { return f.atom < a; });
  if (it != den.end() && it->atom == atom)
    it->mult += mult;
  else
    den.insert(it, RatFun::Factor{std::move(atom), mult});
}

MPoly expand(const std::vector<RatFun::Factor>& fs) {
  MPoly r(1);
  for (const auto& f : fs) r = r * f.atom.pow(static_cast<unsigned>(f.mult));
  return r;
}

}  // namespace

RatFun RatFun::var(Sym s, int power) {
  if (power >= 0 || is_laurent(s)) return RatFun(MPoly::var(s, power));
  return RatFun(1) / RatFun(MPoly::var(s, -power));
}

RatFun RatFun::fraction(const MPoly& num, const MPoly& den) {
  RatFun r(num);
  r.absorb_denominator(den, 1);
  r.cancel();
  return r;
}

MPoly RatFun::den() const { return expand(den_); }

bool RatFun::is_unit_monomial() const {
  if (!den_.empty() || !num_.is_monomial()) return false;
  const auto& e = num_.leading().exps;
  for (std::size_t k = 0; k < kSymCount; ++k)
    if (!is_laurent(static_cast<Sym>(k)) && e[k] != 0) return false;
  return true;
}

void RatFun::absorb_denominator(const MPoly& p, int mult) {
  if (p.is_zero()) throw DenominatorZero("rational function with zero denominator");
  if (num_.is_zero()) return;
  // Laurent monomial part is a unit: move its inverse to the numerator.
  Exps unit{};
  for (Sym s : {Sym::q, Sym::L}) unit[static_cast<int>(s)] = -p.min_degree(s);
  MPoly rest = p.shifted(unit);
  Exps num_shift{};
  for (std::size_t k = 0; k < kSymCount; ++k) num_shift[k] = unit[k] * mult;
  // Monomial factors in the polynomial symbols become single-variable atoms.
  Exps poly_shift{};
  for (Sym s : {Sym::lambda, Sym::t, Sym::mu}) {
    int d = rest.min_degree(s);
    if (d > 0) {
      poly_shift[static_cast<int>(s)] = -d;
      merge_factor(den_, MPoly::var(s), d * mult);
    }
  }
  rest = rest.shifted(poly_shift);
  Rat c = rest.content();
  rest = rest.scaled(Rat(1) / c);
  num_ = num_.shifted(num_shift).scaled(Rat(1) / c.pow(mult));
  if (!rest.is_constant()) merge_factor(den_, std::move(rest), mult);
}

void RatFun::cancel() {
  if (num_.is_zero()) {
    den_.clear();
    return;
  }
  for (auto it = den_.begin(); it != den_.end();) {
    while (it->mult > 0) {
      auto qt = divide_exact(num_, it->atom);
      if (!qt) break;
      num_ = std::move(*qt);
      --it->mult;
    }
    if (it->mult == 0)
      it = den_.erase(it);
    else
      ++it;
  }
}

RatFun RatFun::operator-() const {
  RatFun r = *this;
  r.num_ = -r.num_;
  return r;
}

RatFun& RatFun::operator+=(const RatFun& o) {
  if (o.is_zero()) return *this;
  if (is_zero()) return *this = o;
  if (den_ == o.den_) {
    num_ += o.num_;
    cancel();
    return *this;
  }
  // Common denominator: maximal multiplicity per atom.
  std::vector<Factor> common;
  MPoly mine(1), theirs(1);
  std::size_t i = 0, j = 0;
  while (i < den_.size() || j < o.den_.size()) {
    if (j == o.den_.size() || (i < den_.size() && den_[i].atom < o.den_[j].atom)) {
      theirs = theirs * den_[i].atom.pow(den_[i].mult);
      common.push_back(den_[i++]);
    } else if (i == den_.size() || o.den_[j].atom < den_[i].atom) {
      mine = mine * o.den_[j].atom.pow(o.den_[j].mult);
      common.push_back(o.den_[j++]);
    } else {
      int m = std::max(den_[i].mult, o.den_[j].mult);
      if (m > den_[i].mult) mine = mine * den_[i].atom.pow(m - den_[i].mult);
      if (m > o.den_[j].mult) theirs = theirs * den_[i].atom.pow(m - o.den_[j].mult);
      common.push_back(Factor{den_[i].atom, m});
      ++i;
      ++j;
    }
  }
  num_ = num_ * mine + o.num_ * theirs;
  den_ = std::move(common);
  cancel();
  return *this;
}

RatFun& RatFun::operator-=(const RatFun& o) { return *this += -o; }

RatFun& RatFun::operator*=(const RatFun& o) {
  if (is_zero() || o.is_zero()) {
    num_ = MPoly();
    den_.clear();
    return *this;
  }
  if (o.is_unit_monomial() || (o.is_constant())) {
    num_ = num_ * o.num_;
    return *this;
  }
  if (is_unit_monomial() || is_constant()) {
    MPoly n = num_ * o.num_;
    den_ = o.den_;
    num_ = std::move(n);
    return *this;
  }
  num_ = num_ * o.num_;
  for (const auto& f : o.den_) merge_factor(den_, f.atom, f.mult);
  cancel();
  return *this;
}

RatFun RatFun::inverse() const {
  if (is_zero()) throw DenominatorZero("inverse of zero");
  RatFun r(expand(den_));
  r.absorb_denominator(num_, 1);
  r.cancel();
  return r;
}

RatFun& RatFun::operator/=(const RatFun& o) { return *this *= o.inverse(); }

RatFun RatFun::pow(int e) const {
  if (e < 0) return inverse().pow(-e);
  RatFun r(1), base = *this;
  while (e) {
    if (e & 1) r *= base;
    e >>= 1;
    if (e) base *= base;
  }
  return r;
}

Rat RatFun::eval(const Assignment& a) const {
  Rat d(1);
  for (const auto& f : den_) {
    Rat v = f.atom.eval(a);
    if (v.is_zero()) throw DenominatorZero("denominator vanishes at the evaluation point");
    d *= v.pow(f.mult);
  }
  return num_.eval(a) / d;
}

RatFun substitute_poly(const MPoly& p, Sym s, const RatFun& value) {
  int k = static_cast<int>(s);
  // Group by the exponent of s so each power of value is computed once.
  std::map<int, MPolyBuilder> groups;
  for (const auto& t : p.terms()) {
    Exps e = t.exps;
    int d = e[k];
    e[k] = 0;
    groups[d].add(e, t.coeff);
  }
  RatFun r;
  for (auto& [d, b] : groups) r += RatFun(b.build()) * value.pow(d);
  return r;
}

RatFun RatFun::substitute(Sym s, const RatFun& value) const {
  RatFun r = substitute_poly(num_, s, value);
  for (const auto& f : den_) r /= substitute_poly(f.atom, s, value).pow(f.mult);
  return r;
}

bool operator==(const RatFun& a, const RatFun& b) {
  if (a.den_ == b.den_) return a.num_ == b.num_;
  if (a.is_zero() || b.is_zero()) return a.is_zero() && b.is_zero();
  return a.num_ * b.den() == b.num_ * a.den();
}

std::string RatFun::str() const {
  if (den_.empty()) return num_.str();
  std::string d;
  for (const auto& f : den_) {
    if (!d.empty()) d += "*";
    bool bare = f.atom.size() == 1 && (f.mult == 1 || f.atom.str().find('^') == std::string::npos);
    d += bare ? f.atom.str() : "(" + f.atom.str() + ")";
    if (f.mult != 1) d += "^" + std::to_string(f.mult);
  }
  if (den_.size() > 1) d = "(" + d + ")";
  std::string n = num_.str();
  if (num_.size() > 1) n = "(" + n + ")";
  return n + "/" + d;
}

}  // namespace qdyn
