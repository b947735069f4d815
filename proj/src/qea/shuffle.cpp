#include "qdyn/qea/shuffle.hpp"

#include <stdexcept>

namespace qdyn {

int ShuffleAlgebra::cartan(int a, int b) {
  if (a == b) return 2;
  return (a - b == 1 || b - a == 1) ? -1 : 0;
}

ShuffleAlgebra::Elt ShuffleAlgebra::letter(int i) const {
  if (i < 1 || i > n_) throw RankError("letter out of range");
  return Elt{{Word{static_cast<std::uint8_t>(i)}, MPoly(1)}};
}

void ShuffleAlgebra::add_to(Elt& acc, const Elt& x, const MPoly& scale) {
  for (const auto& [w, c] : x) {
    MPoly v = c * scale;
    auto [it, inserted] = acc.try_emplace(w, v);
    if (!inserted) {
      it->second += v;
      if (it->second.is_zero()) acc.erase(it);
    } else if (v.is_zero()) {
      acc.erase(it);
    }
  }
}

ShuffleAlgebra::Elt ShuffleAlgebra::scaled(const Elt& x, const MPoly& s) {
  Elt r;
  add_to(r, x, s);
  return r;
}

// (xa) * (yb) = (x * yb) a + q^{-(wt(xa), alpha_b)} (xa * y) b
const ShuffleAlgebra::Elt& ShuffleAlgebra::word_product(const Word& u, const Word& v) {
  auto key = std::make_pair(u, v);
  if (auto it = memo_.find(key); it != memo_.end()) return it->second;
  Elt out;
  if (u.empty()) {
    out.emplace(v, MPoly(1));
  } else if (v.empty()) {
    out.emplace(u, MPoly(1));
  } else {
    Word x(u.begin(), u.end() - 1), y(v.begin(), v.end() - 1);
    std::uint8_t a = u.back(), b = v.back();
    Elt first;
    for (const auto& [w, c] : word_product(x, v)) {
      Word w2 = w;
      w2.push_back(a);
      first.emplace(std::move(w2), c);
    }
    int e = 0;
    for (auto l : u) e += cartan(l, b);
    Elt second;
    for (const auto& [w, c] : word_product(u, y)) {
      Word w2 = w;
      w2.push_back(b);
      second.emplace(std::move(w2), c);
    }
    add_to(out, first);
    add_to(out, second, MPoly::var(Sym::q, -e));
  }
  return memo_.emplace(std::move(key), std::move(out)).first->second;
}

ShuffleAlgebra::Elt ShuffleAlgebra::multiply(const Elt& a, const Elt& b) {
  Elt out;
  for (const auto& [u, cu] : a)
    for (const auto& [v, cv] : b) add_to(out, word_product(u, v), cu * cv);
  return out;
}

ShuffleAlgebra::Elt ShuffleAlgebra::qbracket(const Elt& x, const Elt& y, const MPoly& a) {
  Elt r = multiply(x, y);
  add_to(r, multiply(y, x), -a);
  return r;
}

ShuffleAlgebra::Elt ShuffleAlgebra::root_vector(const PosRoot& r) {
  if (r.i < 1 || r.j > n_ + 1 || r.i >= r.j) throw RankError("root out of range");
  if (auto it = roots_.find(r); it != roots_.end()) return it->second;
  Elt x = r.simple() ? letter(r.i)
                     : qbracket(letter(r.i), root_vector(PosRoot{r.i + 1, r.j}), MPoly::var(Sym::q));
  return roots_.emplace(r, x).first->second;
}

}  // namespace qdyn
