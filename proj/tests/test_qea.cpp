#include "doctest.h"

#include "qdyn/exact/qnumbers.hpp"
#include "qdyn/qea/shuffle.hpp"
#include "qdyn/qea/tensor.hpp"

#include <random>

using namespace qdyn;

namespace {

RatFun q(int k = 1) { return qpow(k); }

AlgElt at_q1(const AlgElt& a) {
  AlgElt r;
  for (const auto& [m, c] : a.terms()) r.add(m, RatFun(c.eval(Assignment{{Sym::q, Rat(1)}})));
  return r;
}

CartanWeight wt(Algebra& alg, const PosRoot& r) { return CartanWeight::of_root(alg.rank(), r); }

// Random word in simple generators and Cartan elements.
AlgElt random_word(Algebra& alg, std::mt19937_64& rng, int max_len) {
  int n = alg.rank();
  std::uniform_int_distribution<int> len(1, max_len), kind(0, 4), simple(1, n), cw(-1, 1);
  AlgElt x = alg.one();
  int l = len(rng);
  for (int i = 0; i < l; ++i) {
    int k = kind(rng), s = simple(rng);
    PosRoot r{s, s + 1};
    if (k <= 1)
      x = alg.multiply(x, alg.E(r));
    else if (k <= 3)
      x = alg.multiply(x, alg.F(r));
    else {
      CartanWeight w = CartanWeight::zero(n);
      for (auto& c : w.c) c = Rat(cw(rng));
      x = alg.multiply(x, alg.K(w));
    }
  }
  return x;
}

}  // namespace

TEST_CASE("shuffle oracle: Serre relations and the straightening rules") {
  for (int n = 2; n <= 4; ++n) {
    ShuffleAlgebra sh(n);
    MPoly qp = MPoly::var(Sym::q), qm = MPoly::var(Sym::q, -1);
    for (int i = 1; i < n; ++i) {
      auto a = sh.letter(i), b = sh.letter(i + 1);
      auto aab = sh.multiply(sh.multiply(a, a), b);
      auto aba = sh.multiply(sh.multiply(a, b), a);
      auto baa = sh.multiply(b, sh.multiply(a, a));
      ShuffleAlgebra::Elt serre = aab;
      ShuffleAlgebra::add_to(serre, aba, -(qp + qm));
      ShuffleAlgebra::add_to(serre, baa);
      CHECK(serre.empty());
    }
    Algebra alg(n);
    const auto& R = alg.roots();
    for (int lo = 0; lo < R.size(); ++lo)
      for (int hi = lo + 1; hi < R.size(); ++hi) {
        // E(hi) E(lo) as computed by the engine, mapped into the shuffle algebra
        AlgElt prod = alg.multiply(alg.E(R.root(hi)), alg.E(R.root(lo)));
        ShuffleAlgebra::Elt rhs;
        for (const auto& [m, c] : prod.terms()) {
          REQUIRE(c.is_polynomial());
          ShuffleAlgebra::Elt w = sh.one();
          for (std::size_t r = 0; r < m.e.size(); ++r)
            for (int k = 0; k < m.e[r]; ++k) w = sh.multiply(w, sh.root_vector(R.root(static_cast<int>(r))));
          ShuffleAlgebra::add_to(rhs, w, c.num());
        }
        auto lhs = sh.multiply(sh.root_vector(R.root(hi)), sh.root_vector(R.root(lo)));
        ShuffleAlgebra::add_to(rhs, lhs, MPoly(-1));
        INFO("n=" << n << " pair " << R.root(hi).str() << " " << R.root(lo).str());
        CHECK(rhs.empty());
      }
  }
}

TEST_CASE("shuffle oracle: omega rescaling of composite root vectors") {
  // omega^-1 of the nested F bracket is (-1)^h [e_{j-1},[...,[e_{i+1},e_i]_{q^-1}]]_{q^-1};
  // it must equal -q^{1-h} E(i,j).
  ShuffleAlgebra sh(4);
  for (int i = 1; i <= 5; ++i)
    for (int j = i + 1; j <= 5; ++j) {
      ShuffleAlgebra::Elt x = sh.letter(i);
      for (int k = i + 1; k < j; ++k) x = sh.qbracket(sh.letter(k), x, MPoly::var(Sym::q, -1));
      int h = j - i;
      ShuffleAlgebra::add_to(x, sh.root_vector(PosRoot{i, j}),
                             MPoly::var(Sym::q, 1 - h).scaled(h % 2 == 0 ? Rat(1) : Rat(-1)));
      CHECK(x.empty());
    }
}

TEST_CASE("basic relations") {
  Algebra alg(2);
  PosRoot a1{1, 2}, a2{2, 3}, a12{1, 3};
  CHECK(alg.multiply(alg.E(a1), alg.F(a1)) - alg.multiply(alg.F(a1), alg.E(a1)) == alg.cartan_bracket(a1));
  AlgElt x = alg.multiply(alg.E(a12), alg.F(a2));
  CHECK(alg.multiply(alg.one(), x) == x);
  CHECK(alg.multiply(x, alg.one()) == x);
  // e_{a1+a2} e_{a1} = q e_{a1} e_{a1+a2}
  CHECK(alg.multiply(alg.E(a12), alg.E(a1)) == alg.multiply(alg.E(a1), alg.E(a12)).scaled(q()));
  CHECK(evaluate(alg, Expr::qbr(Expr::e(a1), Expr::e(a2), q())) == alg.E(a12));
  CHECK(evaluate(alg, Expr::qbr(Expr::e(a1), Expr::e(a1), q(3))) == alg.pow(alg.E(a1), 2).scaled(RatFun(1) - q(3)));
  Expr e1 = Expr::e(a1), e2 = Expr::e(a2);
  Expr serre = e1 * e1 * e2 - Expr::number(q() + q(-1)) * e1 * e2 * e1 + e2 * e1 * e1;
  CHECK(evaluate(alg, serre).is_zero());
  Expr fserre = Expr::f(a2) * Expr::f(a2) * Expr::f(a1) - Expr::number(q() + q(-1)) * Expr::f(a2) * Expr::f(a1) * Expr::f(a2) +
                Expr::f(a1) * Expr::f(a2) * Expr::f(a2);
  CHECK(evaluate(alg, fserre).is_zero());
  // K e K^-1 = q^{(w, a)} e
  CartanWeight w = wt(alg, a1);
  CHECK(alg.multiply(alg.multiply(alg.K(w), alg.E(a2)), alg.K(-w)) == alg.E(a2).scaled(q(-1)));
  CHECK(alg.multiply(alg.multiply(alg.K(w), alg.F(a1)), alg.K(-w)) == alg.F(a1).scaled(q(-2)));
  CHECK(alg.render(alg.E(a12)) == "E(1,3)");
}

TEST_CASE("root vectors from nested brackets") {
  for (int n = 1; n <= 4; ++n) {
    Algebra alg(n);
    for (int r = 0; r < alg.roots().size(); ++r) {
      PosRoot mu = alg.roots().root(r);
      CHECK(evaluate(alg, root_e(mu)) == alg.E(mu));
      CHECK(evaluate(alg, root_f(mu)) == alg.F(mu));
      CHECK(at_q1(evaluate(alg, root_e_tilde(mu))) == at_q1(alg.E(mu)));
      CHECK(alg.omega(alg.E(mu)) == alg.F(mu).scaled(-q(mu.height() - 1)));
    }
  }
  Algebra alg(2);
  CHECK(alg.omega(alg.E(PosRoot{1, 2})) == -alg.F(PosRoot{1, 2}));
}

TEST_CASE("cross table examples") {
  Algebra alg(2);
  PosRoot a1{1, 2}, a2{2, 3}, a12{1, 3};
  auto idx = [&](PosRoot r) { return alg.roots().index(r); };
  CHECK(alg.cross(idx(a1), idx(a12)) == alg.multiply(alg.F(a2), alg.K(-wt(alg, a1))).scaled(-q(-1)));
  CHECK(alg.cross(idx(a12), idx(a12)) == alg.cartan_bracket(a12));
  AlgElt f3 = alg.pow(alg.F(a12), 3);
  AlgElt lhs = alg.multiply(alg.E(a2), f3) - alg.multiply(f3, alg.E(a2));
  AlgElt rhs = alg.multiply(alg.multiply(alg.F(a1), alg.pow(alg.F(a12), 2)), alg.K(wt(alg, a2)))
                   .scaled(q(-2) * (q(6) - RatFun(1)) / (q(2) - RatFun(1)));
  CHECK(lhs == rhs);
  Algebra big(3);
  CHECK(big.cross(big.roots().index(1, 2), big.roots().index(3, 4)).is_zero());
  CHECK(big.cross(big.roots().index(3, 4), big.roots().index(1, 3)).is_zero());
}

TEST_CASE("omega is an involutive automorphism") {
  std::mt19937_64 rng(11);
  for (int n = 1; n <= 3; ++n) {
    Algebra alg(n);
    for (int s = 0; s < 20; ++s) {
      AlgElt x = random_word(alg, rng, 4), y = random_word(alg, rng, 3);
      CHECK(alg.omega(alg.omega(x)) == x);
      CHECK(alg.omega(alg.multiply(x, y)) == alg.multiply(alg.omega(x), alg.omega(y)));
    }
  }
}

TEST_CASE("antipode") {
  Algebra alg(2);
  CartanWeight w{{Rat(1, 3), Rat(-2)}};
  CHECK(alg.antipode(alg.K(w)) == alg.K(-w));
  CHECK(alg.antipode(alg.one()) == alg.one());
  std::mt19937_64 rng(5);
  for (int n = 1; n <= 3; ++n) {
    Algebra a(n);
    for (int s = 0; s < 20; ++s) {
      AlgElt x = random_word(a, rng, 3), y = random_word(a, rng, 3);
      CHECK(a.antipode(a.multiply(x, y)) == a.multiply(a.antipode(y), a.antipode(x)));
    }
  }
}

TEST_CASE("Hopf axioms on generators") {
  Algebra alg(3);
  for (int i = 1; i <= 3; ++i) {
    PosRoot r{i, i + 1};
    for (const Expr& g : {Expr::e(r), Expr::f(r), Expr::k(wt(alg, r))}) {
      AlgElt x = evaluate(alg, g);
      TensorElt d = coproduct(alg, g);
      CHECK(counit_left(alg, d) == x);
      CHECK(counit_right(alg, d) == x);
      CHECK(antipode_left(alg, d) == alg.scalar(alg.counit(x)));
      CHECK(antipode_right(alg, d) == alg.scalar(alg.counit(x)));
    }
  }
  CHECK(coproduct(alg, Expr::k(wt(alg, PosRoot{1, 2}))) ==
        tensor(alg.K(wt(alg, PosRoot{1, 2})), alg.K(wt(alg, PosRoot{1, 2}))));
  // coproduct is multiplicative on the defining relation [e, f]
  PosRoot a{2, 3};
  TensorElt lhs = coproduct(alg, Expr::qbr(Expr::e(a), Expr::f(a), RatFun(1)));
  TensorElt rhs = (tensor(alg.K(wt(alg, a)), alg.K(wt(alg, a))) - tensor(alg.K(-wt(alg, a)), alg.K(-wt(alg, a))))
                      .scaled(RatFun(1) / (q() - q(-1)));
  CHECK(lhs == rhs);
}

TEST_CASE("associativity of normal ordering on random words") {
  std::mt19937_64 rng(2024);
  for (int s = 0; s < 200; ++s) {
    int n = 1 + s % 4;
    Algebra alg(n);
    AlgElt a = random_word(alg, rng, 5), b = random_word(alg, rng, 5), c = random_word(alg, rng, 5);
    CHECK(alg.multiply(alg.multiply(a, b), c) == alg.multiply(a, alg.multiply(b, c)));
  }
}
