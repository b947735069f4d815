#include "qdyn/cli/suites.hpp"

#include "qdyn/exact/qnumbers.hpp"
#include "qdyn/exact/series.hpp"
#include "qdyn/qea/shuffle.hpp"
#include "qdyn/qea/tensor.hpp"
#include "qdyn/star/opseries.hpp"
#include "qdyn/star/qplane.hpp"
#include "qdyn/star/star.hpp"

#include <algorithm>
#include <chrono>
#include <random>
#include <functional>
#include <memory>
#include <stdexcept>

namespace qdyn {

bool Report::ok() const { return failures() == 0; }

int Report::failures() const {
  return static_cast<int>(std::count_if(checks.begin(), checks.end(), [](const Check& c) { return !c.pass; }));
}

const std::vector<std::string>& suite_names() {
  static const std::vector<std::string> names{"relations", "appendix", "pairing", "qplane",
                                              "twist",     "star",     "bordemann", "all"};
  return names;
}

bool is_suite(const std::string& name) {
  const auto& v = suite_names();
  return std::find(v.begin(), v.end(), name) != v.end();
}

namespace {

RatFun q(int k = 1) { return qpow(k); }
RatFun qq() { return q(1) - q(-1); }

// Tallies many instances under one check id; keeps the first failure as witness.
class Tally {
 public:
  Tally(std::vector<Check>& out, std::string id, std::string desc, std::string anchor)
      : out_(out), check_{std::move(id), std::move(desc), std::move(anchor), true, {}} {}
  Tally(const Tally&) = delete;
  ~Tally() {
    if (check_.pass) check_.description += " [" + std::to_string(count_) + " instances]";
    out_.push_back(std::move(check_));
  }
  void expect(bool ok, const std::function<std::string()>& witness) {
    ++count_;
    if (!ok && check_.pass) {
      check_.pass = false;
      check_.witness = witness();
    }
  }
  int count() const { return count_; }

 private:
  std::vector<Check>& out_;
  Check check_;
  int count_ = 0;
};

std::string rank_tag(int n) { return ".n" + std::to_string(n); }

// Linear combination of words in the E root vectors, evaluated in the engine and in the
// shuffle algebra.
struct Lin {
  std::vector<std::pair<RatFun, std::vector<PosRoot>>> terms;
  Lin& add(const RatFun& c, std::vector<PosRoot> w) {
    terms.emplace_back(c, std::move(w));
    return *this;
  }
};

AlgElt eval_engine(Algebra& alg, const Lin& l) {
  AlgElt s;
  for (const auto& [c, w] : l.terms) {
    AlgElt x = alg.scalar(c);
    for (const auto& r : w) x = alg.multiply(x, alg.E(r));
    s += x;
  }
  return s;
}

ShuffleAlgebra::Elt eval_shuffle(ShuffleAlgebra& sh, const Lin& l) {
  ShuffleAlgebra::Elt s;
  for (const auto& [c, w] : l.terms) {
    if (!c.is_polynomial()) throw std::logic_error("shuffle coefficients must be Laurent polynomials");
    ShuffleAlgebra::Elt x = sh.one();
    for (const auto& r : w) x = sh.multiply(x, sh.root_vector(r));
    ShuffleAlgebra::add_to(s, x, c.num());
  }
  return s;
}

AlgElt comm(Algebra& alg, const AlgElt& x, const AlgElt& y) { return alg.multiply(x, y) - alg.multiply(y, x); }

CartanWeight wt(int n, const PosRoot& r) { return CartanWeight::of_root(n, r); }

}  // namespace

// ---- relations -------------------------------------------------------------------------

void relations_commutation(std::vector<Check>& out, int n, bool with_shuffle) {
  Algebra alg(n);
  std::unique_ptr<ShuffleAlgebra> sh;
  if (with_shuffle) sh = std::make_unique<ShuffleAlgebra>(n);
  const auto& R = alg.roots();
  std::string t = rank_tag(n);
  Tally adj(out, "relations.ee.adjacent" + t, "[e_mu, e_nu]_q = e_{mu+nu} for mu left-adjacent to nu",
            "root vector commutation: sum of adjacent roots");
  Tally right(out, "relations.ee.common-right" + t, "[e_mu, e_nu]_{1/q} = 0 for nu a right end of mu",
              "root vector commutation: nested roots sharing the right end");
  Tally left(out, "relations.ee.common-left" + t, "[e_nu, e_mu]_{1/q} = 0 for nu a left end of mu",
             "root vector commutation: nested roots sharing the left end");
  Tally commute(out, "relations.ee.commute" + t, "[e_mu, e_nu] = 0 for strictly nested or separated roots",
                "root vector commutation: strictly nested or separated roots");
  Tally overlap(out, "relations.ee.overlap" + t,
                "[e_mu, e_nu] = -(q-1/q) e_{mu u nu} e_{mu n nu} = -(q-1/q) e_{mu n nu} e_{mu u nu}",
                "root vector commutation: overlapping roots");
  for (int a = 0; a < R.size(); ++a)
    for (int b = a + 1; b < R.size(); ++b) {
      PosRoot mu = R.root(a), nu = R.root(b);  // mu < nu lexicographically
      std::vector<std::pair<Tally*, Lin>> ids;
      if (mu.j == nu.i) {
        ids.push_back({&adj, Lin().add(1, {mu, nu}).add(-q(), {nu, mu}).add(-1, {PosRoot{mu.i, nu.j}})});
      } else if (nu.i > mu.i && nu.j == mu.j) {
        ids.push_back({&right, Lin().add(1, {mu, nu}).add(-q(-1), {nu, mu})});
      } else if (nu.i == mu.i) {
        // mu is the left end of nu
        ids.push_back({&left, Lin().add(1, {mu, nu}).add(-q(-1), {nu, mu})});
      } else if ((nu.i > mu.i && nu.j < mu.j) || nu.i > mu.j) {
        ids.push_back({&commute, Lin().add(1, {mu, nu}).add(-1, {nu, mu})});
      } else if (mu.i < nu.i && nu.i < mu.j && mu.j < nu.j) {
        PosRoot un{mu.i, nu.j}, in{nu.i, mu.j};
        ids.push_back({&overlap, Lin().add(1, {mu, nu}).add(-1, {nu, mu}).add(qq(), {un, in})});
        ids.push_back({&overlap, Lin().add(1, {mu, nu}).add(-1, {nu, mu}).add(qq(), {in, un})});
      } else {
        throw std::logic_error("unclassified root pair " + mu.str() + " " + nu.str());
      }
      for (auto& [tally, lin] : ids) {
        AlgElt e = eval_engine(alg, lin);
        bool ok = e.is_zero();
        std::string where = "mu=" + mu.str() + " nu=" + nu.str();
        if (ok && sh) ok = eval_shuffle(*sh, lin).empty();
        tally->expect(ok, [&] { return where + ": residual " + alg.render(e); });
      }
    }
}

void relations_cross(std::vector<Check>& out, int n, int kmax) {
  Algebra alg(n);
  const auto& R = alg.roots();
  std::string t = rank_tag(n);
  auto E = [&](PosRoot r) { return alg.E(r); };
  auto F = [&](PosRoot r) { return alg.F(r); };
  auto K = [&](PosRoot r, int s) { return alg.K(wt(n, r).scaled(Rat(s))); };
  auto mul = [&](std::initializer_list<AlgElt> xs) {
    AlgElt r = alg.one();
    for (const auto& x : xs) r = alg.multiply(r, x);
    return r;
  };
  auto render_pair = [&](const AlgElt& l, const AlgElt& r) { return alg.render(l) + " vs " + alg.render(r); };
  {
    Tally c(out, "relations.ef.diagonal" + t, "[e_g, f_g] = (q^{h_g} - q^{-h_g})/(q - 1/q)",
            "mixed relations: equal roots");
    for (int i = 0; i < R.size(); ++i) {
      PosRoot g = R.root(i);
      AlgElt l = comm(alg, E(g), F(g)), r = alg.cartan_bracket(g);
      c.expect(l == r, [&] { return g.str() + ": " + render_pair(l, r); });
    }
  }
  Tally c1(out, "relations.ef.left-part" + t, "[e_g, f_{g+m}] = -q^{-1} f_m q^{-h_g}, g the left part",
           "mixed relations: e against a longer f");
  Tally c2(out, "relations.ef.right-part" + t, "[e_g, f_{m+g}] = f_m q^{h_g}, g the right part",
           "mixed relations: e against a longer f");
  Tally c3(out, "relations.fe.left-part" + t,
           "[f_g, e_{g+m}] = e_m q^{h_g}, g the left part (printed with f_m, a misprint)",
           "mixed relations: f against a longer e");
  Tally c4(out, "relations.fe.right-part" + t, "[f_g, e_{m+g}] = -q e_m q^{-h_g}, g the right part",
           "mixed relations: f against a longer e");
  Tally c5(out, "relations.interior" + t, "[f_g, e_{m+g+v}] = 0 = [e_g, f_{m+g+v}] for g strictly inside",
           "mixed relations: interior roots");
  Tally c6(out, "relations.overlap" + t, "[e_{m+g}, f_{g+v}] = (q - 1/q) f_v e_m q^{-h_g}",
           "mixed relations: overlapping roots");
  for (int i = 0; i < R.size(); ++i)
    for (int j = 0; j < R.size(); ++j) {
      PosRoot g = R.root(i), o = R.root(j);
      if (o.i == g.i && o.j > g.j) {  // o = g + m
        PosRoot m{g.j, o.j};
        AlgElt l = comm(alg, E(g), F(o)), r = mul({F(m), K(g, -1)}).scaled(-q(-1));
        c1.expect(l == r, [&] { return g.str() + "," + o.str() + ": " + render_pair(l, r); });
        AlgElt l3 = comm(alg, F(g), E(o)), r3 = mul({E(m), K(g, 1)});
        c3.expect(l3 == r3, [&] { return g.str() + "," + o.str() + ": " + render_pair(l3, r3); });
      }
      if (o.j == g.j && o.i < g.i) {  // o = m + g
        PosRoot m{o.i, g.i};
        AlgElt l = comm(alg, E(g), F(o)), r = mul({F(m), K(g, 1)});
        c2.expect(l == r, [&] { return g.str() + "," + o.str() + ": " + render_pair(l, r); });
        AlgElt l4 = comm(alg, F(g), E(o)), r4 = mul({E(m), K(g, -1)}).scaled(-q());
        c4.expect(l4 == r4, [&] { return g.str() + "," + o.str() + ": " + render_pair(l4, r4); });
      }
      if (o.i < g.i && g.j < o.j) {
        AlgElt a = comm(alg, F(g), E(o)), b = comm(alg, E(g), F(o));
        c5.expect(a.is_zero() && b.is_zero(), [&] { return g.str() + " in " + o.str() + ": " + render_pair(a, b); });
      }
    }
  // [e_{m+g}, f_{g+v}] for m = (a,b), g = (b,c), v = (c,d)
  for (int a = 1; a <= n + 1; ++a)
    for (int b = a + 1; b <= n + 1; ++b)
      for (int cc = b + 1; cc <= n + 1; ++cc)
        for (int d = cc + 1; d <= n + 1; ++d) {
          PosRoot m{a, b}, g{b, cc}, v{cc, d};
          AlgElt l = comm(alg, E(PosRoot{a, cc}), F(PosRoot{b, d}));
          AlgElt r = mul({F(v), E(m), K(g, -1)}).scaled(qq());
          c6.expect(l == r, [&] { return m.str() + "," + g.str() + "," + v.str() + ": " + render_pair(l, r); });
        }

  Tally k1(out, "relations.powers.left" + t,
           "[e_m, f_{m+v}^k] = -q^{-1} (q^{2k}-1)/(q^2-1) f_{m+v}^{k-1} f_v q^{-h_m}",
           "mixed relations: powers of a composite f");
  Tally k2(out, "relations.powers.right" + t,
           "[e_v, f_{m+v}^k] = q^{1-k} (q^{2k}-1)/(q^2-1) f_m f_{m+v}^{k-1} q^{h_v}",
           "mixed relations: powers of a composite f");
  Tally k3(out, "relations.powers.diagonal" + t,
           "[e_v, f_v^k] = f_v^{k-1}(q^{h_v+1}(1-q^{-2k}) + q^{-h_v-1}(1-q^{2k}))/(q-1/q)^2",
           "mixed relations: powers of f");
  for (int k = 1; k <= kmax; ++k) {
    RatFun ratio = (q(2 * k) - RatFun(1)) / (q(2) - RatFun(1));
    for (int a = 1; a <= n + 1; ++a)
      for (int b = a + 1; b <= n + 1; ++b)
        for (int d = b + 1; d <= n + 1; ++d) {
          PosRoot m{a, b}, v{b, d}, mv{a, d};
          AlgElt fk = alg.pow(F(mv), k), fk1 = alg.pow(F(mv), k - 1);
          AlgElt l = comm(alg, E(m), fk), r = mul({fk1, F(v), K(m, -1)}).scaled(-q(-1) * ratio);
          k1.expect(l == r, [&] { return "k=" + std::to_string(k) + " " + m.str() + "," + v.str() + ": " + render_pair(l, r); });
          AlgElt l2 = comm(alg, E(v), fk), r2 = mul({F(m), fk1, K(v, 1)}).scaled(q(1 - k) * ratio);
          k2.expect(l2 == r2, [&] { return "k=" + std::to_string(k) + " " + m.str() + "," + v.str() + ": " + render_pair(l2, r2); });
        }
    for (int i = 0; i < R.size(); ++i) {
      PosRoot v = R.root(i);
      AlgElt fk = alg.pow(F(v), k), fk1 = alg.pow(F(v), k - 1);
      RatFun den = qq() * qq();
      AlgElt cart = K(v, 1).scaled(q() * (RatFun(1) - q(-2 * k)) / den) + K(v, -1).scaled(q(-1) * (RatFun(1) - q(2 * k)) / den);
      AlgElt l = comm(alg, E(v), fk), r = alg.multiply(fk1, cart);
      k3.expect(l == r, [&] { return "k=" + std::to_string(k) + " " + v.str() + ": " + render_pair(l, r); });
    }
  }
}

void antipode_tilde(std::vector<Check>& out, int n) {
  Algebra alg(n);
  Tally c(out, "antipode.tilde" + rank_tag(n), "gamma(e~_mu) = -q^{-h_mu} e_mu for every positive root",
          "antipode on the modified root vectors");
  for (int i = 0; i < alg.roots().size(); ++i) {
    PosRoot mu = alg.roots().root(i);
    AlgElt l = alg.antipode(evaluate(alg, root_e_tilde(mu)));
    AlgElt r = alg.multiply(alg.K(wt(n, mu).scaled(Rat(-1))), alg.E(mu)).scaled(RatFun(-1));
    c.expect(l == r, [&] { return mu.str() + ": " + alg.render(l) + " vs " + alg.render(r); });
  }
}

// ---- appendix --------------------------------------------------------------------------

namespace {

AlgElt random_element(Algebra& alg, std::mt19937_64& rng) {
  int n = alg.rank();
  const auto& R = alg.roots();
  std::uniform_int_distribution<int> root(0, R.size() - 1), kind(0, 2), len(1, 2), terms(1, 2), cw(-1, 1), cf(-2, 2);
  AlgElt s;
  int nt = terms(rng);
  for (int t = 0; t < nt; ++t) {
    AlgElt x = alg.scalar(RatFun(cf(rng) == 0 ? 1 : cf(rng) + 3) * q(cf(rng)));
    int l = len(rng);
    for (int i = 0; i < l; ++i) {
      int k = kind(rng);
      if (k == 0)
        x = alg.multiply(x, alg.E(R.root(root(rng))));
      else if (k == 1)
        x = alg.multiply(x, alg.F(R.root(root(rng))));
      else {
        CartanWeight w = CartanWeight::zero(n);
        for (auto& c : w.c) c = Rat(cw(rng));
        x = alg.multiply(x, alg.K(w));
      }
    }
    s += x;
  }
  return s;
}

RatFun random_scalar(std::mt19937_64& rng) {
  std::uniform_int_distribution<int> e(-2, 2), c(1, 4), sgn(0, 1);
  return RatFun(Rat(sgn(rng) ? c(rng) : -c(rng), c(rng))) * q(e(rng));
}

}  // namespace

void appendix_jacobi(std::vector<Check>& out, int samples, unsigned long long seed) {
  std::mt19937_64 rng(seed);
  Algebra alg2(2), alg3(3);
  Tally c(out, "appendix.jacobi", "[x,[y,z]_a]_b = [[x,y]_c,z]_{ab/c} + c [y,[x,z]_{b/c}]_{a/c} on random elements",
          "q-Jacobi identity");
  for (int s = 0; s < samples; ++s) {
    Algebra& alg = s % 2 ? alg3 : alg2;
    AlgElt x = random_element(alg, rng), y = random_element(alg, rng), z = random_element(alg, rng);
    RatFun a = random_scalar(rng), b = random_scalar(rng), cc = random_scalar(rng);
    AlgElt l = alg.qbracket(x, alg.qbracket(y, z, a), b);
    AlgElt r = alg.qbracket(alg.qbracket(x, y, cc), z, a * b / cc) +
               alg.qbracket(y, alg.qbracket(x, z, b / cc), a / cc).scaled(cc);
    c.expect(l == r, [&] {
      return "x=" + alg.render(x) + " y=" + alg.render(y) + " z=" + alg.render(z) + " a=" + a.str() + " b=" + b.str() +
             " c=" + cc.str();
    });
  }
}

void appendix_lemmas(std::vector<Check>& out, int n) {
  Algebra alg(n);
  const auto& R = alg.roots();
  std::string t = rank_tag(n);
  std::vector<AlgElt> e;
  for (int i = 0; i < R.size(); ++i) e.push_back(alg.E(R.root(i)));
  std::vector<RatFun> ab{q(), q(-1)};
  auto br = [&](const AlgElt& x, const AlgElt& y, const RatFun& c) { return alg.qbracket(x, y, c); };
  {
    Tally c(out, "appendix.adjacent" + t,
            "[y,[y,z]_b]_{1/b} = 0, [x,[x,y]_a]_{1/a} = 0, [x,z] = 0 imply [[x,y]_a,[[x,y]_a,z]_b]_{1/b} = 0",
            "Serre relation for adjacent root vectors");
    int admissible = 0;
    for (std::size_t x = 0; x < e.size(); ++x)
      for (std::size_t z = 0; z < e.size(); ++z) {
        if (!comm(alg, e[x], e[z]).is_zero()) continue;
        for (std::size_t y = 0; y < e.size(); ++y)
          for (const auto& a : ab) {
            AlgElt xy = br(e[x], e[y], a);
            if (xy.is_zero() || !br(e[x], xy, a.inverse()).is_zero()) continue;
            for (const auto& b : ab) {
              if (!br(e[y], br(e[y], e[z], b), b.inverse()).is_zero()) continue;
              ++admissible;
              AlgElt concl = br(xy, br(xy, e[z], b), b.inverse());
              c.expect(concl.is_zero(), [&] {
                return "x=" + R.root(static_cast<int>(x)).str() + " y=" + R.root(static_cast<int>(y)).str() +
                       " z=" + R.root(static_cast<int>(z)).str() + " a=" + a.str() + " b=" + b.str();
              });
            }
          }
      }
    if (admissible == 0) c.expect(n < 3, [] { return std::string("no admissible triple"); });
  }
  {
    Tally c(out, "appendix.xyyz" + t,
            "[y,[y,x]_q]_{1/q} = 0, [y,[y,z]_q]_{1/q} = 0, [x,z] = 0 imply [y,[x,[y,z]_q]_q] = 0",
            "commutation of y with x[y,z]");
    int admissible = 0;
    for (std::size_t x = 0; x < e.size(); ++x)
      for (std::size_t z = 0; z < e.size(); ++z) {
        if (!comm(alg, e[x], e[z]).is_zero()) continue;
        for (std::size_t y = 0; y < e.size(); ++y) {
          if (!br(e[y], br(e[y], e[x], q()), q(-1)).is_zero()) continue;
          if (!br(e[y], br(e[y], e[z], q()), q(-1)).is_zero()) continue;
          ++admissible;
          AlgElt concl = comm(alg, e[y], br(e[x], br(e[y], e[z], q()), q()));
          c.expect(concl.is_zero(), [&] {
            return "x=" + R.root(static_cast<int>(x)).str() + " y=" + R.root(static_cast<int>(y)).str() +
                   " z=" + R.root(static_cast<int>(z)).str() + ": " + alg.render(concl);
          });
        }
      }
    if (admissible == 0) c.expect(n < 2, [] { return std::string("no admissible triple"); });
  }
}

// ---- pairing ---------------------------------------------------------------------------

namespace {
std::string exps_str(const ExpVec& m) {
  std::string s = "(";
  for (std::size_t i = 0; i < m.size(); ++i) s += (i ? "," : "") + std::to_string(m[i]);
  return s + ")";
}
}  // namespace

void pairing_checks(std::vector<Check>& out, int n, int degree) {
  Algebra alg(n);
  ParabolicVerma M(alg);
  std::string t = rank_tag(n);
  Tally diag(out, "pairing.plain.diagonal" + t,
             "<x~^m v_-l, y^m v_l> = (-1)^|m| q^{-psi(m)} prod m_i^! prod_{j<|m|} [l-j]_q",
             "matrix coefficients of the invariant pairing");
  Tally mixed(out, "pairing.plain.mixed" + t, "<x~^k v_-l, y^m v_l> = 0 for k != m",
              "pairing vanishes unless the exponents agree");
  Tally tdiag(out, "pairing.tilde.diagonal" + t, "the same diagonal values in the y~ basis",
              "pairing in the modified basis");
  Tally tmixed(out, "pairing.tilde.mixed" + t, "mixed pairings vanish in the y~ basis",
               "pairing in the modified basis");
  for (int d = 0; d <= degree; ++d)
    for (const auto& m : exponent_vectors(n, d)) {
      auto row = M.pairing_row(m);
      RatFun expect = closed_form_coeff(m);
      // y~^m v_l is a scalar multiple of y^m v_l
      VermaVector tv = M.tilde_vector(m);
      RatFun scale = tv.coeff(m);
      bool single = tv.terms.size() == 1;
      for (const auto& [k, val] : row) {
        if (k == m) {
          diag.expect(val == expect, [&] { return "m=" + exps_str(m) + ": " + val.str() + " vs " + expect.str(); });
          RatFun tval = scale * val;
          tdiag.expect(single && tval == expect,
                       [&] { return "m=" + exps_str(m) + ": " + tval.str() + " vs " + expect.str(); });
        } else {
          mixed.expect(val.is_zero(), [&] { return "k=" + exps_str(k) + " m=" + exps_str(m) + ": " + val.str(); });
          tmixed.expect(single && (scale * val).is_zero(),
                        [&] { return "k=" + exps_str(k) + " m=" + exps_str(m) + ": " + (scale * val).str(); });
        }
      }
    }
  if (degree >= 1 && n <= 2) {
    Tally lit(out, "pairing.literal" + t, "module route agrees with the literal product in U for |m| <= 2",
              "definition of the invariant pairing");
    for (int d = 0; d <= std::min(degree, 2); ++d)
      for (const auto& m : exponent_vectors(n, d))
        for (const auto& k : exponent_vectors(n, d)) {
          RatFun a = M.pairing_basis(k, m), b = M.pairing_via_algebra(k, m);
          lit.expect(a == b, [&] { return "k=" + exps_str(k) + " m=" + exps_str(m) + ": " + a.str() + " vs " + b.str(); });
        }
  }
}

// ---- quantum plane / twist ------------------------------------------------------------------

void qplane_checks(std::vector<Check>& out, int n, int m) {
  Algebra alg(n);
  ParabolicVerma M(alg);
  std::string t = rank_tag(n);
  {
    Tally c(out, "qplane.relations" + t, "D_j D_i = q^2 D_i D_j for j < i, D_i = y~_i (x) x~_i",
            "quantum plane relations");
    auto bad = quantum_plane_failures(M);
    int pairs = n * (n - 1) / 2;
    for (int p = 0; p < pairs; ++p)
      c.expect(bad.empty(), [&] { return "pair (" + std::to_string(bad[0].first) + "," + std::to_string(bad[0].second) + ")"; });
    if (pairs == 0) c.expect(true, {});
  }
  {
    Tally c(out, "qplane.plain-commute" + t, "y_i (x) x~_i commute pairwise", "plain tensors commute");
    auto bad = plain_tensor_failures(M);
    c.expect(bad.empty(), [&] { return "pair (" + std::to_string(bad[0].first) + "," + std::to_string(bad[0].second) + ")"; });
  }
  {
    Tally c(out, "qplane.binomial.abstract" + t, "(D_1+...+D_n)^m = sum m^!/(m_1^!...m_n^!) D_n^{m_n}...D_1^{m_1}",
            "q-multinomial expansion");
    for (int k = 0; k <= m; ++k) c.expect(q_binomial_abstract(n, k), [&] { return "m=" + std::to_string(k); });
  }
  {
    Tally c(out, "qplane.binomial.concrete" + t, "the q-multinomial expansion for the tensors D_i in U (x) U",
            "q-multinomial expansion");
    for (int k = 0; k <= m; ++k) c.expect(q_binomial_concrete(M, k), [&] { return "m=" + std::to_string(k); });
  }
}

void twist_checks(std::vector<Check>& out, int n, int M) {
  std::string t = rank_tag(n);
  {
    Tally c(out, "twist.inverse.closed" + t, "twist coefficient times the closed-form pairing is 1 for |m| <= M",
            "lift of the inverse invariant form");
    auto r = inverse_form_check(M, n);
    for (int i = 0; i < r.checked; ++i) c.expect(true, {});
    c.expect(r.ok, [&] { return r.witness; });
  }
  {
    Algebra alg(n);
    ParabolicVerma V(alg);
    Tally c(out, "twist.inverse.oracle" + t, "twist coefficient times the y~-basis pairing is 1 for |m| <= M",
            "lift of the inverse invariant form");
    auto r = inverse_form_check(M, n, &V);
    for (int i = 0; i < r.checked; ++i) c.expect(true, {});
    c.expect(r.ok, [&] { return r.witness; });
  }
}

void classical_limit_checks(std::vector<Check>& out, int m) {
  Tally c(out, "twist.classical-limit", "q -> 1 then lambda -> lambda/t gives (-t)^m/(m! prod (lambda - j t))",
          "classical limit of the twist");
  for (int k = 0; k <= m; ++k) {
    RatFun a = twist_coeff_classical(k), b = classical_star_coeff(k);
    c.expect(a == b, [&] { return "m=" + std::to_string(k) + ": " + a.str() + " vs " + b.str(); });
  }
  // per multi-index, n = 2: the q-multinomial goes to the ordinary one
  for (int k = 0; k <= m; ++k)
    for (const auto& mm : exponent_vectors(2, k)) {
      RatFun a = twist_coeff_classical(k) * classical_limit(q_multinomial(mm));
      RatFun b = star_coeff(mm);
      c.expect(a == b, [&] { return "m=" + exps_str(mm) + ": " + a.str() + " vs " + b.str(); });
    }
}

// ---- star product ---------------------------------------------------------------------------

void star_checks(std::vector<Check>& out, int n, int samples, unsigned long long seed) {
  std::mt19937_64 rng(seed);
  std::string t = rank_tag(n);
  ChartPoly one(n, RatFun(1));
  {
    Tally c(out, "star.unit" + t, "1 * f = f * 1 = f", "unitality of the star product");
    for (int s = 0; s < samples; ++s) {
      ChartPoly f = random_chart_poly(n, 3, rng);
      c.expect(star_classical(one, f) == f && star_classical(f, one) == f, [&] { return "f=" + f.str(); });
    }
  }
  {
    Tally c(out, "star.assoc" + t, "(f*g)*h = f*(g*h) on random triples of degree <= 3",
            "associativity of the star product");
    for (int s = 0; s < samples; ++s) {
      ChartPoly f = random_chart_poly(n, 3, rng), g = random_chart_poly(n, 3, rng), h = random_chart_poly(n, 3, rng);
      ChartPoly l = star_classical(star_classical(f, g), h), r = star_classical(f, star_classical(g, h));
      c.expect(l == r, [&] { return "f=" + f.str() + " g=" + g.str() + " h=" + h.str() + " diff " + (l - r).str(); });
    }
  }
  if (n == 1) {
    Tally c(out, "star.commutator", "zt1*om1 - om1*zt1 = -t/lambda", "commutator of the chart coordinates");
    ChartPoly z = ChartPoly::zeta(1, 1), w = ChartPoly::omega(1, 1);
    ChartPoly d = star_classical(z, w) - star_classical(w, z);
    ChartPoly expect(1, -RatFun::var(Sym::t) / RatFun::var(Sym::lambda));
    c.expect(d == expect, [&] { return d.str(); });
  }
  {
    Tally c(out, "star.invariance" + t, "X(f*g) = Xf*g + f*Xg for every gl(n+1) field X",
            "invariance of the star product");
    int per = std::max(1, samples / ((n + 1) * (n + 1)));
    for (int a = 0; a <= n; ++a)
      for (int b = 0; b <= n; ++b) {
        DiffOp X = gl_field(a, b, n);
        for (int s = 0; s < per; ++s) {
          ChartPoly f = random_chart_poly(n, 2, rng), g = random_chart_poly(n, 2, rng);
          ChartPoly l = X.apply(star_classical(f, g));
          ChartPoly r = star_classical(X.apply(f), g) + star_classical(f, X.apply(g));
          c.expect(l == r, [&] {
            return "E_" + std::to_string(a) + std::to_string(b) + " f=" + f.str() + " g=" + g.str();
          });
        }
      }
  }
}

// ---- series comparison ----------------------------------------------------------------------

void bordemann_checks(std::vector<Check>& out, int order, int samples, unsigned long long seed) {
  {
    Tally c(out, "bordemann.compare", "restricted Bordemann operator equals the twist series under 2mu - t = lambda",
            "comparison of the two star products");
    std::string w;
    bool ok = true;
    try {
      compare_series(order);
    } catch (const MismatchAt& e) {
      ok = false;
      w = e.what();
    }
    c.expect(ok, [&] { return w; });
  }
  {
    Tally c(out, "bordemann.detector", "perturbing one coefficient is reported as a mismatch",
            "comparison of the two star products");
    auto B = bordemann_series(std::max(order, 2));
    B.add(2, 1, RatFun(1));
    bool caught = false;
    try {
      compare_series(B, twist_series(std::max(order, 2)));
    } catch (const MismatchAt& e) {
      caught = e.r == 2 && e.s == 1;
    }
    c.expect(caught, [] { return std::string("no mismatch reported"); });
  }
  {
    Tally c(out, "bordemann.hsym", "complete homogeneous sums equal the partial-fraction and integer-point forms",
            "symmetric function identity");
    auto r = hsym_identities(5, std::max(order, 5), samples, seed);
    for (int i = 0; i < r.checked; ++i) c.expect(true, {});
    c.expect(r.ok, [&] { return r.witness; });
  }
}

// ---- driver ------------------------------------------------------------------------------

Report run_suite(const std::string& name, const SuiteOptions& opt) {
  if (!is_suite(name)) throw std::invalid_argument("unknown suite '" + name + "'");
  if (opt.n < 1) throw std::invalid_argument("--n must be at least 1");
  auto start = std::chrono::steady_clock::now();
  Report rep;
  rep.suite = name;
  auto& out = rep.checks;
  bool all = name == "all";
  if (all || name == "relations") {
    for (int n = 1; n <= opt.n; ++n) {
      relations_commutation(out, n, true);
      relations_cross(out, n, 4);
      antipode_tilde(out, n);
    }
  }
  if (all || name == "appendix") {
    appendix_jacobi(out, std::max(opt.samples, 1), opt.seed);
    for (int n = 1; n <= opt.n; ++n) appendix_lemmas(out, n);
  }
  if (all || name == "pairing")
    for (int n = 1; n <= opt.n; ++n) pairing_checks(out, n, opt.degree);
  if (all || name == "qplane")
    for (int n = 1; n <= opt.n; ++n) qplane_checks(out, n, opt.degree);
  if (all || name == "twist") {
    for (int n = 1; n <= opt.n; ++n) twist_checks(out, n, opt.degree);
    classical_limit_checks(out, std::max(opt.degree, 5));
  }
  if (all || name == "star")
    for (int n = 1; n <= opt.n; ++n) star_checks(out, n, opt.samples, opt.seed);
  if (all || name == "bordemann") bordemann_checks(out, opt.order, 20, opt.seed);
  std::stable_sort(out.begin(), out.end(), [](const Check& a, const Check& b) { return a.id < b.id; });
  rep.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return rep;
}

}  // namespace qdyn
