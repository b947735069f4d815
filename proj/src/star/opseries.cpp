#include "qdyn/star/opseries.hpp"

#include <random>
#include <set>

namespace qdyn {

RatFun OperatorSeries::at(int r, int s) const {
  auto it = entries.find({r, s});
  return it == entries.end() ? RatFun(0) : it->second;
}

void OperatorSeries::add(int r, int s, const RatFun& c) {
  if (c.is_zero()) return;
  auto [it, ins] = entries.try_emplace({r, s}, c);
  if (!ins) {
    it->second += c;
    if (it->second.is_zero()) entries.erase(it);
  }
}

MismatchAt::MismatchAt(int r_, int s_, RatFun l, RatFun rr)
    : std::runtime_error("series differ at r=" + std::to_string(r_) + ", s=" + std::to_string(s_) + ": " + l.str() +
                         " vs " + rr.str()),
      r(r_), s(s_), left(std::move(l)), right(std::move(rr)) {}

namespace {
Rat ipow(long base, int e) { return Rat(base).pow(e); }
}  // namespace

OperatorSeries bordemann_series(int R) {
  OperatorSeries out;
  out.R = R;
  out.add(0, 0, RatFun(1));
  RatFun step = -(RatFun(2) * RatFun::var(Sym::mu)).inverse();  // -1/(2 mu)
  for (int r = 1; r <= R; ++r) {
    RatFun pre = step.pow(r);
    for (int s = 1; s <= r; ++s) {
      Rat c(0);
      for (int k = 1; k <= s; ++k) {
        Rat term = ipow(k, r - 1) / (factorial(s) * factorial(s - k) * factorial(k - 1));
        c += (r - k) % 2 ? -term : term;
      }
      out.add(r, s, pre * RatFun(c));
    }
  }
  return out;
}

OperatorSeries twist_series(int R) {
  OperatorSeries out;
  out.R = R;
  RatFun inv2mu = (RatFun(2) * RatFun::var(Sym::mu)).inverse();
  for (int m = 0; m <= R; ++m) {
    // (-t)^m / m! * prod_{j<m} 1/(2mu - (j+1) t), as a power series in t
    std::vector<RatFun> ser(static_cast<std::size_t>(R + 1), RatFun(0));
    ser[0] = RatFun(m % 2 ? -1 : 1) / RatFun(factorial(m));
    for (int j = 0; j < m; ++j) {
      // 1/(2mu - c t) = sum_p c^p t^p / (2mu)^{p+1}
      std::vector<RatFun> geo(static_cast<std::size_t>(R + 1));
      for (int p = 0; p <= R; ++p) geo[static_cast<std::size_t>(p)] = RatFun(ipow(j + 1, p)) * inv2mu.pow(p + 1);
      std::vector<RatFun> next(static_cast<std::size_t>(R + 1), RatFun(0));
      for (int a = 0; a <= R; ++a) {
        if (ser[static_cast<std::size_t>(a)].is_zero()) continue;
        for (int b = 0; a + b <= R; ++b)
          next[static_cast<std::size_t>(a + b)] += ser[static_cast<std::size_t>(a)] * geo[static_cast<std::size_t>(b)];
      }
      ser = std::move(next);
    }
    for (int p = 0; p + m <= R; ++p) out.add(p + m, m, ser[static_cast<std::size_t>(p)]);
  }
  return out;
}

void compare_series(const OperatorSeries& a, const OperatorSeries& b) {
  int R = std::min(a.R, b.R);
  for (int r = 0; r <= R; ++r)
    for (int s = 0; s <= r; ++s) {
      RatFun x = a.at(r, s), y = b.at(r, s);
      if (!(x == y)) throw MismatchAt(r, s, x, y);
    }
}

void compare_series(int R) { compare_series(bordemann_series(R), twist_series(R)); }

Rat complete_homogeneous(const std::vector<Rat>& a, int k) {
  // h_k(a_1..a_m) by the recursion over the last variable
  std::vector<Rat> h(static_cast<std::size_t>(k + 1), Rat(0));
  h[0] = Rat(1);
  for (const Rat& x : a)
    for (int d = 1; d <= k; ++d) h[static_cast<std::size_t>(d)] += x * h[static_cast<std::size_t>(d - 1)];
  return h[static_cast<std::size_t>(k)];
}

Rat partial_fraction_side(const std::vector<Rat>& a, int k) {
  Rat s(0);
  int m = static_cast<int>(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) {
    Rat den(1);
    for (std::size_t j = 0; j < a.size(); ++j)
      if (j != i) den *= a[i] - a[j];
    s += a[i].pow(k + m - 1) / den;
  }
  return s;
}

Rat integer_point_side(int m, int r) {
  Rat s(0);
  for (int k = 1; k <= m; ++k) {
    Rat term = ipow(k, r - 1) / (factorial(k - 1) * factorial(m - k));
    s += (m - k) % 2 ? -term : term;
  }
  return s;
}

namespace {

// Brute-force sum over compositions, independent of complete_homogeneous's recursion.
Rat composition_sum(const std::vector<Rat>& a, std::size_t pos, int left) {
  if (pos + 1 == a.size()) return a[pos].pow(left);
  Rat s(0);
  for (int k = 0; k <= left; ++k) s += a[pos].pow(k) * composition_sum(a, pos + 1, left - k);
  return s;
}

}  // namespace

HsymResult hsym_identities(int max_m, int max_r, int samples, unsigned long long seed) {
  HsymResult res;
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<int> num(-30, 30), den(1, 12);
  for (int m = 1; m <= max_m; ++m) {
    std::vector<Rat> ints;
    for (int i = 1; i <= m; ++i) ints.emplace_back(i);
    for (int r = m; r <= max_r; ++r) {
      Rat lhs = composition_sum(ints, 0, r - m);
      Rat mid = partial_fraction_side(ints, r - m);
      Rat rhs = integer_point_side(m, r);
      ++res.checked;
      if (lhs != rhs || lhs != mid) {
        res.ok = false;
        res.witness = "m=" + std::to_string(m) + " r=" + std::to_string(r) + ": " + lhs.str() + " vs " + rhs.str();
        return res;
      }
    }
    for (int sample = 0; sample < samples; ++sample) {
      std::vector<Rat> a;
      std::set<Rat> seen;
      while (static_cast<int>(a.size()) < m) {
        Rat x(num(rng), den(rng));
        if (seen.insert(x).second) a.push_back(x);
      }
      for (int k = 0; k + m <= max_r; ++k) {
        Rat lhs = composition_sum(a, 0, k), rhs = partial_fraction_side(a, k);
        ++res.checked;
        if (lhs != rhs || lhs != complete_homogeneous(a, k)) {
          std::string t;
          for (const auto& x : a) t += x.str() + " ";
          res.ok = false;
          res.witness = "a=(" + t + ") k=" + std::to_string(k) + ": " + lhs.str() + " vs " + rhs.str();
          return res;
        }
      }
    }
  }
  return res;
}

}  // namespace qdyn
