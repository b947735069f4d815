#pragma once

#include "qdyn/exact/rat.hpp"

#include <array>
#include <compare>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

namespace qdyn {

// Indeterminates of the scalar ring. q and L (= q^lambda) are Laurent, the rest polynomial.
enum class Sym : std::uint8_t { q = 0, L = 1, lambda = 2, t = 3, mu = 4 };
inline constexpr std::size_t kSymCount = 5;
inline constexpr bool is_laurent(Sym s) { return s == Sym::q || s == Sym::L; }
const char* sym_name(Sym s);
std::optional<Sym> sym_from_name(std::string_view name);

using Exps = std::array<std::int32_t, kSymCount>;

// Partial assignment of indeterminates to rationals.
class Assignment {
 public:
  Assignment() = default;
  Assignment(std::initializer_list<std::pair<Sym, Rat>> init) {
    for (auto& [s, v] : init) set(s, v);
  }
  Assignment& set(Sym s, Rat v) { vals_[static_cast<int>(s)] = std::move(v); return *this; }
  const std::optional<Rat>& get(Sym s) const { return vals_[static_cast<int>(s)]; }

 private:
  std::array<std::optional<Rat>, kSymCount> vals_;
};

// Sparse Laurent polynomial with rational coefficients, terms sorted by descending
// graded-lex order on the exponent vector (leading term first).
class MPoly {
 public:
  struct Term {
    Exps exps{};
    Rat coeff;
  };

  MPoly() = default;
  MPoly(Rat c);
  MPoly(int c) : MPoly(Rat(c)) {}
  static MPoly var(Sym s, int power = 1);
  static MPoly monomial(const Exps& e, Rat c);

  const std::vector<Term>& terms() const { return terms_; }
  std::size_t size() const { return terms_.size(); }
  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const;
  bool is_monomial() const { return terms_.size() == 1; }
  // Constant coefficient (exponent vector zero).
  Rat constant_term() const;
  const Term& leading() const { return terms_.front(); }

  int degree(Sym s) const;
  int min_degree(Sym s) const;
  bool uses(Sym s) const;

  MPoly operator-() const;
  MPoly& operator+=(const MPoly& o);
  MPoly& operator-=(const MPoly& o);
  MPoly& operator*=(const MPoly& o) { *this = *this * o; return *this; }
  friend MPoly operator+(MPoly a, const MPoly& b) { return a += b; }
  friend MPoly operator-(MPoly a, const MPoly& b) { return a -= b; }
  friend MPoly operator*(const MPoly& a, const MPoly& b);

  MPoly scaled(const Rat& c) const;
  // Multiply by the monomial x^e.
  MPoly shifted(const Exps& e) const;
  MPoly pow(unsigned e) const;

  // Rational content with the sign of the leading coefficient; this / content is primitive.
  Rat content() const;

  Rat eval(const Assignment& a) const;

  friend bool operator==(const MPoly& a, const MPoly& b);
  friend std::strong_ordering operator<=>(const MPoly& a, const MPoly& b);

  std::string str() const;

 private:
  std::vector<Term> terms_;
  void normalize();
  friend class MPolyBuilder;
};

// Graded-lex comparison of exponent vectors.
std::strong_ordering grlex(const Exps& a, const Exps& b);

// Accumulates terms and produces a normalized polynomial.
class MPolyBuilder {
 public:
  void add(const Exps& e, const Rat& c);
  void add(const MPoly& p, const Rat& scale = Rat(1), const Exps* shift = nullptr);
  MPoly build();

 private:
  std::map<Exps, Rat> acc_;
};

// Exact quotient a / b in the Laurent ring, or nullopt if b does not divide a.
std::optional<MPoly> divide_exact(const MPoly& a, const MPoly& b);

}  // namespace qdyn
