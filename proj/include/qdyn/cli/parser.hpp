#pragma once

#include "qdyn/qea/expr.hpp"
#include "qdyn/star/chart.hpp"

#include <memory>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace qdyn {

struct ParseError : std::runtime_error {
  std::size_t pos;
  ParseError(const std::string& msg, std::size_t p)
      : std::runtime_error(msg + " at offset " + std::to_string(p)), pos(p) {}
};

struct Ast {
  enum class Kind { Num, Ident, Call, Add, Sub, Mul, Div, Neg, Pow };
  Kind kind = Kind::Num;
  Rat num;
  int exponent = 0;  // Pow
  std::string name;  // Ident, Call
  std::vector<std::shared_ptr<Ast>> args;
  std::shared_ptr<Ast> param;  // qbr(x, y; a)
  std::size_t pos = 0;
};
using AstPtr = std::shared_ptr<Ast>;

// expr := term (('+'|'-') term)* ; term := unary (('*'|'/') unary)* ;
// unary := '-' unary | atom ('^' '-'? int)? ; atom := number | ident | ident '(' args ')' | '(' expr ')'
AstPtr parse_ast(std::string_view text);

// q, L, lambda, t, mu and rational numbers.
RatFun to_ratfun(const AstPtr& a);
// E(i,j), F(i,j), TE(i,j) (E(i) = E(i,i+1)), K(c_1,...,c_n), qbr(x, y; a), scalars.
Expr to_expr(const AstPtr& a, int n);
// zt1.., om1.. with coefficients in lambda, t.
ChartPoly to_chart(const AstPtr& a, int n);

inline RatFun parse_ratfun(std::string_view s) { return to_ratfun(parse_ast(s)); }
inline Expr parse_expr(std::string_view s, int n) { return to_expr(parse_ast(s), n); }
inline ChartPoly parse_chart(std::string_view s, int n) { return to_chart(parse_ast(s), n); }

}  // namespace qdyn
