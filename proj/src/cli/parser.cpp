#include "qdyn/cli/parser.hpp"

#include <cctype>

namespace qdyn {

namespace {

class Parser {
 public:
  explicit Parser(std::string_view s) : s_(s) {}

  AstPtr parse() {
    skip();
    if (p_ >= s_.size()) throw ParseError("empty input", p_);
    AstPtr a = expr();
    skip();
    if (p_ < s_.size()) throw ParseError(std::string("unexpected '") + s_[p_] + "'", p_);
    return a;
  }

 private:
  std::string_view s_;
  std::size_t p_ = 0;

  void skip() {
    while (p_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[p_]))) ++p_;
  }
  bool eat(char c) {
    skip();
    if (p_ < s_.size() && s_[p_] == c) {
      ++p_;
      return true;
    }
    return false;
  }
  void expect(char c) {
    if (!eat(c)) throw ParseError(std::string("expected '") + c + "'", p_);
  }

  static AstPtr node(Ast::Kind k, std::size_t pos, std::vector<AstPtr> args = {}) {
    auto a = std::make_shared<Ast>();
    a->kind = k;
    a->pos = pos;
    a->args = std::move(args);
    return a;
  }

  AstPtr expr() {
    AstPtr a = term();
    while (true) {
      std::size_t at = p_;
      if (eat('+'))
        a = node(Ast::Kind::Add, at, {a, term()});
      else if (eat('-'))
        a = node(Ast::Kind::Sub, at, {a, term()});
      else
        return a;
    }
  }

  AstPtr term() {
    AstPtr a = unary();
    while (true) {
      std::size_t at = p_;
      if (eat('*'))
        a = node(Ast::Kind::Mul, at, {a, unary()});
      else if (eat('/'))
        a = node(Ast::Kind::Div, at, {a, unary()});
      else
        return a;
    }
  }

  AstPtr unary() {
    std::size_t at = p_;
    if (eat('-')) return node(Ast::Kind::Neg, at, {unary()});
    if (eat('+')) return unary();
    AstPtr a = atom();
    at = p_;
    if (eat('^')) {
      bool neg = eat('-');
      skip();
      std::size_t start = p_;
      while (p_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[p_]))) ++p_;
      if (start == p_) throw ParseError("expected integer exponent", p_);
      auto pw = node(Ast::Kind::Pow, at, {a});
      pw->exponent = std::stoi(std::string(s_.substr(start, p_ - start))) * (neg ? -1 : 1);
      return pw;
    }
    return a;
  }

  AstPtr atom() {
    skip();
    std::size_t at = p_;
    if (p_ >= s_.size()) throw ParseError("unexpected end of input", p_);
    char c = s_[p_];
    if (c == '(') {
      ++p_;
      AstPtr a = expr();
      expect(')');
      return a;
    }
    if (std::isdigit(static_cast<unsigned char>(c))) {
      while (p_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[p_]))) ++p_;
      auto a = node(Ast::Kind::Num, at);
      a->num = Rat::parse(std::string(s_.substr(at, p_ - at)));
      return a;
    }
    if (std::isalpha(static_cast<unsigned char>(c))) {
      while (p_ < s_.size() && std::isalnum(static_cast<unsigned char>(s_[p_]))) ++p_;
      std::string name(s_.substr(at, p_ - at));
      if (eat('(')) {
        auto call = node(Ast::Kind::Call, at);
        call->name = name;
        if (!eat(')')) {
          call->args.push_back(expr());
          while (eat(',')) call->args.push_back(expr());
          if (eat(';')) call->param = expr();
          expect(')');
        }
        return call;
      }
      auto id = node(Ast::Kind::Ident, at);
      id->name = name;
      return id;
    }
    throw ParseError(std::string("unexpected '") + c + "'", p_);
  }
};

bool is_scalar(const AstPtr& a) {
  if (a->kind == Ast::Kind::Call) return false;
  if (a->kind == Ast::Kind::Ident) return sym_from_name(a->name).has_value();
  for (const auto& x : a->args)
    if (!is_scalar(x)) return false;
  return true;
}

int int_arg(const AstPtr& a) {
  RatFun v = to_ratfun(a);
  if (!v.is_constant() || !v.num().constant_term().is_integer()) throw ParseError("expected an integer", a->pos);
  return static_cast<int>(v.num().constant_term().to_long());
}

PosRoot root_args(const AstPtr& call) {
  if (call->args.size() == 1) {
    int i = int_arg(call->args[0]);
    return PosRoot{i, i + 1};
  }
  if (call->args.size() != 2) throw ParseError(call->name + " takes (i,j) or (i)", call->pos);
  return PosRoot{int_arg(call->args[0]), int_arg(call->args[1])};
}

void check_root(const PosRoot& r, int n) {
  if (r.i < 1 || r.j <= r.i || r.j > n + 1)
    throw RankError("root " + r.str() + " is not a positive root for rank " + std::to_string(n));
}

}  // namespace

AstPtr parse_ast(std::string_view text) { return Parser(text).parse(); }

RatFun to_ratfun(const AstPtr& a) {
  switch (a->kind) {
    case Ast::Kind::Num:
      return RatFun(a->num);
    case Ast::Kind::Ident: {
      auto s = sym_from_name(a->name);
      if (!s) throw ParseError("unknown symbol '" + a->name + "'", a->pos);
      return RatFun::var(*s);
    }
    case Ast::Kind::Call:
      throw ParseError("'" + a->name + "' is not a scalar", a->pos);
    case Ast::Kind::Add:
      return to_ratfun(a->args[0]) + to_ratfun(a->args[1]);
    case Ast::Kind::Sub:
      return to_ratfun(a->args[0]) - to_ratfun(a->args[1]);
    case Ast::Kind::Mul:
      return to_ratfun(a->args[0]) * to_ratfun(a->args[1]);
    case Ast::Kind::Div: {
      RatFun d = to_ratfun(a->args[1]);
      if (d.is_zero()) throw ParseError("division by zero", a->pos);
      return to_ratfun(a->args[0]) / d;
    }
    case Ast::Kind::Neg:
      return -to_ratfun(a->args[0]);
    case Ast::Kind::Pow: {
      RatFun b = to_ratfun(a->args[0]);
      if (a->exponent < 0 && b.is_zero()) throw ParseError("division by zero", a->pos);
      return b.pow(a->exponent);
    }
  }
  throw ParseError("bad expression", a->pos);
}

Expr to_expr(const AstPtr& a, int n) {
  if (is_scalar(a)) return Expr::number(to_ratfun(a));
  switch (a->kind) {
    case Ast::Kind::Call: {
      const std::string& f = a->name;
      if (f == "E" || f == "F" || f == "TE") {
        PosRoot r = root_args(a);
        check_root(r, n);
        return f == "E" ? Expr::e(r) : f == "F" ? Expr::f(r) : Expr::te(r);
      }
      if (f == "K") {
        if (static_cast<int>(a->args.size()) != n)
          throw RankError("K takes " + std::to_string(n) + " coordinates");
        CartanWeight w = CartanWeight::zero(n);
        for (std::size_t i = 0; i < a->args.size(); ++i) {
          RatFun v = to_ratfun(a->args[i]);
          if (!v.is_constant()) throw ParseError("K coordinates must be rational numbers", a->args[i]->pos);
          w.c[i] = v.num().constant_term();
        }
        return Expr::k(w);
      }
      if (f == "qbr") {
        if (a->args.size() != 2) throw ParseError("qbr takes (x, y; a)", a->pos);
        RatFun par = a->param ? to_ratfun(a->param) : RatFun(1);
        if (par.is_zero()) throw ParseError("qbr parameter must be nonzero", a->pos);
        return Expr::qbr(to_expr(a->args[0], n), to_expr(a->args[1], n), par);
      }
      throw ParseError("unknown function '" + f + "'", a->pos);
    }
    case Ast::Kind::Ident:
      throw ParseError("unknown symbol '" + a->name + "'", a->pos);
    case Ast::Kind::Add:
      return to_expr(a->args[0], n) + to_expr(a->args[1], n);
    case Ast::Kind::Sub:
      return to_expr(a->args[0], n) - to_expr(a->args[1], n);
    case Ast::Kind::Mul:
      return to_expr(a->args[0], n) * to_expr(a->args[1], n);
    case Ast::Kind::Div: {
      if (!is_scalar(a->args[1])) throw ParseError("can only divide by scalars", a->pos);
      RatFun d = to_ratfun(a->args[1]);
      if (d.is_zero()) throw ParseError("division by zero", a->pos);
      return Expr::number(d.inverse()) * to_expr(a->args[0], n);
    }
    case Ast::Kind::Neg:
      return Expr::number(RatFun(-1)) * to_expr(a->args[0], n);
    case Ast::Kind::Pow: {
      if (a->exponent < 0) throw ParseError("negative powers of algebra elements", a->pos);
      std::vector<Expr> xs(static_cast<std::size_t>(a->exponent), to_expr(a->args[0], n));
      return xs.empty() ? Expr::number(RatFun(1)) : Expr::prod(std::move(xs));
    }
    case Ast::Kind::Num:
      break;
  }
  throw ParseError("bad expression", a->pos);
}

ChartPoly to_chart(const AstPtr& a, int n) {
  if (is_scalar(a)) {
    RatFun c = to_ratfun(a);
    for (Sym s : {Sym::q, Sym::L, Sym::mu})
      if (c.num().uses(s) || c.den().uses(s)) throw ParseError(std::string("chart coefficients use lambda and t only, not ") + sym_name(s), a->pos);
    return ChartPoly(n, c);
  }
  switch (a->kind) {
    case Ast::Kind::Ident: {
      const std::string& v = a->name;
      bool z = v.rfind("zt", 0) == 0, w = v.rfind("om", 0) == 0;
      if ((z || w) && v.size() > 2 && std::all_of(v.begin() + 2, v.end(), [](char c) { return std::isdigit(static_cast<unsigned char>(c)); })) {
        int i = std::stoi(v.substr(2));
        if (i < 1 || i > n) throw RankError("variable " + v + " outside rank " + std::to_string(n));
        return z ? ChartPoly::zeta(n, i) : ChartPoly::omega(n, i);
      }
      throw ParseError("unknown variable '" + v + "'", a->pos);
    }
    case Ast::Kind::Add:
      return to_chart(a->args[0], n) + to_chart(a->args[1], n);
    case Ast::Kind::Sub:
      return to_chart(a->args[0], n) - to_chart(a->args[1], n);
    case Ast::Kind::Mul:
      return to_chart(a->args[0], n) * to_chart(a->args[1], n);
    case Ast::Kind::Div: {
      if (!is_scalar(a->args[1])) throw ParseError("can only divide by scalars", a->pos);
      RatFun d = to_ratfun(a->args[1]);
      if (d.is_zero()) throw ParseError("division by zero", a->pos);
      return to_chart(a->args[0], n).scaled(d.inverse());
    }
    case Ast::Kind::Neg:
      return -to_chart(a->args[0], n);
    case Ast::Kind::Pow: {
      if (a->exponent < 0) throw ParseError("negative powers of chart variables", a->pos);
      ChartPoly b = to_chart(a->args[0], n), r(n, RatFun(1));
      for (int i = 0; i < a->exponent; ++i) r = r * b;
      return r;
    }
    case Ast::Kind::Call:
      throw ParseError("'" + a->name + "' is not a chart function", a->pos);
    case Ast::Kind::Num:
      break;
  }
  throw ParseError("bad expression", a->pos);
}

}  // namespace qdyn
