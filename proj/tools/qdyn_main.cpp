// qdyn command-line driver.
#include "qdyn/cli/parser.hpp"
#include "qdyn/cli/suites.hpp"
#include "qdyn/star/qplane.hpp"
#include "qdyn/star/star.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>

using json = nlohmann::json;
using namespace qdyn;

namespace {

enum Exit { kOk = 0, kFailed = 1, kParse = 2, kArgs = 3 };

struct Flags {
  std::optional<int> n;
  bool json = false;
  std::string out;
  unsigned long long seed = 0;
  int samples = 50;
  int order = 10;
  std::optional<int> degree;
  std::string basis = "plain";
  bool timing = false;
};

void add_common(CLI::App* cmd, Flags& f) {
  cmd->add_option("--n", f.n, "rank n of gl(n+1)")->check(CLI::Range(1, 12));
  cmd->add_flag("--json", f.json, "machine-readable output");
  cmd->add_option("--out", f.out, "write output to FILE");
  cmd->add_option("--seed", f.seed, "seed for the mt19937_64 generator (default 0)");
  cmd->add_option("--samples", f.samples, "random samples per property")->check(CLI::Range(0, 100000));
  cmd->add_option("--order", f.order, "truncation order of the series comparison")->check(CLI::Range(0, 60));
  cmd->add_option("--degree", f.degree, "truncation degree |m|")->check(CLI::Range(0, 12));
  cmd->add_option("--basis", f.basis, "plain or tilde")->check(CLI::IsMember({"plain", "tilde"}));
}

void emit(const Flags& f, const std::string& text) {
  if (f.out.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream os(f.out);
  if (!os) throw std::invalid_argument("cannot write " + f.out);
  os << text;
}

std::string exps(const ExpVec& m) {
  std::string s;
  for (std::size_t i = 0; i < m.size(); ++i) s += (i ? " " : "") + std::to_string(m[i]);
  return s;
}

int infer_rank(const AstPtr& a) {
  int r = 1;
  if (a->kind == Ast::Kind::Ident && a->name.size() > 2 && (a->name.rfind("zt", 0) == 0 || a->name.rfind("om", 0) == 0)) {
    try {
      r = std::max(r, std::stoi(a->name.substr(2)));
    } catch (const std::exception&) {
    }
  }
  for (const auto& x : a->args) r = std::max(r, infer_rank(x));
  return r;
}

int cmd_normal_order(const std::string& text, const Flags& f) {
  int n = f.n.value_or(2);
  Expr x = parse_expr(text, n);
  Algebra alg(n);
  AlgElt v = evaluate(alg, x);
  if (f.json) {
    json j{{"n", n}, {"input", text}, {"result", alg.render(v)}};
    j["terms"] = json::array();
    for (const auto& [m, c] : v.terms()) j["terms"].push_back({{"monomial", alg.render(m)}, {"coeff", c.str()}});
    emit(f, j.dump(2) + "\n");
  } else {
    emit(f, alg.render(v) + "\n");
  }
  return kOk;
}

int cmd_shapovalov(const Flags& f) {
  int n = f.n.value_or(2), d = f.degree.value_or(3);
  bool tilde = f.basis == "tilde";
  Algebra alg(n);
  ParabolicVerma M(alg);
  json rows = json::array();
  std::ostringstream csv;
  csv << "m,k,oracle,closed_form,equal\n";
  bool ok = true;
  for (int deg = 0; deg <= d; ++deg)
    for (const auto& m : exponent_vectors(n, deg)) {
      auto row = M.pairing_row(m);
      RatFun scale(1);
      if (tilde) {
        VermaVector tv = M.tilde_vector(m);
        if (tv.terms.size() != 1) ok = false;
        scale = tv.coeff(m);
      }
      for (const auto& [k, val] : row) {
        RatFun oracle = scale * val;
        RatFun expect = k == m ? closed_form_coeff(m) : RatFun(0);
        bool eq = oracle == expect;
        ok = ok && eq;
        rows.push_back({{"m", m}, {"k", k}, {"oracle", oracle.str()}, {"closed_form", expect.str()}, {"equal", eq}});
        csv << exps(m) << "," << exps(k) << ",\"" << oracle.str() << "\",\"" << expect.str() << "\"," << (eq ? "true" : "false") << "\n";
      }
    }
  if (f.json)
    emit(f, json{{"n", n}, {"degree", d}, {"basis", f.basis}, {"ok", ok}, {"rows", rows}}.dump(2) + "\n");
  else
    emit(f, csv.str());
  return ok ? kOk : kFailed;
}

int cmd_star(const std::string& fs, const std::string& gs, const Flags& fl) {
  AstPtr fa = parse_ast(fs), ga = parse_ast(gs);
  int n = fl.n.value_or(std::max(infer_rank(fa), infer_rank(ga)));
  ChartPoly f = to_chart(fa, n), g = to_chart(ga, n);
  ChartPoly r = star_classical(f, g);
  if (fl.json)
    emit(fl, json{{"n", n}, {"f", f.str()}, {"g", g.str()}, {"result", r.str()}}.dump(2) + "\n");
  else
    emit(fl, r.str() + "\n");
  return kOk;
}

int cmd_twist(const Flags& f) {
  int n = f.n.value_or(2), M = f.degree.value_or(5);
  json rows = json::array();
  std::ostringstream txt;
  bool ok = true;
  for (const auto& [m, c] : twist_element(M, n)) {
    bool inv = (c * closed_form_coeff(m)) == RatFun(1);
    ok = ok && inv;
    rows.push_back({{"m", m}, {"coeff", c.str()}, {"inverts_pairing", inv}});
    txt << "(" << exps(m) << ")  " << c.str() << (inv ? "" : "   [does not invert the pairing]") << "\n";
  }
  if (f.json)
    emit(f, json{{"n", n}, {"degree", M}, {"ok", ok}, {"rows", rows}}.dump(2) + "\n");
  else
    emit(f, txt.str());
  return ok ? kOk : kFailed;
}

int cmd_verify(const std::string& suite, const Flags& f) {
  if (!is_suite(suite)) throw std::invalid_argument("unknown suite '" + suite + "'");
  SuiteOptions opt;
  opt.n = f.n.value_or(3);
  opt.degree = f.degree.value_or(3);
  opt.order = f.order;
  opt.seed = f.seed;
  opt.samples = f.samples;
  Report rep = run_suite(suite, opt);
  if (f.json) {
    json j{{"suite", rep.suite}, {"ok", rep.ok()}, {"checks", json::array()}};
    if (f.timing) j["seconds"] = rep.seconds;
    for (const auto& c : rep.checks) {
      json cj{{"id", c.id}, {"description", c.description}, {"anchor", c.anchor}, {"status", c.pass ? "pass" : "fail"}};
      if (!c.pass) cj["witness"] = c.witness;
      j["checks"].push_back(cj);
    }
    emit(f, j.dump(2) + "\n");
  } else {
    std::ostringstream os;
    for (const auto& c : rep.checks) {
      os << (c.pass ? "pass  " : "FAIL  ") << c.id << "  " << c.description << "\n";
      if (!c.pass) os << "      witness: " << c.witness << "\n";
    }
    os << rep.suite << ": " << rep.checks.size() - static_cast<std::size_t>(rep.failures()) << "/" << rep.checks.size()
       << " checks passed\n";
    emit(f, os.str());
    if (f.timing) std::cerr << "elapsed " << rep.seconds << " s\n";
  }
  return rep.ok() ? kOk : kFailed;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact computations in U_q(gl(n+1)): normal ordering, invariant pairings, twists and star products"};
  app.require_subcommand(1);
  Flags flags;
  std::string expr_text, f_text, g_text, suite;

  auto* no = app.add_subcommand("normal-order", "normal form of an algebra expression");
  no->add_option("expr", expr_text, "e.g. \"qbr(E(1,2), E(2,3); q)\"")->required();
  add_common(no, flags);

  auto* sh = app.add_subcommand("shapovalov", "diagonal and mixed pairing coefficients");
  add_common(sh, flags);

  auto* st = app.add_subcommand("star", "classical invariant star product of two chart polynomials");
  st->add_option("f", f_text)->required();
  st->add_option("g", g_text)->required();
  add_common(st, flags);

  auto* tw = app.add_subcommand("twist-coeffs", "coefficients of the truncated twist element");
  add_common(tw, flags);

  auto* ve = app.add_subcommand("verify", "run a verification suite");
  ve->add_option("suite", suite, "relations|appendix|pairing|qplane|twist|star|bordemann|all")->required();
  ve->add_flag("--timing", flags.timing, "report elapsed time");
  add_common(ve, flags);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kArgs;
  }

  try {
    if (*no) return cmd_normal_order(expr_text, flags);
    if (*sh) return cmd_shapovalov(flags);
    if (*st) return cmd_star(f_text, g_text, flags);
    if (*tw) return cmd_twist(flags);
    if (*ve) return cmd_verify(suite, flags);
  } catch (const ParseError& e) {
    std::cerr << "parse error: " << e.what() << "\n";
    return kParse;
  } catch (const RankError& e) {
    std::cerr << "invalid argument: " << e.what() << "\n";
    return kArgs;
  } catch (const IndexOutOfRange& e) {
    std::cerr << "invalid argument: " << e.what() << "\n";
    return kArgs;
  } catch (const std::invalid_argument& e) {
    std::cerr << "invalid argument: " << e.what() << "\n";
    return kArgs;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kFailed;
  }
  return kArgs;
}
