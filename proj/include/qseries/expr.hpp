#pragma once

// A tiny prefix expression language for q-series, used by the verification
// registry.  Expressions are data: they are parsed from text, printed back
// canonically, and evaluated either over Q (PuiseuxSeries) or over Z/M
// (ModSeries).  Grammar (everything whitespace-separated, one expression per
// line in registry files):
//
//   expr   := RATIONAL                          constant
//           | (q r)                             monomial q^r
//           | (+ e1 e2 ...) | (- e1 e2) | (* e1 e2 ...) | (/ e1 e2) | (^ e k)
//           | (poch a b s)                      prod_{j>=0} (1 + s q^{a+jb}), s = +1|-1
//           | (eta r e)                         [q^{r/24} (q^r;q^r)_inf]^e
//           | (theta2 r) | (theta3 r)           classical thetas at q^r
//           | (jf x y)                          Jacobi-style triple product f(q^x, q^y)
//           | (geneta L a)                      generalized eta quotient piece E_a for level L
//           | (E2 r) | (E4 r)                   Eisenstein series at q^r
//           | (twist d w side)                  sum_n q^n sum-twisted by Kronecker (d/.),
//                                               side = div | codiv | idx
//           | (pprog l c)                       sum_{j>=1} p(l j - c) q^j
//           | (cphi k)                          CPhi_k(q)
//           | (atheta k)                        A_k(q) (numerator lattice theta)
//           | (dualtheta l)                     B_l(q) (dual lattice theta)
//           | (binqf a b c)                     theta of binary form a x^2 + b x y + c y^2
//           | (f l) | (g l) | (h l)             the modular-function triple
//           | (subs e r)                        q -> q^r
//           | (dissect e m r)                   extract arithmetic progression (m n + r)
//           | (altsign e)                       q -> -q
//
// Evaluation over Z/M runs (cphi k) and (atheta k) natively in modular
// arithmetic (fast congruence scans); all other leaves evaluate exactly and
// reduce.  Every node is memoized by (printed form, precision, modulus).

#include <cstdint>
#include <memory>
#include <mutex>
#include <string>
#include <unordered_map>
#include <vector>

#include "qseries/builders.hpp"
#include "qseries/cphi.hpp"
#include "qseries/modseries.hpp"
#include "qseries/series.hpp"

namespace qseries {

struct Expr;
using ExprPtr = std::shared_ptr<const Expr>;

struct Expr {
  std::string op;             // operator or leaf name; "rat" for a literal
  Rat lit = 0;                // value when op == "rat"
  std::vector<Rat> num;       // numeric parameters, in source order
  std::string sym;            // symbolic parameter (twist side)
  std::vector<ExprPtr> kids;  // subexpressions
};

// ---------------------------------------------------------------------------
// Parsing
// ---------------------------------------------------------------------------

namespace detail {

struct Tokenizer {
  const std::string& s;
  size_t pos = 0;

  explicit Tokenizer(const std::string& text) : s(text) {}

  std::string next() {
    while (pos < s.size() && std::isspace(static_cast<unsigned char>(s[pos]))) ++pos;
    if (pos >= s.size()) return {};
    if (s[pos] == '(' || s[pos] == ')') return std::string(1, s[pos++]);
    size_t start = pos;
    while (pos < s.size() && !std::isspace(static_cast<unsigned char>(s[pos])) &&
           s[pos] != '(' && s[pos] != ')')
      ++pos;
    return s.substr(start, pos - start);
  }

  std::string peek() {
    size_t save = pos;
    std::string t = next();
    pos = save;
    return t;
  }
};

inline bool atom_is_rational(const std::string& t) {
  if (t.empty()) return false;
  size_t i = (t[0] == '-' || t[0] == '+') ? 1 : 0;
  if (i >= t.size()) return false;
  bool digit = false;
  for (; i < t.size(); ++i) {
    if (std::isdigit(static_cast<unsigned char>(t[i]))) {
      digit = true;
    } else if (t[i] == '/') {
      if (!digit) return false;
      digit = false;  // require digits after the slash too
    } else {
      return false;
    }
  }
  return digit;
}

inline ExprPtr parse_expr(Tokenizer& tok);

inline Rat parse_num_token(Tokenizer& tok, const std::string& context) {
  std::string t = tok.next();
  if (!atom_is_rational(t))
    throw SeriesError("expr parse: expected number in " + context + ", got '" + t + "'");
  return parse_rat(t);
}

inline long param_long(const Rat& r, const std::string& context) {
  if (!rat_is_integer(r)) throw SeriesError("expr parse: " + context + " must be an integer");
  Int n = r.get_num();
  if (!n.fits_slong_p()) throw SeriesError("expr parse: " + context + " out of range");
  return n.get_si();
}

inline ExprPtr parse_expr(Tokenizer& tok) {
  std::string t = tok.next();
  if (t.empty()) throw SeriesError("expr parse: unexpected end of input");
  if (t == ")") throw SeriesError("expr parse: unexpected ')'");
  auto node = std::make_shared<Expr>();
  if (t != "(") {
    if (!atom_is_rational(t)) throw SeriesError("expr parse: unknown atom '" + t + "'");
    node->op = "rat";
    node->lit = parse_rat(t);
    return node;
  }
  std::string op = tok.next();
  if (op.empty() || op == "(" || op == ")")
    throw SeriesError("expr parse: expected operator after '('");
  node->op = op;

  auto finish = [&]() {
    std::string close = tok.next();
    if (close != ")") throw SeriesError("expr parse: expected ')' closing (" + op + " ...)");
    return node;
  };
  auto take_nums = [&](int count) {
    for (int i = 0; i < count; ++i) node->num.push_back(parse_num_token(tok, "(" + op + ")"));
  };

  if (op == "+" || op == "*") {
    while (tok.peek() != ")") node->kids.push_back(parse_expr(tok));
    if (node->kids.size() < 2)
      throw SeriesError("expr parse: (" + op + " ...) needs at least two arguments");
    return finish();
  }
  if (op == "-" || op == "/") {
    node->kids.push_back(parse_expr(tok));
    node->kids.push_back(parse_expr(tok));
    return finish();
  }
  if (op == "^") {
    node->kids.push_back(parse_expr(tok));
    take_nums(1);
    param_long(node->num[0], "exponent of ^");
    return finish();
  }
  if (op == "q") {
    take_nums(1);
    return finish();
  }
  if (op == "poch") {
    take_nums(3);
    if (!(node->num[0] > 0) || !(node->num[1] > 0))
      throw SeriesError("expr parse: (poch a b s) needs a, b > 0");
    long s = param_long(node->num[2], "poch sign");
    if (s != 1 && s != -1) throw SeriesError("expr parse: poch sign must be 1 or -1");
    return finish();
  }
  if (op == "eta") {
    take_nums(2);
    if (param_long(node->num[0], "eta level") < 1)
      throw SeriesError("expr parse: (eta r e) needs r >= 1");
    param_long(node->num[1], "eta exponent");
    return finish();
  }
  if (op == "theta2" || op == "theta3") {
    take_nums(1);
    if (!(node->num[0] > 0)) throw SeriesError("expr parse: theta argument must be positive");
    return finish();
  }
  if (op == "jf") {
    take_nums(2);
    if (!(node->num[0] > 0) || !(node->num[1] > 0))
      throw SeriesError("expr parse: (jf x y) needs x, y > 0");
    return finish();
  }
  if (op == "geneta") {
    take_nums(2);
    if (param_long(node->num[0], "geneta level") < 1)
      throw SeriesError("expr parse: (geneta L a) needs L >= 1");
    param_long(node->num[1], "geneta index");
    return finish();
  }
  if (op == "E2" || op == "E4") {
    take_nums(1);
    if (param_long(node->num[0], "Eisenstein argument") < 1)
      throw SeriesError("expr parse: (" + op + " r) needs r >= 1");
    return finish();
  }
  if (op == "twist") {
    take_nums(2);
    param_long(node->num[0], "twist discriminant");
    if (param_long(node->num[1], "twist weight") < 0)
      throw SeriesError("expr parse: twist weight must be >= 0");
    std::string side = tok.next();
    if (side != "div" && side != "codiv" && side != "idx")
      throw SeriesError("expr parse: twist side must be div, codiv or idx");
    node->sym = side;
    return finish();
  }
  if (op == "pprog") {
    take_nums(2);
    if (param_long(node->num[0], "pprog modulus") < 1 || param_long(node->num[1], "pprog shift") < 0)
      throw SeriesError("expr parse: (pprog l c) needs l >= 1, c >= 0");
    return finish();
  }
  if (op == "cphi" || op == "atheta") {
    take_nums(1);
    if (param_long(node->num[0], "color count") < 1)
      throw SeriesError("expr parse: (" + op + " k) needs k >= 1");
    return finish();
  }
  if (op == "dualtheta") {
    take_nums(1);
    if (param_long(node->num[0], "dualtheta index") < 2)
      throw SeriesError("expr parse: (dualtheta l) needs l >= 2");
    return finish();
  }
  if (op == "binqf") {
    take_nums(3);
    for (int i = 0; i < 3; ++i) param_long(node->num[static_cast<size_t>(i)], "binqf coefficient");
    return finish();
  }
  if (op == "f" || op == "g" || op == "h") {
    take_nums(1);
    param_long(node->num[0], "prime index");
    return finish();
  }
  if (op == "subs") {
    node->kids.push_back(parse_expr(tok));
    take_nums(1);
    if (!(node->num[0] > 0)) throw SeriesError("expr parse: (subs e r) needs r > 0");
    return finish();
  }
  if (op == "dissect") {
    node->kids.push_back(parse_expr(tok));
    take_nums(2);
    long m = param_long(node->num[0], "dissect modulus");
    long r = param_long(node->num[1], "dissect shift");
    if (m < 1 || r < 0 || r >= m) throw SeriesError("expr parse: (dissect e m r) needs 0 <= r < m");
    return finish();
  }
  if (op == "altsign") {
    node->kids.push_back(parse_expr(tok));
    return finish();
  }
  throw SeriesError("expr parse: unknown operator '" + op + "'");
}

}  // namespace detail

inline ExprPtr parse_expression(const std::string& text) {
  detail::Tokenizer tok(text);
  ExprPtr e = detail::parse_expr(tok);
  std::string rest = tok.next();
  if (!rest.empty()) throw SeriesError("expr parse: trailing input '" + rest + "'");
  return e;
}

inline std::string print_expression(const ExprPtr& e) {
  if (e->op == "rat") return e->lit.get_str();
  std::string out = "(" + e->op;
  if (e->op == "^" || e->op == "subs" || e->op == "dissect" || e->op == "altsign") {
    for (const auto& k : e->kids) out += " " + print_expression(k);
    for (const auto& n : e->num) out += " " + n.get_str();
  } else {
    for (const auto& n : e->num) out += " " + n.get_str();
    if (!e->sym.empty()) out += " " + e->sym;
    for (const auto& k : e->kids) out += " " + print_expression(k);
  }
  return out + ")";
}

// ---------------------------------------------------------------------------
// Evaluation
// ---------------------------------------------------------------------------

struct EvalMemo {
  std::mutex mu;
  std::unordered_map<std::string, PuiseuxSeries> exact;
  std::unordered_map<std::string, ModSeries> mod;
};

namespace detail {

inline std::string memo_key(const ExprPtr& e, const Rat& prec, std::uint64_t modulus) {
  return print_expression(e) + "@" + prec.get_str() + "#" + std::to_string(modulus);
}

inline long expr_long(const Expr& e, size_t i) { return e.num[i].get_num().get_si(); }

}  // namespace detail

inline PuiseuxSeries eval_exact(const ExprPtr& e, const Rat& prec, EvalMemo& memo);

namespace detail {

inline PuiseuxSeries eval_exact_node(const Expr& e, const Rat& prec, EvalMemo& memo) {
  auto kid = [&](size_t i) { return eval_exact(e.kids[i], prec, memo); };

  if (e.op == "rat") return PuiseuxSeries::constant(e.lit, prec);
  if (e.op == "+") {
    PuiseuxSeries acc = kid(0);
    for (size_t i = 1; i < e.kids.size(); ++i) acc = series_add(acc, kid(i));
    return acc;
  }
  if (e.op == "-") return series_sub(kid(0), kid(1));
  if (e.op == "*") {
    Rat scalar = 1;
    PuiseuxSeries acc;
    bool have = false;
    for (const auto& kp : e.kids) {
      if (kp->op == "rat") {
        scalar *= kp->lit;
        continue;
      }
      PuiseuxSeries v = eval_exact(kp, prec, memo);
      acc = have ? series_mul(acc, v) : std::move(v);
      have = true;
    }
    if (!have) return PuiseuxSeries::constant(scalar, prec);
    return scalar == 1 ? acc : series_scalar_mul(scalar, acc);
  }
  if (e.op == "/") return series_mul(kid(0), series_invert(kid(1)));
  if (e.op == "^") return series_pow(kid(0), expr_long(e, 0));
  if (e.op == "q") return PuiseuxSeries::monomial(e.num[0], Rat(1), prec);
  if (e.op == "poch")
    return pochhammer(e.num[0], e.num[1], static_cast<int>(expr_long(e, 2)), prec);
  if (e.op == "eta") return eta_power(expr_long(e, 0), expr_long(e, 1), prec);
  if (e.op == "theta2") return theta(2, e.num[0], prec);
  if (e.op == "theta3") return theta(3, e.num[0], prec);
  if (e.op == "jf") return jacobi_f(e.num[0], e.num[1], prec);
  if (e.op == "geneta") return gen_eta(expr_long(e, 0), expr_long(e, 1), prec);
  if (e.op == "E2") return eisenstein(2, expr_long(e, 0), prec);
  if (e.op == "E4") return eisenstein(4, expr_long(e, 0), prec);
  if (e.op == "twist") {
    TwistSide side = e.sym == "div"     ? TwistSide::Divisor
                     : e.sym == "codiv" ? TwistSide::Codivisor
                                        : TwistSide::Index;
    return twisted_eisenstein(expr_long(e, 0), static_cast<unsigned>(expr_long(e, 1)), side, prec);
  }
  if (e.op == "pprog") return partition_progression(expr_long(e, 0), expr_long(e, 1), prec);
  if (e.op == "cphi") return cphi_series(expr_long(e, 0), prec);
  if (e.op == "atheta") return frobenius_theta_ct(expr_long(e, 0), prec);
  if (e.op == "dualtheta") return dual_theta(expr_long(e, 0), prec);
  if (e.op == "binqf")
    return binary_qf_theta(expr_long(e, 0), expr_long(e, 1), expr_long(e, 2), prec);
  if (e.op == "f") return f_ell(expr_long(e, 0), prec);
  if (e.op == "g") return g_ell(expr_long(e, 0), prec);
  if (e.op == "h") return h_ell(expr_long(e, 0), prec);
  if (e.op == "subs") {
    const Rat& r = e.num[0];
    return substitute_power(eval_exact(e.kids[0], prec / r, memo), r);
  }
  if (e.op == "dissect") {
    long m = expr_long(e, 0), r = expr_long(e, 1);
    return dissect(eval_exact(e.kids[0], prec * m + r, memo), m, r);
  }
  if (e.op == "altsign") return alternate_sign(eval_exact(e.kids[0], prec, memo));
  throw SeriesError("eval: unknown operator '" + e.op + "'");
}

}  // namespace detail

inline PuiseuxSeries eval_exact(const ExprPtr& e, const Rat& prec, EvalMemo& memo) {
  std::string key = detail::memo_key(e, prec, 0);
  {
    std::lock_guard<std::mutex> lk(memo.mu);
    auto it = memo.exact.find(key);
    if (it != memo.exact.end()) return it->second;
  }
  PuiseuxSeries v = detail::eval_exact_node(*e, prec, memo);
  std::lock_guard<std::mutex> lk(memo.mu);
  return memo.exact.emplace(std::move(key), std::move(v)).first->second;
}

inline ModSeries eval_mod(const ExprPtr& e, const Rat& prec, std::uint64_t modulus, EvalMemo& memo);

namespace detail {

// Reduce an exact rational scalar into Z/M (the denominator must be a unit).
inline std::uint64_t mod_reduce_rat(const Rat& r, std::uint64_t m) {
  Int num = r.get_num(), den = r.get_den();
  Int nm, dm;
  mpz_fdiv_r_ui(nm.get_mpz_t(), num.get_mpz_t(), static_cast<unsigned long>(m));
  mpz_fdiv_r_ui(dm.get_mpz_t(), den.get_mpz_t(), static_cast<unsigned long>(m));
  std::uint64_t inv = mod_unit_inverse(dm.get_ui(), m);
  return (nm.get_ui() * inv) % m;
}

inline ModSeries eval_mod_node(const Expr& e, const Rat& prec, std::uint64_t m, EvalMemo& memo) {
  auto kid = [&](size_t i) { return eval_mod(e.kids[i], prec, m, memo); };
  auto reduce_exact = [&](const ExprPtr& p) {
    return reduce_mod(eval_exact(p, prec, memo), m);
  };

  if (e.op == "rat") return ModSeries::constant(mod_reduce_rat(e.lit, m), m, prec);
  if (e.op == "+") {
    ModSeries acc = kid(0);
    for (size_t i = 1; i < e.kids.size(); ++i) acc = mod_add(acc, kid(i));
    return acc;
  }
  if (e.op == "-") return mod_sub(kid(0), kid(1));
  if (e.op == "*") {
    std::uint64_t scalar = 1 % m;
    Rat scalar_rat = 1;
    ModSeries acc;
    bool have = false;
    for (const auto& kp : e.kids) {
      if (kp->op == "rat") {
        scalar_rat *= kp->lit;
        continue;
      }
      ModSeries v = eval_mod(kp, prec, m, memo);
      acc = have ? mod_mul(acc, v) : std::move(v);
      have = true;
    }
    scalar = mod_reduce_rat(scalar_rat, m);
    if (!have) return ModSeries::constant(scalar, m, prec);
    return scalar == 1 ? acc : mod_scalar_mul(scalar, acc);
  }
  if (e.op == "/") return mod_mul(kid(0), mod_invert(kid(1)));
  if (e.op == "^") return mod_pow(kid(0), expr_long(e, 0));
  if (e.op == "cphi") return cphi_series_mod(expr_long(e, 0), prec, m);
  if (e.op == "atheta") return frobenius_theta_ct_mod(expr_long(e, 0), prec, m);
  if (e.op == "subs") {
    const Rat& r = e.num[0];
    return mod_substitute_power(eval_mod(e.kids[0], prec / r, m, memo), r);
  }
  if (e.op == "dissect") {
    long mm = expr_long(e, 0), r = expr_long(e, 1);
    return mod_dissect(eval_mod(e.kids[0], prec * mm + r, m, memo), mm, r);
  }
  if (e.op == "altsign") return mod_alternate_sign(eval_mod(e.kids[0], prec, m, memo));
  // Every remaining leaf evaluates exactly and reduces.
  auto self = std::make_shared<Expr>(e);
  return reduce_exact(self);
}

}  // namespace detail

inline ModSeries eval_mod(const ExprPtr& e, const Rat& prec, std::uint64_t modulus, EvalMemo& memo) {
  std::string key = detail::memo_key(e, prec, modulus);
  {
    std::lock_guard<std::mutex> lk(memo.mu);
    auto it = memo.mod.find(key);
    if (it != memo.mod.end()) return it->second;
  }
  ModSeries v = detail::eval_mod_node(*e, prec, modulus, memo);
  std::lock_guard<std::mutex> lk(memo.mu);
  return memo.mod.emplace(std::move(key), std::move(v)).first->second;
}

}  // namespace qseries
