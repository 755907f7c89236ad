#pragma once

// A small expression language for finite nested sums over exact rationals.
//
//   expr   := term (("+"|"-") term)*
//   term   := factor (("*"|"/") factor)*
//   factor := "-" factor | atom ("^" atom)?
//   atom   := INT | INT "/" INT | IDENT | IDENT "(" expr ("," expr)* ")"
//           | "(" expr ")"
//
// "sum(i, lo, hi, body)" and "floor(x)" are built-in forms. The sequence
// kernels are callable as H(n[,s]), O(n[,s]), Hdiff(n,r), B(n), F(n), L(n),
// G(n,g1,g2), S2(n,k), Cat(n), binom(x,k), ff(x,k) and fact(n); any other
// name applied to one argument refers to a named sequence supplied in the
// binding. Whitespace is insignificant, identifiers are case-sensitive.
//
// Parsed expressions are immutable; evaluating a shared AST from several
// threads is safe as long as each evaluation uses its own KernelCache.

#include <cstdint>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "batir/errors.hpp"
#include "batir/kernels.hpp"
#include "batir/rational.hpp"

namespace batir {

struct Expr {
  enum class Kind { Literal, Var, Neg, Add, Sub, Mul, Div, Pow, Floor, Call, Sum };

  Kind kind = Kind::Literal;
  Rational value;           // Literal
  std::string name;         // Var and Call names; Sum index variable
  std::vector<Expr> args;   // operands; for Sum: {lo, hi, body}
  int line = 1, col = 1;    // source position, for diagnostics

  friend bool operator==(const Expr& a, const Expr& b) {
    if (a.kind != b.kind || a.name != b.name || a.args.size() != b.args.size()) return false;
    if (a.kind == Kind::Literal && a.value != b.value) return false;
    for (std::size_t i = 0; i < a.args.size(); ++i)
      if (!(a.args[i] == b.args[i])) return false;
    return true;
  }
  friend bool operator!=(const Expr& a, const Expr& b) { return !(a == b); }
};

// ---------------------------------------------------------------------------
// Parsing

namespace detail {

struct KernelSig { const char* name; int min_arity; int max_arity; };

inline const std::vector<KernelSig>& kernel_sigs() {
  static const std::vector<KernelSig> sigs = {
      {"H", 1, 2}, {"O", 1, 2}, {"Hdiff", 2, 2}, {"B", 1, 1},  {"F", 1, 1},
      {"L", 1, 1}, {"G", 3, 3}, {"S2", 2, 2},    {"Cat", 1, 1}, {"binom", 2, 2},
      {"ff", 2, 2}, {"fact", 1, 1},
  };
  return sigs;
}

inline const KernelSig* find_kernel(std::string_view name) {
  for (const auto& s : kernel_sigs())
    if (name == s.name) return &s;
  return nullptr;
}

struct Token {
  enum class Kind { Int, Ident, Punct, End };
  Kind kind = Kind::End;
  std::string text;
  char punct = 0;
  int line = 1, col = 1;
};

class Lexer {
 public:
  explicit Lexer(std::string_view src) : src_(src) { next(); next(); }

  const Token& cur() const { return cur_; }
  const Token& ahead() const { return ahead_; }

  Token take() {
    Token t = cur_;
    next();
    return t;
  }

 private:
  void next() {
    cur_ = ahead_;
    while (pos_ < src_.size() && is_space(src_[pos_])) advance();
    Token t;
    t.line = line_;
    t.col = col_;
    if (pos_ >= src_.size()) {
      t.kind = Token::Kind::End;
    } else if (is_digit(src_[pos_])) {
      t.kind = Token::Kind::Int;
      while (pos_ < src_.size() && is_digit(src_[pos_])) { t.text += src_[pos_]; advance(); }
    } else if (is_ident_start(src_[pos_])) {
      t.kind = Token::Kind::Ident;
      while (pos_ < src_.size() && is_ident_char(src_[pos_])) { t.text += src_[pos_]; advance(); }
    } else {
      char c = src_[pos_];
      if (std::string_view("+-*/^(),").find(c) == std::string_view::npos)
        throw ParseError(std::string("unexpected character '") + c + "'", line_, col_, {"expression"});
      t.kind = Token::Kind::Punct;
      t.punct = c;
      t.text = std::string(1, c);
      advance();
    }
    ahead_ = t;
  }

  void advance() {
    if (src_[pos_] == '\n') { ++line_; col_ = 1; } else { ++col_; }
    ++pos_;
  }

  static bool is_space(char c) { return c == ' ' || c == '\t' || c == '\n' || c == '\r'; }
  static bool is_digit(char c) { return c >= '0' && c <= '9'; }
  static bool is_ident_start(char c) { return (c >= 'a' && c <= 'z') || (c >= 'A' && c <= 'Z') || c == '_'; }
  static bool is_ident_char(char c) { return is_ident_start(c) || is_digit(c); }

  std::string_view src_;
  std::size_t pos_ = 0;
  int line_ = 1, col_ = 1;
  Token cur_, ahead_;
};

class Parser {
 public:
  explicit Parser(std::string_view src) : lex_(src) {}

  Expr parse_all() {
    Expr e = expr();
    if (lex_.cur().kind != Token::Kind::End)
      fail("trailing input after expression", {"end of input", "'+'", "'-'", "'*'", "'/'"});
    return e;
  }

 private:
  Expr expr() {
    Expr lhs = term();
    while (is_punct('+') || is_punct('-')) {
      char op = lex_.take().punct;
      Expr rhs = term();
      lhs = binary(op == '+' ? Expr::Kind::Add : Expr::Kind::Sub, std::move(lhs), std::move(rhs));
    }
    return lhs;
  }

  Expr term() {
    Expr lhs = factor();
    while (is_punct('*') || is_punct('/')) {
      char op = lex_.take().punct;
      Expr rhs = factor();
      lhs = binary(op == '*' ? Expr::Kind::Mul : Expr::Kind::Div, std::move(lhs), std::move(rhs));
    }
    return lhs;
  }

  Expr factor() {
    if (is_punct('-')) {
      Token m = lex_.take();
      Expr inner = factor();
      if (inner.kind == Expr::Kind::Literal) {  // fold "-lit" into a literal
        inner.value = -inner.value;
        inner.line = m.line;
        inner.col = m.col;
        return inner;
      }
      Expr e;
      e.kind = Expr::Kind::Neg;
      e.args.push_back(std::move(inner));
      e.line = m.line;
      e.col = m.col;
      return e;
    }
    Expr base = atom();
    if (is_punct('^')) {
      lex_.take();
      // fraction fusion stays off in the exponent so that "x^2/2" reads as
      // (x^2)/2 rather than x^(2/2)
      Expr exp = atom(/*allow_fraction=*/false);
      Expr e;
      e.kind = Expr::Kind::Pow;
      e.line = base.line;
      e.col = base.col;
      e.args.push_back(std::move(base));
      e.args.push_back(std::move(exp));
      return e;
    }
    return base;
  }

  Expr atom(bool allow_fraction = true) {
    const Token& t = lex_.cur();
    if (t.kind == Token::Kind::Int) {
      Token num = lex_.take();
      // maximal munch: INT "/" INT is a rational literal
      if (allow_fraction && is_punct('/') && lex_.ahead().kind == Token::Kind::Int) {
        lex_.take();
        Token den = lex_.take();
        Expr e;
        e.line = num.line;
        e.col = num.col;
        if (den.text.find_first_not_of('0') == std::string::npos) {
          // literal zero denominator: keep the division node so evaluation
          // reports DivByZero instead of the parser rejecting it
          Expr l, r;
          l.kind = r.kind = Expr::Kind::Literal;
          l.value = Rational::parse(num.text);
          r.value = Rational(0);
          l.line = num.line; l.col = num.col;
          r.line = den.line; r.col = den.col;
          e.kind = Expr::Kind::Div;
          e.args.push_back(std::move(l));
          e.args.push_back(std::move(r));
          return e;
        }
        e.kind = Expr::Kind::Literal;
        e.value = Rational::parse(num.text + "/" + den.text);
        return e;
      }
      Expr e;
      e.kind = Expr::Kind::Literal;
      e.value = Rational::parse(num.text);
      e.line = num.line;
      e.col = num.col;
      return e;
    }
    if (t.kind == Token::Kind::Ident) {
      Token id = lex_.take();
      if (!is_punct('(')) {
        Expr e;
        e.kind = Expr::Kind::Var;
        e.name = id.text;
        e.line = id.line;
        e.col = id.col;
        return e;
      }
      lex_.take();  // '('
      if (id.text == "sum") return sum_call(id);
      std::vector<Expr> args;
      args.push_back(expr());
      while (is_punct(',')) { lex_.take(); args.push_back(expr()); }
      expect(')');
      Expr e;
      e.name = id.text;
      e.line = id.line;
      e.col = id.col;
      e.args = std::move(args);
      if (id.text == "floor") {
        if (e.args.size() != 1)
          throw ParseError("floor takes exactly one argument", id.line, id.col, {"')'"});
        e.kind = Expr::Kind::Floor;
        e.name.clear();
        return e;
      }
      if (const KernelSig* sig = find_kernel(id.text)) {
        int n = static_cast<int>(e.args.size());
        if (n < sig->min_arity || n > sig->max_arity)
          throw ParseError("kernel " + id.text + " takes " + std::to_string(sig->min_arity) +
                               (sig->min_arity == sig->max_arity
                                    ? ""
                                    : ".." + std::to_string(sig->max_arity)) +
                               " arguments, got " + std::to_string(n),
                           id.line, id.col, {"argument list"});
      } else if (e.args.size() != 1) {
        throw ParseError("unknown function '" + id.text + "'", id.line, id.col, {"kernel or sequence name"});
      }
      e.kind = Expr::Kind::Call;
      return e;
    }
    if (is_punct('(')) {
      lex_.take();
      Expr e = expr();
      expect(')');
      return e;
    }
    fail("expected an expression", {"integer", "identifier", "'('", "'-'"});
    return {};
  }

  Expr sum_call(const Token& kw) {
    const Token& idx = lex_.cur();
    if (idx.kind != Token::Kind::Ident)
      fail("sum index must be an identifier", {"identifier"});
    if (find_kernel(idx.text) || idx.text == "sum" || idx.text == "floor")
      throw ParseError("sum index '" + idx.text + "' shadows a built-in name", idx.line, idx.col, {"identifier"});
    Expr e;
    e.kind = Expr::Kind::Sum;
    e.name = lex_.take().text;
    e.line = kw.line;
    e.col = kw.col;
    expect(',');
    e.args.push_back(expr());
    expect(',');
    e.args.push_back(expr());
    expect(',');
    e.args.push_back(expr());
    expect(')');
    return e;
  }

  static Expr binary(Expr::Kind k, Expr lhs, Expr rhs) {
    // exact constant folding keeps INT "/" INT behind parentheses canonical
    if (k == Expr::Kind::Div && lhs.kind == Expr::Kind::Literal && rhs.kind == Expr::Kind::Literal &&
        !rhs.value.is_zero()) {
      Expr e;
      e.kind = Expr::Kind::Literal;
      e.value = lhs.value / rhs.value;
      e.line = lhs.line;
      e.col = lhs.col;
      return e;
    }
    Expr e;
    e.kind = k;
    e.line = lhs.line;
    e.col = lhs.col;
    e.args.push_back(std::move(lhs));
    e.args.push_back(std::move(rhs));
    return e;
  }

  bool is_punct(char c) const {
    return lex_.cur().kind == Token::Kind::Punct && lex_.cur().punct == c;
  }

  void expect(char c) {
    if (!is_punct(c)) fail(std::string("expected '") + c + "'", {std::string("'") + c + "'"});
    lex_.take();
  }

  [[noreturn]] void fail(const std::string& msg, std::vector<std::string> expected) {
    const Token& t = lex_.cur();
    std::string got = t.kind == Token::Kind::End ? "end of input" : "'" + t.text + "'";
    throw ParseError(msg + " (got " + got + " at " + std::to_string(t.line) + ":" +
                         std::to_string(t.col) + ")",
                     t.line, t.col, std::move(expected));
  }

  Lexer lex_;
};

}  // namespace detail

inline Expr parse(std::string_view text) { return detail::Parser(text).parse_all(); }

// ---------------------------------------------------------------------------
// Canonical printing. print(parse(t)) reparses to an AST equal to parse(t).

namespace detail {

// precedence classes: 1 add/sub, 2 mul/div, 3 unary minus, 5 atom
inline int prec_of(const Expr& e) {
  switch (e.kind) {
    case Expr::Kind::Add:
    case Expr::Kind::Sub: return 1;
    case Expr::Kind::Mul:
    case Expr::Kind::Div: return 2;
    case Expr::Kind::Neg: return 3;
    case Expr::Kind::Pow: return 4;
    case Expr::Kind::Literal: return e.value.is_negative() ? 3 : 5;
    default: return 5;
  }
}

inline void print_to(const Expr& e, int min_prec, std::string& out);

inline void print_wrapped(const Expr& e, int min_prec, std::string& out) {
  if (prec_of(e) < min_prec) {
    out += '(';
    print_to(e, 0, out);
    out += ')';
  } else {
    print_to(e, 0, out);
  }
}

// True when the printed form of e ends in a bare integer token that the
// lexer could fuse with a following "/ INT" into one rational literal.
// Mirrors the wrapping decisions below; exponents are immune because
// fraction fusion is disabled after '^'.
inline bool ends_with_fusible_int(const Expr& e) {
  switch (e.kind) {
    case Expr::Kind::Literal:
      return true;
    case Expr::Kind::Mul:
    case Expr::Kind::Div: {
      const Expr& r = e.args[1];
      bool wrapped = prec_of(r) < 3 || (r.kind == Expr::Kind::Literal &&
                                        (r.value.is_negative() || !r.value.is_integer()));
      return wrapped ? false : ends_with_fusible_int(r);
    }
    default:
      return false;
  }
}

// operands of '^' must be plain atoms
inline void print_pow_operand(const Expr& e, std::string& out) {
  bool atom = (e.kind == Expr::Kind::Var || e.kind == Expr::Kind::Call ||
               e.kind == Expr::Kind::Floor || e.kind == Expr::Kind::Sum ||
               (e.kind == Expr::Kind::Literal && !e.value.is_negative() && e.value.is_integer()));
  if (atom) {
    print_to(e, 0, out);
  } else {
    out += '(';
    print_to(e, 0, out);
    out += ')';
  }
}

inline void print_to(const Expr& e, int, std::string& out) {
  switch (e.kind) {
    case Expr::Kind::Literal:
      out += e.value.str();
      return;
    case Expr::Kind::Var:
      out += e.name;
      return;
    case Expr::Kind::Neg:
      out += '-';
      print_wrapped(e.args[0], 3, out);
      return;
    case Expr::Kind::Add:
    case Expr::Kind::Sub: {
      print_wrapped(e.args[0], 1, out);
      std::string rhs;
      print_wrapped(e.args[1], 2, rhs);
      out += (e.kind == Expr::Kind::Add) ? " + " : " - ";
      if (!rhs.empty() && rhs[0] == '-') {  // avoid "a - -1"
        out += '(';
        out += rhs;
        out += ')';
      } else {
        out += rhs;
      }
      return;
    }
    case Expr::Kind::Mul:
    case Expr::Kind::Div: {
      print_wrapped(e.args[0], 2, out);
      out += (e.kind == Expr::Kind::Mul) ? '*' : '/';
      const Expr& r = e.args[1];
      bool wrap = prec_of(r) < 3 || (r.kind == Expr::Kind::Literal && (r.value.is_negative() || !r.value.is_integer()));
      if (!wrap && e.kind == Expr::Kind::Div && r.kind == Expr::Kind::Literal &&
          prec_of(e.args[0]) >= 2 && ends_with_fusible_int(e.args[0]))
        wrap = true;  // "<int>/<int>" at the boundary would re-lex as one literal
      if (wrap) {
        out += '(';
        print_to(r, 0, out);
        out += ')';
      } else {
        print_to(r, 0, out);
      }
      return;
    }
    case Expr::Kind::Pow:
      print_pow_operand(e.args[0], out);
      out += '^';
      print_pow_operand(e.args[1], out);
      return;
    case Expr::Kind::Floor:
      out += "floor(";
      print_to(e.args[0], 0, out);
      out += ')';
      return;
    case Expr::Kind::Call: {
      out += e.name;
      out += '(';
      for (std::size_t i = 0; i < e.args.size(); ++i) {
        if (i) out += ',';
        print_to(e.args[i], 0, out);
      }
      out += ')';
      return;
    }
    case Expr::Kind::Sum: {
      out += "sum(";
      out += e.name;
      out += ',';
      print_to(e.args[0], 0, out);
      out += ',';
      print_to(e.args[1], 0, out);
      out += ", ";
      print_to(e.args[2], 0, out);
      out += ')';
      return;
    }
  }
}

}  // namespace detail

inline std::string print(const Expr& e) {
  std::string out;
  detail::print_to(e, 0, out);
  return out;
}

// ---------------------------------------------------------------------------
// Evaluation

// A finite named sequence; values[i] holds the element with index start+i.
struct SequenceValues {
  std::int64_t start = 1;
  std::vector<Rational> values;

  friend bool operator==(const SequenceValues& a, const SequenceValues& b) {
    return a.start == b.start && a.values == b.values;
  }
};

// Assignment of the free variables of an expression: scalar parameters plus
// named finite sequences.
struct ParamBinding {
  std::map<std::string, Rational> scalars;
  std::map<std::string, SequenceValues> sequences;
};

namespace detail {

class Evaluator {
 public:
  Evaluator(const ParamBinding& binding, KernelCache& cache) : binding_(binding), cache_(cache) {}

  Rational eval(const Expr& e) {
    switch (e.kind) {
      case Expr::Kind::Literal:
        return e.value;
      case Expr::Kind::Var: {
        for (auto it = locals_.rbegin(); it != locals_.rend(); ++it)
          if (*it->first == e.name) return it->second;
        auto it = binding_.scalars.find(e.name);
        if (it == binding_.scalars.end())
          throw EvalError(EvalErrorKind::UnboundVar, "variable '" + e.name + "' is not bound", context(e));
        return it->second;
      }
      case Expr::Kind::Neg:
        return -eval(e.args[0]);
      case Expr::Kind::Add:
        return eval(e.args[0]) + eval(e.args[1]);
      case Expr::Kind::Sub:
        return eval(e.args[0]) - eval(e.args[1]);
      case Expr::Kind::Mul:
        return eval(e.args[0]) * eval(e.args[1]);
      case Expr::Kind::Div: {
        Rational num = eval(e.args[0]);
        Rational den = eval(e.args[1]);
        if (den.is_zero())
          throw EvalError(EvalErrorKind::DivByZero, "denominator evaluates to 0", context(e));
        return num / den;
      }
      case Expr::Kind::Pow: {
        Rational base = eval(e.args[0]);
        Rational exp = eval(e.args[1]);
        if (!exp.is_integer())
          throw EvalError(EvalErrorKind::NonIntegerExponent, "exponent " + exp.str() + " is not an integer", context(e));
        std::int64_t ei = exp.to_int64();
        if (base.is_zero() && ei < 0)
          throw EvalError(EvalErrorKind::DivByZero, "0 raised to a negative power", context(e));
        return base.pow(ei);  // 0^0 = 1
      }
      case Expr::Kind::Floor:
        return eval(e.args[0]).floor();
      case Expr::Kind::Sum: {
        // bounds first: an empty range short-circuits without touching the body
        std::int64_t lo = eval_int(e.args[0], "sum lower bound");
        std::int64_t hi = eval_int(e.args[1], "sum upper bound");
        Rational acc(0);
        if (hi < lo) return acc;
        locals_.emplace_back(&e.name, Rational(lo));
        for (std::int64_t i = lo;; ++i) {
          locals_.back().second = Rational(i);
          acc += eval(e.args[2]);
          if (i == hi) break;
        }
        locals_.pop_back();
        return acc;
      }
      case Expr::Kind::Call:
        return call(e);
    }
    throw EvalError(EvalErrorKind::UnboundVar, "malformed expression node");
  }

 private:
  Rational call(const Expr& e) {
    const std::string& f = e.name;
    try {
      if (f == "H") return cache_.harmonic(eval_int(e.args[0], "H index"), e.args.size() > 1 ? eval_int(e.args[1], "H order") : 1);
      if (f == "O") return cache_.odd_harmonic(eval_int(e.args[0], "O index"), e.args.size() > 1 ? eval_int(e.args[1], "O order") : 1);
      if (f == "Hdiff") return cache_.shifted_harmonic_diff(eval_int(e.args[0], "Hdiff length"), eval(e.args[1]));
      if (f == "B") return cache_.bernoulli(eval_int(e.args[0], "B index"));
      if (f == "F") return cache_.fibonacci(eval_int(e.args[0], "F index"));
      if (f == "L") return cache_.lucas(eval_int(e.args[0], "L index"));
      if (f == "G") return cache_.gibonacci(eval_int(e.args[0], "G index"), eval(e.args[1]), eval(e.args[2]));
      if (f == "S2") return cache_.stirling2(eval_int(e.args[0], "S2 index"), eval_int(e.args[1], "S2 index"));
      if (f == "Cat") return cache_.catalan(eval_int(e.args[0], "Cat index"));
      if (f == "binom") return cache_.binom(eval(e.args[0]), eval_int(e.args[1], "binom index"));
      if (f == "ff") return cache_.falling_factorial(eval(e.args[0]), eval_int(e.args[1], "ff length"));
      if (f == "fact") return cache_.factorial(eval_int(e.args[0], "fact index"));
    } catch (EvalError& err) {
      if (err.context.empty()) throw EvalError(err.kind, err.detail, context(e));
      throw;
    }
    auto it = binding_.sequences.find(f);
    if (it == binding_.sequences.end())
      throw EvalError(EvalErrorKind::UnboundVar, "sequence '" + f + "' is not bound", context(e));
    std::int64_t idx = eval_int(e.args[0], "sequence index");
    std::int64_t off = idx - it->second.start;
    if (off < 0 || off >= static_cast<std::int64_t>(it->second.values.size()))
      throw EvalError(EvalErrorKind::UnboundVar,
                      "sequence '" + f + "' has no element at index " + std::to_string(idx), context(e));
    return it->second.values[static_cast<std::size_t>(off)];
  }

  std::int64_t eval_int(const Expr& e, const char* what) {
    Rational v = eval(e);
    if (!v.is_integer())
      throw EvalError(EvalErrorKind::NonIntegerIndex, std::string(what) + " " + v.str() + " is not an integer", context(e));
    return v.to_int64();
  }

  std::string context(const Expr& e) const {
    std::string ctx = "in " + print(e);
    if (!locals_.empty()) {
      ctx += " with ";
      for (std::size_t i = 0; i < locals_.size(); ++i) {
        if (i) ctx += ", ";
        ctx += *locals_[i].first + "=" + locals_[i].second.str();
      }
    }
    return ctx;
  }

  const ParamBinding& binding_;
  KernelCache& cache_;
  std::vector<std::pair<const std::string*, Rational>> locals_;
};

}  // namespace detail

inline Rational eval(const Expr& e, const ParamBinding& binding, KernelCache& cache) {
  return detail::Evaluator(binding, cache).eval(e);
}

inline Rational eval(const Expr& e, const ParamBinding& binding) {
  KernelCache cache;
  return eval(e, binding, cache);
}

// ---------------------------------------------------------------------------
// Free variables: the scalar names and sequence names an expression needs
// from its binding. Sum indices are bound, kernel names are not variables.

struct FreeVars {
  std::set<std::string> scalars;
  std::set<std::string> sequences;

  void merge(const FreeVars& o) {
    scalars.insert(o.scalars.begin(), o.scalars.end());
    sequences.insert(o.sequences.begin(), o.sequences.end());
  }
};

namespace detail {

inline void collect_free(const Expr& e, std::vector<const std::string*>& bound, FreeVars& out) {
  switch (e.kind) {
    case Expr::Kind::Var: {
      for (const auto* name : bound)
        if (*name == e.name) return;
      out.scalars.insert(e.name);
      return;
    }
    case Expr::Kind::Call:
      if (!find_kernel(e.name)) out.sequences.insert(e.name);
      break;
    case Expr::Kind::Sum: {
      collect_free(e.args[0], bound, out);
      collect_free(e.args[1], bound, out);
      bound.push_back(&e.name);
      collect_free(e.args[2], bound, out);
      bound.pop_back();
      return;
    }
    default:
      break;
  }
  for (const auto& arg : e.args) collect_free(arg, bound, out);
}

}  // namespace detail

inline FreeVars free_variables(const Expr& e) {
  FreeVars out;
  std::vector<const std::string*> bound;
  detail::collect_free(e, bound, out);
  return out;
}

}  // namespace batir
