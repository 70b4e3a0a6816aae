#include "deformata/frontend/parse.hpp"

#include <algorithm>
#include <cctype>
#include <set>

namespace deformata::frontend {

using exactalg::Exponents;

ParseError::ParseError(int line, int col, const std::string& msg)
    : InputError("line " + std::to_string(line) + ", column " + std::to_string(col) + ": " + msg),
      line_(line),
      col_(col) {}

bool operator==(const Expr& a, const Expr& b) {
  return a.kind == b.kind && a.number == b.number && a.name == b.name && a.args == b.args;
}

bool operator==(const Value& a, const Value& b) {
  if (a.kind != b.kind) return false;
  switch (a.kind) {
    case Value::Kind::Expr:
      return a.expr == b.expr;
    case Value::Kind::List:
      return a.items == b.items;
    case Value::Kind::String:
      return a.text == b.text;
  }
  return false;
}

std::optional<std::string> Value::as_label() const {
  if (kind != Kind::Expr) return std::nullopt;
  if (expr.kind == Expr::Kind::Symbol) return expr.name;
  if (expr.kind == Expr::Kind::Number) return expr.number.get_str();
  return std::nullopt;
}

const Value* Block::find(std::string_view key) const {
  for (const auto& e : entries) {
    if (e.key == key) return &e.value;
  }
  return nullptr;
}

const Value& Block::require(std::string_view key) const {
  if (const Value* v = find(key)) return *v;
  throw ParseError(line, col, kind + " '" + name + "' is missing the field '" + std::string(key) + "'");
}

namespace {

enum class Tok { Ident, Number, String, Punct, End };

struct Token {
  Tok type;
  std::string text;
  int line, col;
};

std::vector<Token> lex(std::string_view s) {
  std::vector<Token> out;
  int line = 1, col = 1;
  std::size_t i = 0;
  auto advance = [&](std::size_t k) {
    for (std::size_t t = 0; t < k; ++t, ++i) {
      if (s[i] == '\n') {
        ++line;
        col = 1;
      } else {
        ++col;
      }
    }
  };
  while (i < s.size()) {
    const char c = s[i];
    if (std::isspace(static_cast<unsigned char>(c))) {
      advance(1);
      continue;
    }
    if (c == '#') {
      while (i < s.size() && s[i] != '\n') advance(1);
      continue;
    }
    const int l = line, co = col;
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
      std::size_t j = i;
      while (j < s.size() && (std::isalnum(static_cast<unsigned char>(s[j])) || s[j] == '_')) ++j;
      out.push_back({Tok::Ident, std::string(s.substr(i, j - i)), l, co});
      advance(j - i);
    } else if (std::isdigit(static_cast<unsigned char>(c))) {
      std::size_t j = i;
      while (j < s.size() && std::isdigit(static_cast<unsigned char>(s[j]))) ++j;
      if (j < s.size() && (std::isalpha(static_cast<unsigned char>(s[j])) || s[j] == '_' || s[j] == '.')) {
        throw ParseError(l, co, "malformed number");
      }
      out.push_back({Tok::Number, std::string(s.substr(i, j - i)), l, co});
      advance(j - i);
    } else if (c == '"') {
      std::string text;
      std::size_t j = i + 1;
      for (;;) {
        if (j >= s.size() || s[j] == '\n') throw ParseError(l, co, "unterminated string");
        if (s[j] == '"') break;
        if (s[j] == '\\' && j + 1 < s.size() && (s[j + 1] == '"' || s[j + 1] == '\\')) ++j;
        text += s[j++];
      }
      out.push_back({Tok::String, text, l, co});
      advance(j + 1 - i);
    } else if (std::string_view("{}[]()=,;+-*/^").find(c) != std::string_view::npos) {
      out.push_back({Tok::Punct, std::string(1, c), l, co});
      advance(1);
    } else {
      throw ParseError(l, co, std::string("unexpected character '") + c + "'");
    }
  }
  out.push_back({Tok::End, "", line, col});
  return out;
}

class Parser {
 public:
  explicit Parser(std::vector<Token> toks) : toks_(std::move(toks)) {}

  Document document() {
    Document doc;
    std::set<std::string> names;
    while (peek().type != Tok::End) {
      Block b = block();
      if (!names.insert(b.name).second) throw ParseError(b.line, b.col, "duplicate block name '" + b.name + "'");
      doc.blocks.push_back(std::move(b));
    }
    if (doc.blocks.empty()) throw ParseError(peek().line, peek().col, "expected at least one block");
    return doc;
  }

  Expr lone_expression() {
    Expr e = expr();
    if (peek().type != Tok::End) fail("unexpected '" + peek().text + "' after expression");
    return e;
  }

 private:
  const Token& peek() const { return toks_[pos_]; }
  Token next() { return toks_[pos_ < toks_.size() - 1 ? pos_++ : pos_]; }
  bool is_punct(const char* p) const { return peek().type == Tok::Punct && peek().text == p; }
  [[noreturn]] void fail(const std::string& msg) const { throw ParseError(peek().line, peek().col, msg); }
  void expect(const char* p) {
    if (!is_punct(p)) fail(std::string("expected '") + p + "'" + (peek().type == Tok::End ? " before end of input" : ""));
    next();
  }
  std::string ident(const char* what) {
    if (peek().type != Tok::Ident) fail(std::string("expected ") + what);
    return next().text;
  }

  Block block() {
    Block b;
    b.line = peek().line;
    b.col = peek().col;
    b.kind = ident("a block kind (algebra, poisson, hopf, action)");
    if (b.kind != "algebra" && b.kind != "poisson" && b.kind != "hopf" && b.kind != "action") {
      throw ParseError(b.line, b.col, "unknown block kind '" + b.kind + "'");
    }
    b.name = ident("a block name");
    if (b.name == "h") throw ParseError(b.line, b.col, "'h' is reserved and cannot name a block");
    expect("{");
    std::set<std::string> keys;
    while (!is_punct("}")) {
      if (peek().type == Tok::End) fail("expected '}' before end of input");
      Entry e;
      e.line = peek().line;
      e.col = peek().col;
      e.key = ident("a field name");
      if (!keys.insert(e.key).second) throw ParseError(e.line, e.col, "duplicate field '" + e.key + "'");
      expect("=");
      e.value = value();
      b.entries.push_back(std::move(e));
      while (is_punct(";") || is_punct(",")) next();
    }
    next();
    return b;
  }

  Value value() {
    Value v;
    v.line = peek().line;
    v.col = peek().col;
    if (is_punct("[")) {
      next();
      v.kind = Value::Kind::List;
      while (!is_punct("]")) {
        v.items.push_back(value());
        if (is_punct(",")) {
          next();
        } else if (!is_punct("]")) {
          fail("expected ',' or ']' in list");
        }
      }
      next();
    } else if (peek().type == Tok::String) {
      v.kind = Value::Kind::String;
      v.text = next().text;
    } else {
      v.kind = Value::Kind::Expr;
      v.expr = expr();
    }
    return v;
  }

  Expr node(Expr::Kind k, const Token& at) {
    Expr e;
    e.kind = k;
    e.line = at.line;
    e.col = at.col;
    return e;
  }

  Expr expr() {
    Expr lhs = term();
    while (is_punct("+") || is_punct("-")) {
      Token op = next();
      Expr e = node(op.text == "+" ? Expr::Kind::Add : Expr::Kind::Sub, op);
      e.args.push_back(std::move(lhs));
      e.args.push_back(term());
      lhs = std::move(e);
    }
    return lhs;
  }

  Expr term() {
    Expr lhs = unary();
    while (is_punct("*") || is_punct("/")) {
      Token op = next();
      Expr e = node(op.text == "*" ? Expr::Kind::Mul : Expr::Kind::Div, op);
      e.args.push_back(std::move(lhs));
      e.args.push_back(unary());
      lhs = std::move(e);
    }
    return lhs;
  }

  Expr unary() {
    if (is_punct("-")) {
      Token op = next();
      Expr e = node(Expr::Kind::Neg, op);
      e.args.push_back(unary());
      return e;
    }
    if (is_punct("+")) {
      next();
      return unary();
    }
    return power();
  }

  Expr power() {
    Expr b = base();
    if (is_punct("^")) {
      Token op = next();
      if (peek().type != Tok::Number) fail("exponent must be a natural number");
      Expr e = node(Expr::Kind::Pow, op);
      e.number = mpz_class(next().text);
      e.args.push_back(std::move(b));
      if (is_punct("^")) fail("chained exponents need parentheses");
      return e;
    }
    return b;
  }

  Expr base() {
    const Token& t = peek();
    if (t.type == Tok::Number) {
      Expr e = node(Expr::Kind::Number, t);
      e.number = mpz_class(next().text);
      return e;
    }
    if (t.type == Tok::Ident) {
      Token id = next();
      if (is_punct("(")) {
        next();
        Expr e = node(Expr::Kind::Call, id);
        e.name = id.text;
        e.args.push_back(expr());
        expect(")");
        return e;
      }
      Expr e = node(Expr::Kind::Symbol, id);
      e.name = id.text;
      return e;
    }
    if (is_punct("(")) {
      next();
      Expr e = expr();
      expect(")");
      return e;
    }
    if (t.type == Tok::End) fail("unexpected end of input in expression");
    fail("unexpected '" + t.text + "' in expression");
  }

  std::vector<Token> toks_;
  std::size_t pos_ = 0;
};

[[noreturn]] void fail_at(const Expr& e, const std::string& msg) { throw ParseError(e.line, e.col, msg); }

bool has_symbols(const Expr& e) {
  if (e.kind == Expr::Kind::Symbol || e.kind == Expr::Kind::Call) return true;
  return std::any_of(e.args.begin(), e.args.end(), has_symbols);
}

unsigned long exponent_of(const Expr& e) {
  if (e.number > 100000) fail_at(e, "exponent too large");
  return e.number.get_ui();
}

// Truncated series in h with Poly coefficients, multiplied commutatively.
struct HVal {
  std::vector<Poly> c;
};

struct HContext {
  std::shared_ptr<const VarList> vars;
  std::size_t order;
  bool allow_h;
};

HVal hconst(const HContext& ctx, const Scalar& s) {
  HVal v{std::vector<Poly>(ctx.order + 1, Poly(ctx.vars, {}))};
  v.c[0].add_term(Exponents(ctx.vars->size(), 0), s);
  return v;
}

HVal hmul(const HContext& ctx, const HVal& a, const HVal& b) {
  HVal r{std::vector<Poly>(ctx.order + 1, Poly(ctx.vars, {}))};
  for (std::size_t i = 0; i <= ctx.order; ++i) {
    if (a.c[i].is_zero()) continue;
    for (std::size_t j = 0; i + j <= ctx.order; ++j) {
      if (!b.c[j].is_zero()) r.c[i + j] += a.c[i] * b.c[j];
    }
  }
  return r;
}

bool hzero(const HVal& v) {
  return std::all_of(v.c.begin(), v.c.end(), [](const Poly& p) { return p.is_zero(); });
}

HVal heval(const Expr& e, const HContext& ctx) {
  switch (e.kind) {
    case Expr::Kind::Number:
      return hconst(ctx, Scalar(e.number));
    case Expr::Kind::Symbol: {
      if (e.name == "h") {
        if (!ctx.allow_h) fail_at(e, "'h' is reserved for the deformation parameter and is not allowed here");
        HVal v = hconst(ctx, 0);
        if (ctx.order >= 1) v.c[1].add_term(Exponents(ctx.vars->size(), 0), 1);
        return v;
      }
      auto it = std::find(ctx.vars->begin(), ctx.vars->end(), e.name);
      if (it == ctx.vars->end()) fail_at(e, "unknown identifier '" + e.name + "'");
      HVal v = hconst(ctx, 0);
      Exponents ex(ctx.vars->size(), 0);
      ex[static_cast<std::size_t>(it - ctx.vars->begin())] = 1;
      v.c[0].add_term(ex, 1);
      return v;
    }
    case Expr::Kind::Neg: {
      HVal v = heval(e.args[0], ctx);
      for (auto& p : v.c) p = -p;
      return v;
    }
    case Expr::Kind::Add:
    case Expr::Kind::Sub: {
      HVal a = heval(e.args[0], ctx), b = heval(e.args[1], ctx);
      for (std::size_t k = 0; k <= ctx.order; ++k) {
        if (e.kind == Expr::Kind::Add) {
          a.c[k] += b.c[k];
        } else {
          a.c[k] -= b.c[k];
        }
      }
      return a;
    }
    case Expr::Kind::Mul:
      return hmul(ctx, heval(e.args[0], ctx), heval(e.args[1], ctx));
    case Expr::Kind::Div: {
      if (has_symbols(e.args[1])) {
        fail_at(e, "division by a non-constant is only allowed in rational-function (elem) contexts");
      }
      const Scalar d = eval_scalar(e.args[1]);
      if (d == 0) fail_at(e, "division by zero");
      HVal a = heval(e.args[0], ctx);
      for (auto& p : a.c) p = p.scaled(1 / d);
      return a;
    }
    case Expr::Kind::Pow: {
      const HVal b = heval(e.args[0], ctx);
      HVal r = hconst(ctx, 1);
      for (unsigned long k = exponent_of(e); k > 0; --k) r = hmul(ctx, r, b);
      return r;
    }
    case Expr::Kind::Call: {
      if (e.name != "exp") fail_at(e, "unknown function '" + e.name + "'");
      const HVal a = heval(e.args[0], ctx);
      if (!a.c[0].is_zero()) fail_at(e, "exp() needs an argument divisible by h, e.g. exp(2*h)");
      // p runs through a^k / k!
      HVal r = hconst(ctx, 1), p = hconst(ctx, 1);
      for (std::size_t k = 1; k <= ctx.order && !hzero(p); ++k) {
        p = hmul(ctx, p, a);
        for (auto& q : p.c) q = q.scaled(Scalar(1, static_cast<unsigned long>(k)));
        for (std::size_t t = 0; t <= ctx.order; ++t) r.c[t] += p.c[t];
      }
      return r;
    }
  }
  fail_at(e, "malformed expression");
}

RatFn reval(const Expr& e, const std::shared_ptr<const VarList>& vars) {
  switch (e.kind) {
    case Expr::Kind::Number:
      return RatFn(Poly(vars, {{Exponents(vars->size(), 0), Scalar(e.number)}}));
    case Expr::Kind::Symbol: {
      if (e.name == "h") fail_at(e, "'h' is reserved for the deformation parameter and is not allowed here");
      auto it = std::find(vars->begin(), vars->end(), e.name);
      if (it == vars->end()) fail_at(e, "unknown identifier '" + e.name + "'");
      Exponents ex(vars->size(), 0);
      ex[static_cast<std::size_t>(it - vars->begin())] = 1;
      return RatFn(Poly(vars, {{ex, Scalar(1)}}));
    }
    case Expr::Kind::Neg:
      return -reval(e.args[0], vars);
    case Expr::Kind::Add:
      return reval(e.args[0], vars) + reval(e.args[1], vars);
    case Expr::Kind::Sub:
      return reval(e.args[0], vars) - reval(e.args[1], vars);
    case Expr::Kind::Mul:
      return reval(e.args[0], vars) * reval(e.args[1], vars);
    case Expr::Kind::Div: {
      RatFn d = reval(e.args[1], vars);
      if (d.is_zero()) fail_at(e, "division by zero");
      return reval(e.args[0], vars) / d;
    }
    case Expr::Kind::Pow: {
      const RatFn b = reval(e.args[0], vars);
      RatFn r(Poly(vars, {{Exponents(vars->size(), 0), Scalar(1)}}));
      for (unsigned long k = exponent_of(e); k > 0; --k) r *= b;
      return r;
    }
    case Expr::Kind::Call:
      fail_at(e, "functions are not allowed in rational-function expressions");
  }
  fail_at(e, "malformed expression");
}

}  // namespace

Document parse(std::string_view text) { return Parser(lex(text)).document(); }

Expr parse_expression(std::string_view text) { return Parser(lex(text)).lone_expression(); }

Scalar eval_scalar(const Expr& e) {
  switch (e.kind) {
    case Expr::Kind::Number:
      return Scalar(e.number);
    case Expr::Kind::Neg:
      return -eval_scalar(e.args[0]);
    case Expr::Kind::Add:
      return eval_scalar(e.args[0]) + eval_scalar(e.args[1]);
    case Expr::Kind::Sub:
      return eval_scalar(e.args[0]) - eval_scalar(e.args[1]);
    case Expr::Kind::Mul:
      return eval_scalar(e.args[0]) * eval_scalar(e.args[1]);
    case Expr::Kind::Div: {
      const Scalar d = eval_scalar(e.args[1]);
      if (d == 0) fail_at(e, "division by zero");
      return eval_scalar(e.args[0]) / d;
    }
    case Expr::Kind::Pow: {
      const Scalar b = eval_scalar(e.args[0]);
      Scalar r = 1;
      for (unsigned long k = exponent_of(e); k > 0; --k) r *= b;
      return r;
    }
    case Expr::Kind::Symbol:
    case Expr::Kind::Call:
      break;
  }
  fail_at(e, "expected a rational number");
}

std::size_t eval_nat(const Expr& e) {
  if (e.kind != Expr::Kind::Number || e.number > 1000000) fail_at(e, "expected a natural number");
  return e.number.get_ui();
}

Poly eval_poly(const Expr& e, const std::shared_ptr<const VarList>& vars) {
  return heval(e, HContext{vars, 0, false}).c[0];
}

HPoly eval_hpoly(const Expr& e, const std::shared_ptr<const VarList>& vars, std::size_t order) {
  HVal v = heval(e, HContext{vars, order, true});
  return HPoly(vars, order, std::move(v.c));
}

HSeries eval_series(const Expr& e, std::size_t order) {
  auto none = std::make_shared<const VarList>();
  HVal v = heval(e, HContext{none, order, true});
  std::vector<Scalar> c;
  for (const auto& p : v.c) c.push_back(p.constant_term());
  return HSeries(order, std::move(c));
}

RatFn eval_ratfn(const Expr& e, const std::shared_ptr<const VarList>& vars) { return reval(e, vars); }

}  // namespace deformata::frontend
