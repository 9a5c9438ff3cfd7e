#pragma once

// Textual morphism expressions.
//
//   expr    := comp
//   comp    := tens (("." | ";") tens)*       a ; b  is  b . a
//   tens    := atom ("#" atom)*
//   atom    := prim | NAME | "(" expr ")"
//   prim    := ("id"|"eta"|"mu"|"eps"|"delta"|"lam") "[" objexpr "]"
//            | "c" "[" objexpr "," objexpr "]"
//   objexpr := "I" | NAME ("#" NAME)*
//
// "." is classical composition (right operand first), "#" is the tensor
// product and binds tighter; both associate to the left. "--" starts a
// comment that runs to the end of the line.

#include <cctype>
#include <map>
#include <memory>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <variant>
#include <vector>

#include "hqg/structure.hpp"

namespace hqg::dsl {

class DslError : public std::runtime_error {
 public:
  DslError(const std::string& what, int line, int col)
      : std::runtime_error(std::to_string(line) + ":" + std::to_string(col) + ": " + what), line_(line), col_(col) {}
  int line() const { return line_; }
  int column() const { return col_; }

 private:
  int line_, col_;
};

class ParseError : public DslError {
 public:
  using DslError::DslError;
};
class UnknownPrimitive : public DslError {
 public:
  using DslError::DslError;
};
class UnboundName : public DslError {
 public:
  UnboundName(const std::string& name, int line, int col)
      : DslError("unbound name " + name, line, col), name_(name) {}
  const std::string& name() const { return name_; }

 private:
  std::string name_;
};
class TypeMismatch : public DslError {
 public:
  using DslError::DslError;
};

enum class Kind { Id, Eta, Mu, Eps, Delta, Lam, Braid, Named, Compose, Tensor };

struct Expr;
using ExprPtr = std::shared_ptr<const Expr>;

/// An object expression: names joined by "#"; empty means I.
using ObjExpr = std::vector<std::string>;

struct Expr {
  Kind kind;
  ObjExpr obj;    // Id and structure primitives; first argument of c
  ObjExpr obj2;   // second argument of c
  std::string name;  // Named
  ExprPtr lhs, rhs;  // Compose (lhs ∘ rhs) and Tensor (lhs ⊗ rhs)
  int line = 1, col = 1;
};

/// Structural equality; source positions are ignored.
inline bool same(const Expr& a, const Expr& b) {
  if (a.kind != b.kind || a.obj != b.obj || a.obj2 != b.obj2 || a.name != b.name) return false;
  if (a.kind == Kind::Compose || a.kind == Kind::Tensor) return same(*a.lhs, *b.lhs) && same(*a.rhs, *b.rhs);
  return true;
}

namespace detail {

struct Token {
  enum Type { Name, LBracket, RBracket, Comma, LParen, RParen, Dot, Semi, Hash, End } type;
  std::string text;
  int line, col;
};

inline std::vector<Token> lex(std::string_view s) {
  std::vector<Token> out;
  int line = 1, col = 1;
  std::size_t i = 0;
  auto advance = [&] {
    if (s[i] == '\n') {
      ++line;
      col = 1;
    } else {
      ++col;
    }
    ++i;
  };
  while (i < s.size()) {
    char ch = s[i];
    if (std::isspace(static_cast<unsigned char>(ch))) {
      advance();
      continue;
    }
    if (ch == '-' && i + 1 < s.size() && s[i + 1] == '-') {
      while (i < s.size() && s[i] != '\n') advance();
      continue;
    }
    int l = line, c = col;
    if (std::isalpha(static_cast<unsigned char>(ch)) || ch == '_') {
      std::string name;
      while (i < s.size() && (std::isalnum(static_cast<unsigned char>(s[i])) || s[i] == '_')) {
        name += s[i];
        advance();
      }
      out.push_back({Token::Name, std::move(name), l, c});
      continue;
    }
    Token::Type t;
    switch (ch) {
      case '[': t = Token::LBracket; break;
      case ']': t = Token::RBracket; break;
      case ',': t = Token::Comma; break;
      case '(': t = Token::LParen; break;
      case ')': t = Token::RParen; break;
      case '.': t = Token::Dot; break;
      case ';': t = Token::Semi; break;
      case '#': t = Token::Hash; break;
      default: throw ParseError(std::string("unexpected character '") + ch + "'", l, c);
    }
    out.push_back({t, std::string(1, ch), l, c});
    advance();
  }
  out.push_back({Token::End, "", line, col});
  return out;
}

inline bool is_structure_prim(const std::string& s) {
  return s == "id" || s == "eta" || s == "mu" || s == "eps" || s == "delta" || s == "lam";
}

class Parser {
 public:
  explicit Parser(std::string_view text) : toks_(lex(text)) {}

  ExprPtr parse_all() {
    ExprPtr e = comp();
    if (peek().type != Token::End) fail("expected end of expression");
    return e;
  }

 private:
  const Token& peek() const { return toks_[pos_]; }
  const Token& next() { return toks_[pos_++]; }
  [[noreturn]] void fail(const std::string& msg) const {
    const Token& t = peek();
    throw ParseError(msg + (t.type == Token::End ? " at end of input" : " near '" + t.text + "'"), t.line, t.col);
  }
  void expect(Token::Type t, const char* what) {
    if (peek().type != t) fail(std::string("expected ") + what);
    ++pos_;
  }

  static ExprPtr binary(Kind k, ExprPtr l, ExprPtr r, const Token& at) {
    auto e = std::make_shared<Expr>();
    e->kind = k;
    e->lhs = std::move(l);
    e->rhs = std::move(r);
    e->line = at.line;
    e->col = at.col;
    return e;
  }

  ExprPtr comp() {
    ExprPtr e = tens();
    while (peek().type == Token::Dot || peek().type == Token::Semi) {
      Token op = next();
      ExprPtr r = tens();
      e = op.type == Token::Dot ? binary(Kind::Compose, e, r, op) : binary(Kind::Compose, r, e, op);
    }
    return e;
  }

  ExprPtr tens() {
    ExprPtr e = atom();
    while (peek().type == Token::Hash) {
      Token op = next();
      e = binary(Kind::Tensor, e, atom(), op);
    }
    return e;
  }

  ObjExpr objexpr() {
    if (peek().type != Token::Name) fail("expected an object");
    if (peek().text == "I") {
      ++pos_;
      return {};
    }
    ObjExpr o{next().text};
    while (peek().type == Token::Hash) {
      ++pos_;
      if (peek().type != Token::Name || peek().text == "I") fail("expected an object name");
      o.push_back(next().text);
    }
    return o;
  }

  ExprPtr atom() {
    const Token& t = peek();
    if (t.type == Token::LParen) {
      ++pos_;
      ExprPtr e = comp();
      expect(Token::RParen, "')'");
      return e;
    }
    if (t.type != Token::Name) fail("expected a morphism");
    Token name = next();
    auto e = std::make_shared<Expr>();
    e->line = name.line;
    e->col = name.col;
    if (peek().type != Token::LBracket) {
      e->kind = Kind::Named;
      e->name = name.text;
      return e;
    }
    if (name.text != "c" && !is_structure_prim(name.text))
      throw UnknownPrimitive("unknown primitive " + name.text, name.line, name.col);
    ++pos_;
    e->obj = objexpr();
    if (name.text == "c") {
      e->kind = Kind::Braid;
      expect(Token::Comma, "','");
      e->obj2 = objexpr();
    } else {
      static const std::map<std::string, Kind> kinds = {{"id", Kind::Id},   {"eta", Kind::Eta},
                                                        {"mu", Kind::Mu},   {"eps", Kind::Eps},
                                                        {"delta", Kind::Delta}, {"lam", Kind::Lam}};
      e->kind = kinds.at(name.text);
    }
    expect(Token::RBracket, "']'");
    return e;
  }

  std::vector<Token> toks_;
  std::size_t pos_ = 0;
};

inline std::string print_obj(const ObjExpr& o) {
  if (o.empty()) return "I";
  std::string s = o[0];
  for (std::size_t i = 1; i < o.size(); ++i) s += " # " + o[i];
  return s;
}

}  // namespace detail

inline ExprPtr parse(std::string_view text) { return detail::Parser(text).parse_all(); }

/// Canonical text; parse(print(e)) is structurally equal to e.
inline std::string print(const Expr& e) {
  auto paren = [](const std::string& s) { return "(" + s + ")"; };
  switch (e.kind) {
    case Kind::Id: return "id[" + detail::print_obj(e.obj) + "]";
    case Kind::Eta: return "eta[" + detail::print_obj(e.obj) + "]";
    case Kind::Mu: return "mu[" + detail::print_obj(e.obj) + "]";
    case Kind::Eps: return "eps[" + detail::print_obj(e.obj) + "]";
    case Kind::Delta: return "delta[" + detail::print_obj(e.obj) + "]";
    case Kind::Lam: return "lam[" + detail::print_obj(e.obj) + "]";
    case Kind::Braid: return "c[" + detail::print_obj(e.obj) + ", " + detail::print_obj(e.obj2) + "]";
    case Kind::Named: return e.name;
    case Kind::Compose: {
      std::string r = print(*e.rhs);
      return print(*e.lhs) + " . " + (e.rhs->kind == Kind::Compose ? paren(r) : r);
    }
    case Kind::Tensor: {
      std::string l = print(*e.lhs), r = print(*e.rhs);
      if (e.lhs->kind == Kind::Compose) l = paren(l);
      if (e.rhs->kind == Kind::Compose || e.rhs->kind == Kind::Tensor) r = paren(r);
      return l + " # " + r;
    }
  }
  return {};
}

/// Name bindings: structures (exposing their object and maps), maps, objects.
class Context {
 public:
  using Binding = std::variant<HopfQuasigroupData, LinMap, Obj>;

  explicit Context(FieldSpec f = FieldSpec::rationals()) : field_(f) {}

  Context& bind(const std::string& name, HopfQuasigroupData s) {
    field_ = s.field();
    return put(name, std::move(s));
  }
  Context& bind(const std::string& name, LinMap m) {
    field_ = m.field();
    return put(name, std::move(m));
  }
  Context& bind(const std::string& name, Obj o) { return put(name, std::move(o)); }

  const Binding* find(const std::string& name) const {
    auto it = bindings_.find(name);
    return it == bindings_.end() ? nullptr : &it->second;
  }
  FieldSpec field() const { return field_; }
  const std::map<std::string, Binding>& bindings() const { return bindings_; }

 private:
  Context& put(const std::string& name, Binding b) {
    if (name == "I" || detail::is_structure_prim(name) || name == "c")
      throw std::invalid_argument("reserved name " + name);
    if (!bindings_.emplace(name, std::move(b)).second) throw std::invalid_argument("name bound twice: " + name);
    return *this;
  }

  FieldSpec field_;
  std::map<std::string, Binding> bindings_;
};

namespace detail {

class Evaluator {
 public:
  explicit Evaluator(const Context& ctx) : ctx_(ctx), f_(ctx.field()) {}

  Morphism eval(const Expr& e) const {
    switch (e.kind) {
      case Kind::Id: return id(objects(e.obj, e), f_);
      case Kind::Braid: return braid(objects(e.obj, e), objects(e.obj2, e), f_);
      case Kind::Eta:
      case Kind::Mu:
      case Kind::Eps:
      case Kind::Delta:
      case Kind::Lam: return structure_map(e);
      case Kind::Named: {
        const Context::Binding* b = ctx_.find(e.name);
        if (!b) throw UnboundName(e.name, e.line, e.col);
        if (const auto* m = std::get_if<LinMap>(b)) return Morphism::leaf(*m);
        throw TypeMismatch(e.name + " names " +
                               (std::holds_alternative<Obj>(*b) ? std::string("an object") : "a structure") +
                               ", not a map",
                           e.line, e.col);
      }
      case Kind::Compose: {
        Morphism l = eval(*e.lhs), r = eval(*e.rhs);
        if (!(r.codomain() == l.domain()))
          throw TypeMismatch("cannot compose: right side has codomain " + describe(r.codomain()) +
                                 ", left side has domain " + describe(l.domain()),
                             e.line, e.col);
        return l << r;
      }
      case Kind::Tensor: return eval(*e.lhs) * eval(*e.rhs);
    }
    throw std::logic_error("bad expression kind");
  }

 private:
  Factors objects(const ObjExpr& o, const Expr& at) const {
    Factors fs;
    for (const auto& n : o) {
      const Context::Binding* b = ctx_.find(n);
      if (!b) throw UnboundName(n, at.line, at.col);
      if (const auto* s = std::get_if<HopfQuasigroupData>(b)) {
        for (const auto& x : s->factors()) fs.push_back(x);
      } else if (const auto* ob = std::get_if<Obj>(b)) {
        for (const auto& x : normalize({*ob})) fs.push_back(x);
      } else {
        throw TypeMismatch(n + " names a map, not an object", at.line, at.col);
      }
    }
    return fs;
  }

  std::vector<const HopfQuasigroupData*> structures(const Expr& e) const {
    std::vector<const HopfQuasigroupData*> out;
    for (const auto& n : e.obj) {
      const Context::Binding* b = ctx_.find(n);
      if (!b) throw UnboundName(n, e.line, e.col);
      const auto* s = std::get_if<HopfQuasigroupData>(b);
      if (!s) throw TypeMismatch(n + " does not name a structure", e.line, e.col);
      out.push_back(s);
    }
    return out;
  }

  /// Structure maps of S_1⊗...⊗S_n; n = 0 gives K.
  Morphism structure_map(const Expr& e) const {
    auto ss = structures(e);
    Morphism out = id(Factors{}, f_);
    Factors once;
    for (const auto* s : ss)
      for (const auto& x : s->factors()) once.push_back(x);
    switch (e.kind) {
      case Kind::Eta:
        for (const auto* s : ss) out = out * s->eta();
        return out;
      case Kind::Eps:
        for (const auto* s : ss) out = out * s->eps();
        return out;
      case Kind::Lam:
        for (const auto* s : ss) out = out * s->lam();
        return out;
      default: break;
    }
    // (S_1⊗S_1⊗...⊗S_n⊗S_n) ↔ (S_1⊗...⊗S_n⊗S_1⊗...⊗S_n).
    std::vector<std::size_t> to_blocks;  // output k of the shuffle reads input to_blocks[k]
    Factors paired;
    std::vector<std::size_t> paired_pos;
    for (const auto* s : ss) {
      paired_pos.push_back(paired.size());
      for (int rep = 0; rep < 2; ++rep)
        for (const auto& x : s->factors()) paired.push_back(x);
    }
    for (int rep = 0; rep < 2; ++rep)
      for (std::size_t i = 0; i < ss.size(); ++i) {
        std::size_t w = ss[i]->factors().size();
        for (std::size_t j = 0; j < w; ++j) to_blocks.push_back(paired_pos[i] + rep * w + j);
      }
    std::vector<std::size_t> from_blocks(to_blocks.size());
    for (std::size_t k = 0; k < to_blocks.size(); ++k) from_blocks[to_blocks[k]] = k;
    Factors blocks = concat(once, once);
    Morphism prod = id(Factors{}, f_);
    if (e.kind == Kind::Mu) {
      for (const auto* s : ss) prod = prod * s->mu();
      return prod << Morphism::permutation(blocks, from_blocks, f_);
    }
    for (const auto* s : ss) prod = prod * s->delta();
    return Morphism::permutation(paired, to_blocks, f_) << prod;
  }

  const Context& ctx_;
  FieldSpec f_;
};

}  // namespace detail

inline Morphism eval_morphism(const Expr& e, const Context& ctx) { return detail::Evaluator(ctx).eval(e); }
inline Morphism eval_morphism(std::string_view text, const Context& ctx) { return eval_morphism(*parse(text), ctx); }

inline LinMap eval(const Expr& e, const Context& ctx) { return eval_morphism(e, ctx).materialize(); }
inline LinMap eval(std::string_view text, const Context& ctx) { return eval(*parse(text), ctx); }

/// Exact comparison with the first differing basis multi-index as witness.
inline EquationResult check_equal(const Expr& lhs, const Expr& rhs, const Context& ctx, std::string tag = "") {
  Morphism l = eval_morphism(lhs, ctx), r = eval_morphism(rhs, ctx);
  if (!(l.domain() == r.domain()) || !(l.codomain() == r.codomain()))
    throw TypeMismatch("sides have different types: " + describe(l.domain()) + " -> " + describe(l.codomain()) +
                           " vs " + describe(r.domain()) + " -> " + describe(r.codomain()),
                       lhs.line, lhs.col);
  return check_equation({std::move(tag), l, r});
}

inline EquationResult check_equal(std::string_view lhs, std::string_view rhs, const Context& ctx,
                                  std::string tag = "") {
  return check_equal(*parse(lhs), *parse(rhs), ctx, std::move(tag));
}

}  // namespace hqg::dsl
