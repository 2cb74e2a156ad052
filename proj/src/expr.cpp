#include "rwb/expr.hpp"

#include <cctype>

#include "rwb/errors.hpp"

namespace rwb {

namespace {

struct Token {
  enum class Kind { number, ident, symbol, end } kind;
  std::string text;
  std::int64_t value = 0;
  int line;
  int col;
};

class Lexer {
 public:
  Lexer(const std::string& text, int line) : text_(text), line_(line) {}

  Token next() {
    skip_ws();
    Token t;
    t.line = line_;
    t.col = col_;
    if (pos_ >= text_.size()) {
      t.kind = Token::Kind::end;
      return t;
    }
    char c = text_[pos_];
    if (std::isdigit(static_cast<unsigned char>(c))) {
      size_t start = pos_;
      while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) bump();
      t.kind = Token::Kind::number;
      t.text = text_.substr(start, pos_ - start);
      t.value = std::stoll(t.text);
      return t;
    }
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_' || c == '$') {
      size_t start = pos_;
      bump();
      while (pos_ < text_.size() &&
             (std::isalnum(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '_'))
        bump();
      t.kind = Token::Kind::ident;
      t.text = text_.substr(start, pos_ - start);
      return t;
    }
    if (c == '\'') {
      // 'a' is the letter index of a.
      if (pos_ + 2 >= text_.size() || text_[pos_ + 2] != '\'')
        throw ParseError(line_, col_, "closed letter literal");
      t.kind = Token::Kind::number;
      t.value = text_[pos_ + 1] - 'a';
      bump();
      bump();
      bump();
      return t;
    }
    static const char* two[] = {"<=", ">=", "==", "!=", "&&", "||"};
    for (const char* s : two) {
      if (text_.compare(pos_, 2, s) == 0) {
        t.kind = Token::Kind::symbol;
        t.text = s;
        bump();
        bump();
        return t;
      }
    }
    if (std::string("+-*/%()<>,").find(c) != std::string::npos) {
      t.kind = Token::Kind::symbol;
      t.text = std::string(1, c);
      bump();
      return t;
    }
    throw ParseError(line_, col_, "expression token");
  }

 private:
  void skip_ws() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) bump();
  }
  void bump() {
    ++pos_;
    ++col_;
  }
  const std::string& text_;
  size_t pos_ = 0;
  int line_;
  int col_ = 1;
};

class Parser {
 public:
  Parser(const std::string& text, int line) : lex_(text, line) { advance(); }

  Expr::NodePtr parse_all() {
    Expr::NodePtr e = parse_or();
    if (cur_.kind != Token::Kind::end) throw ParseError(cur_.line, cur_.col, "end of expression");
    return e;
  }

 private:
  Lexer lex_;
  Token cur_;

  void advance() { cur_ = lex_.next(); }
  bool eat(const std::string& sym) {
    if (cur_.kind == Token::Kind::symbol && cur_.text == sym) {
      advance();
      return true;
    }
    return false;
  }

  static Expr::NodePtr mk(Expr::OpCode op, Expr::NodePtr a, Expr::NodePtr b) {
    auto n = std::make_shared<Expr::Node>();
    n->op = op;
    n->args = {std::move(a), std::move(b)};
    return n;
  }

  Expr::NodePtr parse_or() {
    Expr::NodePtr e = parse_and();
    while (eat("||")) e = mk(Expr::OpCode::lor, e, parse_and());
    return e;
  }
  Expr::NodePtr parse_and() {
    Expr::NodePtr e = parse_cmp();
    while (eat("&&")) e = mk(Expr::OpCode::land, e, parse_cmp());
    return e;
  }
  Expr::NodePtr parse_cmp() {
    Expr::NodePtr e = parse_add();
    struct {
      const char* sym;
      Expr::OpCode op;
    } table[] = {{"<=", Expr::OpCode::le}, {">=", Expr::OpCode::ge}, {"==", Expr::OpCode::eq},
                 {"!=", Expr::OpCode::ne}, {"<", Expr::OpCode::lt},  {">", Expr::OpCode::gt}};
    for (const auto& row : table) {
      if (eat(row.sym)) return mk(row.op, e, parse_add());
    }
    return e;
  }
  Expr::NodePtr parse_add() {
    Expr::NodePtr e = parse_mul();
    while (true) {
      if (eat("+")) {
        e = mk(Expr::OpCode::add, e, parse_mul());
      } else if (eat("-")) {
        e = mk(Expr::OpCode::sub, e, parse_mul());
      } else {
        return e;
      }
    }
  }
  Expr::NodePtr parse_mul() {
    Expr::NodePtr e = parse_unary();
    while (true) {
      if (eat("*")) {
        e = mk(Expr::OpCode::mul, e, parse_unary());
      } else if (eat("/")) {
        e = mk(Expr::OpCode::div, e, parse_unary());
      } else if (eat("%")) {
        e = mk(Expr::OpCode::mod, e, parse_unary());
      } else {
        return e;
      }
    }
  }
  Expr::NodePtr parse_unary() {
    if (eat("-")) {
      auto n = std::make_shared<Expr::Node>();
      n->op = Expr::OpCode::neg;
      n->args = {parse_unary()};
      return n;
    }
    return parse_primary();
  }
  Expr::NodePtr parse_primary() {
    if (cur_.kind == Token::Kind::number) {
      auto n = std::make_shared<Expr::Node>();
      n->op = Expr::OpCode::constant;
      n->value = cur_.value;
      advance();
      return n;
    }
    if (cur_.kind == Token::Kind::ident) {
      auto n = std::make_shared<Expr::Node>();
      n->name = cur_.text;
      advance();
      if (eat("(")) {
        n->op = Expr::OpCode::call;
        if (!eat(")")) {
          n->args.push_back(parse_or());
          while (eat(",")) n->args.push_back(parse_or());
          if (!eat(")")) throw ParseError(cur_.line, cur_.col, ")");
        }
      } else {
        n->op = Expr::OpCode::ident;
      }
      return n;
    }
    if (eat("(")) {
      Expr::NodePtr e = parse_or();
      if (!eat(")")) throw ParseError(cur_.line, cur_.col, ")");
      return e;
    }
    throw ParseError(cur_.line, cur_.col, "number, identifier or (");
  }
};

std::int64_t eval_node(const Expr::Node& n, const Expr::Env& env) {
  using Op = Expr::OpCode;
  auto arg = [&](size_t i) { return eval_node(*n.args[i], env); };
  switch (n.op) {
    case Op::constant:
      return n.value;
    case Op::ident:
      return env(n.name, {});
    case Op::call: {
      std::vector<std::int64_t> vals;
      for (const auto& a : n.args) vals.push_back(eval_node(*a, env));
      return env(n.name, vals);
    }
    case Op::neg:
      return -arg(0);
    case Op::add:
      return arg(0) + arg(1);
    case Op::sub:
      return arg(0) - arg(1);
    case Op::mul:
      return arg(0) * arg(1);
    case Op::div: {
      std::int64_t d = arg(1);
      return d == 0 ? 0 : arg(0) / d;
    }
    case Op::mod: {
      std::int64_t d = arg(1);
      return d == 0 ? 0 : arg(0) % d;
    }
    case Op::lt:
      return arg(0) < arg(1) ? 1 : 0;
    case Op::le:
      return arg(0) <= arg(1) ? 1 : 0;
    case Op::gt:
      return arg(0) > arg(1) ? 1 : 0;
    case Op::ge:
      return arg(0) >= arg(1) ? 1 : 0;
    case Op::eq:
      return arg(0) == arg(1) ? 1 : 0;
    case Op::ne:
      return arg(0) != arg(1) ? 1 : 0;
    case Op::land:
      return (arg(0) != 0 && arg(1) != 0) ? 1 : 0;
    case Op::lor:
      return (arg(0) != 0 || arg(1) != 0) ? 1 : 0;
  }
  throw Error("unreachable");
}

Poly eval_poly_node(const Expr::Node& n, int vars,
                    const std::function<Poly(const std::string&)>& var_of) {
  using Op = Expr::OpCode;
  auto arg = [&](size_t i) { return eval_poly_node(*n.args[i], vars, var_of); };
  switch (n.op) {
    case Op::constant:
      return Poly::constant(vars, Rational(n.value));
    case Op::ident:
      return var_of(n.name);
    case Op::neg:
      return arg(0).scaled(Rational(-1));
    case Op::add:
      return arg(0) + arg(1);
    case Op::sub:
      return arg(0) - arg(1);
    case Op::mul:
      return arg(0) * arg(1);
    case Op::div: {
      Poly d = arg(1);
      if (d.degree() > 0 || d.is_zero())
        throw Error("polynomial division only by a nonzero constant");
      Rational c = d.terms().begin()->second;
      return arg(0).scaled(Rational(1) / c);
    }
    default:
      throw Error("operator not meaningful for polynomials");
  }
}

}  // namespace

Expr Expr::parse(const std::string& text, int line_offset) {
  Expr e;
  e.text_ = text;
  Parser p(text, line_offset);
  e.root_ = p.parse_all();
  return e;
}

std::int64_t Expr::eval(const Env& env) const {
  if (!root_) throw Error("empty expression");
  return eval_node(*root_, env);
}

Poly Expr::eval_poly(int vars, const std::function<Poly(const std::string&)>& var_of) const {
  if (!root_) throw Error("empty expression");
  return eval_poly_node(*root_, vars, var_of);
}

}  // namespace rwb
