#include <cctype>

#include "script_internal.hpp"

namespace reeskit::script {

ParseError::ParseError(const std::string& message, int line, int column)
    : Error("line " + std::to_string(line) + ":" + std::to_string(column) + ": " + message),
      line_(line),
      column_(column) {}

namespace {

struct Token {
  enum class Kind { Ident, Int, Str, Punct, End };
  Kind kind;
  std::string text;
  std::int64_t number = 0;
  int line;
  int column;
};

std::vector<Token> tokenize(const std::string& src) {
  std::vector<Token> out;
  int line = 1, col = 1;
  std::size_t i = 0;
  auto advance = [&](std::size_t n) {
    for (std::size_t k = 0; k < n; ++k) {
      if (src[i] == '\n') {
        ++line;
        col = 1;
      } else {
        ++col;
      }
      ++i;
    }
  };
  while (i < src.size()) {
    char c = src[i];
    if (std::isspace(static_cast<unsigned char>(c))) {
      advance(1);
      continue;
    }
    if ((c == '-' && i + 1 < src.size() && src[i + 1] == '-') ||
        (c == '/' && i + 1 < src.size() && src[i + 1] == '/')) {
      while (i < src.size() && src[i] != '\n') advance(1);
      continue;
    }
    Token t{Token::Kind::Punct, "", 0, line, col};
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
      std::size_t j = i;
      while (j < src.size() && (std::isalnum(static_cast<unsigned char>(src[j])) || src[j] == '_')) ++j;
      t.kind = Token::Kind::Ident;
      t.text = src.substr(i, j - i);
      advance(j - i);
    } else if (std::isdigit(static_cast<unsigned char>(c))) {
      std::size_t j = i;
      while (j < src.size() && std::isdigit(static_cast<unsigned char>(src[j]))) ++j;
      t.kind = Token::Kind::Int;
      t.text = src.substr(i, j - i);
      if (t.text.size() > 18) throw ParseError("integer literal too large", line, col);
      t.number = std::stoll(t.text);
      advance(j - i);
    } else if (c == '"') {
      std::size_t j = i + 1;
      while (j < src.size() && src[j] != '"' && src[j] != '\n') ++j;
      if (j >= src.size() || src[j] != '"') throw ParseError("unterminated string", line, col);
      t.kind = Token::Kind::Str;
      t.text = src.substr(i + 1, j - i - 1);
      advance(j + 1 - i);
    } else {
      static const char* twoChar[] = {"==", "!=", ">=", "<="};
      std::string s(1, c);
      if (i + 1 < src.size())
        for (const char* op : twoChar)
          if (src.compare(i, 2, op) == 0) s = op;
      if (s.size() == 1 && std::string(";,()[]{}=+-*/^|<>:").find(c) == std::string::npos)
        throw ParseError(std::string("unexpected character '") + c + "'", line, col);
      t.text = s;
      advance(s.size());
    }
    out.push_back(std::move(t));
  }
  out.push_back({Token::Kind::End, "", 0, line, col});
  return out;
}

class Parser {
 public:
  explicit Parser(std::vector<Token> tokens) : toks_(std::move(tokens)) {}

  Script parse() {
    Script s;
    while (!at(Token::Kind::End)) s.statements.push_back(statement());
    return s;
  }

 private:
  const Token& peek(std::size_t k = 0) const { return toks_[std::min(pos_ + k, toks_.size() - 1)]; }
  bool at(Token::Kind k) const { return peek().kind == k; }
  bool atPunct(const char* p, std::size_t k = 0) const {
    return peek(k).kind == Token::Kind::Punct && peek(k).text == p;
  }
  bool atIdent(const char* w, std::size_t k = 0) const {
    return peek(k).kind == Token::Kind::Ident && peek(k).text == w;
  }
  [[noreturn]] void fail(const std::string& msg) const { throw ParseError(msg, peek().line, peek().column); }
  const Token& next() { return toks_[pos_ < toks_.size() - 1 ? pos_++ : pos_]; }
  void expect(const char* p) {
    if (!atPunct(p)) fail(std::string("expected '") + p + "'" + describeFound());
    next();
  }
  std::string describeFound() const {
    if (at(Token::Kind::End)) return " before end of input";
    return " but found '" + peek().text + "'";
  }
  std::string ident(const char* what) {
    if (!at(Token::Kind::Ident)) fail(std::string("expected ") + what + describeFound());
    return next().text;
  }
  void endStatement(bool allowEnd) {
    if (atPunct(";")) {
      next();
      return;
    }
    if (allowEnd && at(Token::Kind::End)) return;
    fail("expected ';'" + describeFound());
  }

  std::shared_ptr<Statement> make(Statement::Kind k, const Token& at) {
    auto s = std::make_shared<Statement>();
    s->kind = k;
    s->line = at.line;
    s->column = at.column;
    return s;
  }

  std::shared_ptr<const Statement> statement() {
    const Token start = peek();
    if (atIdent("ring") && peek(1).kind == Token::Kind::Ident && atPunct("=", 2)) return ringStatement();
    if (atIdent("use")) {
      next();
      auto s = make(Statement::Kind::Use, start);
      s->args.push_back(expr());
      endStatement(true);
      return s;
    }
    if (atIdent("ideal") && peek(1).kind == Token::Kind::Ident && atPunct("=", 2)) {
      next();
      auto s = make(Statement::Kind::IdealDecl, start);
      s->name = next().text;
      next();
      s->args = exprList(";");
      endStatement(true);
      return s;
    }
    if (atIdent("let")) {
      next();
      auto s = make(Statement::Kind::Let, start);
      s->name = ident("a name after 'let'");
      expect("=");
      s->args.push_back(expr());
      endStatement(true);
      return s;
    }
    if (atIdent("print")) {
      next();
      auto s = make(Statement::Kind::Print, start);
      s->args.push_back(expr());
      endStatement(true);
      return s;
    }
    if ((atIdent("assertEqual") || atIdent("assertTrue")) && atPunct("(", 1)) {
      const bool eq = peek().text == "assertEqual";
      next();
      next();
      auto s = make(eq ? Statement::Kind::AssertEqual : Statement::Kind::AssertTrue, start);
      s->args = exprList(")");
      expect(")");
      const std::size_t want = eq ? 2 : 1;
      if (s->args.size() != want)
        throw ParseError(std::string(eq ? "assertEqual" : "assertTrue") + " takes " + std::to_string(want) +
                             " argument" + (want == 1 ? "" : "s"),
                         start.line, start.column);
      endStatement(true);
      return s;
    }
    auto s = make(Statement::Kind::Bare, start);
    s->args.push_back(expr());
    endStatement(true);
    return s;
  }

  std::shared_ptr<const Statement> ringStatement() {
    const Token start = next();
    auto s = make(Statement::Kind::Ring, start);
    s->name = next().text;
    next();  // '='
    if (!atIdent("zmod")) fail("expected 'zmod'" + describeFound());
    next();
    if (!at(Token::Kind::Int)) fail("expected the characteristic" + describeFound());
    const Token charTok = peek();
    s->characteristic = next().number;
    if (s->characteristic < 2 || s->characteristic >= (std::int64_t{1} << 31) ||
        !isPrime(static_cast<std::uint64_t>(s->characteristic)))
      throw ParseError("characteristic " + charTok.text + " is not a prime below 2^31", charTok.line,
                       charTok.column);
    expect("[");
    s->blocks.emplace_back();
    while (true) {
      VarDecl d;
      d.name = ident("a variable name");
      if (atPunct(":")) {
        next();
        if (!at(Token::Kind::Int)) fail("expected a variable degree" + describeFound());
        d.weight = static_cast<int>(next().number);
      }
      s->blocks.back().push_back(d);
      if (atPunct(",")) {
        next();
        continue;
      }
      if (atPunct("|")) {
        next();
        s->blocks.emplace_back();
        continue;
      }
      break;
    }
    expect("]");
    if (atIdent("grevlex") || atIdent("lex") || atIdent("elim")) s->order = next().text;
    if (atPunct("/")) {
      next();
      expect("(");
      s->args = exprList(")");
      expect(")");
    }
    endStatement(true);
    return s;
  }

  std::vector<ExprPtr> exprList(const char* closer) {
    std::vector<ExprPtr> out;
    if (atPunct(closer)) return out;
    out.push_back(expr());
    while (atPunct(",")) {
      next();
      out.push_back(expr());
    }
    return out;
  }

  ExprPtr node(Expr::Kind k, const Token& t, std::string text = "", std::vector<ExprPtr> args = {}) {
    auto e = std::make_shared<Expr>();
    e->kind = k;
    e->line = t.line;
    e->column = t.column;
    e->text = std::move(text);
    e->args = std::move(args);
    return e;
  }

  ExprPtr expr() {
    ExprPtr lhs = additive();
    static const char* cmp[] = {"==", "!=", ">=", "<=", "<", ">"};
    for (const char* op : cmp)
      if (atPunct(op)) {
        const Token t = next();
        ExprPtr rhs = additive();
        return node(Expr::Kind::Binary, t, op, {lhs, rhs});
      }
    return lhs;
  }

  ExprPtr additive() {
    ExprPtr lhs = multiplicative();
    while (atPunct("+") || atPunct("-")) {
      const Token t = next();
      lhs = node(Expr::Kind::Binary, t, t.text, {lhs, multiplicative()});
    }
    return lhs;
  }

  ExprPtr multiplicative() {
    ExprPtr lhs = unary();
    while (atPunct("*") || atPunct("/")) {
      const Token t = next();
      lhs = node(Expr::Kind::Binary, t, t.text, {lhs, unary()});
    }
    return lhs;
  }

  ExprPtr unary() {
    if (atPunct("-")) {
      const Token t = next();
      return node(Expr::Kind::Unary, t, "-", {unary()});
    }
    return power();
  }

  ExprPtr power() {
    ExprPtr base = postfix();
    if (atPunct("^")) {
      const Token t = next();
      return node(Expr::Kind::Binary, t, "^", {base, unary()});
    }
    return base;
  }

  ExprPtr postfix() {
    ExprPtr e = primary();
    while (atPunct("[")) {
      const Token t = next();
      ExprPtr idx = expr();
      expect("]");
      e = node(Expr::Kind::Index, t, "", {e, idx});
    }
    return e;
  }

  ExprPtr primary() {
    const Token t = peek();
    switch (t.kind) {
      case Token::Kind::Int: {
        next();
        auto e = std::make_shared<Expr>();
        e->kind = Expr::Kind::Int;
        e->line = t.line;
        e->column = t.column;
        e->number = t.number;
        return e;
      }
      case Token::Kind::Str:
        next();
        return node(Expr::Kind::Str, t, t.text);
      case Token::Kind::Ident: {
        next();
        if (atPunct("(")) {
          next();
          auto args = exprList(")");
          expect(")");
          return node(Expr::Kind::Call, t, t.text, std::move(args));
        }
        if (atPunct("{")) return node(Expr::Kind::Call, t, t.text, {listLiteral()});
        return node(Expr::Kind::Name, t, t.text);
      }
      case Token::Kind::Punct:
        if (t.text == "(") {
          next();
          ExprPtr e = expr();
          expect(")");
          return e;
        }
        if (t.text == "{") return listLiteral();
        fail("unexpected '" + t.text + "'");
      case Token::Kind::End:
        fail("unexpected end of input");
    }
    fail("unexpected token");
  }

  ExprPtr listLiteral() {
    const Token t = next();  // '{'
    auto items = exprList("}");
    expect("}");
    return node(Expr::Kind::List, t, "", std::move(items));
  }

  std::vector<Token> toks_;
  std::size_t pos_ = 0;
};

}  // namespace

Script parseScript(const std::string& text) { return Parser(tokenize(text)).parse(); }

}  // namespace reeskit::script
