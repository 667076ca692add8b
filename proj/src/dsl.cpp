#include "degreecalc/dsl.hpp"

#include <charconv>
#include <sstream>

namespace degreecalc {

namespace {

std::string join_expected(const std::vector<std::string>& expected) {
  std::string out;
  for (std::size_t i = 0; i < expected.size(); ++i) {
    if (i) out += ", ";
    out += expected[i];
  }
  return out;
}

std::string positioned(const std::string& message, int line, int column) {
  return std::to_string(line) + ":" + std::to_string(column) + ": " + message;
}

enum class Tok { K, S, S1, LParen, RParen, Semi, Hash, Times, Int, End };

struct Token {
  Tok kind;
  std::string text;
  int line;
  int column;
};

class Lexer {
 public:
  explicit Lexer(std::string_view src) : src_(src) {}

  std::vector<Token> run() {
    std::vector<Token> out;
    for (;;) {
      skip_space();
      const int l = line_, c = col_;
      if (pos_ >= src_.size()) {
        out.push_back({Tok::End, "end of input", l, c});
        return out;
      }
      const char ch = src_[pos_];
      if (ch == 'K') {
        advance(1);
        out.push_back({Tok::K, "K", l, c});
      } else if (ch == 'S') {
        if (pos_ + 1 < src_.size() && src_[pos_ + 1] == '1' &&
            !(pos_ + 2 < src_.size() && is_digit(src_[pos_ + 2]))) {
          advance(2);
          out.push_back({Tok::S1, "S1", l, c});
        } else {
          advance(1);
          out.push_back({Tok::S, "S", l, c});
        }
      } else if (ch == '(') {
        advance(1);
        out.push_back({Tok::LParen, "(", l, c});
      } else if (ch == ')') {
        advance(1);
        out.push_back({Tok::RParen, ")", l, c});
      } else if (ch == ';') {
        advance(1);
        out.push_back({Tok::Semi, ";", l, c});
      } else if (ch == '#') {
        advance(1);
        out.push_back({Tok::Hash, "#", l, c});
      } else if (ch == 'x') {
        advance(1);
        out.push_back({Tok::Times, "x", l, c});
      } else if (starts_with("\xC3\x97")) {  // multiplication sign
        advance(2, 1);
        out.push_back({Tok::Times, "x", l, c});
      } else if (is_digit(ch) || ch == '-' || ch == '+' || starts_with("\xE2\x88\x92")) {
        out.push_back(lex_int(l, c));
      } else {
        throw ParseError(positioned(std::string("unexpected character '") + ch + "'", l, c), l,
                         c, {"K(", "S(", "S1", "(", "#", "x", ")"});
      }
    }
  }

 private:
  static bool is_digit(char c) { return c >= '0' && c <= '9'; }

  bool starts_with(std::string_view s) const { return src_.substr(pos_).starts_with(s); }

  // Consumes `bytes` bytes that occupy `columns` display columns.
  void advance(std::size_t bytes, int columns = -1) {
    for (std::size_t i = 0; i < bytes; ++i) {
      if (src_[pos_ + i] == '\n') {
        ++line_;
        col_ = 1;
      }
    }
    col_ += columns < 0 ? static_cast<int>(bytes) : columns;
    pos_ += bytes;
  }

  void skip_space() {
    while (pos_ < src_.size()) {
      const char ch = src_[pos_];
      if (ch == '\n') {
        ++pos_;
        ++line_;
        col_ = 1;
      } else if (ch == ' ' || ch == '\t' || ch == '\r') {
        ++pos_;
        ++col_;
      } else {
        break;
      }
    }
  }

  Token lex_int(int l, int c) {
    std::string text;
    if (starts_with("\xE2\x88\x92")) {
      text = "-";
      advance(3, 1);
    } else if (src_[pos_] == '-' || src_[pos_] == '+') {
      if (src_[pos_] == '-') text = "-";
      advance(1);
    }
    const std::size_t start = pos_;
    while (pos_ < src_.size() && is_digit(src_[pos_])) advance(1);
    if (pos_ == start)
      throw ParseError(positioned("expected digits after sign", line_, col_), line_, col_,
                       {"integer"});
    text += std::string(src_.substr(start, pos_ - start));
    return {Tok::Int, text, l, c};
  }

  std::string_view src_;
  std::size_t pos_ = 0;
  int line_ = 1;
  int col_ = 1;
};

struct Located {
  Expr expr;
  int line;
  int column;
};

class Parser {
 public:
  explicit Parser(std::vector<Token> toks) : toks_(std::move(toks)) {}

  Expr run() {
    Located e = expr();
    if (peek().kind != Tok::End) fail({"#", "x", "end of input"});
    return e.expr;
  }

 private:
  const Token& peek() const { return toks_[pos_]; }
  const Token& take() { return toks_[pos_++]; }

  [[noreturn]] void fail(std::vector<std::string> expected) const {
    const Token& t = peek();
    throw ParseError(
        positioned("unexpected '" + t.text + "', expected one of: " + join_expected(expected),
                   t.line, t.column),
        t.line, t.column, std::move(expected));
  }

  const Token& expect(Tok kind, const char* spelling) {
    if (peek().kind != kind) fail({spelling});
    return take();
  }

  std::int64_t integer() {
    const Token& t = expect(Tok::Int, "integer");
    std::int64_t v = 0;
    auto [p, ec] = std::from_chars(t.text.data(), t.text.data() + t.text.size(), v);
    if (ec != std::errc() || p != t.text.data() + t.text.size())
      throw SemanticError("integer " + t.text + " is out of range", t.line, t.column);
    return v;
  }

  Located expr() {
    Located first = term();
    std::vector<Expr> factors{first.expr};
    while (peek().kind == Tok::Times) {
      take();
      factors.push_back(term().expr);
    }
    if (factors.size() == 1) return first;
    return {Expr::product(std::move(factors)), first.line, first.column};
  }

  Located term() {
    Located first = atom();
    if (peek().kind != Tok::Hash) return first;
    std::vector<Located> parts{first};
    while (peek().kind == Tok::Hash) {
      take();
      parts.push_back(atom());
    }
    const int d = dim_at(first);
    if (d < 2)
      throw SemanticError("connected sum of 1-manifolds is not defined", first.line, first.column);
    std::vector<Expr> summands;
    for (const auto& p : parts) {
      const int dp = dim_at(p);
      if (dp != d)
        throw SemanticError("connected sum mixes dimensions " + std::to_string(d) + " and " +
                                std::to_string(dp),
                            p.line, p.column);
      summands.push_back(p.expr);
    }
    return {Expr::conn_sum(std::move(summands)), first.line, first.column};
  }

  static int dim_at(const Located& l) {
    try {
      return dimension(l.expr);
    } catch (const MalformedExpr& e) {
      throw SemanticError(e.what(), l.line, l.column);
    }
  }

  Located atom() {
    const Token& t = peek();
    switch (t.kind) {
      case Tok::S1:
        take();
        return {Expr::circle(), t.line, t.column};
      case Tok::S: {
        take();
        expect(Tok::LParen, "(");
        const Token& g = peek();
        const std::int64_t genus = integer();
        expect(Tok::RParen, ")");
        if (genus < 0 || g.text.front() == '-')
          throw SemanticError("surface genus must be a natural number", g.line, g.column);
        return {Expr::surface(genus), t.line, t.column};
      }
      case Tok::K: {
        take();
        expect(Tok::LParen, "(");
        const Token& g = peek();
        const std::int64_t genus = integer();
        expect(Tok::Semi, ";");
        const std::int64_t euler = integer();
        expect(Tok::RParen, ")");
        if (genus < 2)
          throw SemanticError("circle bundle base genus must be >= 2, got " + std::to_string(genus),
                              g.line, g.column);
        return {Expr::bundle(genus, euler), t.line, t.column};
      }
      case Tok::LParen: {
        take();
        Located inner = expr();
        if (peek().kind != Tok::RParen) fail({"#", "x", ")"});
        take();
        return {inner.expr, t.line, t.column};
      }
      default:
        fail({"K(", "S(", "S1", "("});
    }
  }

  std::vector<Token> toks_;
  std::size_t pos_ = 0;
};

void print_into(std::ostringstream& os, const Expr& m) {
  std::visit(
      [&](const auto& x) {
        using T = std::decay_t<decltype(x)>;
        if constexpr (std::is_same_v<T, Circle>) {
          os << "S1";
        } else if constexpr (std::is_same_v<T, Surface>) {
          os << "S(" << x.genus << ')';
        } else if constexpr (std::is_same_v<T, CircleBundle>) {
          os << "K(" << x.base_genus << ';' << x.euler << ')';
        } else if constexpr (std::is_same_v<T, ConnSum>) {
          for (std::size_t i = 0; i < x.summands.size(); ++i) {
            if (i) os << " # ";
            const bool wrap = x.summands[i].template is<Product>();
            if (wrap) os << '(';
            print_into(os, x.summands[i]);
            if (wrap) os << ')';
          }
        } else {
          for (std::size_t i = 0; i < x.factors.size(); ++i) {
            if (i) os << " x ";
            const bool wrap = x.factors[i].template is<Product>();
            if (wrap) os << '(';
            print_into(os, x.factors[i]);
            if (wrap) os << ')';
          }
        }
      },
      m.node());
}

}  // namespace

ParseError::ParseError(std::string message, int line, int column,
                       std::vector<std::string> expected)
    : Error(std::move(message)), line_(line), column_(column), expected_(std::move(expected)) {}

SemanticError::SemanticError(std::string message, int line, int column)
    : Error(positioned(message, line, column)), line_(line), column_(column) {}

Expr parse_expr(std::string_view text) {
  Parser p(Lexer(text).run());
  return normalize(p.run());
}

std::string print_expr(const Expr& m) {
  std::ostringstream os;
  print_into(os, normalize(m));
  return os.str();
}

}  // namespace degreecalc
