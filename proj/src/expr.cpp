#include "clifford/expr.hpp"

#include <array>
#include <cmath>

#include "clifford/blade.hpp"
#include "clifford/error.hpp"
#include "clifford/textio.hpp"
#include "detail/scan.hpp"

namespace clifford {

namespace {

using detail::is_digit;
using detail::is_space;

enum class Tok {
  Number,
  Blade,
  Ident,
  LParen,
  RParen,
  Comma,
  Plus,
  Minus,
  Star,
  StarStar,
  Caret,
  LeftContract,
  RightContract,
  Assign,
  End,
};

struct Token {
  Tok kind = Tok::End;
  std::size_t pos = 0;
  std::size_t len = 0;
  double number = 0.0;
  std::vector<std::uint32_t> indices;
  bool glued = false;  // no whitespace before this token
};

bool is_ident_char(char c) { return std::isalnum(static_cast<unsigned char>(c)) != 0 || c == '_'; }

class Lexer {
 public:
  explicit Lexer(std::string_view text) : text_(text) {}

  std::vector<Token> run() {
    std::vector<Token> out;
    while (true) {
      const auto before = pos_;
      while (pos_ < text_.size() && is_space(text_[pos_])) ++pos_;
      Token t = next();
      t.glued = pos_ == before && !out.empty();
      pos_ = t.pos + t.len;
      out.push_back(std::move(t));
      if (out.back().kind == Tok::End) return out;
    }
  }

 private:
  [[noreturn]] void fail(const std::string& msg, std::size_t at) const { throw ParseError(msg, at); }

  Token simple(Tok k, std::size_t len) const {
    Token t;
    t.kind = k;
    t.pos = pos_;
    t.len = len;
    return t;
  }

  Token next() {
    if (pos_ == text_.size()) return simple(Tok::End, 0);
    const std::string_view rest = text_.substr(pos_);
    const char c = rest.front();
    if (rest.starts_with("**")) return simple(Tok::StarStar, 2);
    if (rest.starts_with("_|")) return simple(Tok::LeftContract, 2);
    if (rest.starts_with("|_")) return simple(Tok::RightContract, 2);
    switch (c) {
      case '(': return simple(Tok::LParen, 1);
      case ')': return simple(Tok::RParen, 1);
      case ',': return simple(Tok::Comma, 1);
      case '+': return simple(Tok::Plus, 1);
      case '-': return simple(Tok::Minus, 1);
      case '*': return simple(Tok::Star, 1);
      case '^': return simple(Tok::Caret, 1);
      case '=': return simple(Tok::Assign, 1);
      default: break;
    }
    if (is_digit(c) || c == '.') {
      const auto len = detail::number_length(text_, pos_);
      if (len == 0) fail("malformed number", pos_);
      auto v = detail::to_double(rest.substr(0, len));
      if (!v) fail("malformed number", pos_);
      Token t = simple(Tok::Number, len);
      t.number = *v;
      return t;
    }
    if (rest.starts_with("e[")) return bracket_blade();
    if (std::isalpha(static_cast<unsigned char>(c)) != 0) {
      std::size_t len = 1;
      while (len < rest.size() && is_ident_char(rest[len])) ++len;
      const auto word = rest.substr(0, len);
      if (word.starts_with("e_")) return digit_blade(word);
      return simple(Tok::Ident, len);
    }
    fail(std::string("unexpected character '") + c + "'", pos_);
  }

  // e_123 -> e_1 e_2 e_3
  Token digit_blade(std::string_view word) {
    Token t = simple(Tok::Blade, word.size());
    if (word.size() == 2) fail("blade literal needs subscripts", pos_ + 2);
    for (std::size_t k = 2; k < word.size(); ++k) {
      if (!is_digit(word[k])) fail("blade subscripts must be digits; use e[...] for indices > 9", pos_ + k);
      if (word[k] == '0') fail("generator index must be >= 1", pos_ + k);
      t.indices.push_back(static_cast<std::uint32_t>(word[k] - '0'));
    }
    return t;
  }

  Token bracket_blade() {
    std::size_t k = pos_ + 2;
    Token t = simple(Tok::Blade, 0);
    auto skip = [&] {
      while (k < text_.size() && is_space(text_[k])) ++k;
    };
    skip();
    if (k < text_.size() && text_[k] == ']') {
      t.len = k + 1 - pos_;
      return t;
    }
    while (true) {
      skip();
      const auto start = k;
      while (k < text_.size() && is_digit(text_[k])) ++k;
      auto v = detail::to_uint(text_.substr(start, k - start));
      if (!v) throw ParseError("bad blade index", start, 0, {"index"});
      if (*v == 0 || *v > kMaxIndex) fail("generator index must be in [1, 65535]", start);
      t.indices.push_back(static_cast<std::uint32_t>(*v));
      skip();
      if (k < text_.size() && text_[k] == ']') break;
      if (k >= text_.size() || text_[k] != ',') throw ParseError("unterminated blade", k, 0, {"','", "']'"});
      ++k;
    }
    t.len = k + 1 - pos_;
    return t;
  }

  std::string_view text_;
  std::size_t pos_ = 0;
};

constexpr int kPrefixPower = 60;

int binding_power(Tok t) {
  switch (t) {
    case Tok::Plus:
    case Tok::Minus: return 10;
    case Tok::LeftContract:
    case Tok::RightContract: return 20;
    case Tok::Caret: return 30;
    case Tok::Star: return 40;
    case Tok::StarStar: return 50;
    default: return 0;
  }
}

BinaryOp binary_op(Tok t) {
  switch (t) {
    case Tok::Plus: return BinaryOp::Add;
    case Tok::Minus: return BinaryOp::Subtract;
    case Tok::LeftContract: return BinaryOp::LeftContraction;
    case Tok::RightContract: return BinaryOp::RightContraction;
    case Tok::Caret: return BinaryOp::Wedge;
    default: return BinaryOp::Product;
  }
}

const std::vector<std::string> kOperandStart = {"number", "blade", "identifier", "'('", "'-'"};
const std::vector<std::string> kOperators = {"'+'", "'-'", "'*'", "'**'", "'^'", "'_|'", "'|_'"};

ExprPtr make(std::size_t pos, auto node) {
  auto e = std::make_unique<Expr>();
  e->node = std::move(node);
  e->position = pos;
  return e;
}

class Parser {
 public:
  explicit Parser(std::vector<Token> toks) : toks_(std::move(toks)) {}

  Statement statement() {
    Statement st;
    if (toks_.size() > 2 && peek().kind == Tok::Ident && toks_[1].kind == Tok::Assign) {
      st.target = std::string(ident_text(peek()));
      if (is_reserved_name(*st.target)) {
        throw ParseError("'" + *st.target + "' is reserved", peek().pos);
      }
      cur_ += 2;
    }
    st.expr = expression(0);
    expect_end();
    return st;
  }

  ExprPtr whole() {
    auto e = expression(0);
    expect_end();
    return e;
  }

  void set_source(std::string_view src) { src_ = src; }

 private:
  const Token& peek() const { return toks_[cur_]; }
  const Token& advance() { return toks_[cur_++]; }

  std::string_view ident_text(const Token& t) const { return src_.substr(t.pos, t.len); }

  void expect_end() {
    if (peek().kind == Tok::End) return;
    if (peek().kind == Tok::RParen) throw ParseError("unmatched ')'", peek().pos);
    throw ParseError("unexpected token", peek().pos, 0, kOperators);
  }

  void expect(Tok kind, const char* what) {
    if (peek().kind != kind) throw ParseError("syntax error", peek().pos, 0, {what});
    advance();
  }

  ExprPtr expression(int min_power) {
    ExprPtr lhs = prefix();
    while (true) {
      const Token& op = peek();
      const int bp = binding_power(op.kind);
      if (bp == 0 || bp <= min_power) break;
      advance();
      if (op.kind == Tok::StarStar) {
        const Token& ex = peek();
        if (ex.kind != Tok::Number || ex.number < 0 || ex.number != std::floor(ex.number) ||
            ex.number > 1e6) {
          throw ParseError("power exponent must be a non-negative integer literal", ex.pos, 0,
                           {"integer"});
        }
        advance();
        const auto pos = lhs->position;
        lhs = make(pos, Power{std::move(lhs), static_cast<unsigned>(ex.number)});
        continue;
      }
      ExprPtr rhs = expression(bp);
      const auto pos = lhs->position;
      lhs = make(pos, Binary{binary_op(op.kind), std::move(lhs), std::move(rhs)});
    }
    return lhs;
  }

  ExprPtr prefix() {
    const Token& t = peek();
    if (t.kind == Tok::Minus) {
      advance();
      return make(t.pos, Negate{expression(kPrefixPower)});
    }
    if (t.kind == Tok::Plus) {
      advance();
      return expression(kPrefixPower);
    }
    return primary();
  }

  ExprPtr primary() {
    const Token& t = advance();
    switch (t.kind) {
      case Tok::Number: {
        auto num = make(t.pos, NumberLit{t.number});
        if (peek().kind == Tok::Blade && peek().glued) {
          const Token& b = advance();
          return make(t.pos, Binary{BinaryOp::Product, std::move(num), make(b.pos, BladeLit{b.indices})});
        }
        return num;
      }
      case Tok::Blade: return make(t.pos, BladeLit{t.indices});
      case Tok::Ident: {
        std::string name(ident_text(t));
        if (peek().kind != Tok::LParen) {
          if (name == "e") throw ParseError("'e' is a function", t.pos, 0, {"'('"});
          return make(t.pos, VariableRef{std::move(name)});
        }
        advance();
        Call call{std::move(name), {}};
        if (peek().kind != Tok::RParen) {
          call.args.push_back(expression(0));
          while (peek().kind == Tok::Comma) {
            advance();
            call.args.push_back(expression(0));
          }
        }
        expect(Tok::RParen, "')'");
        return make(t.pos, std::move(call));
      }
      case Tok::LParen: {
        auto inner = expression(0);
        expect(Tok::RParen, "')'");
        return inner;
      }
      case Tok::End: throw ParseError("unexpected end of input", t.pos, 0, kOperandStart);
      default: throw ParseError("unexpected token", t.pos, 0, kOperandStart);
    }
  }

  std::vector<Token> toks_;
  std::size_t cur_ = 0;
  std::string_view src_;
};

const char* op_symbol(BinaryOp op) {
  switch (op) {
    case BinaryOp::Add: return "+";
    case BinaryOp::Subtract: return "-";
    case BinaryOp::LeftContraction: return "_|";
    case BinaryOp::RightContraction: return "|_";
    case BinaryOp::Wedge: return "^";
    case BinaryOp::Product: return "*";
  }
  return "?";
}

template <class... Ts>
struct overloaded : Ts... {
  using Ts::operator()...;
};

}  // namespace

ExprPtr parse_expr(std::string_view input) {
  Parser p(Lexer(input).run());
  p.set_source(input);
  return p.whole();
}

Statement parse_statement(std::string_view input) {
  Parser p(Lexer(input).run());
  p.set_source(input);
  return p.statement();
}

bool is_reserved_name(std::string_view name) {
  static constexpr std::array<std::string_view, 5> kReserved = {"e", "rand", "grades", "grade", "scalar"};
  for (auto r : kReserved) {
    if (name == r) return true;
  }
  return name.starts_with("e_");
}

std::string to_sexpr(const Expr& e) {
  return std::visit(
      overloaded{
          [](const NumberLit& n) { return format_coefficient(n.value); },
          [](const BladeLit& b) {
            std::string s = "e[";
            for (std::size_t k = 0; k < b.indices.size(); ++k) {
              if (k > 0) s += ',';
              s += std::to_string(b.indices[k]);
            }
            return s + "]";
          },
          [](const VariableRef& v) { return v.name; },
          [](const Negate& n) { return "(neg " + to_sexpr(*n.operand) + ")"; },
          [](const Binary& b) {
            return std::string("(") + op_symbol(b.op) + " " + to_sexpr(*b.lhs) + " " + to_sexpr(*b.rhs) + ")";
          },
          [](const Power& p) { return "(** " + to_sexpr(*p.base) + " " + std::to_string(p.exponent) + ")"; },
          [](const Call& c) {
            std::string s = "(" + c.name;
            for (const auto& a : c.args) s += " " + to_sexpr(*a);
            return s + ")";
          },
      },
      e.node);
}

}  // namespace clifford
