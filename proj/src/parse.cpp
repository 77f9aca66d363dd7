#include "dl/parse.hpp"

#include <cctype>
#include <charconv>

namespace dl {

namespace {

enum class Tok { Ident, Int, Op, CupOne, Plus, Star, Caret, LParen, RParen, LBracket, RBracket, Comma, End };

struct Token {
  Tok kind = Tok::End;
  std::string text;
  long long value = 0;
  OpSym op;
  std::size_t pos = 0;
};

[[noreturn]] void syntax_error(std::size_t pos, const std::string& msg) {
  throw Error(Errc::SyntaxError, "at position " + std::to_string(pos) + ": " + msg);
}

Expr node(Expr::Kind kind) {
  Expr e;
  e.kind = kind;
  return e;
}

bool is_ident_char(char c) { return std::isalnum(static_cast<unsigned char>(c)) != 0; }

class Lexer {
 public:
  explicit Lexer(std::string_view s) : s_(s) {}

  std::vector<Token> run() {
    std::vector<Token> out;
    for (;;) {
      while (i_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[i_]))) ++i_;
      if (i_ == s_.size()) {
        out.push_back({Tok::End, "", 0, {}, i_});
        return out;
      }
      out.push_back(next());
    }
  }

 private:
  bool at(std::string_view prefix) const { return s_.substr(i_).starts_with(prefix); }

  long long integer(bool allow_sign) {
    const std::size_t start = i_;
    if (allow_sign && i_ < s_.size() && s_[i_] == '-') ++i_;
    while (i_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[i_]))) ++i_;
    long long v = 0;
    const auto [p, ec] = std::from_chars(s_.data() + start, s_.data() + i_, v);
    if (ec != std::errc{} || p != s_.data() + i_ || i_ == start) syntax_error(start, "expected an integer");
    return v;
  }

  Token op_token(OpKind kind, std::size_t skip) {
    const std::size_t start = i_;
    i_ += skip;
    const long long v = integer(kind == OpKind::UpperQ);
    if (v > 1'000'000 || v < -1'000'000) syntax_error(start, "operation index out of range");
    return {Tok::Op, std::string(s_.substr(start, i_ - start)), 0, {kind, static_cast<int>(v)}, start};
  }

  bool digit_after(std::size_t k) const {
    return i_ + k < s_.size() && (std::isdigit(static_cast<unsigned char>(s_[i_ + k])) != 0);
  }

  Token next() {
    const std::size_t start = i_;
    const char c = s_[i_];
    switch (c) {
      case '+': ++i_; return {Tok::Plus, "+", 0, {}, start};
      case '*': ++i_; return {Tok::Star, "*", 0, {}, start};
      case '^': ++i_; return {Tok::Caret, "^", 0, {}, start};
      case '(': ++i_; return {Tok::LParen, "(", 0, {}, start};
      case ')': ++i_; return {Tok::RParen, ")", 0, {}, start};
      case '[': ++i_; return {Tok::LBracket, "[", 0, {}, start};
      case ']': ++i_; return {Tok::RBracket, "]", 0, {}, start};
      case ',': ++i_; return {Tok::Comma, ",", 0, {}, start};
      default: break;
    }
    if (std::isdigit(static_cast<unsigned char>(c)) || (c == '-' && digit_after(1))) {
      const long long v = integer(true);
      return {Tok::Int, std::string(s_.substr(start, i_ - start)), v, {}, start};
    }
    if (at("Q^") && (digit_after(2) || (at("Q^-") && digit_after(3)))) return op_token(OpKind::UpperQ, 2);
    if (at("Q_") && digit_after(2)) return op_token(OpKind::LowerQ, 2);
    if (at("P_") && digit_after(2)) return op_token(OpKind::SteenrodP, 2);
    if (at("Sq_")) {
      i_ += 3;
      if (!at("1") || (i_ + 1 < s_.size() && is_ident_char(s_[i_ + 1]))) syntax_error(start, "only Sq_1 is available");
      ++i_;
      return {Tok::CupOne, "Sq_1", 0, {}, start};
    }
    std::string name;
    for (;;) {
      if (at("\xCE\xBE")) {  // ξ, optionally with a combining macron
        i_ += 2;
        name += "xi";
        if (at("\xCC\x84")) {
          i_ += 2;
          name += "bar";
        }
      } else if (i_ < s_.size() && (std::isalpha(static_cast<unsigned char>(s_[i_])) ||
                                    (!name.empty() && std::isdigit(static_cast<unsigned char>(s_[i_]))))) {
        name += s_[i_++];
      } else if (!name.empty() && i_ + 1 < s_.size() && s_[i_] == '_' && is_ident_char(s_[i_ + 1])) {
        name += s_[i_++];
      } else {
        break;
      }
    }
    if (name.empty()) syntax_error(start, std::string("unexpected character '") + c + "'");
    return {Tok::Ident, name, 0, {}, start};
  }

  std::string_view s_;
  std::size_t i_ = 0;
};

class Parser {
 public:
  explicit Parser(std::vector<Token> toks) : toks_(std::move(toks)) {}

  Expr run() {
    Expr e = sum();
    if (peek().kind != Tok::End) syntax_error(peek().pos, "unexpected '" + peek().text + "'");
    return e;
  }

 private:
  const Token& peek() const { return toks_[k_]; }
  Token take() { return toks_[k_++]; }
  void expect(Tok kind, const char* what) {
    if (peek().kind != kind) {
      syntax_error(peek().pos, std::string("expected ") + what + (peek().kind == Tok::End ? " before end of input" : ""));
    }
    ++k_;
  }

  bool starts_factor() const {
    switch (peek().kind) {
      case Tok::Ident: case Tok::Int: case Tok::Op: case Tok::CupOne: case Tok::LParen: case Tok::LBracket:
        return true;
      default:
        return false;
    }
  }

  Expr sum() {
    Expr first = product();
    if (peek().kind != Tok::Plus) return first;
    Expr out = node(Expr::Kind::Sum);
    out.pos = first.pos;
    out.args.push_back(std::move(first));
    while (peek().kind == Tok::Plus) {
      ++k_;
      out.args.push_back(product());
    }
    return out;
  }

  Expr product() {
    Expr first = factor();
    Expr out = node(Expr::Kind::Product);
    out.pos = first.pos;
    out.args.push_back(std::move(first));
    for (;;) {
      if (peek().kind == Tok::Star) {
        ++k_;
        out.args.push_back(factor());
      } else if (starts_factor()) {
        out.args.push_back(factor());
      } else {
        break;
      }
    }
    if (out.args.size() == 1) return std::move(out.args.front());
    return out;
  }

  int repeat_count() {
    if (peek().kind != Tok::Caret) return 1;
    ++k_;
    const Token t = take();
    if (t.kind != Tok::Int || t.value < 1 || t.value > 64) syntax_error(t.pos, "expected a repeat count 1..64");
    return static_cast<int>(t.value);
  }

  Expr factor() {
    const std::size_t pos = peek().pos;
    if (peek().kind == Tok::CupOne) {
      ++k_;
      if (!starts_factor()) syntax_error(peek().pos, "Sq_1 needs an operand");
      Expr out = node(Expr::Kind::CupOne);
      out.pos = pos;
      out.args.push_back(factor());
      return out;
    }
    if (peek().kind == Tok::Op) {
      OpWord w;
      while (peek().kind == Tok::Op) {
        const OpSym op = take().op;
        for (int r = repeat_count(); r > 0; --r) w.push_back(op);
      }
      if (!starts_factor()) {
        Expr out = node(Expr::Kind::Word);
        out.pos = pos;
        out.word = std::move(w);
        return out;
      }
      Expr out = node(Expr::Kind::Apply);
      out.pos = pos;
      out.word = std::move(w);
      out.args.push_back(factor());
      return out;
    }
    return power();
  }

  Expr power() {
    Expr base = primary();
    if (peek().kind != Tok::Caret) return base;
    ++k_;
    const Token t = take();
    if (t.kind != Tok::Int || t.value < 0) syntax_error(t.pos, "expected a non-negative exponent");
    Expr out = node(Expr::Kind::Power);
    out.pos = base.pos;
    out.value = t.value;
    out.args.push_back(std::move(base));
    return out;
  }

  Expr primary() {
    const Token t = take();
    switch (t.kind) {
      case Tok::Ident: {
        Expr e = node(Expr::Kind::Gen);
        e.name = t.text;
        e.pos = t.pos;
        return e;
      }
      case Tok::Int: {
        Expr e = node(Expr::Kind::Int);
        e.value = t.value;
        e.pos = t.pos;
        return e;
      }
      case Tok::LParen: {
        Expr e = sum();
        expect(Tok::RParen, "')'");
        return e;
      }
      case Tok::LBracket: {
        Expr e = node(Expr::Kind::Bracket);
        e.pos = t.pos;
        e.args.push_back(sum());
        expect(Tok::Comma, "','");
        e.args.push_back(sum());
        expect(Tok::RBracket, "']'");
        return e;
      }
      case Tok::End:
        syntax_error(t.pos, "unexpected end of input");
      default:
        syntax_error(t.pos, "unexpected '" + t.text + "'");
    }
  }

  std::vector<Token> toks_;
  std::size_t k_ = 0;
};

}  // namespace

Expr parse(std::string_view text) { return Parser(Lexer(text).run()).run(); }

bool is_operator_expr(const Expr& e) {
  switch (e.kind) {
    case Expr::Kind::Word: return true;
    case Expr::Kind::Int: return e.value == 0 || e.value == 1;
    case Expr::Kind::Sum:
      for (const auto& a : e.args) {
        if (!is_operator_expr(a)) return false;
      }
      return true;
    default: return false;
  }
}

OpPoly operator_poly(const Expr& e) {
  switch (e.kind) {
    case Expr::Kind::Word: return OpPoly(e.word);
    case Expr::Kind::Int: return e.value == 1 ? OpPoly(OpWord{}) : OpPoly{};
    case Expr::Kind::Sum: {
      OpPoly out;
      for (const auto& a : e.args) out += operator_poly(a);
      return out;
    }
    default:
      throw Error(Errc::SyntaxError, "at position " + std::to_string(e.pos) + ": not an operator expression");
  }
}

}  // namespace dl
