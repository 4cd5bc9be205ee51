// Copyright 2026 The folicalc Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "lexer.h"

#include <cstdio>

namespace folicalc::detail {

namespace {

bool is_ident_start(char c) {
  return (c >= 'a' && c <= 'z') || (c >= 'A' && c <= 'Z') || c == '_';
}
bool is_digit(char c) { return c >= '0' && c <= '9'; }
bool is_ident_char(char c) { return is_ident_start(c) || is_digit(c); }

}  // namespace

std::string describe(TokenKind kind) {
  switch (kind) {
    case TokenKind::kIdentifier: return "identifier";
    case TokenKind::kInteger: return "integer";
    case TokenKind::kLBrace: return "'{'";
    case TokenKind::kRBrace: return "'}'";
    case TokenKind::kLBracket: return "'['";
    case TokenKind::kRBracket: return "']'";
    case TokenKind::kLParen: return "'('";
    case TokenKind::kRParen: return "')'";
    case TokenKind::kEquals: return "'='";
    case TokenKind::kPlus: return "'+'";
    case TokenKind::kMinus: return "'-'";
    case TokenKind::kStar: return "'*'";
    case TokenKind::kSlash: return "'/'";
    case TokenKind::kCaret: return "'^'";
    case TokenKind::kEnd: return "end of input";
  }
  return "token";
}

std::string describe(const Token& token) {
  if (token.kind == TokenKind::kIdentifier || token.kind == TokenKind::kInteger)
    return describe(token.kind) + " '" + token.text + "'";
  return describe(token.kind);
}

std::vector<Token> tokenize(std::string_view input) {
  std::vector<Token> out;
  SourcePosition pos;
  std::size_t i = 0;
  auto advance = [&](std::size_t n) {
    for (std::size_t k = 0; k < n; ++k, ++i) {
      if (input[i] == '\n') {
        ++pos.line;
        pos.column = 1;
      } else {
        ++pos.column;
      }
    }
  };
  while (i < input.size()) {
    const char c = input[i];
    if (c == ' ' || c == '\t' || c == '\n' || c == '\r') {
      advance(1);
      continue;
    }
    if (c == '#') {
      while (i < input.size() && input[i] != '\n') advance(1);
      continue;
    }
    Token tok;
    tok.position = pos;
    std::size_t len = 1;
    if (is_ident_start(c)) {
      while (i + len < input.size() && is_ident_char(input[i + len])) ++len;
      tok.kind = TokenKind::kIdentifier;
    } else if (is_digit(c)) {
      while (i + len < input.size() && is_digit(input[i + len])) ++len;
      tok.kind = TokenKind::kInteger;
    } else {
      switch (c) {
        case '{': tok.kind = TokenKind::kLBrace; break;
        case '}': tok.kind = TokenKind::kRBrace; break;
        case '[': tok.kind = TokenKind::kLBracket; break;
        case ']': tok.kind = TokenKind::kRBracket; break;
        case '(': tok.kind = TokenKind::kLParen; break;
        case ')': tok.kind = TokenKind::kRParen; break;
        case '=': tok.kind = TokenKind::kEquals; break;
        case '+': tok.kind = TokenKind::kPlus; break;
        case '-': tok.kind = TokenKind::kMinus; break;
        case '*': tok.kind = TokenKind::kStar; break;
        case '/': tok.kind = TokenKind::kSlash; break;
        case '^': tok.kind = TokenKind::kCaret; break;
        default: {
          char buf[8];
          std::snprintf(buf, sizeof buf, "0x%02X", static_cast<unsigned char>(c));
          throw ParseError(pos, std::string("unexpected character ") + buf);
        }
      }
    }
    tok.text = std::string(input.substr(i, len));
    advance(len);
    out.push_back(std::move(tok));
  }
  out.push_back(Token{TokenKind::kEnd, "", pos});
  return out;
}

const Token& TokenStream::peek(std::size_t ahead) const {
  const std::size_t k = pos_ + ahead;
  return k < tokens_.size() ? tokens_[k] : tokens_.back();
}

const Token& TokenStream::next() {
  const Token& t = peek();
  if (pos_ + 1 < tokens_.size()) ++pos_;
  return t;
}

const Token& TokenStream::expect(TokenKind kind, std::string_view what) {
  if (!at(kind)) {
    fail(peek(), "expected " + std::string(what) + " but found " + describe(peek()));
  }
  return next();
}

bool TokenStream::accept(TokenKind kind) {
  if (!at(kind)) return false;
  next();
  return true;
}

void TokenStream::fail(const Token& at, const std::string& message) const {
  throw ParseError(at.position, message);
}

Expression ExpressionParser::parse_expr() {
  if (++depth_ > kMaxDepth) tokens_.fail(tokens_.peek(), "expression nested too deeply");
  Expression e = parse_term();
  while (tokens_.at(TokenKind::kPlus) || tokens_.at(TokenKind::kMinus)) {
    const bool minus = tokens_.next().kind == TokenKind::kMinus;
    Expression rhs = parse_term();
    if (minus) e -= rhs;
    else e += rhs;
  }
  --depth_;
  return e;
}

Expression ExpressionParser::parse_term() {
  Expression e = parse_factor();
  while (tokens_.accept(TokenKind::kStar)) e *= parse_factor();
  return e;
}

Expression ExpressionParser::parse_factor() {
  if (tokens_.at(TokenKind::kMinus)) {
    if (++depth_ > kMaxDepth) tokens_.fail(tokens_.peek(), "expression nested too deeply");
    tokens_.next();
    Expression e = -parse_factor();
    --depth_;
    return e;
  }
  Expression base = parse_base();
  if (tokens_.at(TokenKind::kCaret)) {
    tokens_.next();
    const Token& exp = tokens_.expect(TokenKind::kInteger, "natural exponent");
    if (exp.text.size() > 3 || std::stoul(exp.text) > kMaxExponent) {
      tokens_.fail(exp, "exponent exceeds " + std::to_string(kMaxExponent));
    }
    const auto n = static_cast<unsigned>(std::stoul(exp.text));
    if (base.total_degree() * n > kMaxPowerDegree) {
      tokens_.fail(exp, "power has degree above " + std::to_string(kMaxPowerDegree));
    }
    return base.pow(n);
  }
  return base;
}

Expression ExpressionParser::parse_base() {
  const Token& t = tokens_.peek();
  switch (t.kind) {
    case TokenKind::kInteger: {
      tokens_.next();
      BigInt num(t.text);
      if (tokens_.at(TokenKind::kSlash)) {
        tokens_.next();
        const Token& d = tokens_.expect(TokenKind::kInteger, "positive denominator");
        BigInt den(d.text);
        if (den.is_zero()) tokens_.fail(d, "zero denominator");
        return Expression(Rational(std::move(num), std::move(den)));
      }
      return Expression(Rational(std::move(num)));
    }
    case TokenKind::kIdentifier:
      identifiers_.push_back(tokens_.next());
      return Expression::variable(t.text);
    case TokenKind::kLParen: {
      tokens_.next();
      Expression e = parse_expr();
      tokens_.expect(TokenKind::kRParen, "')'");
      return e;
    }
    default:
      tokens_.fail(t, "expected number, identifier or '(' but found " + describe(t));
  }
}

}  // namespace folicalc::detail
