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

#ifndef FOLICALC_SRC_LEXER_H_
#define FOLICALC_SRC_LEXER_H_

#include <cstddef>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "folicalc/errors.h"
#include "folicalc/expression.h"

namespace folicalc::detail {

enum class TokenKind {
  kIdentifier,
  kInteger,
  kLBrace,
  kRBrace,
  kLBracket,
  kRBracket,
  kLParen,
  kRParen,
  kEquals,
  kPlus,
  kMinus,
  kStar,
  kSlash,
  kCaret,
  kEnd,
};

struct Token {
  TokenKind kind = TokenKind::kEnd;
  std::string text;
  SourcePosition position;
};

std::string describe(TokenKind kind);
std::string describe(const Token& token);

// Splits input into tokens. '#' starts a comment running to end of line.
// Throws ParseError on any byte outside the token alphabet.
std::vector<Token> tokenize(std::string_view input);

// Cursor over a token vector. The vector always ends with kEnd.
class TokenStream {
 public:
  explicit TokenStream(std::vector<Token> tokens) : tokens_(std::move(tokens)) {}

  const Token& peek(std::size_t ahead = 0) const;
  bool at(TokenKind kind, std::size_t ahead = 0) const { return peek(ahead).kind == kind; }
  const Token& next();
  const Token& expect(TokenKind kind, std::string_view what);
  bool accept(TokenKind kind);

  [[noreturn]] void fail(const Token& at, const std::string& message) const;

 private:
  std::vector<Token> tokens_;
  std::size_t pos_ = 0;
};

// Recursive-descent parser for the expression grammar, reading from a
// shared token stream so the document parser can embed it.
class ExpressionParser {
 public:
  static constexpr unsigned kMaxExponent = 64;
  static constexpr unsigned kMaxPowerDegree = 256;
  static constexpr int kMaxDepth = 200;

  explicit ExpressionParser(TokenStream& tokens) : tokens_(tokens) {}

  Expression parse_expr();

  // Identifier tokens consumed since the last call, for positioned
  // diagnostics about undeclared variables.
  std::vector<Token> take_identifiers() { return std::exchange(identifiers_, {}); }

 private:
  Expression parse_term();
  Expression parse_factor();
  Expression parse_base();

  TokenStream& tokens_;
  std::vector<Token> identifiers_;
  int depth_ = 0;
};

}  // namespace folicalc::detail

#endif  // FOLICALC_SRC_LEXER_H_
