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

#include "folicalc/expression.h"
#include "lexer.h"

namespace folicalc {

Expression parse_expression(std::string_view text) {
  detail::TokenStream tokens(detail::tokenize(text));
  detail::ExpressionParser parser(tokens);
  Expression e = parser.parse_expr();
  if (!tokens.at(detail::TokenKind::kEnd)) {
    tokens.fail(tokens.peek(), "unexpected " + detail::describe(tokens.peek()) +
                                   " after expression");
  }
  return e;
}

}  // namespace folicalc
