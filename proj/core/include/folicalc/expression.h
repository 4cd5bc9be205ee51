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

// Exact multivariate polynomials over the rationals in named variables.
//
// Every Expression is kept in canonical form: a sum of terms with nonzero
// coefficients and pairwise distinct monomials, sorted by descending graded
// lexicographic order (variable names compared lexicographically). Two
// expressions are therefore mathematically equal iff they compare equal.

#ifndef FOLICALC_EXPRESSION_H_
#define FOLICALC_EXPRESSION_H_

#include <cstdint>
#include <map>
#include <optional>
#include <ostream>
#include <set>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "folicalc/rational.h"

namespace folicalc {

// A product of variables with positive exponents; the empty product is 1.
class Monomial {
 public:
  using Factor = std::pair<std::string, unsigned>;

  Monomial() = default;
  static Monomial variable(std::string name, unsigned exponent = 1);

  // Factors sorted by variable name, exponents > 0.
  const std::vector<Factor>& factors() const { return factors_; }
  unsigned degree() const { return degree_; }
  unsigned exponent(std::string_view name) const;
  bool is_one() const { return factors_.empty(); }

  friend Monomial operator*(const Monomial& a, const Monomial& b);
  friend bool operator==(const Monomial&, const Monomial&) = default;

 private:
  std::vector<Factor> factors_;
  unsigned degree_ = 0;
};

// A ranking of variable names used to order factors and terms when printing.
// Names not in the ranking follow all ranked names, in lexicographic order.
// The default-constructed order is purely lexicographic.
class VariableOrder {
 public:
  VariableOrder() = default;
  explicit VariableOrder(std::vector<std::string> ranked);

  // Strict weak ordering on names.
  bool less(std::string_view a, std::string_view b) const;

 private:
  std::map<std::string, std::size_t, std::less<>> rank_;
};

// Descending graded lexicographic comparison: true iff `a` precedes `b`.
bool graded_lex_before(const Monomial& a, const Monomial& b,
                       const VariableOrder& order = {});

class Expression {
 public:
  struct Term {
    Monomial monomial;
    Rational coefficient;

    friend bool operator==(const Term&, const Term&) = default;
  };

  Expression() = default;
  Expression(Rational constant);                            // NOLINT
  Expression(std::int64_t constant) : Expression(Rational(constant)) {}  // NOLINT
  Expression(int constant) : Expression(Rational(constant)) {}           // NOLINT

  static Expression variable(std::string name);
  static Expression monomial(Rational coefficient, Monomial m);
  // Canonicalizes: merges like terms, drops zeros, sorts.
  static Expression from_terms(std::vector<Term> terms);

  const std::vector<Term>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const;
  std::optional<Rational> constant_value() const;
  unsigned total_degree() const;
  std::set<std::string> variables() const;
  bool depends_on(std::string_view name) const;

  Expression operator-() const;
  Expression& operator+=(const Expression& rhs);
  Expression& operator-=(const Expression& rhs);
  Expression& operator*=(const Expression& rhs);

  friend Expression operator+(const Expression& a, const Expression& b);
  friend Expression operator-(const Expression& a, const Expression& b);
  friend Expression operator*(const Expression& a, const Expression& b);
  friend bool operator==(const Expression&, const Expression&) = default;

  Expression pow(unsigned exponent) const;

 private:
  explicit Expression(std::vector<Term> canonical_terms)
      : terms_(std::move(canonical_terms)) {}

  std::vector<Term> terms_;
};

using Bindings = std::map<std::string, Expression, std::less<>>;

// Formal partial derivative with respect to `name`.
Expression partial(const Expression& e, std::string_view name);

// Simultaneous substitution of every bound variable.
Expression substitute(const Expression& e, const Bindings& bindings);

inline bool is_zero(const Expression& e) { return e.is_zero(); }

// Canonical text: terms in descending graded lexicographic order, factors
// joined by '*', '^' for exponents above one, reduced rational coefficients.
// The result re-parses to the same Expression.
std::string to_string(const Expression& e, const VariableOrder& order = {});

std::ostream& operator<<(std::ostream& os, const Expression& e);

// Parses the expression grammar:
//   expr   := term (('+'|'-') term)*
//   term   := factor ('*' factor)*
//   factor := base ('^' natural)? | '-' factor
//   base   := rational | identifier | '(' expr ')'
// Throws ParseError with a 1-based position.
Expression parse_expression(std::string_view text);

}  // namespace folicalc

#endif  // FOLICALC_EXPRESSION_H_
