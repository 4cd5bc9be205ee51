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

#include <algorithm>
#include <sstream>

namespace folicalc {

Monomial Monomial::variable(std::string name, unsigned exponent) {
  Monomial m;
  if (exponent == 0) return m;
  m.factors_.emplace_back(std::move(name), exponent);
  m.degree_ = exponent;
  return m;
}

unsigned Monomial::exponent(std::string_view name) const {
  auto it = std::lower_bound(
      factors_.begin(), factors_.end(), name,
      [](const Factor& f, std::string_view n) { return f.first < n; });
  return (it != factors_.end() && it->first == name) ? it->second : 0;
}

Monomial operator*(const Monomial& a, const Monomial& b) {
  Monomial r;
  r.factors_.reserve(a.factors_.size() + b.factors_.size());
  auto i = a.factors_.begin();
  auto j = b.factors_.begin();
  while (i != a.factors_.end() && j != b.factors_.end()) {
    if (i->first < j->first) {
      r.factors_.push_back(*i++);
    } else if (j->first < i->first) {
      r.factors_.push_back(*j++);
    } else {
      r.factors_.emplace_back(i->first, i->second + j->second);
      ++i;
      ++j;
    }
  }
  r.factors_.insert(r.factors_.end(), i, a.factors_.end());
  r.factors_.insert(r.factors_.end(), j, b.factors_.end());
  r.degree_ = a.degree_ + b.degree_;
  return r;
}

VariableOrder::VariableOrder(std::vector<std::string> ranked) {
  for (auto& name : ranked) rank_.emplace(std::move(name), rank_.size());
}

bool VariableOrder::less(std::string_view a, std::string_view b) const {
  if (rank_.empty()) return a < b;
  auto ia = rank_.find(a);
  auto ib = rank_.find(b);
  const bool ra = ia != rank_.end();
  const bool rb = ib != rank_.end();
  if (ra && rb) return ia->second < ib->second;
  if (ra != rb) return ra;
  return a < b;
}

namespace {

std::vector<Monomial::Factor> sorted_factors(const Monomial& m,
                                             const VariableOrder& order) {
  std::vector<Monomial::Factor> f = m.factors();
  std::sort(f.begin(), f.end(), [&](const auto& x, const auto& y) {
    return order.less(x.first, y.first);
  });
  return f;
}

bool lex_before(const std::vector<Monomial::Factor>& a,
                const std::vector<Monomial::Factor>& b,
                const VariableOrder& order) {
  auto i = a.begin();
  auto j = b.begin();
  while (i != a.end() && j != b.end()) {
    if (i->first == j->first) {
      if (i->second != j->second) return i->second > j->second;
      ++i;
      ++j;
      continue;
    }
    // The monomial carrying the earlier-ranked variable is the larger one.
    return order.less(i->first, j->first);
  }
  return i != a.end();
}

bool storage_before(const Expression::Term& a, const Expression::Term& b) {
  return graded_lex_before(a.monomial, b.monomial);
}

}  // namespace

bool graded_lex_before(const Monomial& a, const Monomial& b,
                       const VariableOrder& order) {
  if (a.degree() != b.degree()) return a.degree() > b.degree();
  return lex_before(sorted_factors(a, order), sorted_factors(b, order), order);
}

Expression::Expression(Rational constant) {
  if (!constant.is_zero()) terms_.push_back({Monomial{}, std::move(constant)});
}

Expression Expression::variable(std::string name) {
  return Expression(std::vector<Term>{{Monomial::variable(std::move(name)), Rational(1)}});
}

Expression Expression::monomial(Rational coefficient, Monomial m) {
  if (coefficient.is_zero()) return Expression();
  return Expression(std::vector<Term>{{std::move(m), std::move(coefficient)}});
}

Expression Expression::from_terms(std::vector<Term> terms) {
  std::sort(terms.begin(), terms.end(), storage_before);
  std::vector<Term> out;
  out.reserve(terms.size());
  for (auto& t : terms) {
    if (!out.empty() && out.back().monomial == t.monomial) {
      out.back().coefficient += t.coefficient;
    } else {
      if (!out.empty() && out.back().coefficient.is_zero()) out.pop_back();
      out.push_back(std::move(t));
    }
  }
  if (!out.empty() && out.back().coefficient.is_zero()) out.pop_back();
  return Expression(std::move(out));
}

bool Expression::is_constant() const {
  return terms_.empty() || (terms_.size() == 1 && terms_[0].monomial.is_one());
}

std::optional<Rational> Expression::constant_value() const {
  if (terms_.empty()) return Rational(0);
  if (is_constant()) return terms_[0].coefficient;
  return std::nullopt;
}

unsigned Expression::total_degree() const {
  return terms_.empty() ? 0 : terms_.front().monomial.degree();
}

std::set<std::string> Expression::variables() const {
  std::set<std::string> names;
  for (const auto& t : terms_)
    for (const auto& f : t.monomial.factors()) names.insert(f.first);
  return names;
}

bool Expression::depends_on(std::string_view name) const {
  return std::any_of(terms_.begin(), terms_.end(), [&](const Term& t) {
    return t.monomial.exponent(name) > 0;
  });
}

Expression Expression::operator-() const {
  Expression r = *this;
  for (auto& t : r.terms_) t.coefficient = -t.coefficient;
  return r;
}

Expression operator+(const Expression& a, const Expression& b) {
  std::vector<Expression::Term> out;
  out.reserve(a.terms_.size() + b.terms_.size());
  auto i = a.terms_.begin();
  auto j = b.terms_.begin();
  while (i != a.terms_.end() && j != b.terms_.end()) {
    if (storage_before(*i, *j)) {
      out.push_back(*i++);
    } else if (storage_before(*j, *i)) {
      out.push_back(*j++);
    } else {
      Rational c = i->coefficient + j->coefficient;
      if (!c.is_zero()) out.push_back({i->monomial, std::move(c)});
      ++i;
      ++j;
    }
  }
  out.insert(out.end(), i, a.terms_.end());
  out.insert(out.end(), j, b.terms_.end());
  return Expression(std::move(out));
}

Expression operator-(const Expression& a, const Expression& b) { return a + (-b); }

Expression operator*(const Expression& a, const Expression& b) {
  if (a.is_zero() || b.is_zero()) return Expression();
  std::vector<Expression::Term> products;
  products.reserve(a.terms_.size() * b.terms_.size());
  for (const auto& x : a.terms_)
    for (const auto& y : b.terms_)
      products.push_back({x.monomial * y.monomial, x.coefficient * y.coefficient});
  return Expression::from_terms(std::move(products));
}

Expression& Expression::operator+=(const Expression& rhs) { return *this = *this + rhs; }
Expression& Expression::operator-=(const Expression& rhs) { return *this = *this - rhs; }
Expression& Expression::operator*=(const Expression& rhs) { return *this = *this * rhs; }

Expression Expression::pow(unsigned exponent) const {
  Expression result(1);
  Expression base = *this;
  while (exponent > 0) {
    if (exponent & 1U) result *= base;
    exponent >>= 1U;
    if (exponent > 0) base *= base;
  }
  return result;
}

Expression partial(const Expression& e, std::string_view name) {
  std::vector<Expression::Term> out;
  for (const auto& t : e.terms()) {
    const unsigned k = t.monomial.exponent(name);
    if (k == 0) continue;
    Monomial m;
    for (const auto& [var, exp] : t.monomial.factors()) {
      const unsigned reduced = var == name ? exp - 1 : exp;
      if (reduced > 0) m = m * Monomial::variable(var, reduced);
    }
    out.push_back({std::move(m), t.coefficient * Rational(static_cast<std::int64_t>(k))});
  }
  return Expression::from_terms(std::move(out));
}

Expression substitute(const Expression& e, const Bindings& bindings) {
  if (bindings.empty()) return e;
  Expression result;
  for (const auto& t : e.terms()) {
    Expression product(t.coefficient);
    Monomial untouched;
    for (const auto& [var, exp] : t.monomial.factors()) {
      auto it = bindings.find(var);
      if (it == bindings.end()) {
        untouched = untouched * Monomial::variable(var, exp);
      } else {
        product *= it->second.pow(exp);
      }
    }
    result += product * Expression::monomial(Rational(1), std::move(untouched));
  }
  return result;
}

namespace {

std::string monomial_text(const Monomial& m, const VariableOrder& order) {
  std::string s;
  for (const auto& [var, exp] : sorted_factors(m, order)) {
    if (!s.empty()) s += '*';
    s += var;
    if (exp > 1) s += '^' + std::to_string(exp);
  }
  return s;
}

std::string term_text(const Rational& c, const Monomial& m, const VariableOrder& order) {
  if (m.is_one()) return c.to_string();
  std::string prefix;
  if (c.is_one()) {
    prefix = "";
  } else if ((-c).is_one()) {
    prefix = "-";
  } else {
    prefix = c.to_string() + "*";
  }
  return prefix + monomial_text(m, order);
}

}  // namespace

std::string to_string(const Expression& e, const VariableOrder& order) {
  if (e.is_zero()) return "0";
  std::vector<const Expression::Term*> terms;
  for (const auto& t : e.terms()) terms.push_back(&t);
  std::stable_sort(terms.begin(), terms.end(), [&](const auto* a, const auto* b) {
    return graded_lex_before(a->monomial, b->monomial, order);
  });
  std::string s;
  for (const auto* t : terms) {
    if (s.empty()) {
      s = term_text(t->coefficient, t->monomial, order);
    } else if (t->coefficient.sign() < 0) {
      s += " - " + term_text(-t->coefficient, t->monomial, order);
    } else {
      s += " + " + term_text(t->coefficient, t->monomial, order);
    }
  }
  return s;
}

std::ostream& operator<<(std::ostream& os, const Expression& e) {
  return os << to_string(e);
}

}  // namespace folicalc
