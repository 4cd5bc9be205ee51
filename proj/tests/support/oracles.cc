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

#include "oracles.h"

#include <algorithm>
#include <functional>
#include <stdexcept>
#include <vector>

namespace folicalc::testing {

Rational evaluate(const Expression& e, const Point& at) {
  Rational sum;
  for (const auto& term : e.terms()) {
    Rational product = term.coefficient;
    for (const auto& [var, exp] : term.monomial.factors()) {
      auto it = at.find(var);
      if (it == at.end()) throw std::logic_error("unbound variable " + var);
      for (unsigned k = 0; k < exp; ++k) product *= it->second;
    }
    sum += product;
  }
  return sum;
}

Rational derivative_by_interpolation(const Expression& e, const std::string& var,
                                     const Point& at) {
  const unsigned n = e.total_degree() + 1;  // samples h = 0..n-1
  std::vector<Rational> values;
  for (unsigned k = 0; k < n; ++k) {
    Point shifted = at;
    shifted[var] = at.at(var) + Rational(static_cast<std::int64_t>(k));
    values.push_back(evaluate(e, shifted));
  }
  // g(h) = Σ_k f_k L_k(h), L_k(h) = Π_{j≠k} (h - j)/(k - j).
  // L_k'(0) = Σ_{m≠k} [Π_{j≠k,m} (0 - j)] / Π_{j≠k} (k - j).
  Rational result;
  for (unsigned k = 0; k < n; ++k) {
    Rational denom(1);
    for (unsigned j = 0; j < n; ++j)
      if (j != k) denom *= Rational(static_cast<std::int64_t>(k) - static_cast<std::int64_t>(j));
    Rational numer;
    for (unsigned m = 0; m < n; ++m) {
      if (m == k) continue;
      Rational prod(1);
      for (unsigned j = 0; j < n; ++j)
        if (j != k && j != m) prod *= Rational(-static_cast<std::int64_t>(j));
      numer += prod;
    }
    result += values[k] * numer / denom;
  }
  return result;
}

namespace {

// +1 / -1 for the permutation sorting `t`; 0 if an entry repeats.
int sort_sign(const std::vector<std::size_t>& t) {
  int sign = 1;
  for (std::size_t i = 0; i < t.size(); ++i) {
    for (std::size_t j = i + 1; j < t.size(); ++j) {
      if (t[i] == t[j]) return 0;
      if (t[i] > t[j]) sign = -sign;
    }
  }
  return sign;
}

IndexSet sorted_key(std::vector<std::size_t> t) {
  std::sort(t.begin(), t.end());
  return IndexSet::of(t);
}

// Calls f on every ordered tuple of `length` distinct entries from [0, n).
void for_each_tuple(std::size_t n, std::size_t length,
                    const std::function<void(const std::vector<std::size_t>&)>& f) {
  std::vector<std::size_t> t(length, 0);
  std::function<void(std::size_t)> rec = [&](std::size_t pos) {
    if (pos == length) {
      if (sort_sign(t) != 0) f(t);
      return;
    }
    for (std::size_t i = 0; i < n; ++i) {
      t[pos] = i;
      rec(pos + 1);
    }
  };
  rec(0);
}

template <class FormT>
Expression antisymmetric_component(const FormT& form, const std::vector<std::size_t>& t) {
  const int s = sort_sign(t);
  if (s == 0) return Expression();
  Expression c = form.component(sorted_key(t));
  return s > 0 ? c : -c;
}

Rational factorial(std::size_t r) {
  Rational f(1);
  for (std::size_t k = 2; k <= r; ++k) f *= Rational(static_cast<std::int64_t>(k));
  return f;
}

}  // namespace

LeafwiseForm tensor_leafwise_differential(const LeafwiseForm& form) {
  const std::size_t n = form.chart().leaf_dim();
  const std::size_t r = form.degree();
  LeafwiseForm::Components out;
  if (r + 1 <= n) {
    const Expression scale(Rational(1) / factorial(r));
    for_each_tuple(n, r, [&](const std::vector<std::size_t>& alpha) {
      const Expression phi = antisymmetric_component(form, alpha);
      for (std::size_t mu = 0; mu < n; ++mu) {
        std::vector<std::size_t> full{mu};
        full.insert(full.end(), alpha.begin(), alpha.end());
        const int s = sort_sign(full);
        if (s == 0) continue;
        Expression term = scale * partial(phi, form.chart().coord(mu));
        out[sorted_key(full)] += s > 0 ? term : -term;
      }
    });
  }
  return LeafwiseForm(form.chart(), r + 1, std::move(out));
}

ExteriorForm tensor_wedge(const ExteriorForm& a, const ExteriorForm& b) {
  const std::size_t n = a.chart().dim();
  const std::size_t p = a.degree();
  const std::size_t q = b.degree();
  ExteriorForm::Components out;
  if (p + q <= n) {
    const Expression scale(Rational(1) / (factorial(p) * factorial(q)));
    for_each_tuple(n, p, [&](const std::vector<std::size_t>& i) {
      const Expression ai = antisymmetric_component(a, i);
      if (ai.is_zero()) return;
      for_each_tuple(n, q, [&](const std::vector<std::size_t>& j) {
        std::vector<std::size_t> full = i;
        full.insert(full.end(), j.begin(), j.end());
        const int s = sort_sign(full);
        if (s == 0) return;
        Expression term = scale * ai * antisymmetric_component(b, j);
        out[sorted_key(full)] += s > 0 ? term : -term;
      });
    });
  }
  return ExteriorForm(a.chart(), p + q, std::move(out));
}

CoefficientTable closed_form_extension(const LeafwiseConnection& a, const Connection& gamma,
                                       const Splitting& b) {
  const auto& base = gamma.chart().base();
  const std::size_t leaf = base.leaf_dim();
  CoefficientTable t(gamma.fibre_dim(), base.dim());
  for (std::size_t i = 0; i < gamma.fibre_dim(); ++i) {
    for (std::size_t al = 0; al < leaf; ++al) t.set(i, al, a.coefficient(i, al));
    for (std::size_t tr = 0; tr < base.transverse_dim(); ++tr) {
      Expression value = gamma.coefficient(i, leaf + tr);
      for (std::size_t al = 0; al < leaf; ++al) {
        value = value - b.coefficient(al, tr) * (a.coefficient(i, al) - gamma.coefficient(i, al));
      }
      t.set(i, leaf + tr, value);
    }
  }
  return t;
}

}  // namespace folicalc::testing
