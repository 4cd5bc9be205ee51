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

#include "folicalc/extension.h"

#include "folicalc/errors.h"

namespace folicalc {

Splitting::Splitting(AdaptedChart chart)
    : chart_(std::move(chart)), table_(chart_.leaf_dim(), chart_.transverse_dim()) {}

Splitting::Splitting(AdaptedChart chart, CoefficientTable coefficients)
    : chart_(std::move(chart)), table_(std::move(coefficients)) {
  if (table_.rows() != chart_.leaf_dim() || table_.cols() != chart_.transverse_dim()) {
    throw InputError("splitting table has the wrong shape");
  }
  for (std::size_t a = 0; a < table_.rows(); ++a)
    for (std::size_t t = 0; t < table_.cols(); ++t)
      require_base_variables(table_.at(a, t), chart_, "splitting");
}

ExteriorForm Splitting::image(std::size_t leaf) const {
  ExteriorForm::Components c;
  c.emplace(IndexSet::of({leaf}), Expression(1));
  for (std::size_t t = 0; t < chart_.transverse_dim(); ++t) {
    c.emplace(IndexSet::of({chart_.leaf_dim() + t}), -table_.at(leaf, t));
  }
  return ExteriorForm(chart_, 1, std::move(c));
}

namespace {

void require_same_chart(const BundleChart& a, const BundleChart& b, const char* what) {
  if (!(a == b)) throw ChartMismatch(std::string(what) + ": operands live on different charts");
}

}  // namespace

SolderingForm apply_splitting(const Splitting& splitting,
                              const VerticalValuedLeafwiseForm& difference) {
  const BundleChart& chart = difference.chart();
  if (!(splitting.chart() == chart.base())) {
    throw ChartMismatch("apply_splitting: splitting and difference live on different charts");
  }
  const std::size_t leaf = chart.base().leaf_dim();
  CoefficientTable t(chart.fibre_dim(), chart.base().dim());
  for (std::size_t i = 0; i < chart.fibre_dim(); ++i) {
    for (std::size_t a = 0; a < leaf; ++a) t.set(i, a, difference.coefficient(i, a));
    for (std::size_t tr = 0; tr < chart.base().transverse_dim(); ++tr) {
      Expression sum;
      for (std::size_t a = 0; a < leaf; ++a) {
        sum += splitting.coefficient(a, tr) * difference.coefficient(i, a);
      }
      t.set(i, leaf + tr, -sum);
    }
  }
  return SolderingForm(chart, std::move(t));
}

ExteriorForm exterior_row(const SolderingForm& form, std::size_t fibre) {
  ExteriorForm::Components c;
  for (std::size_t l = 0; l < form.index_count(); ++l) {
    c.emplace(IndexSet::of({l}), form.coefficient(fibre, l));
  }
  return ExteriorForm(form.chart().base(), 1, std::move(c));
}

Connection translate_connection(const Connection& connection, const SolderingForm& shift) {
  require_same_chart(connection.chart(), shift.chart(), "translate_connection");
  return Connection(connection.chart(), connection.coefficients() + shift.coefficients());
}

ConnectionDifference connection_difference(const Connection& a, const Connection& b) {
  require_same_chart(a.chart(), b.chart(), "connection_difference");
  return ConnectionDifference(a.chart(), a.coefficients() - b.coefficients());
}

Connection extend_connection(const LeafwiseConnection& leafwise, const Connection& reference,
                             const Splitting& splitting) {
  require_same_chart(leafwise.chart(), reference.chart(), "extend_connection");
  const VerticalValuedLeafwiseForm q =
      connection_difference(leafwise, restrict_connection(reference));
  return translate_connection(reference, apply_splitting(splitting, q));
}

Connection extend_connection(const LeafwiseConnection& leafwise, const Splitting& splitting) {
  return extend_connection(leafwise, Connection(leafwise.chart()), splitting);
}

bool verify_extension(const LeafwiseConnection& leafwise, const Connection& reference,
                      const Splitting& splitting) {
  const LeafwiseConnection back =
      restrict_connection(extend_connection(leafwise, reference, splitting));
  return connection_difference(back, leafwise).is_zero();
}

ConnectionDifference extension_dependence(const LeafwiseConnection& leafwise,
                                          const Connection& reference,
                                          const Splitting& first, const Splitting& second) {
  return connection_difference(extend_connection(leafwise, reference, first),
                               extend_connection(leafwise, reference, second));
}

}  // namespace folicalc
