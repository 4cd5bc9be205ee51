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

#include "folicalc/connection.h"

#include <algorithm>

#include "folicalc/errors.h"

namespace folicalc {

const Expression& CoefficientTable::at(std::size_t row, std::size_t col) const {
  if (row >= rows_ || col >= cols_) throw InputError("coefficient index out of range");
  return entries_[row * cols_ + col];
}

void CoefficientTable::set(std::size_t row, std::size_t col, Expression value) {
  if (row >= rows_ || col >= cols_) throw InputError("coefficient index out of range");
  entries_[row * cols_ + col] = std::move(value);
}

bool CoefficientTable::is_zero() const {
  return std::all_of(entries_.begin(), entries_.end(),
                     [](const Expression& e) { return e.is_zero(); });
}

namespace {

CoefficientTable combine(const CoefficientTable& a, const CoefficientTable& b, bool subtract) {
  if (a.rows() != b.rows() || a.cols() != b.cols()) {
    throw InputError("coefficient tables differ in shape");
  }
  CoefficientTable r(a.rows(), a.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j)
      r.set(i, j, subtract ? a.at(i, j) - b.at(i, j) : a.at(i, j) + b.at(i, j));
  return r;
}

void require_same_chart(const BundleChart& a, const BundleChart& b, const char* what) {
  if (!(a == b)) throw ChartMismatch(std::string(what) + ": operands live on different charts");
}

}  // namespace

CoefficientTable operator+(const CoefficientTable& a, const CoefficientTable& b) {
  return combine(a, b, false);
}

CoefficientTable operator-(const CoefficientTable& a, const CoefficientTable& b) {
  return combine(a, b, true);
}

BundleSection::BundleSection(BundleChart chart, std::vector<Expression> components)
    : chart_(std::move(chart)), components_(std::move(components)) {
  if (components_.size() != chart_.fibre_dim()) {
    throw InputError("section needs one component per fibre coordinate");
  }
  for (const auto& c : components_) require_base_variables(c, chart_.base(), "section");
}

Bindings BundleSection::as_bindings() const {
  Bindings b;
  for (std::size_t i = 0; i < components_.size(); ++i) {
    b.emplace(chart_.fibre_coord(i), components_[i]);
  }
  return b;
}

LeafwiseConnection restrict_connection(const Connection& connection) {
  const std::size_t leaf = connection.chart().base().leaf_dim();
  CoefficientTable t(connection.fibre_dim(), leaf);
  for (std::size_t i = 0; i < connection.fibre_dim(); ++i)
    for (std::size_t a = 0; a < leaf; ++a) t.set(i, a, connection.coefficient(i, a));
  return LeafwiseConnection(connection.chart(), std::move(t));
}

LeafwiseJetPoint jet_prolongation(const BundleSection& section) {
  const auto& base = section.chart().base();
  CoefficientTable t(section.chart().fibre_dim(), base.leaf_dim());
  for (std::size_t i = 0; i < t.rows(); ++i)
    for (std::size_t a = 0; a < t.cols(); ++a)
      t.set(i, a, partial(section.component(i), base.coord(a)));
  return LeafwiseJetPoint(section.chart(), std::move(t));
}

LeafwiseJetPoint connection_as_jet_section(const LeafwiseConnection& connection) {
  return LeafwiseJetPoint(connection.chart(), connection.coefficients());
}

LeafwiseConnection jet_section_as_connection(const LeafwiseJetPoint& jet) {
  return LeafwiseConnection(jet.chart(), jet.coefficients());
}

LeafwiseJetPoint connection_along_section(const LeafwiseConnection& connection,
                                          const BundleSection& section) {
  require_same_chart(connection.chart(), section.chart(), "connection_along_section");
  const Bindings along = section.as_bindings();
  CoefficientTable t(connection.fibre_dim(), connection.index_count());
  for (std::size_t i = 0; i < t.rows(); ++i)
    for (std::size_t a = 0; a < t.cols(); ++a)
      t.set(i, a, substitute(connection.coefficient(i, a), along));
  return LeafwiseJetPoint(connection.chart(), std::move(t));
}

VerticalValuedLeafwiseForm connection_difference(const LeafwiseConnection& a,
                                                 const LeafwiseConnection& b) {
  require_same_chart(a.chart(), b.chart(), "connection_difference");
  return VerticalValuedLeafwiseForm(a.chart(), a.coefficients() - b.coefficients());
}

LeafwiseConnection translate_connection(const LeafwiseConnection& connection,
                                        const VerticalValuedLeafwiseForm& shift) {
  require_same_chart(connection.chart(), shift.chart(), "translate_connection");
  return LeafwiseConnection(connection.chart(),
                            connection.coefficients() + shift.coefficients());
}

VerticalValuedLeafwiseForm covariant_differential(const LeafwiseConnection& connection,
                                                  const BundleSection& section) {
  require_same_chart(connection.chart(), section.chart(), "covariant_differential");
  const LeafwiseJetPoint jet = jet_prolongation(section);
  const LeafwiseJetPoint along = connection_along_section(connection, section);
  return VerticalValuedLeafwiseForm(connection.chart(),
                                    jet.coefficients() - along.coefficients());
}

LeafwiseForm leafwise_row(const VerticalValuedLeafwiseForm& form, std::size_t fibre) {
  LeafwiseForm::Components c;
  for (std::size_t a = 0; a < form.index_count(); ++a) {
    c.emplace(IndexSet::of({a}), form.coefficient(fibre, a));
  }
  return LeafwiseForm(form.chart().base(), 1, std::move(c));
}

}  // namespace folicalc
