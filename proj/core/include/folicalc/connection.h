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

// Connections and leafwise connections on a trivialized bundle Y -> Z, in
// bundle coordinates (z^α; z^A; y^i).
//
//   Γ   = dz^λ ⊗ (∂_λ + Γ^i_λ ∂_i)        Connection, λ over all base indices
//   A_𝓕 = ~dz^α ⊗ (∂_α + A^i_α ∂_i)        LeafwiseConnection, α over leaf indices
//
// Only the coefficient tables are stored; the ∂_λ / ∂_α parts are fixed.
// Coefficients may depend on fibre coordinates.

#ifndef FOLICALC_CONNECTION_H_
#define FOLICALC_CONNECTION_H_

#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

#include "folicalc/chart.h"
#include "folicalc/errors.h"
#include "folicalc/expression.h"
#include "folicalc/forms.h"

namespace folicalc {

// Dense rows × cols grid of expressions; unset entries are zero.
class CoefficientTable {
 public:
  CoefficientTable(std::size_t rows, std::size_t cols)
      : rows_(rows), cols_(cols), entries_(rows * cols) {}

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  const Expression& at(std::size_t row, std::size_t col) const;
  void set(std::size_t row, std::size_t col, Expression value);
  bool is_zero() const;

  // Throws InputError on shape mismatch.
  friend CoefficientTable operator+(const CoefficientTable& a, const CoefficientTable& b);
  friend CoefficientTable operator-(const CoefficientTable& a, const CoefficientTable& b);
  friend bool operator==(const CoefficientTable&, const CoefficientTable&) = default;

 private:
  std::size_t rows_;
  std::size_t cols_;
  std::vector<Expression> entries_;
};

// A table indexed by (fibre index i, base index) over a bundle chart.
// `Tag::kLeafOnly` restricts the second index to leaf coordinates.
template <class Tag>
class FibredTable {
 public:
  static constexpr bool kLeafOnly = Tag::kLeafOnly;

  explicit FibredTable(BundleChart chart)
      : chart_(std::move(chart)), table_(chart_.fibre_dim(), width(chart_)) {}

  // Throws InputError on a shape mismatch or undeclared variables.
  FibredTable(BundleChart chart, CoefficientTable coefficients)
      : chart_(std::move(chart)), table_(std::move(coefficients)) {
    if (table_.rows() != chart_.fibre_dim() || table_.cols() != width(chart_)) {
      throw InputError(std::string(Tag::kName) + " table has the wrong shape");
    }
    for (std::size_t i = 0; i < table_.rows(); ++i)
      for (std::size_t j = 0; j < table_.cols(); ++j)
        require_bundle_variables(table_.at(i, j), chart_, Tag::kName);
  }

  const BundleChart& chart() const { return chart_; }
  std::size_t fibre_dim() const { return table_.rows(); }
  // Number of admissible base indices: dim𝓕 or dim Z.
  std::size_t index_count() const { return table_.cols(); }
  const CoefficientTable& coefficients() const { return table_; }
  const Expression& coefficient(std::size_t fibre, std::size_t index) const {
    return table_.at(fibre, index);
  }
  bool is_zero() const { return table_.is_zero(); }

  friend bool operator==(const FibredTable&, const FibredTable&) = default;

 private:
  static std::size_t width(const BundleChart& c) {
    return kLeafOnly ? c.base().leaf_dim() : c.base().dim();
  }

  BundleChart chart_;
  CoefficientTable table_;
};

struct ConnectionTag {
  static constexpr bool kLeafOnly = false;
  static constexpr const char* kName = "connection";
};
struct LeafwiseConnectionTag {
  static constexpr bool kLeafOnly = true;
  static constexpr const char* kName = "leafwise connection";
};
struct LeafwiseJetTag {
  static constexpr bool kLeafOnly = true;
  static constexpr const char* kName = "leafwise jet";
};
struct VerticalLeafwiseTag {
  static constexpr bool kLeafOnly = true;
  static constexpr const char* kName = "vertical-valued leafwise form";
};

// Γ^i_λ.
using Connection = FibredTable<ConnectionTag>;
// A^i_α.
using LeafwiseConnection = FibredTable<LeafwiseConnectionTag>;
// Jet coordinates y^i_α of ~dz^α ⊗ (∂_α + y^i_α ∂_i).
using LeafwiseJetPoint = FibredTable<LeafwiseJetTag>;
// Sections of T𝓕* ⊗ VY: ~dz^α ⊗ Q^i_α ∂_i.
using VerticalValuedLeafwiseForm = FibredTable<VerticalLeafwiseTag>;

// s^i(z), one base-only component per fibre coordinate.
class BundleSection {
 public:
  // Throws InputError on a count mismatch or non-base variables.
  BundleSection(BundleChart chart, std::vector<Expression> components);

  const BundleChart& chart() const { return chart_; }
  const std::vector<Expression>& components() const { return components_; }
  const Expression& component(std::size_t i) const { return components_.at(i); }
  // y^i := s^i for every fibre coordinate.
  Bindings as_bindings() const;

  friend bool operator==(const BundleSection&, const BundleSection&) = default;

 private:
  BundleChart chart_;
  std::vector<Expression> components_;
};

// Keeps Γ^i_α, drops Γ^i_A.
LeafwiseConnection restrict_connection(const Connection& connection);

// y^i_α = ∂_α s^i.
LeafwiseJetPoint jet_prolongation(const BundleSection& section);

// The leafwise connection read as a section of J¹_𝓕Y -> Y, and back.
LeafwiseJetPoint connection_as_jet_section(const LeafwiseConnection& connection);
LeafwiseConnection jet_section_as_connection(const LeafwiseJetPoint& jet);

// A^i_α ∘ s.
LeafwiseJetPoint connection_along_section(const LeafwiseConnection& connection,
                                          const BundleSection& section);

// Q^i_α = A^i_α - B^i_α. Throws ChartMismatch.
VerticalValuedLeafwiseForm connection_difference(const LeafwiseConnection& a,
                                                 const LeafwiseConnection& b);

// A^i_α + Q^i_α. Throws ChartMismatch.
LeafwiseConnection translate_connection(const LeafwiseConnection& connection,
                                        const VerticalValuedLeafwiseForm& shift);

// ∇_𝓕 s = (~ds^i - (A^i_α ∘ s) ~dz^α) ⊗ ∂_i. Throws ChartMismatch.
VerticalValuedLeafwiseForm covariant_differential(const LeafwiseConnection& connection,
                                                  const BundleSection& section);

// Row i of a vertical-valued leafwise form as a degree-1 leafwise form.
LeafwiseForm leafwise_row(const VerticalValuedLeafwiseForm& form, std::size_t fibre);

// "label[y][z] = expr" for every nonzero entry, fibre-major. Empty when the
// table is zero.
template <class Tag>
std::vector<std::string> coefficient_lines(const FibredTable<Tag>& table,
                                           std::string_view label) {
  std::vector<std::string> lines;
  const VariableOrder order = table.chart().variable_order();
  for (std::size_t i = 0; i < table.fibre_dim(); ++i) {
    for (std::size_t j = 0; j < table.index_count(); ++j) {
      const Expression& e = table.coefficient(i, j);
      if (e.is_zero()) continue;
      lines.push_back(std::string(label) + "[" + table.chart().fibre_coord(i) + "][" +
                      table.chart().base().coord(j) + "] = " + to_string(e, order));
    }
  }
  return lines;
}

}  // namespace folicalc

#endif  // FOLICALC_CONNECTION_H_
