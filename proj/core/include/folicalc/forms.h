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

// Leafwise forms (basis ~dz^α, α over leaf coordinates) and exterior forms
// (basis dz^λ, λ over all base coordinates) with polynomial coefficients.
//
// A form of degree r is stored on the strictly increasing basis
//   φ = Σ_{α1<…<αr} φ_{α1…αr} ~dz^α1 ∧ … ∧ ~dz^αr,
// so the 1/r! of the fully antisymmetric convention never appears. The
// differential is the alternating sum
//   (dφ)_{J} = Σ_{μ∈J} (-1)^{#{j∈J : j<μ}} ∂_μ φ_{J∖μ}.

#ifndef FOLICALC_FORMS_H_
#define FOLICALC_FORMS_H_

#include <bit>
#include <compare>
#include <cstdint>
#include <map>
#include <span>
#include <string>
#include <vector>

#include "folicalc/chart.h"
#include "folicalc/expression.h"

namespace folicalc {

// A strictly increasing multi-index, stored as a bitmask over coordinate
// positions. Ordered lexicographically on the ascending index list.
class IndexSet {
 public:
  constexpr IndexSet() = default;
  constexpr explicit IndexSet(std::uint64_t bits) : bits_(bits) {}
  // Throws InputError on repeated or out-of-range (>= 64) indices.
  static IndexSet of(std::span<const std::size_t> indices);
  static IndexSet of(std::initializer_list<std::size_t> indices) {
    return of(std::span<const std::size_t>(indices.begin(), indices.size()));
  }

  std::uint64_t bits() const { return bits_; }
  std::size_t size() const { return static_cast<std::size_t>(std::popcount(bits_)); }
  bool empty() const { return bits_ == 0; }
  bool contains(std::size_t i) const { return (bits_ >> i) & 1U; }
  bool intersects(IndexSet o) const { return (bits_ & o.bits_) != 0; }
  // True iff every index is below `count`.
  bool fits(std::size_t count) const { return count >= 64 || (bits_ >> count) == 0; }
  IndexSet with(std::size_t i) const { return IndexSet(bits_ | (std::uint64_t{1} << i)); }
  IndexSet united(IndexSet o) const { return IndexSet(bits_ | o.bits_); }
  // Number of elements strictly below i.
  std::size_t count_below(std::size_t i) const {
    if (i >= 64) return size();
    return static_cast<std::size_t>(std::popcount(bits_ & ((std::uint64_t{1} << i) - 1)));
  }
  std::vector<std::size_t> indices() const;

  friend bool operator==(IndexSet a, IndexSet b) { return a.bits_ == b.bits_; }
  friend std::strong_ordering operator<=>(IndexSet a, IndexSet b);

 private:
  std::uint64_t bits_ = 0;
};

// Sign of the permutation sorting the concatenation (a, b); requires a, b
// disjoint.
int merge_sign(IndexSet a, IndexSet b);

enum class FormSpace { kLeafwise, kExterior };

template <FormSpace Space>
class Form {
 public:
  using Components = std::map<IndexSet, Expression>;
  static constexpr FormSpace kSpace = Space;

  // The zero form of the given degree.
  Form(AdaptedChart chart, std::size_t degree);
  // Throws InputError if a key has the wrong size or exceeds the index
  // range. Zero components are dropped.
  Form(AdaptedChart chart, std::size_t degree, Components components);

  static Form scalar(AdaptedChart chart, Expression value);
  // coefficient · d^{i1} ∧ … ∧ d^{ir} for indices in any order; the
  // sorting sign is applied and a repeated index yields zero.
  static Form basis(AdaptedChart chart, std::span<const std::size_t> indices,
                    Expression coefficient = Expression(1));

  const AdaptedChart& chart() const { return chart_; }
  std::size_t degree() const { return degree_; }
  // dim𝓕 for leafwise forms, dim Z for exterior forms.
  std::size_t index_count() const;
  const Components& components() const { return components_; }
  Expression component(IndexSet index) const;
  bool is_zero() const { return components_.empty(); }

  Form operator-() const;
  // Throws ChartMismatch or InputError (degree mismatch).
  friend Form operator+(const Form& a, const Form& b) { return a.combine(b, false); }
  friend Form operator-(const Form& a, const Form& b) { return a.combine(b, true); }
  friend Form operator*(const Expression& f, const Form& w) { return w.scaled(f); }

  friend bool operator==(const Form& a, const Form& b) {
    return a.degree_ == b.degree_ && a.chart_ == b.chart_ && a.components_ == b.components_;
  }

 private:
  Form combine(const Form& other, bool subtract) const;
  Form scaled(const Expression& f) const;

  AdaptedChart chart_;
  std::size_t degree_;
  Components components_;
};

using LeafwiseForm = Form<FormSpace::kLeafwise>;
using ExteriorForm = Form<FormSpace::kExterior>;

extern template class Form<FormSpace::kLeafwise>;
extern template class Form<FormSpace::kExterior>;

// Bilinear exterior product. Throws ChartMismatch.
LeafwiseForm wedge(const LeafwiseForm& a, const LeafwiseForm& b);
ExteriorForm wedge(const ExteriorForm& a, const ExteriorForm& b);

// Differentiates along leaf coordinates only.
LeafwiseForm leafwise_differential(const LeafwiseForm& form);
// De Rham differential over all base coordinates.
ExteriorForm exterior_differential(const ExteriorForm& form);

// dz^α ↦ ~dz^α, dz^A ↦ 0.
LeafwiseForm restrict_form(const ExteriorForm& form);
// Right inverse of restrict_form: ~dz^α ↦ dz^α.
ExteriorForm lift_form(const LeafwiseForm& form);

// Components in lexicographic multi-index order; basis factors print as
// "~dz1^~dz2" (leafwise) or "dz1^dz2" (exterior). Coefficients use the
// chart's coordinate order unless another order is supplied.
std::string to_string(const LeafwiseForm& form);
std::string to_string(const LeafwiseForm& form, const VariableOrder& order);
std::string to_string(const ExteriorForm& form);
std::string to_string(const ExteriorForm& form, const VariableOrder& order);

}  // namespace folicalc

#endif  // FOLICALC_FORMS_H_
