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

// Adapted coordinates on a foliated manifold and on a fibre bundle over it.
//
// An AdaptedChart names the leaf coordinates z^α (along the leaves) followed
// by the transverse coordinates z^A (constant on each plaque). Every stored
// ordering puts the leaf coordinates first, so coordinate index i < leaf_dim()
// is a leaf index.

#ifndef FOLICALC_CHART_H_
#define FOLICALC_CHART_H_

#include <cstddef>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "folicalc/expression.h"

namespace folicalc {

// Forms index their basis by bitmask, which bounds the chart size.
inline constexpr std::size_t kMaxCoordinates = 63;

// True for names matching [A-Za-z_][A-Za-z0-9_]*.
bool is_identifier(std::string_view name);

class AdaptedChart {
 public:
  // Throws InputError unless all names are distinct identifiers, there is at
  // least one leaf coordinate, and the total does not exceed kMaxCoordinates.
  AdaptedChart(std::vector<std::string> leaf_coords,
               std::vector<std::string> transverse_coords);

  std::size_t leaf_dim() const { return data_->leaf_dim; }
  std::size_t transverse_dim() const { return dim() - leaf_dim(); }
  std::size_t dim() const { return data_->coords.size(); }

  // All coordinates, leaf coordinates first.
  const std::vector<std::string>& coords() const { return data_->coords; }
  std::span<const std::string> leaf_coords() const {
    return std::span(data_->coords).first(leaf_dim());
  }
  std::span<const std::string> transverse_coords() const {
    return std::span(data_->coords).subspan(leaf_dim());
  }
  const std::string& coord(std::size_t index) const { return data_->coords.at(index); }

  std::optional<std::size_t> index_of(std::string_view name) const;
  bool contains(std::string_view name) const { return index_of(name).has_value(); }
  bool is_leaf_index(std::size_t index) const { return index < leaf_dim(); }

  // Printing order: coordinates in chart order.
  VariableOrder variable_order() const { return VariableOrder(data_->coords); }

  friend bool operator==(const AdaptedChart& a, const AdaptedChart& b);

 private:
  struct Data {
    std::vector<std::string> coords;
    std::size_t leaf_dim;
  };
  std::shared_ptr<const Data> data_;
};

// Bundle coordinates (z^α; z^A; y^i) on a trivialized Y -> Z.
class BundleChart {
 public:
  // Throws InputError unless the fibre names are distinct identifiers,
  // disjoint from the base names, and there is at least one of them.
  BundleChart(AdaptedChart base, std::vector<std::string> fibre_coords);

  const AdaptedChart& base() const { return base_; }
  const std::vector<std::string>& fibre_coords() const { return *fibre_; }
  std::size_t fibre_dim() const { return fibre_->size(); }
  const std::string& fibre_coord(std::size_t i) const { return fibre_->at(i); }
  std::optional<std::size_t> fibre_index_of(std::string_view name) const;

  bool is_base_variable(std::string_view name) const { return base_.contains(name); }
  bool is_fibre_variable(std::string_view name) const {
    return fibre_index_of(name).has_value();
  }
  bool contains(std::string_view name) const {
    return is_base_variable(name) || is_fibre_variable(name);
  }

  // Base coordinates, then fibre coordinates.
  VariableOrder variable_order() const;

  friend bool operator==(const BundleChart& a, const BundleChart& b);

 private:
  AdaptedChart base_;
  std::shared_ptr<const std::vector<std::string>> fibre_;
};

// Coordinate change into `target`: one component per target coordinate,
// written in the source chart's variables.
struct TransitionMap {
  TransitionMap(AdaptedChart target_chart, std::vector<Expression> target_components);

  AdaptedChart target;
  std::vector<Expression> components;

  static TransitionMap identity(const AdaptedChart& chart);
  friend bool operator==(const TransitionMap&, const TransitionMap&) = default;
};

// Throws InputError naming the first variable of `e` not declared in `chart`.
void require_base_variables(const Expression& e, const AdaptedChart& chart,
                            std::string_view context);
void require_bundle_variables(const Expression& e, const BundleChart& chart,
                              std::string_view context);

// True iff the transverse target coordinates z'^A do not depend on any source
// leaf coordinate z^α. Throws InputError on unknown variables or when the two
// charts disagree on the leaf dimension.
bool check_adapted_transition(const TransitionMap& transition, const AdaptedChart& source);

// True iff each fibre transition component is constant along the leaves.
// Throws InputError on unknown variables or a component count != fibre_dim().
bool check_foliated_bundle_transition(std::span<const Expression> fibre_transition,
                                      const BundleChart& chart);

// Membership in the ring of functions constant on leaves. Throws InputError
// if `f` mentions anything but base coordinates.
bool is_foliated_function(const Expression& f, const AdaptedChart& chart);

}  // namespace folicalc

#endif  // FOLICALC_CHART_H_
