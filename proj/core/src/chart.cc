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

#include "folicalc/chart.h"

#include <algorithm>
#include <set>

#include "folicalc/errors.h"

namespace folicalc {

bool is_identifier(std::string_view name) {
  if (name.empty()) return false;
  auto start = [](char c) {
    return (c >= 'a' && c <= 'z') || (c >= 'A' && c <= 'Z') || c == '_';
  };
  if (!start(name.front())) return false;
  return std::all_of(name.begin() + 1, name.end(),
                     [&](char c) { return start(c) || (c >= '0' && c <= '9'); });
}

namespace {

void require_distinct_identifiers(const std::vector<std::string>& names,
                                  std::set<std::string>& seen) {
  for (const auto& n : names) {
    if (!is_identifier(n)) throw InputError("invalid coordinate name '" + n + "'");
    if (!seen.insert(n).second) throw InputError("duplicate coordinate name '" + n + "'");
  }
}

}  // namespace

AdaptedChart::AdaptedChart(std::vector<std::string> leaf_coords,
                           std::vector<std::string> transverse_coords) {
  if (leaf_coords.empty()) throw InputError("a foliation needs at least one leaf coordinate");
  if (leaf_coords.size() + transverse_coords.size() > kMaxCoordinates) {
    throw InputError("chart exceeds " + std::to_string(kMaxCoordinates) + " coordinates");
  }
  std::set<std::string> seen;
  require_distinct_identifiers(leaf_coords, seen);
  require_distinct_identifiers(transverse_coords, seen);
  auto data = std::make_shared<Data>();
  data->leaf_dim = leaf_coords.size();
  data->coords = std::move(leaf_coords);
  data->coords.insert(data->coords.end(),
                      std::make_move_iterator(transverse_coords.begin()),
                      std::make_move_iterator(transverse_coords.end()));
  data_ = std::move(data);
}

std::optional<std::size_t> AdaptedChart::index_of(std::string_view name) const {
  const auto& c = data_->coords;
  auto it = std::find(c.begin(), c.end(), name);
  if (it == c.end()) return std::nullopt;
  return static_cast<std::size_t>(it - c.begin());
}

bool operator==(const AdaptedChart& a, const AdaptedChart& b) {
  if (a.data_ == b.data_) return true;
  return a.data_->leaf_dim == b.data_->leaf_dim && a.data_->coords == b.data_->coords;
}

BundleChart::BundleChart(AdaptedChart base, std::vector<std::string> fibre_coords)
    : base_(std::move(base)) {
  if (fibre_coords.empty()) throw InputError("a bundle needs at least one fibre coordinate");
  if (base_.dim() + fibre_coords.size() > kMaxCoordinates) {
    throw InputError("bundle chart exceeds " + std::to_string(kMaxCoordinates) +
                     " coordinates");
  }
  std::set<std::string> seen(base_.coords().begin(), base_.coords().end());
  require_distinct_identifiers(fibre_coords, seen);
  fibre_ = std::make_shared<const std::vector<std::string>>(std::move(fibre_coords));
}

std::optional<std::size_t> BundleChart::fibre_index_of(std::string_view name) const {
  auto it = std::find(fibre_->begin(), fibre_->end(), name);
  if (it == fibre_->end()) return std::nullopt;
  return static_cast<std::size_t>(it - fibre_->begin());
}

VariableOrder BundleChart::variable_order() const {
  std::vector<std::string> all = base_.coords();
  all.insert(all.end(), fibre_->begin(), fibre_->end());
  return VariableOrder(std::move(all));
}

bool operator==(const BundleChart& a, const BundleChart& b) {
  return a.base_ == b.base_ && (a.fibre_ == b.fibre_ || *a.fibre_ == *b.fibre_);
}

TransitionMap::TransitionMap(AdaptedChart target_chart,
                             std::vector<Expression> target_components)
    : target(std::move(target_chart)), components(std::move(target_components)) {
  if (components.size() != target.dim()) {
    throw InputError("transition map has " + std::to_string(components.size()) +
                     " components for a chart of dimension " +
                     std::to_string(target.dim()));
  }
}

TransitionMap TransitionMap::identity(const AdaptedChart& chart) {
  std::vector<Expression> comps;
  for (const auto& c : chart.coords()) comps.push_back(Expression::variable(c));
  return TransitionMap(chart, std::move(comps));
}

void require_base_variables(const Expression& e, const AdaptedChart& chart,
                            std::string_view context) {
  for (const auto& v : e.variables()) {
    if (!chart.contains(v)) {
      throw InputError("unknown variable '" + v + "' in " + std::string(context));
    }
  }
}

void require_bundle_variables(const Expression& e, const BundleChart& chart,
                              std::string_view context) {
  for (const auto& v : e.variables()) {
    if (!chart.contains(v)) {
      throw InputError("unknown variable '" + v + "' in " + std::string(context));
    }
  }
}

bool check_adapted_transition(const TransitionMap& transition, const AdaptedChart& source) {
  if (transition.target.leaf_dim() != source.leaf_dim()) {
    throw InputError("transition changes the leaf dimension");
  }
  for (const auto& c : transition.components) {
    require_base_variables(c, source, "transition component");
  }
  const auto& target = transition.target;
  for (std::size_t a = target.leaf_dim(); a < target.dim(); ++a) {
    for (const auto& leaf : source.leaf_coords()) {
      if (!partial(transition.components[a], leaf).is_zero()) return false;
    }
  }
  return true;
}

bool check_foliated_bundle_transition(std::span<const Expression> fibre_transition,
                                      const BundleChart& chart) {
  if (fibre_transition.size() != chart.fibre_dim()) {
    throw InputError("fibre transition has " + std::to_string(fibre_transition.size()) +
                     " components for " + std::to_string(chart.fibre_dim()) +
                     " fibre coordinates");
  }
  for (const auto& c : fibre_transition) {
    require_bundle_variables(c, chart, "fibre transition component");
  }
  for (const auto& c : fibre_transition) {
    for (const auto& leaf : chart.base().leaf_coords()) {
      if (!partial(c, leaf).is_zero()) return false;
    }
  }
  return true;
}

bool is_foliated_function(const Expression& f, const AdaptedChart& chart) {
  require_base_variables(f, chart, "function");
  return std::all_of(chart.leaf_coords().begin(), chart.leaf_coords().end(),
                     [&](const std::string& leaf) { return partial(f, leaf).is_zero(); });
}

}  // namespace folicalc
