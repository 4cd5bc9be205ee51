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

#include "folicalc/forms.h"

#include <algorithm>

#include "folicalc/errors.h"

namespace folicalc {

IndexSet IndexSet::of(std::span<const std::size_t> indices) {
  std::uint64_t bits = 0;
  for (std::size_t i : indices) {
    if (i >= 64) throw InputError("multi-index entry out of range");
    const std::uint64_t bit = std::uint64_t{1} << i;
    if (bits & bit) throw InputError("repeated index in multi-index");
    bits |= bit;
  }
  return IndexSet(bits);
}

std::vector<std::size_t> IndexSet::indices() const {
  std::vector<std::size_t> out;
  for (std::uint64_t b = bits_; b != 0; b &= b - 1) {
    out.push_back(static_cast<std::size_t>(std::countr_zero(b)));
  }
  return out;
}

std::strong_ordering operator<=>(IndexSet a, IndexSet b) {
  if (a.bits_ == b.bits_) return std::strong_ordering::equal;
  const auto d = static_cast<unsigned>(std::countr_zero(a.bits_ ^ b.bits_));
  // Both share every element below d. The one holding d continues with d;
  // the other either ends (and is a prefix, hence smaller) or continues
  // with something larger than d.
  const bool a_has = (a.bits_ >> d) & 1U;
  const IndexSet& other = a_has ? b : a;
  const bool other_ended = (other.bits_ >> d) == 0;
  const bool a_less = a_has ? !other_ended : other_ended;
  return a_less ? std::strong_ordering::less : std::strong_ordering::greater;
}

int merge_sign(IndexSet a, IndexSet b) {
  // Count pairs (i in a, j in b) with i > j.
  std::size_t inversions = 0;
  for (std::uint64_t bb = b.bits(); bb != 0; bb &= bb - 1) {
    const auto j = static_cast<unsigned>(std::countr_zero(bb));
    inversions += a.size() - a.count_below(j + 1);
  }
  return (inversions % 2 == 0) ? 1 : -1;
}

template <FormSpace Space>
Form<Space>::Form(AdaptedChart chart, std::size_t degree)
    : chart_(std::move(chart)), degree_(degree) {}

template <FormSpace Space>
Form<Space>::Form(AdaptedChart chart, std::size_t degree, Components components)
    : chart_(std::move(chart)), degree_(degree) {
  const std::size_t count = index_count();
  for (auto& [index, coeff] : components) {
    if (index.size() != degree_) throw InputError("component multi-index has wrong degree");
    if (!index.fits(count)) throw InputError("component multi-index out of range");
    if (!coeff.is_zero()) components_.emplace(index, std::move(coeff));
  }
}

template <FormSpace Space>
Form<Space> Form<Space>::scalar(AdaptedChart chart, Expression value) {
  Components c;
  c.emplace(IndexSet{}, std::move(value));
  return Form(std::move(chart), 0, std::move(c));
}

template <FormSpace Space>
Form<Space> Form<Space>::basis(AdaptedChart chart, std::span<const std::size_t> indices,
                               Expression coefficient) {
  Form result(std::move(chart), indices.size());
  const std::size_t count = result.index_count();
  IndexSet acc;
  int sign = 1;
  for (std::size_t i : indices) {
    if (i >= count) throw InputError("basis index out of range");
    if (acc.contains(i)) return result;
    // Moving i leftwards past the larger indices already placed.
    if ((acc.size() - acc.count_below(i)) % 2 == 1) sign = -sign;
    acc = acc.with(i);
  }
  if (!coefficient.is_zero()) {
    result.components_.emplace(acc, sign > 0 ? std::move(coefficient) : -coefficient);
  }
  return result;
}

template <FormSpace Space>
std::size_t Form<Space>::index_count() const {
  return Space == FormSpace::kLeafwise ? chart_.leaf_dim() : chart_.dim();
}

template <FormSpace Space>
Expression Form<Space>::component(IndexSet index) const {
  auto it = components_.find(index);
  return it == components_.end() ? Expression() : it->second;
}

template <FormSpace Space>
Form<Space> Form<Space>::operator-() const {
  Form r = *this;
  for (auto& [index, coeff] : r.components_) coeff = -coeff;
  return r;
}

template <FormSpace Space>
Form<Space> Form<Space>::combine(const Form& other, bool subtract) const {
  if (!(chart_ == other.chart_)) throw ChartMismatch("forms live on different charts");
  if (degree_ != other.degree_) {
    throw InputError("cannot add forms of degree " + std::to_string(degree_) + " and " +
                     std::to_string(other.degree_));
  }
  Form r = *this;
  for (const auto& [index, coeff] : other.components_) {
    auto [it, inserted] = r.components_.try_emplace(index);
    it->second = subtract ? it->second - coeff : it->second + coeff;
    if (it->second.is_zero()) r.components_.erase(it);
  }
  return r;
}

template <FormSpace Space>
Form<Space> Form<Space>::scaled(const Expression& f) const {
  Form r(chart_, degree_);
  if (f.is_zero()) return r;
  for (const auto& [index, coeff] : components_) {
    Expression c = f * coeff;
    if (!c.is_zero()) r.components_.emplace(index, std::move(c));
  }
  return r;
}

template class Form<FormSpace::kLeafwise>;
template class Form<FormSpace::kExterior>;

namespace {

template <FormSpace Space>
Form<Space> wedge_impl(const Form<Space>& a, const Form<Space>& b) {
  if (!(a.chart() == b.chart())) throw ChartMismatch("wedge of forms on different charts");
  typename Form<Space>::Components out;
  for (const auto& [i, ci] : a.components()) {
    for (const auto& [j, cj] : b.components()) {
      if (i.intersects(j)) continue;
      Expression term = ci * cj;
      if (merge_sign(i, j) < 0) term = -term;
      auto [it, inserted] = out.try_emplace(i.united(j));
      it->second += term;
    }
  }
  return Form<Space>(a.chart(), a.degree() + b.degree(), std::move(out));
}

template <FormSpace Space>
Form<Space> coboundary(const Form<Space>& form) {
  const std::size_t count = form.index_count();
  typename Form<Space>::Components out;
  for (const auto& [index, coeff] : form.components()) {
    for (std::size_t mu = 0; mu < count; ++mu) {
      if (index.contains(mu)) continue;
      Expression d = partial(coeff, form.chart().coord(mu));
      if (d.is_zero()) continue;
      if (index.count_below(mu) % 2 == 1) d = -d;
      auto [it, inserted] = out.try_emplace(index.with(mu));
      it->second += d;
    }
  }
  return Form<Space>(form.chart(), form.degree() + 1, std::move(out));
}

template <FormSpace Space>
std::string form_text(const Form<Space>& form, const VariableOrder& order) {
  if (form.is_zero()) return "0";
  const char* prefix = Space == FormSpace::kLeafwise ? "~d" : "d";
  std::string out;
  for (const auto& [index, coeff] : form.components()) {
    std::string basis;
    for (std::size_t i : index.indices()) {
      if (!basis.empty()) basis += '^';
      basis += prefix + form.chart().coord(i);
    }
    std::string piece;
    if (basis.empty()) {
      piece = to_string(coeff, order);
    } else if (coeff == Expression(1)) {
      piece = basis;
    } else if (coeff == Expression(-1)) {
      piece = "-" + basis;
    } else if (coeff.terms().size() == 1) {
      piece = to_string(coeff, order) + " " + basis;
    } else {
      piece = "(" + to_string(coeff, order) + ") " + basis;
    }
    if (out.empty()) {
      out = piece;
    } else if (piece.front() == '-') {
      out += " - " + piece.substr(1);
    } else {
      out += " + " + piece;
    }
  }
  return out;
}

}  // namespace

LeafwiseForm wedge(const LeafwiseForm& a, const LeafwiseForm& b) { return wedge_impl(a, b); }
ExteriorForm wedge(const ExteriorForm& a, const ExteriorForm& b) { return wedge_impl(a, b); }

LeafwiseForm leafwise_differential(const LeafwiseForm& form) { return coboundary(form); }
ExteriorForm exterior_differential(const ExteriorForm& form) { return coboundary(form); }

LeafwiseForm restrict_form(const ExteriorForm& form) {
  LeafwiseForm::Components out;
  const std::size_t leaf = form.chart().leaf_dim();
  for (const auto& [index, coeff] : form.components()) {
    if (index.fits(leaf)) out.emplace(index, coeff);
  }
  return LeafwiseForm(form.chart(), form.degree(), std::move(out));
}

ExteriorForm lift_form(const LeafwiseForm& form) {
  return ExteriorForm(form.chart(), form.degree(), form.components());
}

std::string to_string(const LeafwiseForm& form) {
  return form_text(form, form.chart().variable_order());
}
std::string to_string(const LeafwiseForm& form, const VariableOrder& order) {
  return form_text(form, order);
}
std::string to_string(const ExteriorForm& form) {
  return form_text(form, form.chart().variable_order());
}
std::string to_string(const ExteriorForm& form, const VariableOrder& order) {
  return form_text(form, order);
}

}  // namespace folicalc
