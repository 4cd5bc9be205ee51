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

// Extending a leafwise connection to a connection on the whole bundle.
//
// Given a leafwise connection A_𝓕, any connection Γ and a splitting
//   B : ~dz^α ↦ dz^α - B^α_A dz^A
// of the conormal sequence, the difference Q = A_𝓕 - Γ_𝓕 is a section of
// T𝓕* ⊗ VY, B∘Q is a soldering form on Y, and Γ + B∘Q is a connection whose
// restriction to the leaves is A_𝓕. In coordinates
//
//   (Γ + B∘Q)^i_α = A^i_α
//   (Γ + B∘Q)^i_A = Γ^i_A - B^α_A (A^i_α - Γ^i_α).
//
// The result depends on B; only its leaf-indexed part is determined.

#ifndef FOLICALC_EXTENSION_H_
#define FOLICALC_EXTENSION_H_

#include <cstddef>

#include "folicalc/chart.h"
#include "folicalc/connection.h"
#include "folicalc/forms.h"

namespace folicalc {

// B^α_A, indexed by (leaf index α, transverse offset A - dim𝓕).
class Splitting {
 public:
  // B = 0.
  explicit Splitting(AdaptedChart chart);
  // Throws InputError on a shape mismatch or on any variable that is not a
  // base coordinate; a splitting lives over Z.
  Splitting(AdaptedChart chart, CoefficientTable coefficients);

  const AdaptedChart& chart() const { return chart_; }
  const CoefficientTable& coefficients() const { return table_; }
  const Expression& coefficient(std::size_t leaf, std::size_t transverse) const {
    return table_.at(leaf, transverse);
  }

  // The image of ~dz^α as an exterior one-form.
  ExteriorForm image(std::size_t leaf) const;

  friend bool operator==(const Splitting&, const Splitting&) = default;

 private:
  AdaptedChart chart_;
  CoefficientTable table_;
};

struct SolderingFormTag {
  static constexpr bool kLeafOnly = false;
  static constexpr const char* kName = "soldering form";
};
struct ConnectionDifferenceTag {
  static constexpr bool kLeafOnly = false;
  static constexpr const char* kName = "connection difference";
};

// dz^λ ⊗ σ^i_λ ∂_i.
using SolderingForm = FibredTable<SolderingFormTag>;
// Γ^i_λ - Γ'^i_λ for two connections on the same chart.
using ConnectionDifference = FibredTable<ConnectionDifferenceTag>;

// B∘Q: component (i, α) = Q^i_α, component (i, A) = -B^α_A Q^i_α.
// Throws ChartMismatch.
SolderingForm apply_splitting(const Splitting& splitting,
                              const VerticalValuedLeafwiseForm& difference);

// Row i of a soldering form as an exterior one-form on Z.
ExteriorForm exterior_row(const SolderingForm& form, std::size_t fibre);

// Γ + σ. Throws ChartMismatch.
Connection translate_connection(const Connection& connection, const SolderingForm& shift);

// Γ - Γ'. Throws ChartMismatch.
ConnectionDifference connection_difference(const Connection& a, const Connection& b);

// Γ + B∘(A - restrict(Γ)). Throws ChartMismatch.
Connection extend_connection(const LeafwiseConnection& leafwise, const Connection& reference,
                             const Splitting& splitting);
// Same, with the zero connection as reference.
Connection extend_connection(const LeafwiseConnection& leafwise, const Splitting& splitting);

// restrict(extend(A, Γ, B)) == A. Always true for a correct implementation.
bool verify_extension(const LeafwiseConnection& leafwise, const Connection& reference,
                      const Splitting& splitting);

// extend(A, Γ, B1) - extend(A, Γ, B2). Leaf-indexed entries vanish; the
// transverse ones are -(B1 - B2)^α_A Q^i_α.
ConnectionDifference extension_dependence(const LeafwiseConnection& leafwise,
                                          const Connection& reference,
                                          const Splitting& first, const Splitting& second);

}  // namespace folicalc

#endif  // FOLICALC_EXTENSION_H_
