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

// Text documents describing a chart, an optional bundle and named objects.
//
//   document := block+
//   block    := kind name? '{' item* '}'
//   item     := key index* '=' expr | key value+
//   index    := '[' identifier ']'
//
// '#' starts a comment. Block kinds and their items:
//
//   manifold            dim N, leaf P, coords z1 ... zN (leaf coordinates first)
//   bundle              fibre y1 ... yM
//   form NAME           degree R, NAME[za][zb]... = expr   (leaf indices)
//   exterior_form NAME  degree R, NAME[za][zb]... = expr   (any base index)
//   connection NAME     NAME[y][z] = expr
//   leafwise_connection NAME[y][leaf] = expr
//   splitting NAME      NAME[leaf][transverse] = expr      (base variables only)
//   section NAME        NAME[y] = expr                     (base variables only)
//   transition NAME     target w1 ... wN, NAME[w] = expr, NAME[y] = expr
//
// Unassigned coefficients are zero.

#ifndef FOLICALC_DOCUMENT_H_
#define FOLICALC_DOCUMENT_H_

#include <optional>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "folicalc/chart.h"
#include "folicalc/connection.h"
#include "folicalc/errors.h"
#include "folicalc/extension.h"
#include "folicalc/forms.h"

namespace folicalc {

// Order matches the alternatives of ObjectValue.
enum class ObjectKind {
  kForm,
  kExteriorForm,
  kConnection,
  kLeafwiseConnection,
  kSplitting,
  kSection,
  kTransition,
};

std::string_view keyword(ObjectKind kind);

// A declared coordinate change. The base part, when present, covers every
// target coordinate; the fibre part, when present, covers every fibre
// coordinate.
struct Transition {
  std::optional<TransitionMap> base_map;
  std::vector<Expression> fibre_components;

  friend bool operator==(const Transition&, const Transition&) = default;
};

using ObjectValue = std::variant<LeafwiseForm, ExteriorForm, Connection, LeafwiseConnection,
                                 Splitting, BundleSection, Transition>;

struct NamedObject {
  std::string name;
  ObjectValue value;
  SourcePosition position;

  ObjectKind kind() const { return static_cast<ObjectKind>(value.index()); }

  // Positions are ignored.
  friend bool operator==(const NamedObject& a, const NamedObject& b) {
    return a.name == b.name && a.value == b.value;
  }
};

class Document {
 public:
  // Throws InputError on duplicate object names or objects on a foreign chart.
  Document(AdaptedChart chart, std::optional<BundleChart> bundle,
           std::vector<NamedObject> objects);

  const AdaptedChart& chart() const { return chart_; }
  const std::optional<BundleChart>& bundle() const { return bundle_; }
  const std::vector<NamedObject>& objects() const { return objects_; }
  const NamedObject* find(std::string_view name) const;

  // Chart coordinates, then fibre coordinates.
  VariableOrder variable_order() const;

  std::string manifold_name;
  std::string bundle_name;

  friend bool operator==(const Document&, const Document&) = default;

 private:
  AdaptedChart chart_;
  std::optional<BundleChart> bundle_;
  std::vector<NamedObject> objects_;
};

// Throws ParseError (an InputError) with the position of the offending
// token for syntax errors, undeclared names, duplicates and out-of-range
// indices.
Document parse_document(std::string_view text);

// Canonical text; parse_document(print_document(d)) == d.
std::string print_document(const Document& document);

}  // namespace folicalc

#endif  // FOLICALC_DOCUMENT_H_
