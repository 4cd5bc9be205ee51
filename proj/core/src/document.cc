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

#include "folicalc/document.h"

#include <algorithm>
#include <array>
#include <map>
#include <set>
#include <sstream>

#include "lexer.h"

namespace folicalc {

using detail::Token;
using detail::TokenKind;

std::string_view keyword(ObjectKind kind) {
  switch (kind) {
    case ObjectKind::kForm: return "form";
    case ObjectKind::kExteriorForm: return "exterior_form";
    case ObjectKind::kConnection: return "connection";
    case ObjectKind::kLeafwiseConnection: return "leafwise_connection";
    case ObjectKind::kSplitting: return "splitting";
    case ObjectKind::kSection: return "section";
    case ObjectKind::kTransition: return "transition";
  }
  return "object";
}

Document::Document(AdaptedChart chart, std::optional<BundleChart> bundle,
                   std::vector<NamedObject> objects)
    : chart_(std::move(chart)), bundle_(std::move(bundle)), objects_(std::move(objects)) {
  if (bundle_ && !(bundle_->base() == chart_)) {
    throw ChartMismatch("bundle is not over the document chart");
  }
  std::set<std::string> names;
  for (const auto& o : objects_) {
    if (!names.insert(o.name).second) throw InputError("duplicate object name '" + o.name + "'");
  }
}

const NamedObject* Document::find(std::string_view name) const {
  auto it = std::find_if(objects_.begin(), objects_.end(),
                         [&](const NamedObject& o) { return o.name == name; });
  return it == objects_.end() ? nullptr : &*it;
}

VariableOrder Document::variable_order() const {
  return bundle_ ? bundle_->variable_order() : chart_.variable_order();
}

namespace {

constexpr std::array<std::string_view, 6> kReservedWords = {"dim",   "leaf",   "coords",
                                                            "fibre", "degree", "target"};

bool is_reserved(std::string_view word) {
  return std::find(kReservedWords.begin(), kReservedWords.end(), word) != kReservedWords.end();
}

struct RawItem {
  Token key;
  bool assignment = false;
  std::vector<Token> indices;
  Expression value;
  Token value_start;
  std::vector<Token> identifiers;
  std::vector<Token> values;
};

struct RawBlock {
  Token kind;
  std::optional<Token> name;
  std::vector<RawItem> items;
};

std::vector<std::string_view> value_keys(std::string_view kind) {
  if (kind == "manifold") return {"dim", "leaf", "coords"};
  if (kind == "bundle") return {"fibre"};
  if (kind == "form" || kind == "exterior_form") return {"degree"};
  if (kind == "transition") return {"target"};
  return {};
}

bool known_block_kind(std::string_view kind) {
  static constexpr std::array<std::string_view, 9> kKinds = {
      "manifold",   "bundle",    "form",    "exterior_form", "connection",
      "leafwise_connection", "splitting", "section", "transition"};
  return std::find(kKinds.begin(), kKinds.end(), kind) != kKinds.end();
}

class SyntaxParser {
 public:
  explicit SyntaxParser(std::string_view text)
      : tokens_(detail::tokenize(text)), expressions_(tokens_) {}

  std::vector<RawBlock> parse() {
    std::vector<RawBlock> blocks;
    while (!tokens_.at(TokenKind::kEnd)) blocks.push_back(parse_block());
    if (blocks.empty()) tokens_.fail(tokens_.peek(), "empty document: expected a manifold block");
    return blocks;
  }

 private:
  RawBlock parse_block() {
    RawBlock block;
    block.kind = tokens_.expect(TokenKind::kIdentifier, "block kind");
    if (!known_block_kind(block.kind.text)) {
      tokens_.fail(block.kind, "unknown block kind '" + block.kind.text + "'");
    }
    if (tokens_.at(TokenKind::kIdentifier)) block.name = tokens_.next();
    tokens_.expect(TokenKind::kLBrace, "'{'");
    const auto keys = value_keys(block.kind.text);
    while (!tokens_.accept(TokenKind::kRBrace)) {
      block.items.push_back(parse_item(keys));
    }
    return block;
  }

  RawItem parse_item(const std::vector<std::string_view>& keys) {
    RawItem item;
    item.key = tokens_.expect(TokenKind::kIdentifier, "item key or '}'");
    if (tokens_.at(TokenKind::kLBracket) || tokens_.at(TokenKind::kEquals)) {
      item.assignment = true;
      while (tokens_.accept(TokenKind::kLBracket)) {
        item.indices.push_back(tokens_.expect(TokenKind::kIdentifier, "index name"));
        tokens_.expect(TokenKind::kRBracket, "']'");
      }
      tokens_.expect(TokenKind::kEquals, "'='");
      item.value_start = tokens_.peek();
      item.value = expressions_.parse_expr();
      item.identifiers = expressions_.take_identifiers();
      return item;
    }
    while (is_value_token(keys)) item.values.push_back(tokens_.next());
    if (item.values.empty()) {
      tokens_.fail(tokens_.peek(), "expected '[', '=' or a value after '" + item.key.text +
                                       "' but found " + detail::describe(tokens_.peek()));
    }
    return item;
  }

  bool is_value_token(const std::vector<std::string_view>& keys) const {
    const Token& t = tokens_.peek();
    if (t.kind == TokenKind::kInteger) return true;
    if (t.kind != TokenKind::kIdentifier) return false;
    if (std::find(keys.begin(), keys.end(), t.text) != keys.end()) return false;
    const TokenKind after = tokens_.peek(1).kind;
    return after != TokenKind::kLBracket && after != TokenKind::kEquals;
  }

  detail::TokenStream tokens_;
  detail::ExpressionParser expressions_;
};

[[noreturn]] void fail_at(const Token& t, const std::string& message) {
  throw ParseError(t.position, message);
}

// Which variables a coefficient may mention.
enum class Scope { kBase, kBaseAndFibre };

class SemanticBuilder {
 public:
  Document build(std::vector<RawBlock> blocks) {
    const RawBlock* manifold = nullptr;
    const RawBlock* bundle = nullptr;
    for (const auto& b : blocks) {
      if (b.kind.text == "manifold") {
        if (manifold) fail_at(b.kind, "second manifold block");
        manifold = &b;
      } else if (b.kind.text == "bundle") {
        if (bundle) fail_at(b.kind, "second bundle block");
        bundle = &b;
      }
    }
    if (!manifold) fail_at(blocks.front().kind, "document has no manifold block");
    build_chart(*manifold);
    if (bundle) build_bundle(*bundle);

    std::vector<NamedObject> objects;
    std::set<std::string> names;
    for (const auto& b : blocks) {
      if (b.kind.text == "manifold" || b.kind.text == "bundle") continue;
      if (!b.name) fail_at(b.kind, std::string(b.kind.text) + " block needs a name");
      if (!names.insert(b.name->text).second) {
        fail_at(*b.name, "duplicate object name '" + b.name->text + "'");
      }
      objects.push_back(build_object(b));
    }
    Document d(*chart_, bundle_, std::move(objects));
    if (manifold->name) d.manifold_name = manifold->name->text;
    if (bundle && bundle->name) d.bundle_name = bundle->name->text;
    return d;
  }

 private:
  // Values keyed by item name, each checked for duplicates and unknown keys.
  std::map<std::string, const RawItem*> value_items(const RawBlock& b) {
    std::map<std::string, const RawItem*> out;
    const auto keys = value_keys(b.kind.text);
    for (const auto& item : b.items) {
      if (item.assignment) continue;
      if (std::find(keys.begin(), keys.end(), item.key.text) == keys.end()) {
        fail_at(item.key, "unknown key '" + item.key.text + "' in " + b.kind.text + " block");
      }
      if (!out.emplace(item.key.text, &item).second) {
        fail_at(item.key, "duplicate key '" + item.key.text + "'");
      }
    }
    return out;
  }

  static std::size_t single_natural(const RawItem& item) {
    if (item.values.size() != 1 || item.values[0].kind != TokenKind::kInteger) {
      fail_at(item.key, "'" + item.key.text + "' takes one natural number");
    }
    const std::string& text = item.values[0].text;
    if (text.size() > 6) fail_at(item.values[0], "number too large");
    return std::stoul(text);
  }

  static std::vector<std::string> name_list(const RawItem& item) {
    std::vector<std::string> names;
    std::set<std::string> seen;
    for (const auto& v : item.values) {
      if (v.kind != TokenKind::kIdentifier) fail_at(v, "expected a coordinate name");
      if (is_reserved(v.text)) fail_at(v, "'" + v.text + "' is a reserved word");
      if (!seen.insert(v.text).second) fail_at(v, "duplicate coordinate '" + v.text + "'");
      names.push_back(v.text);
    }
    return names;
  }

  static void no_assignments(const RawBlock& b) {
    for (const auto& item : b.items) {
      if (item.assignment) fail_at(item.key, "assignments are not allowed in " + b.kind.text);
    }
  }

  void build_chart(const RawBlock& b) {
    no_assignments(b);
    auto items = value_items(b);
    for (const char* k : {"dim", "leaf", "coords"}) {
      if (!items.count(k)) fail_at(b.kind, std::string("manifold block lacks '") + k + "'");
    }
    const std::size_t dim = single_natural(*items["dim"]);
    const std::size_t leaf = single_natural(*items["leaf"]);
    auto coords = name_list(*items["coords"]);
    if (coords.size() != dim) {
      fail_at(items["coords"]->key, "dim " + std::to_string(dim) + " but " +
                                        std::to_string(coords.size()) + " coordinates");
    }
    if (leaf < 1 || leaf > dim) fail_at(items["leaf"]->key, "leaf must be between 1 and dim");
    std::vector<std::string> leaf_names(coords.begin(), coords.begin() + leaf);
    std::vector<std::string> transverse(coords.begin() + leaf, coords.end());
    try {
      chart_.emplace(std::move(leaf_names), std::move(transverse));
    } catch (const InputError& e) {
      fail_at(b.kind, e.what());
    }
  }

  void build_bundle(const RawBlock& b) {
    no_assignments(b);
    auto items = value_items(b);
    if (!items.count("fibre")) fail_at(b.kind, "bundle block lacks 'fibre'");
    auto fibre = name_list(*items["fibre"]);
    for (const auto& v : items["fibre"]->values) {
      if (chart_->contains(v.text)) fail_at(v, "fibre coordinate '" + v.text + "' is a base name");
    }
    try {
      bundle_.emplace(*chart_, std::move(fibre));
    } catch (const InputError& e) {
      fail_at(b.kind, e.what());
    }
  }

  const BundleChart& require_bundle(const RawBlock& b) const {
    if (!bundle_) fail_at(b.kind, b.kind.text + " requires a bundle block");
    return *bundle_;
  }

  void check_variables(const RawItem& item, Scope scope) const {
    for (const auto& id : item.identifiers) {
      if (chart_->contains(id.text)) continue;
      const bool fibre = bundle_ && bundle_->is_fibre_variable(id.text);
      if (fibre && scope == Scope::kBaseAndFibre) continue;
      if (fibre) fail_at(id, "fibre variable '" + id.text + "' not allowed here");
      fail_at(id, "undeclared variable '" + id.text + "'");
    }
  }

  std::size_t base_index(const Token& t) const {
    auto i = chart_->index_of(t.text);
    if (!i) fail_at(t, "undeclared coordinate '" + t.text + "'");
    return *i;
  }

  std::size_t leaf_index(const Token& t) const {
    const std::size_t i = base_index(t);
    if (!chart_->is_leaf_index(i)) {
      fail_at(t, "index '" + t.text + "' out of range: expected a leaf coordinate");
    }
    return i;
  }

  std::size_t transverse_index(const Token& t) const {
    const std::size_t i = base_index(t);
    if (chart_->is_leaf_index(i)) {
      fail_at(t, "index '" + t.text + "' out of range: expected a transverse coordinate");
    }
    return i - chart_->leaf_dim();
  }

  std::size_t fibre_index(const Token& t) const {
    auto i = bundle_->fibre_index_of(t.text);
    if (!i) {
      if (chart_->contains(t.text)) {
        fail_at(t, "index '" + t.text + "' out of range: expected a fibre coordinate");
      }
      fail_at(t, "undeclared fibre coordinate '" + t.text + "'");
    }
    return *i;
  }

  static void check_key(const RawBlock& b, const RawItem& item, std::size_t index_count) {
    if (item.key.text != b.name->text) {
      fail_at(item.key, "coefficient key '" + item.key.text + "' does not match object name '" +
                            b.name->text + "'");
    }
    if (item.indices.size() != index_count) {
      fail_at(item.key, "expected " + std::to_string(index_count) + " index(es) but found " +
                            std::to_string(item.indices.size()));
    }
  }

  template <class FormT>
  FormT build_form(const RawBlock& b, bool leafwise) {
    auto values = value_items(b);
    std::optional<std::size_t> degree;
    if (values.count("degree")) degree = single_natural(*values["degree"]);
    const std::size_t limit = leafwise ? chart_->leaf_dim() : chart_->dim();
    if (degree && *degree > limit) {
      fail_at(values["degree"]->values[0], "degree exceeds " + std::to_string(limit));
    }
    typename FormT::Components components;
    const Scope scope = bundle_ ? Scope::kBaseAndFibre : Scope::kBase;
    for (const auto& item : b.items) {
      if (!item.assignment) continue;
      if (!degree) degree = item.indices.size();
      check_key(b, item, *degree);
      std::vector<std::size_t> idx;
      for (const auto& t : item.indices) idx.push_back(leafwise ? leaf_index(t) : base_index(t));
      IndexSet set;
      int sign = 1;
      for (std::size_t k = 0; k < idx.size(); ++k) {
        if (set.contains(idx[k])) fail_at(item.indices[k], "repeated index '" + item.indices[k].text + "'");
        if ((set.size() - set.count_below(idx[k])) % 2 == 1) sign = -sign;
        set = set.with(idx[k]);
      }
      check_variables(item, scope);
      if (components.count(set)) fail_at(item.key, "duplicate assignment");
      components.emplace(set, sign > 0 ? item.value : -item.value);
    }
    return FormT(*chart_, degree.value_or(0), std::move(components));
  }

  template <class TableT>
  TableT build_fibred(const RawBlock& b, bool leaf_only) {
    const BundleChart& bundle = require_bundle(b);
    no_values(b);
    CoefficientTable table(bundle.fibre_dim(), leaf_only ? chart_->leaf_dim() : chart_->dim());
    std::set<std::pair<std::size_t, std::size_t>> seen;
    for (const auto& item : b.items) {
      check_key(b, item, 2);
      const std::size_t i = fibre_index(item.indices[0]);
      const std::size_t j = leaf_only ? leaf_index(item.indices[1]) : base_index(item.indices[1]);
      check_variables(item, Scope::kBaseAndFibre);
      if (!seen.emplace(i, j).second) fail_at(item.key, "duplicate assignment");
      table.set(i, j, item.value);
    }
    return TableT(bundle, std::move(table));
  }

  Splitting build_splitting(const RawBlock& b) {
    no_values(b);
    CoefficientTable table(chart_->leaf_dim(), chart_->transverse_dim());
    std::set<std::pair<std::size_t, std::size_t>> seen;
    for (const auto& item : b.items) {
      check_key(b, item, 2);
      const std::size_t a = leaf_index(item.indices[0]);
      const std::size_t t = transverse_index(item.indices[1]);
      check_variables(item, Scope::kBase);
      if (!seen.emplace(a, t).second) fail_at(item.key, "duplicate assignment");
      table.set(a, t, item.value);
    }
    return Splitting(*chart_, std::move(table));
  }

  BundleSection build_section(const RawBlock& b) {
    const BundleChart& bundle = require_bundle(b);
    no_values(b);
    std::vector<Expression> comps(bundle.fibre_dim());
    std::set<std::size_t> seen;
    for (const auto& item : b.items) {
      check_key(b, item, 1);
      const std::size_t i = fibre_index(item.indices[0]);
      check_variables(item, Scope::kBase);
      if (!seen.insert(i).second) fail_at(item.key, "duplicate assignment");
      comps[i] = item.value;
    }
    return BundleSection(bundle, std::move(comps));
  }

  Transition build_transition(const RawBlock& b) {
    auto values = value_items(b);
    AdaptedChart target = *chart_;
    if (values.count("target")) {
      auto names = name_list(*values["target"]);
      if (names.size() != chart_->dim()) {
        fail_at(values["target"]->key, "target needs " + std::to_string(chart_->dim()) + " names");
      }
      for (const auto& v : values["target"]->values) {
        if (bundle_ && bundle_->is_fibre_variable(v.text)) {
          fail_at(v, "target name '" + v.text + "' clashes with a fibre coordinate");
        }
      }
      try {
        target = AdaptedChart(
            std::vector<std::string>(names.begin(), names.begin() + chart_->leaf_dim()),
            std::vector<std::string>(names.begin() + chart_->leaf_dim(), names.end()));
      } catch (const InputError& e) {
        fail_at(values["target"]->key, e.what());
      }
    }
    std::vector<std::optional<Expression>> base(chart_->dim());
    std::vector<std::optional<Expression>> fibre(bundle_ ? bundle_->fibre_dim() : 0);
    const RawItem* first_base = nullptr;
    const RawItem* first_fibre = nullptr;
    for (const auto& item : b.items) {
      if (!item.assignment) continue;
      check_key(b, item, 1);
      const Token& t = item.indices[0];
      if (auto i = target.index_of(t.text)) {
        check_variables(item, Scope::kBase);
        if (base[*i]) fail_at(item.key, "duplicate assignment");
        base[*i] = item.value;
        if (!first_base) first_base = &item;
      } else if (bundle_ && bundle_->is_fibre_variable(t.text)) {
        check_variables(item, Scope::kBaseAndFibre);
        const std::size_t i = *bundle_->fibre_index_of(t.text);
        if (fibre[i]) fail_at(item.key, "duplicate assignment");
        fibre[i] = item.value;
        if (!first_fibre) first_fibre = &item;
      } else {
        fail_at(t, "undeclared target coordinate '" + t.text + "'");
      }
    }
    Transition out;
    if (first_base) {
      std::vector<Expression> comps;
      for (std::size_t i = 0; i < base.size(); ++i) {
        if (!base[i]) fail_at(first_base->key, "missing component for '" + target.coord(i) + "'");
        comps.push_back(*base[i]);
      }
      out.base_map = TransitionMap(target, std::move(comps));
    } else if (values.count("target")) {
      fail_at(values["target"]->key, "target given without base components");
    }
    if (first_fibre) {
      for (std::size_t i = 0; i < fibre.size(); ++i) {
        if (!fibre[i]) {
          fail_at(first_fibre->key, "missing component for '" + bundle_->fibre_coord(i) + "'");
        }
        out.fibre_components.push_back(*fibre[i]);
      }
    }
    return out;
  }

  static void no_values(const RawBlock& b) {
    for (const auto& item : b.items) {
      if (!item.assignment) {
        fail_at(item.key, "unknown key '" + item.key.text + "' in " + b.kind.text + " block");
      }
    }
  }

  NamedObject build_object(const RawBlock& b) {
    const std::string& kind = b.kind.text;
    NamedObject obj{b.name->text, Transition{}, b.kind.position};
    if (kind == "form") {
      obj.value = build_form<LeafwiseForm>(b, true);
    } else if (kind == "exterior_form") {
      obj.value = build_form<ExteriorForm>(b, false);
    } else if (kind == "connection") {
      obj.value = build_fibred<Connection>(b, false);
    } else if (kind == "leafwise_connection") {
      obj.value = build_fibred<LeafwiseConnection>(b, true);
    } else if (kind == "splitting") {
      obj.value = build_splitting(b);
    } else if (kind == "section") {
      obj.value = build_section(b);
    } else {
      obj.value = build_transition(b);
    }
    return obj;
  }

  std::optional<AdaptedChart> chart_;
  std::optional<BundleChart> bundle_;
};

// Printing.

void print_names(std::ostringstream& out, const char* key, std::span<const std::string> names) {
  out << "  " << key;
  for (const auto& n : names) out << ' ' << n;
  out << '\n';
}

template <FormSpace Space>
void print_form(std::ostringstream& out, const std::string& name, const Form<Space>& form,
                const VariableOrder& order) {
  out << "  degree " << form.degree() << '\n';
  for (const auto& [index, coeff] : form.components()) {
    out << "  " << name;
    for (std::size_t i : index.indices()) out << '[' << form.chart().coord(i) << ']';
    out << " = " << to_string(coeff, order) << '\n';
  }
}

template <class Tag>
void print_fibred(std::ostringstream& out, const std::string& name, const FibredTable<Tag>& t) {
  for (const auto& line : coefficient_lines(t, name)) out << "  " << line << '\n';
}

}  // namespace

Document parse_document(std::string_view text) {
  SyntaxParser syntax(text);
  auto blocks = syntax.parse();
  return SemanticBuilder().build(std::move(blocks));
}

std::string print_document(const Document& d) {
  std::ostringstream out;
  const VariableOrder order = d.variable_order();
  out << "manifold";
  if (!d.manifold_name.empty()) out << ' ' << d.manifold_name;
  out << " {\n  dim " << d.chart().dim() << "\n  leaf " << d.chart().leaf_dim() << '\n';
  print_names(out, "coords", d.chart().coords());
  out << "}\n";
  if (d.bundle()) {
    out << "\nbundle";
    if (!d.bundle_name.empty()) out << ' ' << d.bundle_name;
    out << " {\n";
    print_names(out, "fibre", d.bundle()->fibre_coords());
    out << "}\n";
  }
  for (const auto& obj : d.objects()) {
    out << '\n' << keyword(obj.kind()) << ' ' << obj.name << " {\n";
    std::visit(
        [&](const auto& v) {
          using T = std::decay_t<decltype(v)>;
          if constexpr (std::is_same_v<T, LeafwiseForm> || std::is_same_v<T, ExteriorForm>) {
            print_form(out, obj.name, v, order);
          } else if constexpr (std::is_same_v<T, Splitting>) {
            for (std::size_t a = 0; a < d.chart().leaf_dim(); ++a) {
              for (std::size_t t = 0; t < d.chart().transverse_dim(); ++t) {
                const Expression& e = v.coefficient(a, t);
                if (e.is_zero()) continue;
                out << "  " << obj.name << '[' << d.chart().coord(a) << "]["
                    << d.chart().coord(d.chart().leaf_dim() + t) << "] = " << to_string(e, order)
                    << '\n';
              }
            }
          } else if constexpr (std::is_same_v<T, BundleSection>) {
            for (std::size_t i = 0; i < v.components().size(); ++i) {
              if (v.component(i).is_zero()) continue;
              out << "  " << obj.name << '[' << v.chart().fibre_coord(i)
                  << "] = " << to_string(v.component(i), order) << '\n';
            }
          } else if constexpr (std::is_same_v<T, Transition>) {
            if (v.base_map) {
              print_names(out, "target", v.base_map->target.coords());
              for (std::size_t i = 0; i < v.base_map->components.size(); ++i) {
                out << "  " << obj.name << '[' << v.base_map->target.coord(i)
                    << "] = " << to_string(v.base_map->components[i], order) << '\n';
              }
            }
            for (std::size_t i = 0; i < v.fibre_components.size(); ++i) {
              out << "  " << obj.name << '[' << d.bundle()->fibre_coord(i)
                  << "] = " << to_string(v.fibre_components[i], order) << '\n';
            }
          } else {
            print_fibred(out, obj.name, v);
          }
        },
        obj.value);
    out << "}\n";
  }
  return out.str();
}

}  // namespace folicalc
