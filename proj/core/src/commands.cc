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

#include "folicalc/commands.h"

#include <algorithm>
#include <sstream>

#include "json.hpp"

namespace folicalc {

std::optional<Verb> parse_verb(std::string_view word) {
  if (word == "check") return Verb::kCheck;
  if (word == "diff") return Verb::kDiff;
  if (word == "wedge") return Verb::kWedge;
  if (word == "restrict") return Verb::kRestrict;
  if (word == "extend") return Verb::kExtend;
  if (word == "verify") return Verb::kVerify;
  return std::nullopt;
}

std::string_view verb_name(Verb verb) {
  switch (verb) {
    case Verb::kCheck: return "check";
    case Verb::kDiff: return "diff";
    case Verb::kWedge: return "wedge";
    case Verb::kRestrict: return "restrict";
    case Verb::kExtend: return "extend";
    case Verb::kVerify: return "verify";
  }
  return "";
}

bool Report::all_passed() const {
  return std::all_of(checks.begin(), checks.end(), [](const CheckResult& c) { return c.passed; });
}

std::string Report::to_text() const {
  std::ostringstream out;
  std::size_t failed = 0;
  for (const auto& c : checks) {
    out << (c.passed ? "PASS " : "FAIL ") << c.name << '\n';
    if (!c.passed) ++failed;
    std::istringstream lines(c.payload);
    for (std::string line; std::getline(lines, line);) out << "    " << line << '\n';
  }
  out << command << ": " << checks.size() << " check(s), " << failed << " failed\n";
  return out.str();
}

std::string Report::to_json() const {
  nlohmann::ordered_json j;
  j["command"] = command;
  j["checks"] = nlohmann::ordered_json::array();
  for (const auto& c : checks) {
    nlohmann::ordered_json entry;
    entry["name"] = c.name;
    entry["status"] = c.passed ? "pass" : "fail";
    entry["payload"] = c.payload;
    j["checks"].push_back(std::move(entry));
  }
  return j.dump(2) + "\n";
}

namespace {

std::string join_lines(const std::vector<std::string>& lines) {
  if (lines.empty()) return "0";
  std::string s;
  for (const auto& l : lines) {
    if (!s.empty()) s += '\n';
    s += l;
  }
  return s;
}

const NamedObject& lookup(const Document& d, const std::string& name) {
  const NamedObject* obj = d.find(name);
  if (!obj) throw InputError("unknown object '" + name + "'");
  return *obj;
}

[[noreturn]] void kind_mismatch(const NamedObject& obj, std::string_view expected) {
  throw InputError("object '" + obj.name + "' is a " + std::string(keyword(obj.kind())) +
                   ", expected " + std::string(expected));
}

void require_count(Verb verb, std::span<const std::string> names, std::size_t count) {
  if (names.size() != count) {
    throw InputError(std::string(verb_name(verb)) + " takes " + std::to_string(count) +
                     " --name argument(s), got " + std::to_string(names.size()));
  }
}

bool is_base_only(const Expression& e, const AdaptedChart& chart) {
  const auto vars = e.variables();
  return std::all_of(vars.begin(), vars.end(),
                     [&](const std::string& v) { return chart.contains(v); });
}

template <class FormT, class Diff>
bool leibniz_holds(const FormT& a, const FormT& b, Diff d) {
  const FormT lhs = d(wedge(a, b));
  FormT rhs = wedge(d(a), b);
  const FormT second = wedge(a, d(b));
  rhs = (a.degree() % 2 == 0) ? rhs + second : rhs - second;
  return lhs == rhs;
}

class Checker {
 public:
  Checker(const Document& d, std::vector<const NamedObject*> objects)
      : d_(d), objects_(std::move(objects)), order_(d.variable_order()) {}

  std::vector<CheckResult> run() {
    for (const auto* o : objects_) single(*o);
    pairs<LeafwiseForm>([](const LeafwiseForm& f) { return leafwise_differential(f); });
    pairs<ExteriorForm>([](const ExteriorForm& f) { return exterior_differential(f); });
    extensions();
    sections();
    return std::move(out_);
  }

 private:
  void add(std::string name, bool passed, std::string payload = {}) {
    out_.push_back({std::move(name), passed, std::move(payload)});
  }

  void single(const NamedObject& o) {
    if (const auto* f = std::get_if<LeafwiseForm>(&o.value)) {
      const LeafwiseForm df = leafwise_differential(*f);
      add(o.name + ": ~d(~d " + o.name + ") = 0", leafwise_differential(df).is_zero(),
          "~d " + o.name + " = " + to_string(df, order_));
      if (f->degree() == 0 && is_base_only(f->component(IndexSet{}), d_.chart())) {
        const bool foliated = is_foliated_function(f->component(IndexSet{}), d_.chart());
        add(o.name + ": foliated <=> ~d " + o.name + " = 0", foliated == df.is_zero(),
            foliated ? "foliated" : "not foliated");
      }
    } else if (const auto* w = std::get_if<ExteriorForm>(&o.value)) {
      const ExteriorForm dw = exterior_differential(*w);
      add(o.name + ": d(d " + o.name + ") = 0", exterior_differential(dw).is_zero(),
          "d " + o.name + " = " + to_string(dw, order_));
      const LeafwiseForm lhs = restrict_form(dw);
      const LeafwiseForm rhs = leafwise_differential(restrict_form(*w));
      add(o.name + ": i*(d " + o.name + ") = ~d(i* " + o.name + ")", lhs == rhs,
          "i* " + o.name + " = " + to_string(restrict_form(*w), order_));
    } else if (const auto* t = std::get_if<Transition>(&o.value)) {
      if (t->base_map) {
        add(o.name + ": adapted transition", check_adapted_transition(*t->base_map, d_.chart()));
      }
      if (!t->fibre_components.empty()) {
        add(o.name + ": foliated bundle transition",
            check_foliated_bundle_transition(t->fibre_components, *d_.bundle()));
      }
    }
  }

  template <class FormT, class Diff>
  void pairs(Diff d) {
    std::vector<const NamedObject*> forms;
    for (const auto* o : objects_)
      if (std::holds_alternative<FormT>(o->value)) forms.push_back(o);
    for (const auto* a : forms) {
      for (const auto* b : forms) {
        const auto& fa = std::get<FormT>(a->value);
        const auto& fb = std::get<FormT>(b->value);
        add("leibniz(" + a->name + ", " + b->name + ")", leibniz_holds(fa, fb, d));
        if constexpr (std::is_same_v<FormT, ExteriorForm>) {
          add("i*(" + a->name + " ^ " + b->name + ") = i*" + a->name + " ^ i*" + b->name,
              restrict_form(wedge(fa, fb)) == wedge(restrict_form(fa), restrict_form(fb)));
        }
      }
    }
  }

  void extensions() {
    std::vector<const NamedObject*> leafwise, full, splittings;
    for (const auto* o : objects_) {
      if (o->kind() == ObjectKind::kLeafwiseConnection) leafwise.push_back(o);
      if (o->kind() == ObjectKind::kConnection) full.push_back(o);
      if (o->kind() == ObjectKind::kSplitting) splittings.push_back(o);
    }
    for (const auto* s : splittings) {
      const auto& b = std::get<Splitting>(s->value);
      for (const auto* g : full) {
        const auto& gamma = std::get<Connection>(g->value);
        add("extend(restrict(" + g->name + "), " + g->name + ", " + s->name + ") = " + g->name,
            extend_connection(restrict_connection(gamma), gamma, b) == gamma);
      }
      for (const auto* a : leafwise) {
        const auto& conn = std::get<LeafwiseConnection>(a->value);
        add("restrict(extend(" + a->name + ", 0, " + s->name + ")) = " + a->name,
            verify_extension(conn, Connection(conn.chart()), b));
        for (const auto* g : full) {
          add("restrict(extend(" + a->name + ", " + g->name + ", " + s->name + ")) = " + a->name,
              verify_extension(conn, std::get<Connection>(g->value), b));
        }
      }
    }
  }

  // ∇s vanishes exactly when the leafwise jet of s is A along s.
  void sections() {
    std::vector<const NamedObject*> leafwise, sections;
    for (const auto* o : objects_) {
      if (o->kind() == ObjectKind::kLeafwiseConnection) leafwise.push_back(o);
      if (o->kind() == ObjectKind::kSection) sections.push_back(o);
    }
    for (const auto* a : leafwise) {
      const auto& conn = std::get<LeafwiseConnection>(a->value);
      for (const auto* s : sections) {
        const auto& sec = std::get<BundleSection>(s->value);
        const VerticalValuedLeafwiseForm nabla = covariant_differential(conn, sec);
        const bool contact = jet_prolongation(sec) == connection_along_section(conn, sec);
        const std::string label = "nabla_" + a->name + "(" + s->name + ")";
        add(label + " = 0 <=> j1 " + s->name + " = " + a->name + " o " + s->name,
            nabla.is_zero() == contact,
            nabla.is_zero() ? "flat" : join_lines(coefficient_lines(nabla, label)));
      }
    }
  }

  const Document& d_;
  std::vector<const NamedObject*> objects_;
  VariableOrder order_;
  std::vector<CheckResult> out_;
};

struct ExtensionArgs {
  const NamedObject* leafwise = nullptr;
  const NamedObject* reference = nullptr;
  std::vector<const NamedObject*> splittings;
};

ExtensionArgs resolve_extension_args(Verb verb, const Document& d,
                                     std::span<const std::string> names,
                                     std::size_t max_splittings) {
  ExtensionArgs args;
  std::vector<const NamedObject*> chosen;
  if (names.empty()) {
    for (const auto& o : d.objects()) chosen.push_back(&o);
  } else {
    for (const auto& n : names) chosen.push_back(&lookup(d, n));
  }
  std::vector<const NamedObject*> leafwise, full;
  for (const auto* o : chosen) {
    switch (o->kind()) {
      case ObjectKind::kLeafwiseConnection: leafwise.push_back(o); break;
      case ObjectKind::kConnection: full.push_back(o); break;
      case ObjectKind::kSplitting: args.splittings.push_back(o); break;
      default:
        if (!names.empty()) kind_mismatch(*o, "leafwise_connection, connection or splitting");
    }
  }
  const std::string verb_text(verb_name(verb));
  if (leafwise.size() != 1) {
    throw InputError(verb_text + " needs exactly one leafwise_connection, found " +
                     std::to_string(leafwise.size()));
  }
  if (full.size() > 1) {
    throw InputError(verb_text + " takes at most one connection, found " +
                     std::to_string(full.size()));
  }
  if (args.splittings.empty() || args.splittings.size() > max_splittings) {
    throw InputError(verb_text + " needs " +
                     (max_splittings == 1 ? std::string("exactly one splitting")
                                          : "one or two splittings") +
                     ", found " + std::to_string(args.splittings.size()));
  }
  args.leafwise = leafwise.front();
  if (!full.empty()) args.reference = full.front();
  return args;
}

Connection reference_of(const ExtensionArgs& args) {
  const auto& a = std::get<LeafwiseConnection>(args.leafwise->value);
  return args.reference ? std::get<Connection>(args.reference->value) : Connection(a.chart());
}

std::string reference_name(const ExtensionArgs& args) {
  return args.reference ? args.reference->name : "0";
}

Report run_extend(const Document& d, std::span<const std::string> names) {
  const ExtensionArgs args = resolve_extension_args(Verb::kExtend, d, names, 1);
  const auto& a = std::get<LeafwiseConnection>(args.leafwise->value);
  const auto& b = std::get<Splitting>(args.splittings.front()->value);
  const Connection gamma = reference_of(args);
  const Connection extended = extend_connection(a, gamma, b);
  Report r{"extend", {}};
  r.checks.push_back({"extend(" + args.leafwise->name + ", " + reference_name(args) + ", " +
                          args.splittings.front()->name + ")",
                      restrict_connection(extended) == a,
                      join_lines(coefficient_lines(extended, "Gamma'"))});
  return r;
}

Report run_verify(const Document& d, std::span<const std::string> names) {
  const ExtensionArgs args = resolve_extension_args(Verb::kVerify, d, names, 2);
  const auto& a = std::get<LeafwiseConnection>(args.leafwise->value);
  const Connection gamma = reference_of(args);
  const std::string g = reference_name(args);
  Report r{"verify", {}};
  for (const auto* s : args.splittings) {
    const auto& b = std::get<Splitting>(s->value);
    const Connection extended = extend_connection(a, gamma, b);
    r.checks.push_back({"restrict(extend(" + args.leafwise->name + ", " + g + ", " + s->name +
                            ")) = " + args.leafwise->name,
                        verify_extension(a, gamma, b),
                        join_lines(coefficient_lines(extended, "Gamma'"))});
    r.checks.push_back({"extend(restrict(" + g + "), " + g + ", " + s->name + ") = " + g,
                        extend_connection(restrict_connection(gamma), gamma, b) == gamma, ""});
  }
  if (args.splittings.size() == 2) {
    const auto& b1 = std::get<Splitting>(args.splittings[0]->value);
    const auto& b2 = std::get<Splitting>(args.splittings[1]->value);
    const ConnectionDifference delta = extension_dependence(a, gamma, b1, b2);
    const VerticalValuedLeafwiseForm q = connection_difference(a, restrict_connection(gamma));
    const std::size_t leaf = d.chart().leaf_dim();
    bool ok = true;
    for (std::size_t i = 0; i < delta.fibre_dim(); ++i) {
      for (std::size_t l = 0; l < delta.index_count(); ++l) {
        Expression expected;
        if (l >= leaf) {
          for (std::size_t al = 0; al < leaf; ++al) {
            expected -= (b1.coefficient(al, l - leaf) - b2.coefficient(al, l - leaf)) *
                        q.coefficient(i, al);
          }
        }
        ok = ok && delta.coefficient(i, l) == expected;
      }
    }
    r.checks.push_back({"extend(" + args.leafwise->name + ", " + g + ", " +
                            args.splittings[0]->name + ") - extend(" + args.leafwise->name +
                            ", " + g + ", " + args.splittings[1]->name +
                            ") = -(B1 - B2)Q on transverse indices only",
                        ok, join_lines(coefficient_lines(delta, "delta"))});
  }
  return r;
}

}  // namespace

Report run_command(Verb verb, const Document& d, std::span<const std::string> names) {
  const VariableOrder order = d.variable_order();
  Report r{std::string(verb_name(verb)), {}};
  switch (verb) {
    case Verb::kCheck: {
      std::vector<const NamedObject*> objs;
      if (names.empty()) {
        for (const auto& o : d.objects()) objs.push_back(&o);
      } else {
        for (const auto& n : names) objs.push_back(&lookup(d, n));
      }
      r.checks = Checker(d, std::move(objs)).run();
      return r;
    }
    case Verb::kDiff: {
      require_count(verb, names, 1);
      const NamedObject& o = lookup(d, names[0]);
      if (const auto* f = std::get_if<LeafwiseForm>(&o.value)) {
        r.checks.push_back({"diff " + o.name, true, to_string(leafwise_differential(*f), order)});
      } else if (const auto* w = std::get_if<ExteriorForm>(&o.value)) {
        r.checks.push_back({"diff " + o.name, true, to_string(exterior_differential(*w), order)});
      } else {
        kind_mismatch(o, "form or exterior_form");
      }
      return r;
    }
    case Verb::kWedge: {
      require_count(verb, names, 2);
      const NamedObject& a = lookup(d, names[0]);
      const NamedObject& b = lookup(d, names[1]);
      const std::string label = "wedge " + a.name + " " + b.name;
      if (a.kind() == ObjectKind::kForm) {
        if (b.kind() != ObjectKind::kForm) kind_mismatch(b, "form");
        r.checks.push_back({label, true,
                            to_string(wedge(std::get<LeafwiseForm>(a.value),
                                            std::get<LeafwiseForm>(b.value)),
                                      order)});
      } else if (a.kind() == ObjectKind::kExteriorForm) {
        if (b.kind() != ObjectKind::kExteriorForm) kind_mismatch(b, "exterior_form");
        r.checks.push_back({label, true,
                            to_string(wedge(std::get<ExteriorForm>(a.value),
                                            std::get<ExteriorForm>(b.value)),
                                      order)});
      } else {
        kind_mismatch(a, "form or exterior_form");
      }
      return r;
    }
    case Verb::kRestrict: {
      require_count(verb, names, 1);
      const NamedObject& o = lookup(d, names[0]);
      if (const auto* w = std::get_if<ExteriorForm>(&o.value)) {
        r.checks.push_back({"restrict " + o.name, true, to_string(restrict_form(*w), order)});
      } else if (const auto* g = std::get_if<Connection>(&o.value)) {
        r.checks.push_back({"restrict " + o.name, true,
                            join_lines(coefficient_lines(restrict_connection(*g), o.name))});
      } else {
        kind_mismatch(o, "exterior_form or connection");
      }
      return r;
    }
    case Verb::kExtend:
      return run_extend(d, names);
    case Verb::kVerify:
      return run_verify(d, names);
  }
  return r;
}

}  // namespace folicalc
