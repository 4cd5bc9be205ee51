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

// Acceptance suite. Prints one PASS/FAIL line per criterion and exits
// nonzero if any criterion fails. Every comparison is exact.

#include <algorithm>
#include <chrono>
#include <exception>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iostream>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "folicalc/commands.h"
#include "folicalc/document.h"
#include "folicalc/errors.h"
#include "folicalc/extension.h"
#include "folicalc/forms.h"
#include "generators.h"
#include "oracles.h"

namespace {

using namespace folicalc;  // NOLINT
using testing::Generator;

constexpr int kTrials = 1000;

// Outcome of one criterion: pass/fail plus a short note for the log line.
struct Outcome {
  bool passed = true;
  std::string note;

  void fail(const std::string& why) {
    if (passed) note = why;
    passed = false;
  }
};

int failures = 0;

void report(const char* id, const char* title, const std::function<Outcome()>& body) {
  const auto start = std::chrono::steady_clock::now();
  Outcome out;
  try {
    out = body();
  } catch (const std::exception& e) {
    out.fail(std::string("exception: ") + e.what());
  }
  const auto ms = std::chrono::duration_cast<std::chrono::milliseconds>(
                      std::chrono::steady_clock::now() - start)
                      .count();
  if (!out.passed) ++failures;
  std::cout << (out.passed ? "PASS " : "FAIL ") << id << " " << title << " (" << out.note
            << ", " << ms << " ms)" << std::endl;
}

std::size_t pick(Generator& g, std::size_t lo, std::size_t hi) {
  return static_cast<std::size_t>(g.uniform(static_cast<int>(lo), static_cast<int>(hi)));
}

std::string read_file(const std::filesystem::path& p) {
  std::ifstream in(p, std::ios::binary);
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

Outcome leafwise_complex() {
  Outcome out;
  Generator g(1001);
  for (int trial = 0; trial < kTrials; ++trial) {
    const AdaptedChart c = g.chart(1, 4, 5);
    const std::size_t r = static_cast<std::size_t>(trial) % (c.leaf_dim() + 1);
    const LeafwiseForm phi = g.leafwise_form(c, r, c.coords(), 3);
    const LeafwiseForm d = leafwise_differential(phi);
    if (!leafwise_differential(d).is_zero()) out.fail("d~d~ != 0 on " + to_string(phi));
    if (!(d == testing::tensor_leafwise_differential(phi)))
      out.fail("d~ disagrees with the antisymmetric-tensor oracle on " + to_string(phi));
  }
  if (out.passed) out.note = std::to_string(kTrials) + " forms, all degrees";
  return out;
}

Outcome commutation() {
  Outcome out;
  Generator g(1002);
  for (int trial = 0; trial < kTrials; ++trial) {
    const AdaptedChart c = g.chart(1, 4, 5);
    const std::size_t r = static_cast<std::size_t>(trial) % (c.dim() + 1);
    const ExteriorForm w = g.exterior_form(c, r, c.coords(), 3);
    if (!(restrict_form(exterior_differential(w)) == leafwise_differential(restrict_form(w))))
      out.fail("i*d != d~i* on " + to_string(w));
  }
  if (out.passed) out.note = std::to_string(kTrials) + " exterior forms";
  return out;
}

Outcome round_trip() {
  Outcome out;
  Generator g(1003);
  for (int trial = 0; trial < kTrials; ++trial) {
    const BundleChart chart = g.bundle(g.chart(1, 4, 5), 3);
    const LeafwiseConnection a = g.leafwise_connection(chart, 2);
    const Connection gamma = g.connection(chart, 2);
    const Splitting b = g.splitting(chart.base(), 2);
    const Connection ext = extend_connection(a, gamma, b);
    if (!(restrict_connection(ext) == a)) out.fail("restrict(extend(A, G, B)) != A");
    if (!verify_extension(a, gamma, b)) out.fail("verify_extension returned false");
    if (!(extend_connection(restrict_connection(gamma), gamma, b) == gamma))
      out.fail("extend(restrict(G), G, B) != G");
    if (!(ext.coefficients() == testing::closed_form_extension(a, gamma, b)))
      out.fail("extension disagrees with the closed-form oracle");
  }
  if (out.passed) out.note = std::to_string(kTrials) + " triples";
  return out;
}

Outcome non_uniqueness() {
  Outcome out;
  Generator g(1004);
  int differing = 0;
  for (int trial = 0; trial < kTrials; ++trial) {
    const BundleChart chart = g.bundle(g.chart(1, 4, 5), 3);
    const LeafwiseConnection a = g.leafwise_connection(chart, 2);
    const Connection gamma = g.connection(chart, 2);
    const Splitting b1 = g.splitting(chart.base(), 2);
    const Splitting b2 = g.splitting(chart.base(), 2);
    const ConnectionDifference d = connection_difference(extend_connection(a, gamma, b1),
                                                         extend_connection(a, gamma, b2));
    const ConnectionDifference reported = extension_dependence(a, gamma, b1, b2);
    if (!(d == reported)) out.fail("extension_dependence disagrees with the direct difference");
    const std::size_t leaf = chart.base().leaf_dim();
    for (std::size_t i = 0; i < chart.fibre_dim(); ++i) {
      for (std::size_t l = 0; l < chart.base().dim(); ++l) {
        Expression expected;
        for (std::size_t al = 0; l >= leaf && al < leaf; ++al) {
          // Q^i_α = A^i_α - Γ^i_α, taken straight from the tables.
          expected -= (b1.coefficient(al, l - leaf) - b2.coefficient(al, l - leaf)) *
                      (a.coefficient(i, al) - gamma.coefficient(i, al));
        }
        if (!(d.coefficient(i, l) == expected)) out.fail("difference has the wrong shape");
      }
    }
    if (!d.is_zero()) ++differing;
  }
  if (out.passed)
    out.note = std::to_string(kTrials) + " quadruples, " + std::to_string(differing) +
               " with distinct extensions";
  return out;
}

Outcome leibniz_and_foliated() {
  Outcome out;
  Generator g(1005);
  for (int trial = 0; trial < kTrials; ++trial) {
    const AdaptedChart c = g.chart(1, 4, 5);
    const std::size_t p = pick(g, 0, c.leaf_dim());
    const std::size_t q = pick(g, 0, c.leaf_dim());
    const LeafwiseForm a = g.leafwise_form(c, p, c.coords(), 2);
    const LeafwiseForm b = g.leafwise_form(c, q, c.coords(), 2);
    const LeafwiseForm second = wedge(a, leafwise_differential(b));
    const LeafwiseForm rhs = p % 2 == 0 ? wedge(leafwise_differential(a), b) + second
                                        : wedge(leafwise_differential(a), b) - second;
    if (!(leafwise_differential(wedge(a, b)) == rhs)) out.fail("leafwise Leibniz fails");

    const std::size_t ep = pick(g, 0, std::min<std::size_t>(c.dim(), 3));
    const std::size_t eq = pick(g, 0, std::min<std::size_t>(c.dim(), 2));
    const ExteriorForm x = g.exterior_form(c, ep, c.coords(), 2);
    const ExteriorForm y = g.exterior_form(c, eq, c.coords(), 2);
    const ExteriorForm esecond = wedge(x, exterior_differential(y));
    const ExteriorForm erhs = ep % 2 == 0 ? wedge(exterior_differential(x), y) + esecond
                                          : wedge(exterior_differential(x), y) - esecond;
    if (!(exterior_differential(wedge(x, y)) == erhs)) out.fail("exterior Leibniz fails");
  }
  int foliated = 0;
  for (int trial = 0; trial < kTrials; ++trial) {
    const AdaptedChart c = g.chart(1, 4, 5);
    const std::vector<std::string> transverse(c.transverse_coords().begin(),
                                              c.transverse_coords().end());
    const Expression f = g.polynomial(trial % 2 ? transverse : c.coords(), 3);
    const bool is_foliated = is_foliated_function(f, c);
    foliated += is_foliated ? 1 : 0;
    if (is_foliated != leafwise_differential(LeafwiseForm::scalar(c, f)).is_zero())
      out.fail("foliated <=> d~f = 0 fails on " + to_string(f));
  }
  if (out.passed)
    out.note = std::to_string(kTrials) + " pairs, " + std::to_string(kTrials) + " functions (" +
               std::to_string(foliated) + " foliated)";
  return out;
}

Outcome flat_sections() {
  Outcome out;
  Generator g(1006);
  for (int trial = 0; trial < kTrials; ++trial) {
    const BundleChart chart = g.bundle(g.chart(1, 4, 5), 3);
    const BundleSection s = g.section(chart, 3);
    // A^i_α := ∂_α s^i, computed directly from the components.
    CoefficientTable t(chart.fibre_dim(), chart.base().leaf_dim());
    for (std::size_t i = 0; i < t.rows(); ++i)
      for (std::size_t al = 0; al < t.cols(); ++al)
        t.set(i, al, partial(s.component(i), chart.base().coord(al)));
    if (!covariant_differential(LeafwiseConnection(chart, t), s).is_zero())
      out.fail("covariant differential of a flat section is nonzero");
    const std::size_t i = pick(g, 0, t.rows() - 1);
    const std::size_t al = pick(g, 0, t.cols() - 1);
    t.set(i, al, t.at(i, al) + Expression(1));
    if (covariant_differential(LeafwiseConnection(chart, t), s).is_zero())
      out.fail("perturbed connection still has s flat");
  }
  if (out.passed) out.note = std::to_string(kTrials) + " sections, flat then perturbed";
  return out;
}

Outcome worked_example() {
  Outcome out;
  const AdaptedChart base({"z1", "z2"}, {"z3"});
  const BundleChart chart(base, {"u"});
  CoefficientTable a(1, 2);
  a.set(0, 0, Expression::variable("u"));
  CoefficientTable b(2, 1);
  b.set(0, 0, Expression::variable("z2"));
  const Connection ext =
      extend_connection(LeafwiseConnection(chart, a), Connection(chart), Splitting(base, b));
  // Γ'^u_z1 = u, Γ'^u_z3 = 0 - z2 (u - 0), everything else zero.
  CoefficientTable expected(1, 3);
  expected.set(0, 0, Expression::variable("u"));
  expected.set(0, 2, -(Expression::variable("z2") * Expression::variable("u")));
  if (!(ext.coefficients() == expected)) out.fail("extension coefficients differ");

  const Document doc =
      parse_document(read_file(std::filesystem::path(FOLICALC_SAMPLES_DIR) / "worked_extension.fol"));
  const Report r = run_command(Verb::kVerify, doc, {});
  if (!r.all_passed()) out.fail("verify reports a failure");
  if (r.checks.empty() || r.checks.front().payload != "Gamma'[u][z1] = u\nGamma'[u][z3] = -z2*u")
    out.fail("printed extension differs");
  if (out.passed) out.note = "Gamma'[u][z3] = -z2*u";
  return out;
}

Outcome parser() {
  Outcome out;
  int samples = 0;
  for (const auto& entry : std::filesystem::directory_iterator(FOLICALC_SAMPLES_DIR)) {
    if (entry.path().extension() != ".fol") continue;
    ++samples;
    const Document d = parse_document(read_file(entry.path()));
    const std::string printed = print_document(d);
    const Document again = parse_document(printed);
    if (!(again == d)) out.fail("parse(print(d)) != d for " + entry.path().filename().string());
    if (print_document(again) != printed)
      out.fail("print is not idempotent for " + entry.path().filename().string());
  }
  if (samples == 0) out.fail("no sample documents found");

  // Half raw bytes, half bytes drawn from the DSL's own vocabulary so that
  // the fuzz reaches past the lexer.
  static const std::vector<std::string> kPieces = {
      "manifold", "bundle", "form", "exterior_form", "connection", "leafwise_connection",
      "splitting", "section", "transition", "dim", "leaf", "coords", "fibre", "degree",
      "target", "{", "}", "[", "]", "=", "+", "-", "*", "/", "^", "(", ")", "#", "\n", " ",
      "z1", "z2", "z3", "u", "A", "0", "1", "2", "3", "64", "999999999999"};
  std::mt19937_64 rng(1008);
  constexpr int kFuzz = 100000;
  int documents = 0, diagnostics = 0;
  for (int trial = 0; trial < kFuzz; ++trial) {
    const std::size_t len = std::uniform_int_distribution<std::size_t>(0, 1024)(rng);
    std::string text;
    if (trial % 2 == 0) {
      text.resize(len);
      for (auto& ch : text) ch = static_cast<char>(std::uniform_int_distribution<int>(0, 255)(rng));
    } else {
      if (trial % 4 == 1) text = "manifold { dim 3 leaf 2 coords z1 z2 z3 } bundle { fibre u } ";
      while (text.size() < len) {
        text += kPieces[std::uniform_int_distribution<std::size_t>(0, kPieces.size() - 1)(rng)];
        text += ' ';
      }
      text.resize(len);
    }
    try {
      parse_document(text);
      ++documents;
    } catch (const ParseError& e) {
      if (e.position().line < 1 || e.position().column < 1) out.fail("diagnostic without position");
      ++diagnostics;
    } catch (const std::exception& e) {
      out.fail(std::string("unpositioned exception: ") + e.what());
    }
  }
  if (out.passed)
    out.note = std::to_string(samples) + " samples round-trip; " + std::to_string(kFuzz) +
               " fuzz inputs: " + std::to_string(documents) + " documents, " +
               std::to_string(diagnostics) + " positioned diagnostics";
  return out;
}

}  // namespace

int main() {
  report("AC1", "leafwise complex d~(d~phi) = 0", leafwise_complex);
  report("AC2", "i*(d w) = d~(i* w)", commutation);
  report("AC3", "extension round trip and reference coherence", round_trip);
  report("AC4", "non-uniqueness shape of extensions", non_uniqueness);
  report("AC5", "graded Leibniz and foliated <=> d~f = 0", leibniz_and_foliated);
  report("AC6", "flat-section oracle", flat_sections);
  report("AC7", "worked extension example", worked_example);
  report("AC8", "parser round trip and fuzz totality", parser);
  std::cout << (failures == 0 ? "all acceptance criteria passed" : "acceptance criteria failed: " +
                                                                       std::to_string(failures))
            << std::endl;
  return failures == 0 ? 0 : 1;
}
