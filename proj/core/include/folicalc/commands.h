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

#ifndef FOLICALC_COMMANDS_H_
#define FOLICALC_COMMANDS_H_

#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "folicalc/document.h"

namespace folicalc {

enum class Verb { kCheck, kDiff, kWedge, kRestrict, kExtend, kVerify };

std::optional<Verb> parse_verb(std::string_view word);
std::string_view verb_name(Verb verb);

struct CheckResult {
  std::string name;
  bool passed = false;
  // Canonical text of whatever was computed; may span several lines.
  std::string payload;
};

struct Report {
  std::string command;
  std::vector<CheckResult> checks;

  bool all_passed() const;
  // One "PASS name" / "FAIL name" line per check, payload lines indented.
  std::string to_text() const;
  // {"command": ..., "checks": [{"name": ..., "status": "pass"|"fail", "payload": ...}]}
  std::string to_json() const;
};

// Runs `verb` on the named objects of `document`.
//
//   check     invariant suite on every object (or on the named ones)
//   diff      differential of one form
//   wedge     product of two forms
//   restrict  i* of an exterior form, or the leafwise part of a connection
//   extend    extension of (leafwise connection, [connection], splitting)
//   verify    round-trip checks of the extension; with two splittings also
//             the shape of their difference
//
// For extend and verify, omitted names are resolved by kind when the
// document holds exactly one candidate. Throws InputError for unknown
// names, wrong kinds or wrong argument counts.
Report run_command(Verb verb, const Document& document, std::span<const std::string> names);

}  // namespace folicalc

#endif  // FOLICALC_COMMANDS_H_
