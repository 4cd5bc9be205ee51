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

// folicalc <verb> <file> [--name X --name Y ...] [--json]
//
// Exit status: 0 when every check passes, 1 when one fails, 2 on input
// errors (unreadable file, syntax, unknown names, kind mismatches).

#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "folicalc/commands.h"
#include "folicalc/document.h"

namespace {

constexpr int kExitPass = 0;
constexpr int kExitFail = 1;
constexpr int kExitInput = 2;

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Symbolic leafwise calculus on foliated manifolds and fibre bundles"};
  std::string verb_text;
  std::string path;
  std::vector<std::string> names;
  bool json = false;
  app.add_option("verb", verb_text, "check | diff | wedge | restrict | extend | verify")
      ->required()
      ->check(CLI::IsMember({"check", "diff", "wedge", "restrict", "extend", "verify"}));
  app.add_option("file", path, "Input document ('-' for stdin)")->required();
  app.add_option("--name,-n", names, "Object name (repeatable, order matters)");
  app.add_flag("--json", json, "Emit a JSON report");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kExitPass : kExitInput;
  }

  std::string text;
  if (path == "-") {
    std::ostringstream buf;
    buf << std::cin.rdbuf();
    text = buf.str();
  } else {
    std::ifstream in(path, std::ios::binary);
    if (!in) {
      std::cerr << "folicalc: cannot read '" << path << "'\n";
      return kExitInput;
    }
    std::ostringstream buf;
    buf << in.rdbuf();
    text = buf.str();
  }

  try {
    const folicalc::Document doc = folicalc::parse_document(text);
    const folicalc::Report report =
        folicalc::run_command(*folicalc::parse_verb(verb_text), doc, names);
    std::cout << (json ? report.to_json() : report.to_text());
    return report.all_passed() ? kExitPass : kExitFail;
  } catch (const folicalc::ParseError& e) {
    std::cerr << (path == "-" ? "<stdin>" : path) << ":" << e.what() << '\n';
    return kExitInput;
  } catch (const folicalc::InputError& e) {
    std::cerr << "folicalc: " << e.what() << '\n';
    return kExitInput;
  }
}
