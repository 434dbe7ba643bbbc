// Copyright 2026 The rankarg Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <algorithm>
#include <cctype>
#include <fstream>
#include <sstream>
#include <unordered_set>

#include "rankarg/error.hpp"
#include "rankarg/framework.hpp"

namespace rankarg {
namespace {

class ApxReader {
 public:
  explicit ApxReader(std::istream& in) : in_(in) {}

  ArgFramework read() {
    while (skip_blank()) {
      int fact_line = line_;
      std::string head = token();
      if (head == "arg") {
        expect('(');
        std::string name = token();
        expect(')');
        expect('.');
        if (!declared_.insert(name).second) {
          throw ParseError(fact_line, "duplicate argument '" + name + "'");
        }
        arguments_.push_back(name);
      } else if (head == "att") {
        expect('(');
        std::string from = token();
        expect(',');
        std::string to = token();
        expect(')');
        expect('.');
        attacks_.push_back({from, to});
        attack_lines_.push_back(fact_line);
      } else if (head.empty()) {
        throw ParseError(line_, std::string("unexpected character '") +
                                    static_cast<char>(in_.peek()) + "'");
      } else {
        throw ParseError(fact_line, "unknown fact '" + head + "'");
      }
    }
    for (std::size_t i = 0; i < attacks_.size(); ++i) {
      for (const auto* name : {&attacks_[i].attacker, &attacks_[i].target}) {
        if (!declared_.count(*name)) {
          throw ParseError(attack_lines_[i],
                           "attack references undeclared argument '" + *name +
                               "'");
        }
      }
    }
    return ArgFramework(std::move(arguments_), attacks_);
  }

 private:
  // Skips whitespace and comments; false at end of input.
  bool skip_blank() {
    for (;;) {
      int c = in_.peek();
      if (c == EOF) return false;
      if (c == '%') {
        while (c != EOF && c != '\n') {
          in_.get();
          c = in_.peek();
        }
      } else if (std::isspace(c)) {
        if (in_.get() == '\n') ++line_;
      } else {
        return true;
      }
    }
  }

  std::string token() {
    skip_blank();
    std::string out;
    for (int c = in_.peek(); c != EOF && (std::isalnum(c) || c == '_');
         c = in_.peek()) {
      out.push_back(static_cast<char>(in_.get()));
    }
    return out;
  }

  void expect(char want) {
    if (!skip_blank() || in_.peek() != want) {
      std::string got = in_.peek() == EOF
                            ? std::string("end of input")
                            : std::string(1, static_cast<char>(in_.peek()));
      throw ParseError(line_, std::string("expected '") + want + "', got " +
                                  got);
    }
    in_.get();
  }

  std::istream& in_;
  int line_ = 1;
  std::vector<std::string> arguments_;
  std::unordered_set<std::string> declared_;
  std::vector<Attack> attacks_;
  std::vector<int> attack_lines_;
};

}  // namespace

ArgFramework parse_apx(std::istream& in) { return ApxReader(in).read(); }

ArgFramework parse_apx(const std::string& text) {
  std::istringstream in(text);
  return parse_apx(in);
}

ArgFramework load_apx(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error("cannot open '" + path + "'");
  return parse_apx(in);
}

std::string serialize_apx(const ArgFramework& framework) {
  std::vector<std::string> names = framework.names();
  std::sort(names.begin(), names.end());
  std::vector<std::pair<std::string, std::string>> attacks;
  for (auto [from, to] : framework.attack_pairs()) {
    attacks.emplace_back(framework.name(from), framework.name(to));
  }
  std::sort(attacks.begin(), attacks.end());
  std::ostringstream out;
  for (const auto& name : names) out << "arg(" << name << ").\n";
  for (const auto& [from, to] : attacks) {
    out << "att(" << from << ',' << to << ").\n";
  }
  return out.str();
}

}  // namespace rankarg
