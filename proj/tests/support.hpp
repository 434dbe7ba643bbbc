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

#ifndef RANKARG_TESTS_SUPPORT_HPP_
#define RANKARG_TESTS_SUPPORT_HPP_

#include <string>

#include "rankarg/framework.hpp"

namespace rankarg::test {

inline std::string data_path(const std::string& file) {
  return std::string(RANKARG_TEST_DATA) + "/" + file;
}

// Running example: b attacks a and c, a and c attack e, e attacks d, d
// attacks a.
inline ArgFramework example1() { return load_apx(data_path("example1.apx")); }

// a has four defense branches of length 2, b one attack branch of length 1.
inline ArgFramework figure2() { return load_apx(data_path("figure2.apx")); }

inline ArgFramework af(const std::string& apx) { return parse_apx(apx); }

}  // namespace rankarg::test

#endif  // RANKARG_TESTS_SUPPORT_HPP_
