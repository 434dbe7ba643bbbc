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

#ifndef RANKARG_MATCHING_IMPL_HPP_
#define RANKARG_MATCHING_IMPL_HPP_

#include <vector>

namespace rankarg {

// Kuhn's augmenting-path algorithm. The sets compared here have at most a
// few dozen members.
template <class Edge>
int max_matching(int left, int right, Edge edge) {
  std::vector<int> match_right(right, -1);
  std::vector<char> visited;
  auto augment = [&](auto& self, int l) -> bool {
    for (int r = 0; r < right; ++r) {
      if (visited[r] || !edge(l, r)) continue;
      visited[r] = 1;
      if (match_right[r] < 0 || self(self, match_right[r])) {
        match_right[r] = l;
        return true;
      }
    }
    return false;
  };
  int size = 0;
  for (int l = 0; l < left; ++l) {
    visited.assign(right, 0);
    if (augment(augment, l)) ++size;
  }
  return size;
}

}  // namespace rankarg

#endif  // RANKARG_MATCHING_IMPL_HPP_
