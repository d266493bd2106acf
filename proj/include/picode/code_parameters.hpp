// Copyright 2026 The picode Authors
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

#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

#include "picode/exact_poly.hpp"

namespace picode {

/// A validated code instance: D logical states built from n_1 <= ... <= n_D,
/// spacings g_d, product N and length m = N^q.
///
/// Legacy instances (small single/two-state toys used by the dense oracle)
/// carry explicit g and m and skip the multi-state constraints; q is 0 for
/// them.
struct CodeParameters {
  std::vector<std::uint64_t> n;
  std::vector<BigInt> g;
  BigInt N;
  unsigned q = 0;
  BigInt m;
  bool legacy = false;

  std::size_t D() const { return n.size(); }
  /// 1-based accessors.
  std::uint64_t n_at(std::size_t d) const { return n.at(d - 1); }
  const BigInt& g_at(std::size_t d) const { return g.at(d - 1); }
};

}  // namespace picode
