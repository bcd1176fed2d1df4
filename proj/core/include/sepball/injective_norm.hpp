// Copyright 2026 The Sepball Authors
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

#pragma once

#include <cstdint>
#include <vector>

#include "sepball/tensor.hpp"

namespace sepball {

struct InjectiveNormOptions {
  int restarts = 32;
  int max_iterations = 200;
  double tolerance = 1e-12;
  std::uint64_t seed = 0;
  int threads = 1;
  // Optional starting vectors for the first restart (one unit vector of
  // length axis per tensor slot); remaining restarts start at random points.
  std::vector<std::vector<double>> initial;
};

struct InjectiveNormResult {
  double value = 0.0;                           // best |t(v^1,...,v^m)| found
  std::vector<std::vector<double>> maximizers;  // achieving unit vectors
  int iterations = 0;                           // sweeps used by the best restart
  bool converged = false;                       // best restart met the tolerance
};

/**
 * Lower bound on the injective norm sup |t(v^1,...,v^m)| over unit vectors,
 * by alternating maximization: each slot in turn is replaced by the
 * normalized contraction of the tensor against the remaining arguments,
 * which never decreases the value. Restarts are merged by taking the
 * maximum; with a fixed seed the result is identical for any thread count.
 * Hitting the iteration cap is reported, not thrown.
 */
InjectiveNormResult injective_norm(const RealTensor& t, const InjectiveNormOptions& options = {});

}  // namespace sepball
