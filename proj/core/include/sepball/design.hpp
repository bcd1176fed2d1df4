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

#include <span>
#include <string>
#include <vector>

#include "sepball/matrix.hpp"

namespace sepball {

/**
 * A rate-1 real orthogonal design: n orthogonal N x N matrices with entries
 * in {-1, 0, +1} spanning a similarity subspace, so that the linear
 * combination U(v) = sum_k v_k U_k satisfies U(v)^T U(v) = |v|^2 I.
 *
 * Storage is 0-based: matrices[k] holds the (k+1)-th basis matrix, and for
 * n in {2, 4, 8} the last slot holds the identity. This convention is shared
 * by every module that indexes into a design.
 */
struct OrthogonalDesign {
  int n = 0;                     // number of basis matrices
  int side = 0;                  // matrix dimension N (equals n at rate 1)
  std::vector<IntMat> matrices;  // n matrices, each side x side
};

// Builds the rate-1 design of the given order. Supported orders are 1, 2, 4
// and 8 (the only dimensions admitting rate 1); anything else throws
// std::invalid_argument.
//
// Order 4 is the fixed quaternion-type family with U_4 = I_4; order 2 is the
// complex-multiplication pair {[[0,-1],[1,0]], I_2}; order 8 is the octonion
// left-multiplication family in the Cayley basis, with the identity in the
// last slot.
OrthogonalDesign make_design(int n);

/** Evaluates U(v) = sum_k v_k U_k. Throws on length(v) != n. */
template <typename T>
Mat<T> evaluate(const OrthogonalDesign& design, std::span<const T> v) {
  if (static_cast<int>(v.size()) != design.n)
    throw std::invalid_argument("evaluate: vector length does not match design order");
  const std::size_t side = static_cast<std::size_t>(design.side);
  Mat<T> out(side, side);
  for (int k = 0; k < design.n; ++k) {
    if (v[static_cast<std::size_t>(k)] == T{}) continue;
    const IntMat& u = design.matrices[static_cast<std::size_t>(k)];
    for (std::size_t i = 0; i < side; ++i)
      for (std::size_t j = 0; j < side; ++j)
        out(i, j) += v[static_cast<std::size_t>(k)] * static_cast<T>(u(i, j));
  }
  return out;
}

struct DesignCheck {
  std::string name;
  bool passed = false;
  std::string detail;  // empty when passed
};

struct DesignReport {
  std::vector<DesignCheck> checks;
  bool all_passed() const;
};

// Runs every structural invariant as an exact integer check and reports each
// by name: entry-range, orthogonality, similarity (the polarization identity
// U_k^T U_l + U_l^T U_k = 2 delta_kl I, equivalent to U(v)^T U(v) = |v|^2 I
// for all v), rate-one, and single-nonzero row/column support. Violations
// are report entries, never exceptions.
DesignReport verify_design(const OrthogonalDesign& design);

}  // namespace sepball
