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

#include <array>
#include <cstddef>
#include <span>
#include <vector>

#include "sepball/common.hpp"
#include "sepball/design.hpp"

namespace sepball {

/**
 * Dense order-m tensor with a common axis size, flat row-major storage
 * (the last index varies fastest). Indices are 0-based storage indices; for
 * design-generated tensors, storage index k addresses the (k+1)-th design
 * matrix, so the identity direction of an order-4 design sits at index 3.
 *
 * Construction is budget-checked: axis^order above the component budget
 * throws ResourceLimitError.
 */
template <typename Scalar>
class DenseTensor {
 public:
  DenseTensor(int order, int axis)
      : order_(order), axis_(axis), components_(checked_component_count(axis, order)) {}

  int order() const { return order_; }
  int axis() const { return axis_; }
  std::size_t size() const { return components_.size(); }

  std::size_t flat_index(std::span<const int> indices) const {
    if (static_cast<int>(indices.size()) != order_)
      throw std::invalid_argument("tensor index tuple has wrong length");
    std::size_t flat = 0;
    for (int idx : indices) {
      if (idx < 0 || idx >= axis_)
        throw std::invalid_argument("tensor index out of range");
      flat = flat * static_cast<std::size_t>(axis_) + static_cast<std::size_t>(idx);
    }
    return flat;
  }

  Scalar at(std::span<const int> indices) const { return components_[flat_index(indices)]; }
  Scalar at(std::initializer_list<int> indices) const {
    return at(std::span<const int>(indices.begin(), indices.size()));
  }

  Scalar& operator[](std::size_t flat) { return components_[flat]; }
  const Scalar& operator[](std::size_t flat) const { return components_[flat]; }

  std::span<const Scalar> components() const { return components_; }

  friend bool operator==(const DenseTensor& a, const DenseTensor& b) {
    return a.order_ == b.order_ && a.axis_ == b.axis_ && a.components_ == b.components_;
  }

 private:
  int order_ = 0;
  int axis_ = 1;
  std::vector<Scalar> components_;
};

using IntTensor = DenseTensor<long long>;
using RealTensor = DenseTensor<double>;

// Advances a row-major index tuple; returns false after the last tuple.
bool next_index(std::span<int> indices, int axis);

/**
 * Order-m tensor of a rate-1 design: component (a_1,...,a_m) equals
 * w_i^T U_{a_1+1} ... U_{a_m+1} w_f, computed in exact integer arithmetic.
 * Both boundary vectors must have entries in {-1,0,+1} with exactly one
 * nonzero. Order 0 yields the scalar w_i^T w_f.
 */
IntTensor design_tensor(const OrthogonalDesign& design, std::span<const long long> w_initial,
                        std::span<const long long> w_final, int order);

enum class Restriction {
  kTilde,  // order-4 design contracted between e_4 and e_4
  kHat,    // order-4 design contracted between e_4 and U_1 e_4 = -e_1
};

// Axis-3 restriction of the order-4 design tensor to the non-identity
// directions; storage index k addresses design matrix U_{k+1}, k in {0,1,2}.
IntTensor restricted_tensor(int order, Restriction variant);

template <typename Scalar>
Scalar frobenius_norm_sq(const DenseTensor<Scalar>& t) {
  Scalar sum{};
  for (const Scalar& c : t.components()) sum += c * c;
  return sum;
}

template <typename Scalar>
long long nonzero_count(const DenseTensor<Scalar>& t) {
  long long count = 0;
  for (const Scalar& c : t.components())
    if (c != Scalar{}) ++count;
  return count;
}

// Squared Frobenius norm of the restricted tensor matching the parity of m:
// (3^m + 3)/4 for even m, (3^m + 1)/4 for odd m, exactly.
long long closed_form_norm_sq(int order);

// True iff the counts of the three non-identity directions (storage indices
// 0, 1, 2) in the tuple are all even or all odd; characterizes the support
// of the order-4 design tensor contracted between two copies of e_4.
// Indices must lie in {0, 1, 2, 3}.
bool parity_support(std::span<const int> indices);

// The extremal order-4 tensor on R^3: components (a,a,b,b) = 1,
// (a,b,a,b) = -1 and (a,b,b,a) = 1 for a != b, all else 0. Squared norm 21.
IntTensor t4_tensor();

// The extremal order-3 tensor on R^3: component (0,0,0) = 1 and
// (0,a,a) = (a,0,a) = (a,a,0) = -1 for a in {1,2}, all else 0. Squared norm 7.
IntTensor m3_tensor();

// Order-(m-1) slice obtained by pinning the index at `position` to `value`
// (both 0-based). Throws std::invalid_argument when out of range.
template <typename Scalar>
DenseTensor<Scalar> slice_split(const DenseTensor<Scalar>& t, int position, int value) {
  if (position < 0 || position >= t.order())
    throw std::invalid_argument("slice_split: position out of range");
  if (value < 0 || value >= t.axis())
    throw std::invalid_argument("slice_split: pinned index out of range");
  DenseTensor<Scalar> out(t.order() - 1, t.axis());
  std::vector<int> idx(static_cast<std::size_t>(t.order()), 0);
  std::vector<int> dst(static_cast<std::size_t>(t.order() - 1), 0);
  std::size_t flat = 0;
  do {
    // source tuple = dst tuple with `value` inserted at `position`
    for (int i = 0, j = 0; i < t.order(); ++i)
      idx[static_cast<std::size_t>(i)] =
          i == position ? value : dst[static_cast<std::size_t>(j++)];
    out[flat++] = t.at(idx);
  } while (next_index(dst, t.axis()));
  return out;
}

struct FacePoint {
  std::array<double, 3> x{};
  std::array<double, 3> y{};
  std::array<double, 3> z{};
};

// Point of the extremal face of the order-3 form: given xi1, xi2 and phi,
// sets xi3 = -xi1 - xi2 and returns the three unit vectors
// (cos xi_k, cos phi sin xi_k, sin phi sin xi_k); the m3 form evaluates to 1
// on them up to rounding.
FacePoint dual_face_point(double xi1, double xi2, double phi);

// Multilinear evaluation t(v^1, ..., v^m); every argument must have length
// equal to the axis size.
double evaluate_multilinear(const RealTensor& t, std::span<const std::vector<double>> args);

RealTensor to_real(const IntTensor& t, double scale = 1.0);

}  // namespace sepball
