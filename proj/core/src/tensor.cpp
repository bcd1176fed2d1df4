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

#include "sepball/tensor.hpp"

#include <cmath>

namespace sepball {

namespace {

void require_basis_like(std::span<const long long> w, int side, const char* which) {
  if (static_cast<int>(w.size()) != side)
    throw std::invalid_argument(std::string("design_tensor: ") + which +
                                " has wrong length for this design");
  int nonzeros = 0;
  for (long long x : w) {
    if (x < -1 || x > 1)
      throw std::invalid_argument(std::string("design_tensor: ") + which +
                                  " must have entries in {-1, 0, +1}");
    if (x != 0) ++nonzeros;
  }
  if (nonzeros != 1)
    throw std::invalid_argument(std::string("design_tensor: ") + which +
                                " must have exactly one nonzero entry");
}

// Depth-first walk over index tuples in row-major order. buffers[d] holds
// U_{a_d}^T ... U_{a_1}^T w_i, so the component at a full tuple is the dot
// product with w_f. axis_limit restricts which design matrices are indexed.
void fill_components(const OrthogonalDesign& design, std::span<const long long> w_final,
                     int order, int axis_limit,
                     std::vector<std::vector<long long>>& buffers,
                     std::vector<long long>& out) {
  const std::size_t side = static_cast<std::size_t>(design.side);
  std::size_t pos = 0;
  auto emit = [&](const std::vector<long long>& v) {
    long long dot = 0;
    for (std::size_t i = 0; i < side; ++i) dot += v[i] * w_final[i];
    out[pos++] = dot;
  };
  auto walk = [&](auto&& self, int depth) -> void {
    if (depth == order) {
      emit(buffers[static_cast<std::size_t>(depth)]);
      return;
    }
    const auto& current = buffers[static_cast<std::size_t>(depth)];
    auto& next = buffers[static_cast<std::size_t>(depth) + 1];
    for (int a = 0; a < axis_limit; ++a) {
      const IntMat& u = design.matrices[static_cast<std::size_t>(a)];
      for (std::size_t j = 0; j < side; ++j) {
        long long sum = 0;
        for (std::size_t i = 0; i < side; ++i) sum += u(i, j) * current[i];
        next[j] = sum;  // next = U_a^T current
      }
      self(self, depth + 1);
    }
  };
  walk(walk, 0);
}

IntTensor contracted_tensor(const OrthogonalDesign& design, std::span<const long long> w_initial,
                            std::span<const long long> w_final, int order, int axis_limit) {
  IntTensor out(order, axis_limit);
  std::vector<std::vector<long long>> buffers(
      static_cast<std::size_t>(order) + 1,
      std::vector<long long>(static_cast<std::size_t>(design.side)));
  for (std::size_t i = 0; i < static_cast<std::size_t>(design.side); ++i)
    buffers[0][i] = w_initial[i];
  std::vector<long long> components(out.size());
  fill_components(design, w_final, order, axis_limit, buffers, components);
  for (std::size_t i = 0; i < components.size(); ++i) out[i] = components[i];
  return out;
}

}  // namespace

bool next_index(std::span<int> indices, int axis) {
  for (std::size_t i = indices.size(); i-- > 0;) {
    if (++indices[i] < axis) return true;
    indices[i] = 0;
  }
  return false;
}

IntTensor design_tensor(const OrthogonalDesign& design, std::span<const long long> w_initial,
                        std::span<const long long> w_final, int order) {
  if (order < 0) throw std::invalid_argument("design_tensor: order must be nonnegative");
  require_basis_like(w_initial, design.side, "w_initial");
  require_basis_like(w_final, design.side, "w_final");
  return contracted_tensor(design, w_initial, w_final, order, design.n);
}

IntTensor restricted_tensor(int order, Restriction variant) {
  if (order < 1) throw std::invalid_argument("restricted_tensor: order must be positive");
  static const OrthogonalDesign design = make_design(4);
  const std::vector<long long> e4{0, 0, 0, 1};
  const std::vector<long long> minus_e1{-1, 0, 0, 0};  // = U_1 e_4
  return contracted_tensor(design, e4, variant == Restriction::kTilde ? e4 : minus_e1,
                           order, 3);
}

long long closed_form_norm_sq(int order) {
  if (order < 1) throw std::invalid_argument("closed_form_norm_sq: order must be positive");
  const long long p = ipow(3, order);
  return order % 2 == 0 ? (p + 3) / 4 : (p + 1) / 4;
}

bool parity_support(std::span<const int> indices) {
  int counts[3] = {0, 0, 0};
  for (int idx : indices) {
    if (idx < 0 || idx > 3)
      throw std::invalid_argument("parity_support: index out of range");
    if (idx < 3) ++counts[idx];
  }
  const bool all_even = counts[0] % 2 == 0 && counts[1] % 2 == 0 && counts[2] % 2 == 0;
  const bool all_odd = counts[0] % 2 == 1 && counts[1] % 2 == 1 && counts[2] % 2 == 1;
  return all_even || all_odd;
}

IntTensor t4_tensor() {
  IntTensor t(4, 3);
  for (int a = 0; a < 3; ++a)
    for (int b = 0; b < 3; ++b) {
      t[t.flat_index(std::array{a, a, b, b})] = 1;
      if (a != b) {
        t[t.flat_index(std::array{a, b, a, b})] = -1;
        t[t.flat_index(std::array{a, b, b, a})] = 1;
      }
    }
  return t;
}

IntTensor m3_tensor() {
  IntTensor t(3, 3);
  t[t.flat_index(std::array{0, 0, 0})] = 1;
  for (int a = 1; a < 3; ++a) {
    t[t.flat_index(std::array{0, a, a})] = -1;
    t[t.flat_index(std::array{a, 0, a})] = -1;
    t[t.flat_index(std::array{a, a, 0})] = -1;
  }
  return t;
}

FacePoint dual_face_point(double xi1, double xi2, double phi) {
  const double xi3 = -xi1 - xi2;
  auto point = [phi](double xi) {
    return std::array<double, 3>{std::cos(xi), std::cos(phi) * std::sin(xi),
                                 std::sin(phi) * std::sin(xi)};
  };
  return FacePoint{point(xi1), point(xi2), point(xi3)};
}

double evaluate_multilinear(const RealTensor& t, std::span<const std::vector<double>> args) {
  if (static_cast<int>(args.size()) != t.order())
    throw std::invalid_argument("evaluate_multilinear: argument count does not match order");
  for (const auto& v : args)
    if (static_cast<int>(v.size()) != t.axis())
      throw std::invalid_argument("evaluate_multilinear: argument length does not match axis");
  if (t.order() == 0) return t[0];
  std::vector<int> idx(static_cast<std::size_t>(t.order()), 0);
  double sum = 0.0;
  std::size_t flat = 0;
  do {
    const double c = t[flat++];
    if (c != 0.0) {
      double prod = c;
      for (std::size_t k = 0; k < idx.size(); ++k)
        prod *= args[k][static_cast<std::size_t>(idx[k])];
      sum += prod;
    }
  } while (next_index(idx, t.axis()));
  return sum;
}

RealTensor to_real(const IntTensor& t, double scale) {
  RealTensor out(t.order(), t.axis());
  for (std::size_t i = 0; i < t.size(); ++i)
    out[i] = scale * static_cast<double>(t[i]);
  return out;
}

}  // namespace sepball
