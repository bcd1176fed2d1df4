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

#include <boost/multiprecision/cpp_int.hpp>

#include <cstddef>
#include <cstdint>
#include <stdexcept>

namespace sepball {

// Exact arithmetic for constructions whose correctness claims are exact
// (cone elements, product decompositions, state matrices).
using BigInt = boost::multiprecision::cpp_int;
using Rat = boost::multiprecision::cpp_rational;

/** Thrown when a requested object would exceed the configured size budget. */
class ResourceLimitError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/** Thrown when an iterative solver exhausts its iteration cap. */
class ConvergenceError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

inline constexpr std::size_t kDefaultComponentBudget = std::size_t{1} << 24;
inline constexpr int kDefaultMaxQubits = 8;

// Dense tensors refuse to materialize more than this many components; the
// same budget caps decomposition term counts. Override with the
// SEPBALL_COMPONENT_BUDGET environment variable.
std::size_t component_budget();

// Largest qubit count for which 2^m x 2^m matrices are materialized.
// Override with SEPBALL_MAX_QUBITS.
int max_qubits();

// axis^order, checked against component_budget().
std::size_t checked_component_count(int axis, int order);

// Exact base^exp in 64-bit arithmetic; throws std::overflow_error on overflow.
long long ipow(long long base, int exp);

double to_double(const Rat& q);

}  // namespace sepball
