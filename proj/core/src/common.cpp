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

#include "sepball/common.hpp"

#include <cstdlib>
#include <limits>
#include <string>

namespace sepball {

namespace {

std::size_t env_size(const char* name, std::size_t fallback) {
  const char* raw = std::getenv(name);
  if (raw == nullptr || *raw == '\0') return fallback;
  char* end = nullptr;
  unsigned long long parsed = std::strtoull(raw, &end, 10);
  if (end == raw || *end != '\0' || parsed == 0) return fallback;
  return static_cast<std::size_t>(parsed);
}

}  // namespace

std::size_t component_budget() {
  static const std::size_t budget =
      env_size("SEPBALL_COMPONENT_BUDGET", kDefaultComponentBudget);
  return budget;
}

int max_qubits() {
  static const int cap = static_cast<int>(
      env_size("SEPBALL_MAX_QUBITS", static_cast<std::size_t>(kDefaultMaxQubits)));
  return cap;
}

std::size_t checked_component_count(int axis, int order) {
  if (axis < 1) throw std::invalid_argument("tensor axis must be positive");
  if (order < 0) throw std::invalid_argument("tensor order must be nonnegative");
  const std::size_t budget = component_budget();
  std::size_t count = 1;
  for (int i = 0; i < order; ++i) {
    if (count > budget / static_cast<std::size_t>(axis)) {
      throw ResourceLimitError("tensor with axis " + std::to_string(axis) +
                               " and order " + std::to_string(order) +
                               " exceeds the component budget of " +
                               std::to_string(budget));
    }
    count *= static_cast<std::size_t>(axis);
  }
  return count;
}

long long ipow(long long base, int exp) {
  if (exp < 0) throw std::invalid_argument("ipow: negative exponent");
  long long result = 1;
  for (int i = 0; i < exp; ++i) {
    if (base != 0 &&
        (result > std::numeric_limits<long long>::max() / std::abs(base) ||
         result < std::numeric_limits<long long>::min() / std::abs(base))) {
      throw std::overflow_error("ipow: 64-bit overflow");
    }
    result *= base;
  }
  return result;
}

double to_double(const Rat& q) { return q.convert_to<double>(); }

}  // namespace sepball
