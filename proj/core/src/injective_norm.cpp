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

#include "sepball/injective_norm.hpp"

#include <cmath>
#include <thread>

#include "sepball/prng.hpp"

namespace sepball {

namespace {

constexpr double kFlatDirection = 1e-300;

struct Restart {
  double value = 0.0;
  std::vector<std::vector<double>> vectors;
  int iterations = 0;
  bool converged = false;
};

// Gradient of t with respect to slot k at the current arguments: the vector
// g with g_j = t(v^1, ..., e_j at slot k, ..., v^m).
void contract_slot(const RealTensor& t, const std::vector<std::vector<double>>& vectors,
                   int slot, std::vector<double>& g) {
  std::fill(g.begin(), g.end(), 0.0);
  std::vector<int> idx(static_cast<std::size_t>(t.order()), 0);
  std::size_t flat = 0;
  do {
    const double c = t[flat++];
    if (c != 0.0) {
      double prod = c;
      for (int l = 0; l < t.order(); ++l) {
        if (l == slot) continue;
        prod *= vectors[static_cast<std::size_t>(l)]
                       [static_cast<std::size_t>(idx[static_cast<std::size_t>(l)])];
      }
      g[static_cast<std::size_t>(idx[static_cast<std::size_t>(slot)])] += prod;
    }
  } while (next_index(idx, t.axis()));
}

Restart run_restart(const RealTensor& t, const InjectiveNormOptions& options,
                    std::uint64_t restart_index) {
  const int order = t.order();
  const int axis = t.axis();
  Prng rng = Prng::substream(options.seed, restart_index);

  Restart state;
  state.vectors.reserve(static_cast<std::size_t>(order));
  const bool seeded = restart_index == 0 &&
                      static_cast<int>(options.initial.size()) == order;
  for (int k = 0; k < order; ++k) {
    if (seeded) {
      const auto& v = options.initial[static_cast<std::size_t>(k)];
      if (static_cast<int>(v.size()) != axis)
        throw std::invalid_argument("injective_norm: initial vector length mismatch");
      state.vectors.push_back(v);
    } else {
      state.vectors.push_back(rng.unit_vector(axis));
    }
  }

  state.value = std::abs(evaluate_multilinear(t, state.vectors));
  std::vector<double> g(static_cast<std::size_t>(axis));
  for (int sweep = 1; sweep <= options.max_iterations; ++sweep) {
    state.iterations = sweep;
    double sweep_value = state.value;
    for (int k = 0; k < order; ++k) {
      contract_slot(t, state.vectors, k, g);
      double norm_sq = 0.0;
      for (double x : g) norm_sq += x * x;
      const double norm = std::sqrt(norm_sq);
      if (norm < kFlatDirection) {
        // saddle with a vanishing contraction: re-randomize this slot
        state.vectors[static_cast<std::size_t>(k)] = rng.unit_vector(axis);
        continue;
      }
      auto& v = state.vectors[static_cast<std::size_t>(k)];
      for (int j = 0; j < axis; ++j) v[static_cast<std::size_t>(j)] = g[static_cast<std::size_t>(j)] / norm;
      sweep_value = norm;  // equals |t(...)| after the update
    }
    if (std::abs(sweep_value - state.value) < options.tolerance) {
      state.value = sweep_value;
      state.converged = true;
      break;
    }
    state.value = sweep_value;
  }
  return state;
}

}  // namespace

InjectiveNormResult injective_norm(const RealTensor& t, const InjectiveNormOptions& options) {
  if (options.restarts < 1)
    throw std::invalid_argument("injective_norm: restarts must be positive");
  if (options.tolerance <= 0.0)
    throw std::invalid_argument("injective_norm: tolerance must be positive");

  InjectiveNormResult result;
  if (t.order() == 0) {
    result.value = std::abs(t[0]);
    result.converged = true;
    return result;
  }

  std::vector<Restart> outcomes(static_cast<std::size_t>(options.restarts));
  const int threads = std::max(1, options.threads);
  if (threads == 1) {
    for (int r = 0; r < options.restarts; ++r)
      outcomes[static_cast<std::size_t>(r)] =
          run_restart(t, options, static_cast<std::uint64_t>(r));
  } else {
    std::vector<std::thread> pool;
    pool.reserve(static_cast<std::size_t>(threads));
    for (int w = 0; w < threads; ++w) {
      pool.emplace_back([&, w]() {
        for (int r = w; r < options.restarts; r += threads)
          outcomes[static_cast<std::size_t>(r)] =
              run_restart(t, options, static_cast<std::uint64_t>(r));
      });
    }
    for (auto& th : pool) th.join();
  }

  // Reduce in restart order so the reported maximizers are deterministic.
  std::size_t best = 0;
  for (std::size_t r = 1; r < outcomes.size(); ++r)
    if (outcomes[r].value > outcomes[best].value) best = r;
  result.value = outcomes[best].value;
  result.maximizers = std::move(outcomes[best].vectors);
  result.iterations = outcomes[best].iterations;
  result.converged = outcomes[best].converged;
  return result;
}

}  // namespace sepball
