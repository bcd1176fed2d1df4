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

#include "sepball/design.hpp"

#include <cstdlib>
#include <string>

namespace sepball {

namespace {

IntMat from_rows(std::initializer_list<std::initializer_list<long long>> rows) {
  IntMat m(rows.size(), rows.begin()->size());
  std::size_t i = 0;
  for (const auto& row : rows) {
    std::size_t j = 0;
    for (long long x : row) m(i, j++) = x;
    ++i;
  }
  return m;
}

struct BasisProduct {
  int sign = 1;
  int index = 0;
};

// Basis multiplication table of the 2^k-dimensional Cayley-Dickson algebra:
// table[i][j] describes e_i * e_j. The doubling rule on pairs is
// (a,b)(c,d) = (ac - conj(d)b, da + b conj(c)).
std::vector<std::vector<BasisProduct>> cayley_dickson_table(int dim) {
  if (dim == 1) return {{BasisProduct{1, 0}}};
  const int half = dim / 2;
  const auto sub = cayley_dickson_table(half);
  std::vector<std::vector<BasisProduct>> table(
      static_cast<std::size_t>(dim),
      std::vector<BasisProduct>(static_cast<std::size_t>(dim)));
  for (int i = 0; i < dim; ++i) {
    for (int j = 0; j < dim; ++j) {
      BasisProduct out;
      if (i < half && j < half) {
        out = sub[i][j];
      } else if (i < half) {
        // (a,0)(0,d) = (0, d a)
        const BasisProduct p = sub[j - half][i];
        out = {p.sign, p.index + half};
      } else if (j < half) {
        // (0,b)(c,0) = (0, b conj(c)); conj flips every non-real basis sign
        const BasisProduct p = sub[i - half][j];
        out = {j == 0 ? p.sign : -p.sign, p.index + half};
      } else {
        // (0,b)(0,d) = (-conj(d) b, 0)
        const BasisProduct p = sub[j - half][i - half];
        out = {(j - half) == 0 ? -p.sign : p.sign, p.index};
      }
      table[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] = out;
    }
  }
  return table;
}

// Matrix of left multiplication x -> e_k x in the Cayley basis.
IntMat left_multiplication(const std::vector<std::vector<BasisProduct>>& table, int k) {
  const std::size_t dim = table.size();
  IntMat m(dim, dim);
  for (std::size_t c = 0; c < dim; ++c) {
    const BasisProduct p = table[static_cast<std::size_t>(k)][c];
    m(static_cast<std::size_t>(p.index), c) = p.sign;
  }
  return m;
}

bool is_identity(const IntMat& m) {
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j)
      if (m(i, j) != (i == j ? 1 : 0)) return false;
  return true;
}

}  // namespace

OrthogonalDesign make_design(int n) {
  OrthogonalDesign design;
  design.n = n;
  design.side = n;
  switch (n) {
    case 1:
      design.matrices = {from_rows({{1}})};
      return design;
    case 2:
      design.matrices = {from_rows({{0, -1}, {1, 0}}), IntMat::identity(2)};
      return design;
    case 4:
      design.matrices = {
          from_rows({{0, 0, 0, -1}, {0, 0, -1, 0}, {0, 1, 0, 0}, {1, 0, 0, 0}}),
          from_rows({{0, 0, 1, 0}, {0, 0, 0, -1}, {-1, 0, 0, 0}, {0, 1, 0, 0}}),
          from_rows({{0, -1, 0, 0}, {1, 0, 0, 0}, {0, 0, 0, -1}, {0, 0, 1, 0}}),
          IntMat::identity(4)};
      return design;
    case 8: {
      const auto table = cayley_dickson_table(8);
      for (int k = 1; k < 8; ++k)
        design.matrices.push_back(left_multiplication(table, k));
      design.matrices.push_back(left_multiplication(table, 0));
      return design;
    }
    default:
      throw std::invalid_argument(
          "make_design: unsupported order " + std::to_string(n) +
          " (rate-1 designs exist only for n = 1, 2, 4, 8)");
  }
}

bool DesignReport::all_passed() const {
  for (const auto& check : checks)
    if (!check.passed) return false;
  return true;
}

DesignReport verify_design(const OrthogonalDesign& design) {
  DesignReport report;
  const std::size_t side = static_cast<std::size_t>(design.side);
  const std::size_t n = design.matrices.size();

  auto add = [&report](std::string name, bool ok, std::string detail) {
    report.checks.push_back({std::move(name), ok, ok ? std::string() : std::move(detail)});
  };

  {
    bool ok = static_cast<int>(n) == design.n;
    std::string detail;
    for (std::size_t k = 0; ok && k < n; ++k) {
      const IntMat& u = design.matrices[k];
      if (u.rows() != side || u.cols() != side) {
        ok = false;
        detail = "matrix " + std::to_string(k + 1) + " has wrong shape";
      }
    }
    add("shape", ok, detail.empty() ? "matrix count does not match n" : detail);
    if (!ok) return report;  // remaining checks assume consistent shapes
  }

  {
    bool ok = true;
    std::string detail;
    for (std::size_t k = 0; ok && k < n; ++k)
      for (std::size_t i = 0; ok && i < side; ++i)
        for (std::size_t j = 0; ok && j < side; ++j) {
          const long long x = design.matrices[k](i, j);
          if (x < -1 || x > 1) {
            ok = false;
            detail = "entry (" + std::to_string(i + 1) + "," + std::to_string(j + 1) +
                     ") of matrix " + std::to_string(k + 1) + " is " + std::to_string(x);
          }
        }
    add("entry-range", ok, detail);
  }

  {
    bool ok = true;
    std::string detail;
    for (std::size_t k = 0; ok && k < n; ++k) {
      if (!is_identity(design.matrices[k].transposed() * design.matrices[k])) {
        ok = false;
        detail = "matrix " + std::to_string(k + 1) + " is not orthogonal";
      }
    }
    add("orthogonality", ok, detail);
  }

  {
    // U(v)^T U(v) = |v|^2 I for all v, polarized into pairwise identities.
    bool ok = true;
    std::string detail;
    for (std::size_t k = 0; ok && k < n; ++k)
      for (std::size_t l = k; ok && l < n; ++l) {
        IntMat s = design.matrices[k].transposed() * design.matrices[l] +
                   design.matrices[l].transposed() * design.matrices[k];
        const long long expected = k == l ? 2 : 0;
        for (std::size_t i = 0; ok && i < side; ++i)
          for (std::size_t j = 0; ok && j < side; ++j)
            if (s(i, j) != (i == j ? expected : 0)) {
              ok = false;
              detail = "similarity identity fails for matrices " + std::to_string(k + 1) +
                       " and " + std::to_string(l + 1);
            }
      }
    add("similarity", ok, detail);
  }

  add("rate-one", design.n == design.side,
      "rate n/N = " + std::to_string(design.n) + "/" + std::to_string(design.side));

  {
    bool ok = true;
    std::string detail;
    for (std::size_t k = 0; ok && k < n; ++k) {
      const IntMat& u = design.matrices[k];
      for (std::size_t i = 0; ok && i < side; ++i) {
        int in_row = 0;
        int in_col = 0;
        for (std::size_t j = 0; j < side; ++j) {
          if (u(i, j) != 0) ++in_row;
          if (u(j, i) != 0) ++in_col;
        }
        if (in_row != 1 || in_col != 1) {
          ok = false;
          detail = "matrix " + std::to_string(k + 1) + " row/column " +
                   std::to_string(i + 1) + " does not have exactly one nonzero";
        }
      }
    }
    add("row-column-support", ok, detail);
  }

  return report;
}

}  // namespace sepball
