#pragma once

// Independent reference computations for the tests. Nothing here calls the
// library's linear-algebra or curvature code.

#include "liemax/graph.hpp"
#include "liemax/lie_algebra.hpp"

#include <algorithm>
#include <numeric>
#include <random>
#include <vector>

namespace oracle {

using liemax::LieAlgebra;
using liemax::Rational;
using Dense = std::vector<std::vector<Rational>>;

// c[i][j][k] as a dense cube.
inline std::vector<Dense> cube(const LieAlgebra& alg) {
  const std::size_t n = alg.dim();
  std::vector<Dense> c(n, Dense(n, std::vector<Rational>(n)));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      for (std::size_t k = 0; k < n; ++k) c[i][j][k] = alg.constant(i, j, k);
  return c;
}

// Jacobi sum [[vi,vj],vk] + [[vj,vk],vi] + [[vk,vi],vj] by substitution.
inline std::vector<Rational> jacobi_sum(const LieAlgebra& alg, std::size_t i, std::size_t j, std::size_t k) {
  const auto c = cube(alg);
  const std::size_t n = alg.dim();
  std::vector<Rational> out(n);
  auto term = [&](std::size_t a, std::size_t b, std::size_t d) {
    for (std::size_t m = 0; m < n; ++m)
      for (std::size_t l = 0; l < n; ++l) out[l] += c[a][b][m] * c[m][d][l];
  };
  term(i, j, k);
  term(j, k, i);
  term(k, i, j);
  return out;
}

// Plain Gaussian elimination; returns rank.
inline std::size_t rank(Dense m) {
  std::size_t r = 0;
  const std::size_t cols = m.empty() ? 0 : m[0].size();
  for (std::size_t c = 0; c < cols && r < m.size(); ++c) {
    std::size_t p = r;
    while (p < m.size() && m[p][c] == 0) ++p;
    if (p == m.size()) continue;
    std::swap(m[p], m[r]);
    for (std::size_t i = 0; i < m.size(); ++i)
      if (i != r && m[i][c] != 0) {
        const Rational f = m[i][c] / m[r][c];
        for (std::size_t k = c; k < cols; ++k) m[i][k] -= f * m[r][k];
      }
    ++r;
  }
  return r;
}

// The Leibniz system on the n^2 entries of D (row-major), n^3 rows.
inline Dense leibniz_system(const LieAlgebra& alg) {
  const auto c = cube(alg);
  const std::size_t n = alg.dim();
  Dense rows;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      for (std::size_t k = 0; k < n; ++k) {
        // (D[vi,vj])_k - ([D vi, vj])_k - ([vi, D vj])_k = 0
        std::vector<Rational> row(n * n);
        for (std::size_t m = 0; m < n; ++m) row[k * n + m] += c[i][j][m];
        for (std::size_t a = 0; a < n; ++a) {
          row[a * n + i] -= c[a][j][k];
          row[a * n + j] -= c[i][a][k];
        }
        rows.push_back(row);
      }
  return rows;
}

inline std::size_t derivation_dim(const LieAlgebra& alg) {
  const std::size_t n = alg.dim();
  return n * n - rank(leibniz_system(alg));
}

// Ricci via the Levi-Civita connection of the metric making the basis
// orthonormal: nabla_{e_i} e_j = 1/2 sum_k (c_ij^k - c_jk^i + c_ki^j) e_k,
// R(X,Y)Z = nabla_X nabla_Y Z - nabla_Y nabla_X Z - nabla_[X,Y] Z,
// Ric(Y,Z) = sum_i <R(e_i,Y)Z, e_i>.
inline Dense levi_civita_ricci(const LieAlgebra& alg) {
  const auto c = cube(alg);
  const std::size_t n = alg.dim();
  std::vector<Dense> gamma(n, Dense(n, std::vector<Rational>(n)));  // gamma[i][j][k] = <nabla_i e_j, e_k>
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      for (std::size_t k = 0; k < n; ++k)
        gamma[i][j][k] = Rational(1, 2) * (c[i][j][k] - c[j][k][i] + c[k][i][j]);
  Dense ric(n, std::vector<Rational>(n));
  for (std::size_t y = 0; y < n; ++y)
    for (std::size_t z = 0; z < n; ++z) {
      Rational s = 0;
      for (std::size_t i = 0; i < n; ++i) {
        // <nabla_i nabla_y e_z, e_i> - <nabla_y nabla_i e_z, e_i> - <nabla_[e_i,e_y] e_z, e_i>
        for (std::size_t m = 0; m < n; ++m) {
          s += gamma[y][z][m] * gamma[i][m][i];
          s -= gamma[i][z][m] * gamma[y][m][i];
          s -= c[i][y][m] * gamma[m][z][i];
        }
      }
      ric[y][z] = s;
    }
  return ric;
}

inline bool is_graph_automorphism(const liemax::graphs::SimpleGraph& g, const std::vector<std::size_t>& perm) {
  for (const auto& [a, b] : g.edges())
    if (!g.adjacent(perm[a], perm[b])) return false;
  return true;
}

// Counts automorphisms by trying every permutation.
inline std::size_t brute_force_automorphism_count(const liemax::graphs::SimpleGraph& g) {
  std::vector<std::size_t> perm(g.vertex_count());
  std::iota(perm.begin(), perm.end(), 0);
  std::size_t count = 0;
  do {
    if (is_graph_automorphism(g, perm)) ++count;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return count;
}

// Sign patterns (bit i set = -1 at i) that preserve every bracket, by 2^n search.
inline std::size_t brute_force_sign_count(const LieAlgebra& alg) {
  const std::size_t n = alg.dim();
  std::size_t count = 0;
  for (unsigned long mask = 0; mask < (1UL << n); ++mask) {
    bool ok = true;
    for (std::size_t i = 0; i < n && ok; ++i)
      for (std::size_t j = 0; j < n && ok; ++j)
        for (const auto& [k, v] : alg.bracket_basis(i, j)) {
          const int s = ((mask >> i) & 1) + ((mask >> j) & 1) + ((mask >> k) & 1);
          if (s % 2 != 0) ok = false;
        }
    if (ok) ++count;
  }
  return count;
}

inline Rational random_rational(std::mt19937_64& rng, int range = 9, int max_den = 5, bool nonzero = false) {
  std::uniform_int_distribution<int> num(-range, range), den(1, max_den);
  for (;;) {
    Rational q(num(rng), den(rng));
    q.canonicalize();
    if (!nonzero || q != 0) return q;
  }
}

} // namespace oracle
