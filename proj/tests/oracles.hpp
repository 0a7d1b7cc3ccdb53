// Independent reference implementations used only by tests.
#pragma once

#include <algorithm>
#include <functional>
#include <random>
#include <set>
#include <vector>

#include "lfc/exact.hpp"

namespace oracle {

using lfc::Scalar;
using lfc::Vec;

// Gaussian elimination with partial search, kept separate from lfc::solve.
inline std::optional<Vec> solve_square(std::vector<Vec> a, Vec b) {
  const std::size_t n = a.size();
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t p = c;
    while (p < n && a[p][c] == 0) ++p;
    if (p == n) return std::nullopt;
    std::swap(a[p], a[c]);
    std::swap(b[p], b[c]);
    for (std::size_t r = 0; r < n; ++r) {
      if (r == c || a[r][c] == 0) continue;
      Scalar f = a[r][c] / a[c][c];
      for (std::size_t k = c; k < n; ++k) a[r][k] -= f * a[c][k];
      b[r] -= f * b[c];
    }
  }
  Vec x(n);
  for (std::size_t i = 0; i < n; ++i) x[i] = b[i] / a[i][i];
  return x;
}

// Vertices of {A x >= b} by trying every d-subset of constraints.
inline std::set<Vec> brute_vertices(const std::vector<Vec>& a, const Vec& b) {
  std::set<Vec> out;
  if (a.empty()) return out;
  const std::size_t d = a[0].size(), m = a.size();
  std::vector<int> pick(m, 0);
  std::fill(pick.begin(), pick.begin() + static_cast<std::ptrdiff_t>(std::min(d, m)), 1);
  std::sort(pick.begin(), pick.end(), std::greater<int>());
  do {
    std::vector<Vec> sub;
    Vec rhs;
    for (std::size_t i = 0; i < m; ++i)
      if (pick[i]) {
        sub.push_back(a[i]);
        rhs.push_back(b[i]);
      }
    if (sub.size() != d) continue;
    auto x = solve_square(sub, rhs);
    if (!x) continue;
    bool ok = true;
    for (std::size_t i = 0; i < m && ok; ++i) {
      Scalar s = 0;
      for (std::size_t k = 0; k < d; ++k) s += a[i][k] * (*x)[k];
      if (s < b[i]) ok = false;
    }
    if (ok) out.insert(*x);
  } while (std::prev_permutation(pick.begin(), pick.end()));
  return out;
}

// Fourier–Motzkin elimination of the last variable from {A x >= b}.
inline void fm_eliminate_last(std::vector<Vec>& a, Vec& b) {
  const std::size_t d = a[0].size();
  std::vector<Vec> na;
  Vec nb;
  std::vector<std::size_t> pos, neg;
  for (std::size_t i = 0; i < a.size(); ++i) {
    int s = sgn(a[i][d - 1]);
    if (s == 0) {
      na.push_back(Vec(a[i].begin(), a[i].end() - 1));
      nb.push_back(b[i]);
    } else if (s > 0) {
      pos.push_back(i);
    } else {
      neg.push_back(i);
    }
  }
  for (auto p : pos)
    for (auto q : neg) {
      Scalar fp = -a[q][d - 1], fq = a[p][d - 1];
      Vec row(d - 1);
      for (std::size_t k = 0; k + 1 < d; ++k) row[k] = fp * a[p][k] + fq * a[q][k];
      na.push_back(row);
      nb.push_back(fp * b[p] + fq * b[q]);
    }
  a = std::move(na);
  b = std::move(nb);
}

// Feasibility of {A x >= b} by eliminating every variable.
inline bool fm_feasible(std::vector<Vec> a, Vec b) {
  if (a.empty()) return true;
  while (!a.empty() && !a[0].empty()) fm_eliminate_last(a, b);
  for (const auto& x : b)
    if (x > 0) return false;
  return true;
}

inline Vec random_vec(std::mt19937& rng, std::size_t d, int lo, int hi) {
  std::uniform_int_distribution<int> dist(lo, hi);
  Vec v(d);
  for (auto& x : v) x = dist(rng);
  return v;
}

}  // namespace oracle
