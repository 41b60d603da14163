#pragma once
// Smith normal form and lattice helpers over arbitrary-precision integers.
#include <vector>

#include "mg/int.hpp"

namespace mg {

using IMat = std::vector<std::vector<Int>>;  // row-major

// Smith normal form diagonal d1 | d2 | ... (positive entries only, i.e. up to rank).
inline std::vector<Int> smith_diagonal(IMat a) {
  size_t rows = a.size();
  size_t cols = rows ? a[0].size() : 0;
  std::vector<Int> diag;
  for (size_t t = 0; t < rows && t < cols; t++) {
    // move a nonzero entry of minimal |.| into the pivot slot
    size_t pi = t, pj = t;
    bool found = false;
    Int best = 0;
    for (size_t i = t; i < rows; i++)
      for (size_t j = t; j < cols; j++)
        if (a[i][j] != 0) {
          Int v = abs(a[i][j]);
          if (!found || v < best) { best = v; pi = i; pj = j; found = true; }
        }
    if (!found) break;
    std::swap(a[t], a[pi]);
    for (size_t i = 0; i < rows; i++) std::swap(a[i][t], a[i][pj]);

    for (;;) {
      // clear column t, then row t; swaps keep remainders shrinking, so this terminates
      bool dirty = true;
      while (dirty) {
        dirty = false;
        for (size_t i = t + 1; i < rows; i++)
          if (a[i][t] != 0) {
            Int q = a[i][t] / a[t][t];
            for (size_t j = t; j < cols; j++) a[i][j] -= q * a[t][j];
            if (a[i][t] != 0) { std::swap(a[t], a[i]); dirty = true; }
          }
        for (size_t j = t + 1; j < cols; j++)
          if (a[t][j] != 0) {
            Int q = a[t][j] / a[t][t];
            for (size_t i = t; i < rows; i++) a[i][j] -= q * a[i][t];
            if (a[t][j] != 0) {
              for (size_t i = 0; i < rows; i++) std::swap(a[i][t], a[i][j]);
              dirty = true;
            }
          }
      }
      // enforce divisibility: pivot must divide every remaining entry
      size_t bi = 0, bj = 0;
      bool bad = false;
      for (size_t i = t + 1; i < rows && !bad; i++)
        for (size_t j = t + 1; j < cols && !bad; j++)
          if (a[i][j] % a[t][t] != 0) { bi = i; bj = j; bad = true; }
      if (!bad) break;
      for (size_t j = t; j < cols; j++) a[t][j] += a[bi][j];
      (void)bj;
    }
    diag.push_back(abs(a[t][t]));
  }
  return diag;
}

inline Int det(IMat a) {
  size_t n = a.size();
  // fraction-free Gaussian elimination (Bareiss)
  Int sign = 1, prev = 1;
  for (size_t k = 0; k + 1 < n; k++) {
    if (a[k][k] == 0) {
      size_t s = k + 1;
      while (s < n && a[s][k] == 0) s++;
      if (s == n) return 0;
      std::swap(a[k], a[s]);
      sign = -sign;
    }
    for (size_t i = k + 1; i < n; i++)
      for (size_t j = k + 1; j < n; j++)
        a[i][j] = (a[i][j] * a[k][k] - a[i][k] * a[k][j]) / prev;
    prev = a[k][k];
  }
  return n ? sign * a[n - 1][n - 1] : Int(1);
}

// gcd of all maximal (min(rows,cols)-sized) minors.
inline Int maximal_minor_gcd(const IMat& m) {
  size_t rows = m.size(), cols = rows ? m[0].size() : 0;
  size_t r = std::min(rows, cols);
  if (r == 0) return 0;
  std::vector<size_t> all_r(r);
  for (size_t i = 0; i < r; i++) all_r[i] = i;
  Int g = 0;
  auto minor_det = [&](const std::vector<size_t>& rs, const std::vector<size_t>& cs) {
    IMat sub(r, std::vector<Int>(r));
    for (size_t i = 0; i < r; i++)
      for (size_t j = 0; j < r; j++) sub[i][j] = m[rs[i]][cs[j]];
    return det(sub);
  };
  auto for_each_comb = [&](size_t n, auto&& fn) {
    std::vector<size_t> c(r);
    for (size_t i = 0; i < r; i++) c[i] = i;
    for (;;) {
      fn(c);
      size_t i = r;
      while (i > 0 && c[i - 1] == n - r + i - 1) i--;
      if (i == 0) break;
      c[i - 1]++;
      for (size_t j = i; j < r; j++) c[j] = c[j - 1] + 1;
    }
  };
  if (rows <= cols)
    for_each_comb(cols, [&](const std::vector<size_t>& cs) { g = igcd(g, minor_det(all_r, cs)); });
  else
    for_each_comb(rows, [&](const std::vector<size_t>& rs) { g = igcd(g, minor_det(rs, all_r)); });
  return g;
}

// Do the columns of m generate Z^n modulo the moduli lattice?  moduli[i] = 0 means Z.
inline bool columns_generate(const IMat& m, const std::vector<Int>& moduli) {
  size_t n = moduli.size();
  if (n == 0) return true;
  if (m.size() != n) throw std::invalid_argument("columns_generate: row count mismatch");
  IMat a(n);
  for (size_t i = 0; i < n; i++) {
    a[i] = m[i];
    for (size_t j = 0; j < n; j++) a[i].push_back(i == j ? moduli[i] : Int(0));
  }
  auto d = smith_diagonal(a);
  if (d.size() != n) return false;
  for (auto& v : d)
    if (v != 1) return false;
  return true;
}

}  // namespace mg
