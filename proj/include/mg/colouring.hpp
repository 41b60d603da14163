#pragma once
// Prime colourings of (Z^2)_+ = {(m,n): m>0 or (m=0, n>0)}: finitely supported
// maps into {1} U primes, with a construction log of (SL2 matrix, finite
// colouring) steps.  These drive the central quotients of Hall's group.
#include <array>
#include <map>
#include <vector>

#include "mg/int.hpp"

namespace mg {

using Vec2 = std::pair<Int, Int>;

inline bool positive_cone(const Vec2& v) {
  return v.first > 0 || (v.first == 0 && v.second > 0);
}
inline Vec2 neg(const Vec2& v) { return {-v.first, -v.second}; }
inline Vec2 canonical_pm(const Vec2& v) { return positive_cone(v) ? v : neg(v); }

struct SL2 {
  std::array<std::array<Int, 2>, 2> m;  // row-major
  Vec2 apply(const Vec2& v) const {
    return {m[0][0] * v.first + m[0][1] * v.second, m[1][0] * v.first + m[1][1] * v.second};
  }
  Int det() const { return m[0][0] * m[1][1] - m[0][1] * m[1][0]; }
  bool is_identity() const { return m[0][0] == 1 && m[0][1] == 0 && m[1][0] == 0 && m[1][1] == 1; }
};

// Finite colouring: assignments on points of the positive cone.
using FiniteColouring = std::map<Vec2, Int>;

struct PrimeColouring {
  Int default_value = 1;
  FiniteColouring assignments;  // keys in positive cone, values 1 or prime
  struct LogEntry {
    SL2 matrix;
    FiniteColouring theta;  // the finite colouring realized at matrix * support(theta)
    Int box_radius = 0;     // theta was defined on {-R..R}^2 (its positive half)
  };
  std::vector<LogEntry> log;

  // phi at a nonzero lattice point (sign-extension handled: value at -v = value at v
  // for order purposes; the formal sign never matters for coordinate reduction)
  Int at(const Vec2& v) const {
    if (v.first == 0 && v.second == 0) return 0;
    auto it = assignments.find(canonical_pm(v));
    return it == assignments.end() ? default_value : it->second;
  }

  void assign(const Vec2& v, const Int& value) {
    Vec2 c = canonical_pm(v);
    auto it = assignments.find(c);
    if (it != assignments.end() && it->second != value)
      throw std::invalid_argument("colouring clash at (" + istr(c.first) + "," + istr(c.second) + ")");
    assignments[c] = value;
  }

  // all primes occurring as values
  std::vector<Int> torsion_primes() const {
    std::vector<Int> out;
    for (auto& [v, p] : assignments)
      if (p > 1) {
        bool seen = false;
        for (auto& q : out) seen = seen || q == p;
        if (!seen) out.push_back(p);
      }
    return out;
  }

  std::string key() const {
    std::string s = "phi[" + istr(default_value) + "]";
    for (auto& [v, p] : assignments)
      s += "(" + istr(v.first) + "," + istr(v.second) + ")=" + istr(p) + ";";
    return s;
  }

  // largest coordinate magnitude over the support (0 when empty)
  Int support_radius() const {
    Int s = 0;
    for (auto& [v, p] : assignments) {
      Int a = abs(v.first), b = abs(v.second);
      if (a > s) s = a;
      if (b > s) s = b;
    }
    return s;
  }
};

// M with det 1 mapping the box {-R..R}^2 entirely outside {-S..S}^2 except 0.
inline SL2 sl2_separating_matrix(const Int& S, const Int& R) {
  if (S < 0 || R < 0) throw std::invalid_argument("sl2_separating_matrix needs S, R >= 0");
  return {{{{(S + 1) * (S + R + 1) + 1, S + 1}, {S + R + 1, 1}}}};
}

inline bool sl2_congruent_identity_mod2(const SL2& m) {
  return imod(m.m[0][0], 2) == 1 && imod(m.m[0][1], 2) == 0 && imod(m.m[1][0], 2) == 0 &&
         imod(m.m[1][1], 2) == 1;
}

// One universal-colouring step: realize theta (defined on the positive half of
// {-R..R}^2) at M({-R..R}^2), with M a separating matrix clear of the current
// support.  in_gamma2 steers M into / out of the level-2 congruence subgroup
// (the subgroup encoding of seed sets); both parities are reachable by
// enlarging S and the effective box radius.
inline void extend_colouring(PrimeColouring& phi, const FiniteColouring& theta, const Int& R,
                             bool in_gamma2) {
  for (auto& [v, p] : theta) {
    if (!positive_cone(v)) throw std::invalid_argument("theta key outside positive cone");
    if (abs(v.first) > R || abs(v.second) > R) throw std::invalid_argument("theta exceeds box");
  }
  Int S = phi.support_radius();
  Int Reff = R;
  if (in_gamma2) {
    // M = I mod 2 needs S odd and effective box radius even
    if (imod(S, 2) == 0) S += 1;
    if (imod(Reff, 2) == 1) Reff += 1;
  } else {
    if (imod(S, 2) == 1) S += 1;  // S even makes the off-diagonal entry S+1 odd
  }
  SL2 M = sl2_separating_matrix(S, Reff);
  if (M.det() != 1) throw std::logic_error("separating matrix determinant");
  if (sl2_congruent_identity_mod2(M) != in_gamma2)
    throw std::logic_error("separating matrix parity");
  // pin every positive-cone point of the box, so later steps cannot clash
  FiniteColouring full;
  for (Int m = -R; m <= R; m += 1)
    for (Int n = -R; n <= R; n += 1) {
      Vec2 z{m, n};
      if (!positive_cone(z)) continue;
      auto it = theta.find(z);
      full[z] = it == theta.end() ? Int(1) : it->second;
    }
  for (auto& [z, p] : full) phi.assign(M.apply(z), p);
  phi.log.push_back({M, full, R});
}

}  // namespace mg
