#pragma once
// Growth experiments: the root of 2^{3-3/a} + 2^{2-2/a} + 2^{1-1/a} = 2 and
// the growth signature of wreath products over the Grigorchuk orbit under
// the far-apart-lamps marking versus their abelian-lamp targets.
#include <cmath>
#include <cstdio>

#include "mg/ball.hpp"
#include "mg/witness.hpp"

namespace mg {

struct AlphaRoot {
  double alpha = 0;
  double lo = 0, hi = 0;  // certified bracket: residual changes sign across it
};

inline double alpha_residual(double a) {
  return std::exp2(3 - 3 / a) + std::exp2(2 - 2 / a) + std::exp2(1 - 1 / a) - 2.0;
}

inline AlphaRoot solve_alpha(double tolerance = 1e-6) {
  if (!(tolerance > 0)) throw std::invalid_argument("solve_alpha needs tolerance > 0");
  double lo = 0.5, hi = 1.0;
  if (!(alpha_residual(lo) < 0 && alpha_residual(hi) > 0))
    throw std::logic_error("alpha bracket lost its sign change");
  while (hi - lo > tolerance) {
    double mid = 0.5 * (lo + hi);
    (alpha_residual(mid) > 0 ? hi : lo) = mid;
  }
  return {0.5 * (lo + hi), lo, hi};
}

struct NuegRow {
  long R = 0;
  Int nu_witness, nu_std;
  double rate_witness = 1, rate_std = 1;
  bool agree = false;
};

// One row per radius: ball count and rate upper bound of lamp wr_X Grig under
// the scattered-lamps marking, the same for the abelianized-lamp target with
// its standard marking, and the verified ball agreement between them.
inline std::vector<NuegRow> nueg_signature(const std::string& lamp, const std::vector<long>& rs,
                                           long cap = kDefaultStateCap) {
  Witness w = make_witness("any_to_direct", {{"G", lamp}});
  std::vector<NuegRow> out;
  for (long R : rs) {
    if (R < 1) throw std::invalid_argument("nueg_signature needs radii >= 1");
    GrowthTable a = growth(w.source(R), R, cap);
    GrowthTable b = growth(w.target, R, cap);
    out.push_back({R, a.counts[R], b.counts[R], a.rate_upper, b.rate_upper,
                   verify_witness(w, R, cap).agree});
  }
  return out;
}

inline std::string nueg_csv(const std::vector<NuegRow>& rows) {
  std::string s = "R,nu_witness,nu_std,rate_witness,rate_std,agree\n";
  for (auto& r : rows) {
    char rates[64];
    std::snprintf(rates, sizeof rates, "%.6f,%.6f", r.rate_witness, r.rate_std);
    s += std::to_string(r.R) + "," + istr(r.nu_witness) + "," + istr(r.nu_std) + "," + rates +
         "," + (r.agree ? "true" : "false") + "\n";
  }
  return s;
}

}  // namespace mg
