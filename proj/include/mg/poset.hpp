#pragma once
// Poset realization through Hall-group quotients: universal colourings built
// from separating matrices, witnesses between quotients H_phi, and verdict
// matrices for families of prime subsets.
#include <set>

#include "mg/models/hall.hpp"
#include "mg/witness.hpp"

namespace mg {

// Realize each finite colouring theta_j (on the positive half of its support
// box) at M_j(box), matrices clear of all prior support.  Indices in the seed
// set (1-based) get M_j in the level-2 congruence subgroup, the others
// explicitly outside it, encoding the seed in the log.
inline PrimeColouring universal_colouring(const std::vector<Int>& I,
                                          const std::vector<FiniteColouring>& thetas,
                                          const std::set<long>& seed = {}) {
  if (I.size() < 2) throw std::invalid_argument("universal_colouring needs at least two primes");
  for (auto& th : thetas)
    for (auto& [z, p] : th) {
      bool ok = p == 1;
      for (auto& q : I) ok = ok || p == q;
      if (!ok) throw std::invalid_argument("theta value " + istr(p) + " outside I");
    }
  PrimeColouring phi;
  for (size_t j = 0; j < thetas.size(); j++) {
    Int r = 1;
    for (auto& [z, p] : thetas[j]) {
      if (abs(z.first) > r) r = abs(z.first);
      if (abs(z.second) > r) r = abs(z.second);
    }
    extend_colouring(phi, thetas[j], r, seed.count((long)j + 1) > 0);
  }
  return phi;
}

inline MarkedGroup hall_quotient(const PrimeColouring& phi) {
  return mark_std(std::make_shared<HallGroup>(phi));
}

namespace detail {

inline Elem hall_head(const HallGroup& g, const Vec2& v) {
  auto pow = [&](const Elem& e, const Int& n) {
    Elem acc = g.id(), b = n >= 0 ? e : g.inv(e);
    for (Int i = 0; i < abs(n); i += 1) acc = g.mul(acc, b);
    return acc;
  };
  return g.mul(pow(g.gen(0), v.first), pow(g.gen(1), v.second));
}

}  // namespace detail

// Witness H_phi -> H_psi: source marked {x^a y^b, x^c y^d, a} for a matrix
// M = [[a,b],[c,d]] with phi(M z) = psi(z) on the box {-R..R}^2, taken from
// phi's construction log (or the identity, or a fresh separating matrix when
// psi is trivial on the box).  Torsion primes of psi must occur in phi.
inline Witness hall_witness(const PrimeColouring& phi, const PrimeColouring& psi, long R) {
  for (auto& p : psi.torsion_primes()) {
    bool found = false;
    for (auto& q : phi.torsion_primes()) found = found || p == q;
    if (!found)
      throw std::invalid_argument("hall_witness: prime " + istr(p) +
                                  " of the target never occurs in the source colouring");
  }
  std::vector<Vec2> box;
  for (Int m = -R; m <= R; m += 1)
    for (Int n = -R; n <= R; n += 1)
      if (positive_cone({m, n})) box.push_back({m, n});

  std::optional<SL2> M;
  {
    bool same = true;
    for (auto& z : box) same = same && phi.at(z) == psi.at(z);
    if (same) M = SL2{{{{1, 0}, {0, 1}}}};
  }
  for (auto& entry : phi.log) {
    if (M || entry.box_radius < R) continue;
    bool match = true;
    for (auto& z : box) {
      auto it = entry.theta.find(z);
      Int v = it == entry.theta.end() ? Int(1) : it->second;
      match = match && v == psi.at(z);
    }
    if (match) M = entry.matrix;
  }
  if (!M) {
    bool trivial = true;
    for (auto& z : box) trivial = trivial && psi.at(z) == 1;
    if (trivial) M = sl2_separating_matrix(phi.support_radius(), R);
  }
  if (!M)
    throw std::runtime_error("hall_witness: no realization of the requested box in the log");

  Witness w;
  w.case_id = "hall";
  w.params = {{"R", R},
              {"matrix", {istr(M->m[0][0]), istr(M->m[0][1]), istr(M->m[1][0]), istr(M->m[1][1])}}};
  SL2 mm = *M;
  w.source = [phi, mm](long) {
    auto model = std::make_shared<HallGroup>(phi);
    std::vector<Elem> elems{detail::hall_head(*model, {mm.m[0][0], mm.m[1][0]}),
                            detail::hall_head(*model, {mm.m[0][1], mm.m[1][1]}), model->gen(2)};
    return mark_elems(model, std::move(elems));
  };
  w.target = mark_std(std::make_shared<HallGroup>(psi));
  return w;
}

// H_{X_i} family over I_i = {2,3} union X_i; verdict(i,j) combines the
// torsion-prime obstruction with a ball-agreement witness at the given
// radius.  Expected shape: verdict(i,j) iff X_j is a subset of X_i.
inline std::vector<std::vector<bool>> realize_finite_poset(
    const std::vector<std::vector<Int>>& subsets, long R = 2) {
  std::vector<PrimeColouring> phis;
  for (auto& x : subsets) {
    std::set<Int> is{2, 3};
    for (auto& p : x) {
      if (p == 2 || p == 3)
        throw std::invalid_argument("realize_finite_poset: subsets must avoid {2,3}");
      is.insert(p);
    }
    std::vector<Int> I(is.begin(), is.end());
    FiniteColouring theta;
    Int t = 1;
    for (auto& p : I) theta[{1, t++}] = p;
    phis.push_back(universal_colouring(I, {theta}));
  }
  std::vector<std::vector<bool>> verdict(subsets.size(), std::vector<bool>(subsets.size()));
  for (size_t i = 0; i < subsets.size(); i++)
    for (size_t j = 0; j < subsets.size(); j++) {
      try {
        Witness w = hall_witness(phis[i], phis[j], R);
        verdict[i][j] = verify_witness(w, R).agree;
      } catch (const std::invalid_argument&) {
        verdict[i][j] = false;
      }
    }
  return verdict;
}

}  // namespace mg
