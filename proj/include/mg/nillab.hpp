#pragma once
// Nilpotent discrimination machinery: fast-growing generating vectors with
// prime corner determinants, discriminating tuples for relatively free
// class-2 groups, and verbal subgroups of class-2 models.
#include "mg/ball.hpp"
#include "mg/models/nilc2.hpp"
#include "mg/models/products.hpp"

namespace mg {

// Does the multiset admit an ordering with x1 >= C and x_{i+1} >= x_i^C?
// Sorting ascending is optimal, so it suffices to check that order.
inline bool speed_check(std::vector<Int> values, long C) {
  if (values.empty()) return true;
  std::sort(values.begin(), values.end());
  if (values[0] < C) return false;
  for (size_t i = 0; i + 1 < values.size(); i++) {
    if (values[i] < 1) return false;
    Int bound;
    mpz_pow_ui(bound.get_mpz_t(), values[i].get_mpz_t(), (unsigned long)C);
    if (values[i + 1] < bound) return false;
  }
  return true;
}

namespace detail {

// stateful speed-C chain: each emitted value is >= (previous)^C
struct SpeedChain {
  long C;
  Int last = 0;
  bool started = false;

  Int floor_next(const Int& lo) const {
    Int b = started ? Int() : Int(std::max(C, 2L));
    if (started) mpz_pow_ui(b.get_mpz_t(), last.get_mpz_t(), (unsigned long)C);
    if (b < last + 1) b = last + 1;
    return b < lo ? lo : b;
  }
  Int emit(const Int& v) {
    last = v;
    started = true;
    return v;
  }
  Int next() { return emit(floor_next(0)); }
};

inline Int submatrix_det(const IMat& x, const std::vector<int>& rows, int ncols) {
  IMat a;
  for (int r : rows) a.push_back(std::vector<Int>(x[r].begin(), x[r].begin() + ncols));
  return det(a);
}

}  // namespace detail

// e >= d+1 vectors in Z^d whose entries grow at speed C under some ordering
// and which generate Z^d.  The first d vectors form a matrix whose top-left
// k x k corner has prime determinant p_k for every k, primes found along
// arithmetic progressions; the (d+1)st vector breaks the index-p_d sublattice.
inline std::vector<std::vector<Int>> rapid_matrix(int d, int e, long C,
                                                  long search_cap = 1'000'000) {
  if (d < 1 || e < d + 1 || C < 1) throw std::invalid_argument("rapid_matrix parameters");
  detail::SpeedChain ch{C};
  std::vector<Int> primes;
  IMat x(e, std::vector<Int>(d, 0));

  x[0][0] = ch.emit(next_prime_geq(ch.floor_next(0)));
  primes.push_back(x[0][0]);

  for (int n = 2; n <= d; n++) {
    const Int& p_prev = primes.back();
    // row n-1, columns 0..n-3 free; column n-2 chosen so that the matrix with
    // row n-2 replaced by row n-1 has determinant coprime to p_prev
    for (int j = 0; j <= n - 3; j++) x[n - 1][j] = ch.next();
    std::vector<int> swapped;
    for (int i = 0; i <= n - 3; i++) swapped.push_back(i);
    swapped.push_back(n - 1);
    {
      Int v = ch.floor_next(0);
      for (long tries = 0;; tries++, v += 1) {
        if (tries > search_cap) throw std::runtime_error("rapid_matrix search cap");
        x[n - 1][n - 2] = v;
        Int dn = detail::submatrix_det(x, swapped, n - 1);
        if (dn != 0 && igcd(dn, p_prev) == 1) break;
      }
      ch.emit(x[n - 1][n - 2]);
    }
    // column n-1, rows 0..n-3 free
    for (int i = 0; i <= n - 3; i++) x[i][n - 1] = ch.next();
    // det of the n x n corner is K + u*alpha + v*beta in u = x[n-2][n-1],
    // v = x[n-1][n-1]; beta = p_prev > 0 and gcd(alpha, beta) = 1
    std::vector<int> corner;
    for (int i = 0; i < n; i++) corner.push_back(i);
    auto corner_det = [&](const Int& u, const Int& v) {
      x[n - 2][n - 1] = u;
      x[n - 1][n - 1] = v;
      return detail::submatrix_det(x, corner, n);
    };
    Int K = corner_det(0, 0);
    Int alpha = corner_det(1, 0) - K;
    Int beta = corner_det(0, 1) - K;
    if (beta <= 0 || igcd(alpha, beta) != 1)
      throw std::runtime_error("rapid_matrix cofactor invariant violated");
    // u = alpha^{-1} (1-K) mod beta, lifted above the speed floor
    Int ainv;
    if (mpz_invert(ainv.get_mpz_t(), alpha.get_mpz_t(), beta.get_mpz_t()) == 0)
      throw std::runtime_error("rapid_matrix inverse failed");
    Int u = imod(ainv * (1 - K), beta);
    Int lo_u = ch.floor_next(0);
    if (u < lo_u) u += ((lo_u - u + beta - 1) / beta) * beta;
    ch.emit(u);
    Int v = (1 - K - u * alpha) / beta;  // det = 1 here
    Int lo_v = ch.floor_next(0);
    if (v < lo_v) v += (lo_v - v);
    // walk the progression det = corner_det(u, v) = 1 + t*beta to a fresh prime
    for (long tries = 0;; tries++, v += 1) {
      if (tries > search_cap) throw std::runtime_error("rapid_matrix prime search cap");
      Int dd = corner_det(u, v);
      if (dd > 1 && is_probable_prime(dd) &&
          std::find(primes.begin(), primes.end(), dd) == primes.end()) {
        primes.push_back(dd);
        break;
      }
    }
    ch.emit(x[n - 1][n - 1]);
  }

  // row d: make the stack generate Z^d (gcd of maximal minors = 1)
  for (int j = 0; j + 1 < d; j++) x[d][j] = ch.next();
  {
    Int v = ch.floor_next(0);
    for (long tries = 0;; tries++, v += 1) {
      if (tries > search_cap) throw std::runtime_error("rapid_matrix generation search cap");
      x[d][d - 1] = v;
      IMat stack(x.begin(), x.begin() + d + 1);
      if (maximal_minor_gcd(stack) == 1) break;
    }
    ch.emit(x[d][d - 1]);
  }
  for (int r = d + 1; r < e; r++)
    for (int j = 0; j < d; j++) x[r][j] = ch.next();
  return x;
}

struct DiscriminatingTuple {
  std::vector<Elem> tuple;       // in NilC2(k, 0)
  long speed = 0;                // accepted speed constant C
  long verified_radius = 0;      // balls agree with NilC2(N, 0) std up to here
};

// N-tuple generating NilC2(k,0) that falsifies every word of length <= R
// that is not an identity of NilC2(N,0); certified by literal ball equality
// at radius floor(R/2).  Doubles the speed constant until the check passes.
inline DiscriminatingTuple discriminating_tuple(int k, int N, long R, long C0 = 2,
                                                long C_cap = 1L << 20) {
  if (N <= k) throw std::invalid_argument("discriminating_tuple requires N > k");
  if (R < 0) throw std::invalid_argument("negative radius");
  auto src_model = std::make_shared<NilC2>(k, Int(0));
  auto tgt = mark_std(std::make_shared<NilC2>(N, Int(0)));
  for (long C = std::max(C0, 1L); C <= C_cap; C *= 2) {
    auto vecs = rapid_matrix(k, N, C);
    std::vector<Elem> tuple;
    for (auto& v : vecs)
      tuple.push_back(src_model->make(v, std::vector<Int>(src_model->npairs(), 0)));
    MarkedGroup src = mark_elems(src_model, tuple);
    if (!src.generates()) continue;
    if (R == 0) return {tuple, C, 0};
    long r = R / 2;
    if (balls_agree(ball(src, r), ball(tgt, r))) return {tuple, C, r};
  }
  throw std::runtime_error("discriminating_tuple speed cap reached");
}

struct VerbalReport {
  bool finite = false;
  Int order = 0;                      // meaningful when finite
  std::vector<Int> invariant_factors; // nontrivial cyclic factors when finite
  long free_rank = 0;                 // rank when infinite
};

namespace detail {

struct CenterInfo {
  long count = 0;  // number of central coordinates
  Int modulus = 0; // common modulus (0 = Z); class-2 models in scope share it
};

inline CenterInfo center_info(const Group* g) {
  if (auto* n = dynamic_cast<const NilC2*>(g)) return {n->npairs(), n->modulus()};
  if (auto* d = dynamic_cast<const DirectProduct*>(g)) {
    auto a = center_info(d->left().get());
    auto b = center_info(d->right().get());
    if (a.modulus != b.modulus)
      throw std::invalid_argument("verbal_subgroup: mixed central moduli unsupported");
    return {a.count + b.count, a.modulus};
  }
  throw std::invalid_argument("verbal_subgroup: unsupported model " + g->name());
}

// central coordinates; throws if the element is not central
inline void central_coords(const Group* g, const Elem& e, std::vector<Int>& out) {
  if (auto* n = dynamic_cast<const NilC2*>(g)) {
    const auto& p = NilC2::val(e);
    for (auto& v : p.x)
      if (v != 0) throw std::runtime_error("non-central verbal content");
    out.insert(out.end(), p.c.begin(), p.c.end());
    return;
  }
  auto* d = dynamic_cast<const DirectProduct*>(g);
  central_coords(d->left().get(), DirectProduct::val(e).a, out);
  central_coords(d->right().get(), DirectProduct::val(e).b, out);
}

inline VerbalReport verbal_structure(const IMat& vecs, const CenterInfo& ci) {
  VerbalReport rep;
  if (ci.modulus == 0) {
    auto diag = smith_diagonal(vecs);
    rep.free_rank = (long)diag.size();
    rep.finite = rep.free_rank == 0;
    if (rep.finite) rep.order = 1;
    return rep;
  }
  // subgroup of (Z/n)^m: generators plus n*e_i; factors n/s_i from Smith form
  IMat rows = vecs;
  for (long i = 0; i < ci.count; i++) {
    std::vector<Int> r(ci.count, 0);
    r[i] = ci.modulus;
    rows.push_back(std::move(r));
  }
  auto diag = smith_diagonal(rows);
  rep.finite = true;
  rep.order = 1;
  for (auto& s : diag) {
    Int f = ci.modulus / s;
    if (f > 1) {
      rep.invariant_factors.push_back(f);
      rep.order *= f;
    }
  }
  return rep;
}

}  // namespace detail

// Subgroup of the center generated by all evaluations of the variety words on
// tuples from the ball of the given radius, with a stabilization check at
// radius+1.  Supported models: NilC2 and direct products thereof with a
// common central modulus.
inline VerbalReport verbal_subgroup(GroupPtr model, const std::vector<Word>& words,
                                    long bound = 2, long cap = kDefaultStateCap) {
  auto ci = detail::center_info(model.get());
  auto evaluate_all = [&](long radius) {
    auto elems = elements_in_ball(mark_std(model), radius, cap);
    IMat vecs;
    for (auto& w : words) {
      int n = w.arity;
      std::vector<size_t> idx(n, 0);
      std::vector<Elem> args(n, model->id());
      for (;;) {
        for (int i = 0; i < n; i++) args[i] = elems[idx[i]];
        Elem val = evaluate_word(*model, w, args);
        std::vector<Int> coords;
        detail::central_coords(model.get(), val, coords);
        vecs.push_back(std::move(coords));
        int i = n - 1;
        while (i >= 0 && ++idx[i] == elems.size()) idx[i--] = 0;
        if (i < 0) break;
      }
    }
    return detail::verbal_structure(vecs, ci);
  };
  VerbalReport a = evaluate_all(bound);
  VerbalReport b = evaluate_all(bound + 1);
  if (a.finite != b.finite || a.order != b.order || a.invariant_factors != b.invariant_factors ||
      a.free_rank != b.free_rank)
    throw std::runtime_error("verbal_subgroup did not stabilize; raise the bound");
  return a;
}

}  // namespace mg
