#pragma once
// Order on infinite finitely generated abelian groups: normal forms,
// quotient / torsion-embedding tests, the exact comparison criterion
// (epimorphism injective on the torsion of the larger group), and the
// poset / permutation-action constructions.
#include <map>

#include "mg/models/fin_abelian.hpp"
#include "mg/witness.hpp"

namespace mg {

struct AbelianNF {
  long rank = 0;               // number of Z factors
  std::vector<Int> factors;    // invariant factors d1 | d2 | ..., each >= 2

  bool operator==(const AbelianNF& o) const { return rank == o.rank && factors == o.factors; }
  bool infinite() const { return rank >= 1; }

  std::string str() const {
    std::string s;
    for (auto& d : factors) s += (s.empty() ? "" : " x ") + ("Z/" + istr(d));
    if (rank > 0) s += (s.empty() ? "" : " x ") + (rank == 1 ? std::string("Z") : "Z^" + std::to_string(rank));
    return s.empty() ? "1" : s;
  }
};

inline AbelianNF abelian_nf(const std::vector<Int>& raw) {
  AbelianNF nf;
  IMat diag;
  size_t t = 0;
  for (auto& x : raw)
    if (x == 0) nf.rank++;
    else t++;
  size_t i = 0;
  for (auto& x : raw)
    if (x != 0) {
      std::vector<Int> row(t, 0);
      row[i++] = abs(x);
      diag.push_back(std::move(row));
    }
  for (auto& d : smith_diagonal(diag))
    if (d > 1) nf.factors.push_back(d);
  return nf;
}

inline GroupPtr abelian_model(const AbelianNF& a) {
  std::vector<Int> fs = a.factors;
  fs.insert(fs.end(), a.rank, Int(0));
  return std::make_shared<FinAbelian>(std::move(fs));
}

namespace detail {

inline std::map<Int, int> factorize(Int n) {
  std::map<Int, int> out;
  for (Int p = 2; p * p <= n; p += 1)
    while (n % p == 0) {
      out[p]++;
      n /= p;
    }
  if (n > 1) out[n]++;
  return out;
}

// p-exponents of the invariant factors, descending, zeros dropped
inline std::vector<int> p_exponents(const AbelianNF& a, const Int& p) {
  std::vector<int> out;
  for (auto it = a.factors.rbegin(); it != a.factors.rend(); ++it) {
    Int d = *it;
    int e = 0;
    while (d % p == 0) {
      e++;
      d /= p;
    }
    if (e > 0) out.push_back(e);
  }
  return out;
}

inline std::vector<Int> torsion_primes(const AbelianNF& a, const AbelianNF& b) {
  std::map<Int, int> seen;
  for (auto& d : a.factors)
    for (auto& [p, e] : factorize(d)) seen[p] += e;
  for (auto& d : b.factors)
    for (auto& [p, e] : factorize(d)) seen[p] += e;
  std::vector<Int> out;
  for (auto& [p, e] : seen) out.push_back(p);
  return out;
}

// finite abelian group as a product of cyclic moduli (not necessarily a chain)
struct Torsion {
  std::vector<Int> mods;

  Int size() const {
    Int s = 1;
    for (auto& m : mods) s *= m;
    return s;
  }
  std::vector<std::vector<Int>> elements() const {
    std::vector<std::vector<Int>> out{std::vector<Int>(mods.size(), 0)};
    for (size_t i = 0; i < mods.size(); i++) {
      std::vector<std::vector<Int>> next;
      for (auto& e : out)
        for (Int v = 0; v < mods[i]; v += 1) {
          auto c = e;
          c[i] = v;
          next.push_back(std::move(c));
        }
      out = std::move(next);
    }
    return out;
  }
  std::vector<Int> add(const std::vector<Int>& a, const std::vector<Int>& b) const {
    std::vector<Int> c(mods.size());
    for (size_t i = 0; i < mods.size(); i++) c[i] = imod(a[i] + b[i], mods[i]);
    return c;
  }
  std::vector<Int> smul(const Int& k, const std::vector<Int>& a) const {
    std::vector<Int> c(mods.size());
    for (size_t i = 0; i < mods.size(); i++) c[i] = imod(k * a[i], mods[i]);
    return c;
  }
  bool is_zero(const std::vector<Int>& a) const {
    for (auto& x : a)
      if (x != 0) return false;
    return true;
  }
  // invariant factors of the quotient by the subgroup spanned by gens
  std::vector<Int> quotient_diag(const std::vector<std::vector<Int>>& gens) const {
    IMat rows;
    for (size_t i = 0; i < mods.size(); i++) {
      std::vector<Int> r(mods.size(), 0);
      r[i] = mods[i];
      rows.push_back(std::move(r));
    }
    for (auto& g : gens) rows.push_back(g);
    return smith_diagonal(rows);
  }
  long quotient_mu(const std::vector<std::vector<Int>>& gens) const {
    long mu = 0;
    for (auto& d : quotient_diag(gens))
      if (d > 1) mu++;
    return mu;
  }
};

// enumerate homomorphisms src -> dst by generator images; call f(images, mu)
// for each injective one (mu = generator count of the cokernel) and stop
// early when f returns true.  One Smith form per candidate yields both the
// injectivity check (quotient size = |dst| / |src|) and mu.
template <typename F>
inline bool for_each_embedding(const Torsion& src, const Torsion& dst, F f, long hom_cap) {
  std::vector<std::vector<std::vector<Int>>> cands(src.mods.size());
  auto dst_elems = dst.elements();
  for (size_t j = 0; j < src.mods.size(); j++)
    for (auto& x : dst_elems)
      if (dst.is_zero(dst.smul(src.mods[j], x))) cands[j].push_back(x);
  Int total = 1;
  for (auto& c : cands) total *= (long)c.size();
  if (total > hom_cap) throw std::runtime_error("abelian embedding enumeration budget");
  Int injective_index = dst.size() / src.size();
  if (dst.size() % src.size() != 0) return false;
  std::vector<size_t> idx(src.mods.size(), 0);
  std::vector<std::vector<Int>> img(src.mods.size());
  if (src.mods.empty()) return f(img, dst.quotient_mu(img));
  for (;;) {
    for (size_t j = 0; j < src.mods.size(); j++) img[j] = cands[j][idx[j]];
    auto diag = dst.quotient_diag(img);
    Int qsize = 1;
    long mu = 0;
    for (auto& d : diag) {
      qsize *= d;
      if (d > 1) mu++;
    }
    if (qsize == injective_index && f(img, mu)) return true;
    int i = (int)idx.size() - 1;
    while (i >= 0 && ++idx[i] == cands[i].size()) idx[i--] = 0;
    if (i < 0) break;
  }
  return false;
}

inline Torsion p_torsion(const AbelianNF& a, const Int& p) {
  Torsion t;
  for (int e : p_exponents(a, p)) t.mods.push_back(ipow(p, e));
  return t;
}

}  // namespace detail

// Does an epimorphism B ->> A exist?  Invariant-factor alignment: the i-th
// largest factor of A divides the (i - surplus)-th largest of B, the surplus
// being the extra free rank of B.
inline bool is_quotient(const AbelianNF& a, const AbelianNF& b) {
  if (a.rank > b.rank) return false;
  long s = b.rank - a.rank;
  long ta = (long)a.factors.size(), tb = (long)b.factors.size();
  for (long i = 0; i < ta; i++) {
    long j = i - s;  // both lists descending: index from the largest
    if (j < 0) continue;
    if (j >= tb) return false;
    if (b.factors[tb - 1 - j] % a.factors[ta - 1 - i] != 0) return false;
  }
  return true;
}

// Does torsion(A) embed into torsion(B)?  Per prime, the sorted exponent
// lists must dominate componentwise.
inline bool torsion_embeds(const AbelianNF& a, const AbelianNF& b) {
  for (auto& p : detail::torsion_primes(a, b)) {
    auto la = detail::p_exponents(a, p), lb = detail::p_exponents(b, p);
    if (la.size() > lb.size()) return false;
    for (size_t i = 0; i < la.size(); i++)
      if (la[i] > lb[i]) return false;
  }
  return true;
}

enum class Tri { False, True, Unknown };

// A converges to B iff some epimorphism B ->> A is injective on torsion(B):
// equivalently rank(A) <= rank(B), and for each prime p some embedding of the
// p-torsion of B into that of A has a cokernel needing at most
// rank(B) - rank(A) generators.  Exact whenever the enumeration fits the cap.
inline Tri preceq_abelian(const AbelianNF& a, const AbelianNF& b, long hom_cap = 1'000'000) {
  if (!a.infinite() || !b.infinite())
    throw std::invalid_argument("preceq_abelian expects infinite groups");
  if (a.rank > b.rank) return Tri::False;
  long s = b.rank - a.rank;
  bool capped = false;
  for (auto& p : detail::torsion_primes(a, b)) {
    // an embedding exists iff the exponent lists dominate componentwise
    auto la = detail::p_exponents(b, p), lb = detail::p_exponents(a, p);
    if (la.size() > lb.size()) return Tri::False;
    for (size_t i = 0; i < la.size(); i++)
      if (la[i] > lb[i]) return Tri::False;
    auto tb = detail::p_torsion(b, p), ta = detail::p_torsion(a, p);
    try {
      bool found = detail::for_each_embedding(
          tb, ta, [&](const std::vector<std::vector<Int>>&, long mu) { return mu <= s; },
          hom_cap);
      if (!found) return Tri::False;
    } catch (const std::runtime_error&) {
      capped = true;
    }
  }
  return capped ? Tri::Unknown : Tri::True;
}

// Independent oracle: global (all primes at once) enumeration of injective
// homomorphisms torsion(B) -> torsion(A), accepting when the full quotient
// A / image needs at most rank(B) generators.
inline bool preceq_abelian_oracle(const AbelianNF& a, const AbelianNF& b,
                                  long hom_cap = 1'000'000) {
  if (!a.infinite() || !b.infinite())
    throw std::invalid_argument("preceq_abelian_oracle expects infinite groups");
  if (a.rank > b.rank) return false;
  detail::Torsion ta{a.factors}, tb{b.factors};
  return detail::for_each_embedding(
      tb, ta,
      [&](const std::vector<std::vector<Int>>&, long mu) { return a.rank + mu <= b.rank; },
      hom_cap);
}

// Upper bound from the net property: both sides converge to Z^max(a,b) where
// a, b count all cyclic factors.
inline AbelianNF upper_bound(const AbelianNF& a, const AbelianNF& b) {
  AbelianNF u;
  u.rank = std::max(a.rank + (long)a.factors.size(), b.rank + (long)b.factors.size());
  return u;
}

// A_U = (+)_{i in U} Z/p_i (+) Z^{1 + N - #U}; the order on the family is
// reverse inclusion of the subsets.
inline std::vector<AbelianNF> poset_from_subsets(const std::vector<Int>& primes,
                                                 const std::vector<std::vector<int>>& subsets) {
  for (size_t i = 0; i < primes.size(); i++)
    for (size_t j = i + 1; j < primes.size(); j++)
      if (primes[i] == primes[j]) throw std::invalid_argument("repeated primes");
  std::vector<AbelianNF> out;
  for (auto& u : subsets) {
    std::vector<Int> raw;
    for (int i : u) raw.push_back(primes.at(i));
    raw.insert(raw.end(), 1 + primes.size() - u.size(), Int(0));
    out.push_back(abelian_nf(raw));
  }
  return out;
}

// Replace each primary component Z/p^v by Z/sigma(p)^v; primes not listed in
// the permutation are fixed.
inline AbelianNF sigma_action(const std::vector<std::pair<Int, Int>>& sigma, const AbelianNF& a) {
  auto lookup = [&](const Int& p) {
    for (auto& [from, to] : sigma)
      if (from == p) return to;
    return p;
  };
  {
    // domain and range must coincide as sets (permutation of a prime list)
    std::vector<Int> dom, ran;
    for (auto& [f, t] : sigma) {
      dom.push_back(f);
      ran.push_back(t);
    }
    std::sort(dom.begin(), dom.end());
    std::sort(ran.begin(), ran.end());
    if (dom != ran) throw std::invalid_argument("sigma_action: not a permutation");
  }
  std::map<Int, std::vector<int>> exps;  // new prime -> exponents, descending
  for (auto& d : a.factors)
    for (auto& [p, e] : detail::factorize(d)) exps[lookup(p)].push_back(e);
  size_t parts = 0;
  for (auto& [p, es] : exps) {
    std::sort(es.rbegin(), es.rend());
    parts = std::max(parts, es.size());
  }
  AbelianNF out;
  out.rank = a.rank;
  for (size_t i = parts; i-- > 0;) {
    Int d = 1;
    for (auto& [p, es] : exps)
      if (i < es.size()) d *= ipow(p, es[i]);
    out.factors.insert(out.factors.begin(), d);
  }
  return out;
}

// All infinite groups with rank 1..max_rank and torsion a divisor chain of at
// most two factors with exponent <= max_exponent and order <= max_order.
inline std::vector<AbelianNF> abelian_catalog(long max_rank = 2, long max_exponent = 12,
                                              long max_order = 36) {
  std::vector<std::vector<Int>> torsions{{}};
  for (long d = 2; d <= max_exponent; d++) torsions.push_back({Int(d)});
  for (long d1 = 2; d1 <= max_exponent; d1++)
    for (long d2 = d1; d2 <= max_exponent; d2 += d1)
      if (d1 * d2 <= max_order) torsions.push_back({Int(d1), Int(d2)});
  std::vector<AbelianNF> out;
  for (long r = 1; r <= max_rank; r++)
    for (auto& t : torsions) {
      AbelianNF a;
      a.rank = r;
      a.factors = t;
      out.push_back(std::move(a));
    }
  return out;
}

// Constructive side of the comparison: a witness marking of A agreeing with
// the standard marking of B at every requested radius.  Torsion generators of
// B map through an injective homomorphism, surplus free generators carry the
// cokernel generators displaced by powers of 2R+1 along the first free
// coordinate.
inline Witness preceq_order_witness(const AbelianNF& a, const AbelianNF& b,
                                    long hom_cap = 1'000'000) {
  if (!a.infinite() || !b.infinite())
    throw std::invalid_argument("preceq_order_witness expects infinite groups");
  long s = b.rank - a.rank;
  if (s < 0) throw std::invalid_argument("preceq_order_witness: rank(A) > rank(B)");
  detail::Torsion ta{a.factors}, tb{b.factors};
  std::vector<std::vector<Int>> emb;       // images of B's torsion generators
  std::vector<std::vector<Int>> cokernel;  // <= s extra torsion generators
  bool found = detail::for_each_embedding(
      tb, ta,
      [&](const std::vector<std::vector<Int>>& img, long mu) {
        if (a.rank + mu > b.rank) return false;
        // smallest tuple of elements completing the image to all of torsion(A)
        auto elems = ta.elements();
        for (long k = 0; k <= s; k++) {
          std::vector<size_t> idx(k, 0);
          for (;;) {
            std::vector<std::vector<Int>> gens = img;
            for (long j = 0; j < k; j++) gens.push_back(elems[idx[j]]);
            if (ta.quotient_mu(gens) == 0) {
              emb = img;
              cokernel.assign(gens.begin() + img.size(), gens.end());
              return true;
            }
            int i = k - 1;
            while (i >= 0 && ++idx[i] == elems.size()) idx[i--] = 0;
            if (i < 0) break;
          }
        }
        return false;
      },
      hom_cap);
  if (!found) throw std::invalid_argument("preceq_order_witness: A does not converge to B");

  Witness w;
  w.case_id = "abelian_order";
  w.params = {{"A", a.str()}, {"B", b.str()}};
  AbelianNF acopy = a, bcopy = b;
  auto coker = cokernel;
  w.source = [acopy, emb, coker, s](long R) {
    auto model = std::static_pointer_cast<const FinAbelian>(abelian_model(acopy));
    size_t t = acopy.factors.size();
    auto lift = [&](const std::vector<Int>& tors, const Int& free1) {
      std::vector<Int> v(tors);
      v.resize(t + acopy.rank, 0);
      v[t] += free1;
      return model->make(std::move(v));
    };
    std::vector<Elem> elems;
    for (auto& x : emb) elems.push_back(lift(x, 0));
    Int M = 2 * R + 1, pw = M;
    for (long j = 0; j < s; j++, pw *= M)
      elems.push_back(lift(j < (long)coker.size() ? coker[j] : std::vector<Int>(t, 0), pw));
    for (long i = 0; i < acopy.rank; i++) {
      std::vector<Int> v(t + acopy.rank, 0);
      v[t + i] = 1;
      elems.push_back(model->make(std::move(v)));
    }
    return mark_elems(model, std::move(elems));
  };
  // target marking order matches: torsion generators, surplus free, free
  {
    auto model = std::static_pointer_cast<const FinAbelian>(abelian_model(bcopy));
    std::vector<Elem> elems;
    size_t t = bcopy.factors.size();
    for (size_t j = 0; j < t; j++) elems.push_back(model->gen((int)j));
    for (long j = 0; j < s; j++) elems.push_back(model->gen((int)(t + a.rank + j)));
    for (long i = 0; i < a.rank; i++) elems.push_back(model->gen((int)(t + i)));
    w.target = mark_elems(model, std::move(elems));
  }
  return w;
}

}  // namespace mg
