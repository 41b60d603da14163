#pragma once
// Grigorchuk-specific constructions: distinctive tuples (the orbit points of
// the word prefixes are pairwise distinct) and almost-identity words for
// wreath products.
#include "mg/ball.hpp"
#include "mg/models/grigorchuk.hpp"

namespace mg {

namespace detail {

// generator strings without adjacent repeats (all four generators are
// involutions), enumerated by length then lexicographically
inline bool next_grig_string(std::vector<int>& v, int cap_len) {
  for (;;) {
    int i = (int)v.size() - 1;
    while (i >= 0 && v[i] == 3) v[i--] = 0;
    if (i < 0) {
      if ((int)v.size() >= cap_len) return false;
      v.assign(v.size() + 1, 0);
    } else {
      v[i]++;
    }
    bool ok = true;
    for (size_t j = 1; j < v.size(); j++) ok = ok && v[j] != v[j - 1];
    if (ok) return true;
  }
}

}  // namespace detail

// Generating k-tuple of Grigorchuk elements such that the basepoint images
// under the prefixes of w are pairwise distinct; in particular w(tuple) != 1.
// Starts from the standard generators and repairs the first colliding prefix
// by multiplying one entry with a commutator-subgroup element fixing the
// points that must not move.
inline std::vector<Elem> distinctive_tuple(const Word& w, int k = 3, long repair_cap = 256,
                                           int c_len_cap = 12) {
  if (w.empty()) throw std::invalid_argument("distinctive_tuple: trivial word");
  if (k < 3) throw std::invalid_argument("distinctive_tuple needs k >= 3 to generate");
  if (w.arity > k) throw std::invalid_argument("word arity exceeds tuple size");
  auto grig = std::make_shared<Grigorchuk>();
  std::vector<Elem> g;
  for (int i = 0; i < k; i++) g.push_back(grig->gen(i % 4));
  const long L = (long)w.size();

  auto prefix_points = [&](std::vector<std::string>& pts) {
    pts.assign(1, "");
    for (int l : w.letters) {
      Elem e = l > 0 ? g[l - 1] : grig->inv(g[-l - 1]);
      pts.push_back(grig->apply_orbit(e, pts.back()));
    }
  };

  auto in_commutator_subgroup = [&](const Elem& e) {
    for (auto& v : grig->abelianize(e))
      if (imod(v, 2) != 0) return false;
    return true;
  };

  std::vector<std::string> pts;
  for (long iter = 0; iter < repair_cap; iter++) {
    prefix_points(pts);
    long n = -1;
    for (long t = 1; t <= L && n < 0; t++)
      for (long s = 0; s < t; s++)
        if (pts[t] == pts[s]) {
          n = t;
          break;
        }
    if (n < 0) {
      MarkedGroup mg = mark_elems(grig, g);
      if (!mg.generates()) throw std::logic_error("distinctive tuple lost generation");
      return g;
    }
    int letter = w.letters[n - 1];
    int j = std::abs(letter);
    // points that must stay put when entry j is perturbed on the side away
    // from the colliding step
    std::vector<std::string> fixed;
    for (long t = 1; t < n; t++) {
      if (std::abs(w.letters[t - 1]) != j) continue;
      bool same_sign = (w.letters[t - 1] > 0) == (letter > 0);
      fixed.push_back(same_sign ? pts[t] : pts[t - 1]);
    }
    bool found = false;
    std::vector<int> cand;
    while (!found && detail::next_grig_string(cand, c_len_cap)) {
      Elem c = grig->id();
      for (int i : cand) c = grig->mul(c, grig->gen(i));
      if (!in_commutator_subgroup(c)) continue;
      Elem act = letter > 0 ? c : grig->inv(c);
      bool ok = true;
      for (auto& y : fixed) ok = ok && grig->apply_orbit(c, y) == y;
      if (!ok) continue;
      std::string moved = grig->apply_orbit(act, pts[n]);
      for (long s = 0; s < n; s++) ok = ok && moved != pts[s];
      if (!ok) continue;
      g[j - 1] = letter > 0 ? grig->mul(g[j - 1], c) : grig->mul(c, g[j - 1]);
      found = true;
    }
    if (!found)
      throw std::runtime_error("distinctive_tuple: repair search exhausted at prefix " +
                               std::to_string(n));
  }
  throw std::runtime_error("distinctive_tuple: repair iteration cap reached");
}

// 3-element generating tuple of the Grigorchuk group whose marked Cayley
// graph has no nontrivial relation shorter than min_girth.  Candidates are
// short products of the standard generators whose order is at least
// min_girth (or unresolved, hence large); triples are screened by the
// abelianization span and certified by a ball-based girth computation.
inline std::vector<Elem> high_girth_tuple(long min_girth = 6, int len_cap = 6,
                                          size_t cand_cap = 24, long state_cap = kDefaultStateCap) {
  auto grig = std::make_shared<Grigorchuk>();
  std::vector<Elem> cand;
  std::vector<int> v;
  while (detail::next_grig_string(v, len_cap) && cand.size() < cand_cap) {
    Elem e = grig->id();
    for (int i : v) e = grig->mul(e, grig->gen(i));
    Int ord = grig->order_by_squaring(e);
    if (ord != 0 && ord < min_girth) continue;
    bool dup = false;
    for (auto& c : cand) dup = dup || c.key == e.key;
    if (!dup) cand.push_back(e);
  }
  long Rmax = (min_girth + 1) / 2;
  for (size_t i = 0; i < cand.size(); i++)
    for (size_t j = i + 1; j < cand.size(); j++)
      for (size_t l = j + 1; l < cand.size(); l++) {
        MarkedGroup m = mark_elems(grig, {cand[i], cand[j], cand[l]});
        if (!m.generates()) continue;
        GirthResult g = girth(m, Rmax, state_cap);
        if (!g.value || *g.value >= min_girth) return m.marking_elems;
      }
  throw std::runtime_error("high_girth_tuple: search exhausted");
}

// u(x_1..x_k) = v(w^{a}, w^{a^2}, ..., w^{a^m}) with a chosen so that w and a
// generate a rank-2 free subgroup (equivalently, they do not commute); then
// the conjugates w^{a^i} are a free basis and u is nontrivial.
inline Word wreath_almost_identity(const Word& v, const Word& w, int a_len_cap = 6) {
  if (v.empty() || w.empty()) throw std::invalid_argument("wreath_almost_identity: trivial word");
  int k = w.arity;
  Word a;
  bool found = false;
  for (int len = 1; len <= a_len_cap && !found; len++) {
    std::vector<int> ls(len, 0);
    // odometer over signed letters in the order 1, -1, 2, -2, ...
    auto letter_of = [k](int code) { return code % 2 == 0 ? code / 2 + 1 : -(code / 2 + 1); };
    std::vector<int> code(len, 0);
    for (;;) {
      for (int i = 0; i < len; i++) ls[i] = letter_of(code[i]);
      Word cand = make_word(ls, k);
      if ((int)cand.size() == len && !word_commutator(w, cand).empty()) {
        a = cand;
        found = true;
        break;
      }
      int i = len - 1;
      while (i >= 0 && ++code[i] == 2 * k) code[i--] = 0;
      if (i < 0) break;
    }
  }
  if (!found)
    throw std::runtime_error("wreath_almost_identity: no free partner for w (rank 1 base?)");
  std::vector<Word> args;
  for (int i = 1; i <= v.arity; i++) {
    Word ai = word_pow(a, i);
    args.push_back(word_concat(word_concat(word_inverse(ai), w), ai));
  }
  Word u = word_substitute(v, args);
  if (u.empty()) throw std::logic_error("wreath_almost_identity collapsed");
  return u;
}

}  // namespace mg
