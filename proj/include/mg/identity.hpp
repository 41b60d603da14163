#pragma once
// Identities and their falsification: primitive roots, merging a list of
// identities into one, and bounded falsifier searches.
#include <numeric>
#include <optional>

#include "mg/ball.hpp"

namespace mg {

// w = root^exponent with root not a proper power (conjugator preserved:
// if w = u c u~ cyclically, root = u r u~ for the primitive period r of c).
inline std::pair<Word, long> primitive_root(const Word& w) {
  if (w.empty()) return {w, 1};
  auto [u, c] = cyclic_decompose(w);
  size_t len = c.size(), p = len;
  for (size_t d = 1; d < len; d++) {
    if (len % d) continue;
    bool periodic = true;
    for (size_t i = d; i < len && periodic; i++) periodic = c.letters[i] == c.letters[i % d];
    if (periodic) {
      p = d;
      break;
    }
  }
  std::vector<int> ls = u.letters;
  ls.insert(ls.end(), c.letters.begin(), c.letters.begin() + p);
  Word ui = word_inverse(u);
  ls.insert(ls.end(), ui.letters.begin(), ui.letters.end());
  return {make_word(std::move(ls), w.arity), (long)(len / p)};
}

// A single nontrivial word vanishing whenever any input does: fold with
// "common power if the pair commutes freely, commutator otherwise".
inline Word merge_identities(const std::vector<Word>& ws) {
  if (ws.empty()) throw std::invalid_argument("merge_identities needs at least one word");
  for (auto& w : ws)
    if (w.empty()) throw std::invalid_argument("merge_identities: trivial input word");
  Word v = ws[0];
  for (size_t i = 1; i < ws.size(); i++) {
    const Word& w = ws[i];
    if (word_commutator(v, w).empty()) {
      // commuting free-group elements are powers of one primitive root
      auto [rv, ev] = primitive_root(v);
      auto [rw, ew] = primitive_root(w);
      if (!(rv == rw) && !(rv == word_inverse(rw)))
        throw std::logic_error("commuting words without a common root");
      v = word_pow(rv, std::lcm(ev, ew));
    } else {
      v = word_commutator(v, w);
    }
  }
  return v;
}

// Search tuples from balls of growing radius for w(tuple) != 1; sound when a
// tuple is returned.  none_found is definitive only when the ball stabilizes
// (finite group exhausted); otherwise it reflects the budget.
inline std::optional<std::vector<Elem>> falsify_identity(GroupPtr model, const Word& w,
                                                         long budget = 200'000,
                                                         long max_radius = 8) {
  if (w.empty()) throw std::invalid_argument("falsify_identity: trivial word");
  MarkedGroup mg = mark_std(model);
  int n = w.arity;
  long spent = 0;
  size_t prev = 0;
  for (long r = 1; r <= max_radius; r++) {
    auto elems = elements_in_ball(mg, r);
    if (elems.size() == prev) return std::nullopt;  // whole group enumerated
    prev = elems.size();
    std::vector<size_t> idx(n, 0);
    std::vector<Elem> args(n, model->id());
    for (;;) {
      if (++spent > budget) return std::nullopt;
      for (int i = 0; i < n; i++) args[i] = elems[idx[i]];
      if (!model->is_id(evaluate_word(*model, w, args))) return args;
      int i = n - 1;
      while (i >= 0 && ++idx[i] == elems.size()) idx[i--] = 0;
      if (i < 0) break;
    }
  }
  return std::nullopt;
}

// Same search restricted to generating k-tuples (abelianization-span test).
inline std::optional<std::vector<Elem>> falsify_almost_identity(GroupPtr model, const Word& w,
                                                                int k, long budget = 200'000,
                                                                long max_radius = 8) {
  if (w.empty()) throw std::invalid_argument("falsify_almost_identity: trivial word");
  if (w.arity > k) throw std::invalid_argument("word arity exceeds tuple size");
  MarkedGroup mg = mark_std(model);
  long spent = 0;
  size_t prev = 0;
  for (long r = 1; r <= max_radius; r++) {
    auto elems = elements_in_ball(mg, r);
    if (elems.size() == prev) return std::nullopt;
    prev = elems.size();
    std::vector<size_t> idx(k, 0);
    std::vector<Elem> args(k, model->id());
    for (;;) {
      if (++spent > budget) return std::nullopt;
      for (int i = 0; i < k; i++) args[i] = elems[idx[i]];
      if (mark_elems(model, args).generates() &&
          !model->is_id(evaluate_word(*model, w, args)))
        return args;
      int i = k - 1;
      while (i >= 0 && ++idx[i] == elems.size()) idx[i--] = 0;
      if (i < 0) break;
    }
  }
  return std::nullopt;
}

}  // namespace mg
