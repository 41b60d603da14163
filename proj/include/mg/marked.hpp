#pragma once
// A group model with an ordered finite generating set (words in the model's
// built-in generators).  Order matters: ball comparison respects the marking.
#include "mg/group.hpp"
#include "mg/smith.hpp"

namespace mg {

inline Elem evaluate_word(const Group& g, const Word& w, const std::vector<Elem>& args) {
  if (w.arity > (int)args.size()) throw std::invalid_argument("word arity exceeds tuple size");
  Elem r = g.id();
  for (int l : w.letters) {
    const Elem& x = args[std::abs(l) - 1];
    r = g.mul(r, l > 0 ? x : g.inv(x));
  }
  return r;
}

struct MarkedGroup {
  GroupPtr model;
  std::vector<Word> marking;       // words over the built-in generators (may be
                                   // empty when the marking is given by elements)
  std::vector<Elem> marking_elems; // their evaluations

  int arity() const { return (int)marking_elems.size(); }

  Elem evaluate(const Word& w) const { return evaluate_word(*model, w, marking_elems); }

  // Generation test: marking images must span the abelianization.  Exact for
  // the abelian / class-2 nilpotent models and for Grigorchuk (all maximal
  // subgroups have index 2); a necessary condition for the other models.
  bool generates() const {
    auto mods = model->ab_moduli();
    IMat m(mods.size());
    for (auto& e : marking_elems) {
      auto v = model->abelianize(e);
      for (size_t i = 0; i < mods.size(); i++) m[i].push_back(v[i]);
    }
    return columns_generate(m, mods);
  }
};

inline MarkedGroup mark(GroupPtr g, std::vector<Word> marking) {
  MarkedGroup mg;
  mg.model = std::move(g);
  std::vector<Elem> gens;
  for (int i = 0; i < mg.model->ngens(); i++) gens.push_back(mg.model->gen(i));
  for (auto& w : marking) mg.marking_elems.push_back(evaluate_word(*mg.model, w, gens));
  mg.marking = std::move(marking);
  return mg;
}

// default marking: the model's built-in generators
inline MarkedGroup mark_std(GroupPtr g) {
  std::vector<Word> m;
  int n = g->ngens();
  for (int i = 1; i <= n; i++) m.push_back(make_word({i}, n));
  return mark(std::move(g), std::move(m));
}

// marking given directly by elements (e.g. exponents too large for words)
inline MarkedGroup mark_elems(GroupPtr g, std::vector<Elem> elems) {
  MarkedGroup mg;
  mg.model = std::move(g);
  mg.marking_elems = std::move(elems);
  return mg;
}

inline MarkedGroup mark_words(GroupPtr g, const std::vector<std::string>& words) {
  std::vector<Word> m;
  auto names = g->gen_names();
  for (auto& s : words) m.push_back(parse_word(s, g->ngens(), names));
  return mark(std::move(g), std::move(m));
}

}  // namespace mg
