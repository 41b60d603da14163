#pragma once
// Direct products and free products of group models.
#include "mg/group.hpp"

namespace mg {

class DirectProduct final : public Group {
 public:
  struct Payload {
    Elem a, b;
  };

  DirectProduct(GroupPtr g1, GroupPtr g2) : g1_(std::move(g1)), g2_(std::move(g2)) {}

  const GroupPtr& left() const { return g1_; }
  const GroupPtr& right() const { return g2_; }

  std::string name() const override { return "(" + g1_->name() + ")x(" + g2_->name() + ")"; }
  int ngens() const override { return g1_->ngens() + g2_->ngens(); }
  Elem id() const override { return wrap({g1_->id(), g2_->id()}); }
  Elem gen(int i) const override {
    int n1 = g1_->ngens();
    if (i < n1) return wrap({g1_->gen(i), g2_->id()});
    return wrap({g1_->id(), g2_->gen(i - n1)});
  }
  Elem mul(const Elem& A, const Elem& B) const override {
    return wrap({g1_->mul(val(A).a, val(B).a), g2_->mul(val(A).b, val(B).b)});
  }
  Elem inv(const Elem& A) const override {
    return wrap({g1_->inv(val(A).a), g2_->inv(val(A).b)});
  }
  std::vector<Int> ab_moduli() const override {
    auto m = g1_->ab_moduli();
    auto m2 = g2_->ab_moduli();
    m.insert(m.end(), m2.begin(), m2.end());
    return m;
  }
  std::vector<Int> abelianize(const Elem& A) const override {
    auto v = g1_->abelianize(val(A).a);
    auto v2 = g2_->abelianize(val(A).b);
    v.insert(v.end(), v2.begin(), v2.end());
    return v;
  }

  Elem make(Elem a, Elem b) const { return wrap({std::move(a), std::move(b)}); }
  static const Payload& val(const Elem& e) { return *static_cast<const Payload*>(e.p.get()); }

 private:
  GroupPtr g1_, g2_;

  Elem wrap(Payload p) const {
    Elem e;
    e.key = "d:<" + p.a.key + "|" + p.b.key + ">";
    e.p = std::make_shared<Payload>(std::move(p));
    return e;
  }
};

class FreeProduct final : public Group {
 public:
  // alternating normal form: nontrivial syllables tagged by factor (0 or 1)
  using Payload = std::vector<std::pair<int, Elem>>;

  FreeProduct(GroupPtr g1, GroupPtr g2) : g1_(std::move(g1)), g2_(std::move(g2)) {}

  const GroupPtr& left() const { return g1_; }
  const GroupPtr& right() const { return g2_; }

  std::string name() const override { return "(" + g1_->name() + ")*(" + g2_->name() + ")"; }
  int ngens() const override { return g1_->ngens() + g2_->ngens(); }
  Elem id() const override { return wrap({}); }
  Elem gen(int i) const override {
    int n1 = g1_->ngens();
    if (i < n1) return wrap({{0, g1_->gen(i)}});
    return wrap({{1, g2_->gen(i - n1)}});
  }
  Elem mul(const Elem& A, const Elem& B) const override {
    Payload r = val(A);
    const Payload& b = val(B);
    size_t i = 0;
    while (i < b.size()) {
      const auto& [f, x] = b[i];
      if (!r.empty() && r.back().first == f) {
        const Group& gf = f == 0 ? *g1_ : *g2_;
        Elem prod = gf.mul(r.back().second, x);
        r.pop_back();
        if (!gf.is_id(prod)) {
          r.emplace_back(f, std::move(prod));
          // no further cancellation possible past a nontrivial syllable
          i++;
          for (; i < b.size(); i++) r.push_back(b[i]);
          break;
        }
        i++;
      } else {
        r.push_back(b[i]);
        i++;
      }
    }
    return wrap(std::move(r));
  }
  Elem inv(const Elem& A) const override {
    const Payload& a = val(A);
    Payload r;
    for (auto it = a.rbegin(); it != a.rend(); ++it)
      r.emplace_back(it->first, (it->first == 0 ? *g1_ : *g2_).inv(it->second));
    return wrap(std::move(r));
  }
  std::vector<Int> ab_moduli() const override {
    auto m = g1_->ab_moduli();
    auto m2 = g2_->ab_moduli();
    m.insert(m.end(), m2.begin(), m2.end());
    return m;
  }
  std::vector<Int> abelianize(const Elem& A) const override {
    size_t n1 = g1_->ab_moduli().size(), n2 = g2_->ab_moduli().size();
    std::vector<Int> v(n1 + n2, 0);
    for (auto& [f, x] : val(A)) {
      auto w = (f == 0 ? *g1_ : *g2_).abelianize(x);
      size_t off = f == 0 ? 0 : n1;
      for (size_t i = 0; i < w.size(); i++) v[off + i] += w[i];
    }
    auto mods = ab_moduli();
    for (size_t i = 0; i < v.size(); i++)
      if (mods[i] > 0) v[i] = imod(v[i], mods[i]);
    return v;
  }

  Elem make_syllables(Payload p) const { return wrap(std::move(p)); }
  static const Payload& val(const Elem& e) { return *static_cast<const Payload*>(e.p.get()); }

 private:
  GroupPtr g1_, g2_;

  Elem wrap(Payload p) const {
    Elem e;
    e.key = "f:";
    for (auto& [f, x] : p) e.key += std::to_string(f) + "{" + x.key + "}";
    e.p = std::make_shared<Payload>(std::move(p));
    return e;
  }
};

}  // namespace mg
