#pragma once
// Wreath products: A wr B (restricted, base acting on itself) and the
// permutational wreath product A wr_X Grig with X = orbit of 0^inf, whose
// points are finite binary words modulo trailing zeros.
#include <map>

#include "mg/group.hpp"
#include "mg/models/grigorchuk.hpp"

namespace mg {

class WreathProduct final : public Group {
 public:
  struct Payload {
    // base-element key -> (base element, lamp value); no identity lamp values
    std::map<std::string, std::pair<Elem, Elem>> f;
    Elem head;
  };

  WreathProduct(GroupPtr lamp, GroupPtr base) : lamp_(std::move(lamp)), base_(std::move(base)) {}

  const GroupPtr& lamp() const { return lamp_; }
  const GroupPtr& base() const { return base_; }

  std::string name() const override { return "(" + lamp_->name() + ")wr(" + base_->name() + ")"; }
  int ngens() const override { return lamp_->ngens() + base_->ngens(); }
  Elem id() const override { return wrap({{}, base_->id()}); }
  Elem gen(int i) const override {
    int nl = lamp_->ngens();
    if (i < nl) return lamp_at(lamp_->gen(i), base_->id());
    return wrap({{}, base_->gen(i - nl)});
  }

  // (f,b)(f',b') = (x -> f(x) f'(b^-1 x), b b')
  Elem mul(const Elem& A, const Elem& B) const override {
    const Payload& a = val(A);
    const Payload& b = val(B);
    Payload r;
    r.f = a.f;
    for (auto& [k, pv] : b.f) {
      Elem x = base_->mul(a.head, pv.first);  // b * x, the support point shifted by head
      put(r.f, x, pv.second);
    }
    r.head = base_->mul(a.head, b.head);
    return wrap(std::move(r));
  }
  Elem inv(const Elem& A) const override {
    const Payload& a = val(A);
    Payload r;
    r.head = base_->inv(a.head);
    for (auto& [k, pv] : a.f) {
      Elem x = base_->mul(r.head, pv.first);
      put(r.f, x, lamp_->inv(pv.second));
    }
    return wrap(std::move(r));
  }
  std::vector<Int> ab_moduli() const override {
    auto m = lamp_->ab_moduli();
    auto m2 = base_->ab_moduli();
    m.insert(m.end(), m2.begin(), m2.end());
    return m;
  }
  std::vector<Int> abelianize(const Elem& A) const override {
    const Payload& a = val(A);
    auto ml = lamp_->ab_moduli();
    std::vector<Int> v(ml.size(), 0);
    for (auto& [k, pv] : a.f) {
      auto w = lamp_->abelianize(pv.second);
      for (size_t i = 0; i < v.size(); i++) v[i] += w[i];
    }
    for (size_t i = 0; i < v.size(); i++)
      if (ml[i] > 0) v[i] = imod(v[i], ml[i]);
    auto v2 = base_->abelianize(a.head);
    v.insert(v.end(), v2.begin(), v2.end());
    return v;
  }

  // lamp value g placed at base point x (head trivial)
  Elem lamp_at(const Elem& g, const Elem& x) const {
    Payload p;
    p.head = base_->id();
    put(p.f, x, g);
    return wrap(std::move(p));
  }
  Elem base_elem(const Elem& b) const { return wrap({{}, b}); }

  static const Payload& val(const Elem& e) { return *static_cast<const Payload*>(e.p.get()); }

 private:
  GroupPtr lamp_, base_;

  void put(std::map<std::string, std::pair<Elem, Elem>>& f, const Elem& x, const Elem& g) const {
    auto it = f.find(x.key);
    if (it == f.end()) {
      if (!lamp_->is_id(g)) f.emplace(x.key, std::make_pair(x, g));
    } else {
      Elem prod = lamp_->mul(it->second.second, g);
      if (lamp_->is_id(prod)) f.erase(it);
      else it->second.second = std::move(prod);
    }
  }

  Elem wrap(Payload p) const {
    Elem e;
    e.key = "wr:[";
    for (auto& [k, pv] : p.f) e.key += "{" + k + "->" + pv.second.key + "}";
    e.key += "]" + p.head.key;
    e.p = std::make_shared<Payload>(std::move(p));
    return e;
  }
};

class PermWreathGrig final : public Group {
 public:
  struct Payload {
    std::map<std::string, Elem> f;  // orbit point (canonical finite word) -> lamp value
    Elem head;                      // Grigorchuk element
  };

  explicit PermWreathGrig(GroupPtr lamp)
      : lamp_(std::move(lamp)), grig_(std::make_shared<Grigorchuk>()) {}

  const GroupPtr& lamp() const { return lamp_; }
  const std::shared_ptr<const Grigorchuk>& grig() const { return grig_; }

  std::string name() const override { return "(" + lamp_->name() + ")wrXGrig"; }
  int ngens() const override { return lamp_->ngens() + 4; }
  Elem id() const override { return wrap({{}, grig_->id()}); }
  Elem gen(int i) const override {
    int nl = lamp_->ngens();
    if (i < nl) return lamp_at(lamp_->gen(i), "");
    return wrap({{}, grig_->gen(i - nl)});
  }

  // (f,g)(f',g') = (x -> f(x) f'(x g), g g')   [right action on the orbit]
  Elem mul(const Elem& A, const Elem& B) const override {
    const Payload& a = val(A);
    const Payload& b = val(B);
    Payload r;
    r.f = a.f;
    for (auto& [x, v] : b.f) put(r.f, preimage(a.head, x), v);
    r.head = grig_->mul(a.head, b.head);
    return wrap(std::move(r));
  }
  Elem inv(const Elem& A) const override {
    const Payload& a = val(A);
    Payload r;
    r.head = grig_->inv(a.head);
    for (auto& [x, v] : a.f) put(r.f, grig_->apply_orbit(a.head, x), lamp_->inv(v));
    return wrap(std::move(r));
  }
  std::vector<Int> ab_moduli() const override {
    auto m = lamp_->ab_moduli();
    for (int i = 0; i < 3; i++) m.push_back(2);
    return m;
  }
  std::vector<Int> abelianize(const Elem& A) const override {
    const Payload& a = val(A);
    auto ml = lamp_->ab_moduli();
    std::vector<Int> v(ml.size(), 0);
    for (auto& [x, g] : a.f) {
      auto w = lamp_->abelianize(g);
      for (size_t i = 0; i < v.size(); i++) v[i] += w[i];
    }
    for (size_t i = 0; i < v.size(); i++)
      if (ml[i] > 0) v[i] = imod(v[i], ml[i]);
    auto v2 = grig_->abelianize(a.head);
    v.insert(v.end(), v2.begin(), v2.end());
    return v;
  }

  Elem lamp_at(const Elem& g, const std::string& point) const {
    Payload p;
    p.head = grig_->id();
    put(p.f, point, g);
    return wrap(std::move(p));
  }
  Elem base_elem(const Elem& g) const { return wrap({{}, g}); }

  static const Payload& val(const Elem& e) { return *static_cast<const Payload*>(e.p.get()); }

 private:
  GroupPtr lamp_;
  std::shared_ptr<const Grigorchuk> grig_;

  // y with y*g = x, i.e. y = x * g^-1
  std::string preimage(const Elem& g, const std::string& x) const {
    return grig_->apply_orbit(grig_->inv(g), x);
  }

  void put(std::map<std::string, Elem>& f, const std::string& x, const Elem& g) const {
    auto it = f.find(x);
    if (it == f.end()) {
      if (!lamp_->is_id(g)) f.emplace(x, g);
    } else {
      Elem prod = lamp_->mul(it->second, g);
      if (lamp_->is_id(prod)) f.erase(it);
      else it->second = std::move(prod);
    }
  }

  Elem wrap(Payload p) const {
    Elem e;
    e.key = "pw:[";
    for (auto& [x, v] : p.f) e.key += "{" + x + "->" + v.key + "}";
    e.key += "]" + p.head.key;
    e.p = std::make_shared<Payload>(std::move(p));
    return e;
  }
};

}  // namespace mg
