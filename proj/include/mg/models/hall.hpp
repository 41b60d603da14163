#pragma once
// Hall's group H(Z^2) and its standard quotients H_phi.
// H = Z^2 x| N, where N is the quotient of the free class-2 nilpotent group on
// {a_p : p in Z^2} by c_{p,q} = c_{p+r,q+r} (c_{p,q} = [a_p, a_q] central), so
// c_{p,q} = C(q-p); the centre is freely generated by {C(v) : v in (Z^2)_+}.
// A prime colouring phi imposes C(v)^{phi(v)} = 1 (phi(v)=1 kills C(v)).
// Normal form: head z, a-part sorted by lex key, central part on (Z^2)_+.
#include "mg/colouring.hpp"
#include "mg/group.hpp"

namespace mg {

class HallGroup final : public Group {
 public:
  struct Payload {
    Vec2 head{0, 0};
    std::map<Vec2, Int> a;    // a-exponents, no zeros
    std::map<Vec2, Int> c;    // central exponents on the positive cone, no zeros
  };

  explicit HallGroup(PrimeColouring phi) : phi_(std::move(phi)) {}

  const PrimeColouring& colouring() const { return phi_; }

  std::string name() const override { return "Hall(" + phi_.key() + ")"; }
  int ngens() const override { return 3; }
  std::vector<std::string> gen_names() const override { return {"x", "y", "a"}; }
  Elem id() const override { return wrap({}); }
  Elem gen(int i) const override {
    Payload p;
    if (i == 0) p.head = {1, 0};
    else if (i == 1) p.head = {0, 1};
    else p.a[{0, 0}] = 1;
    return wrap(std::move(p));
  }

  Elem mul(const Elem& A, const Elem& B) const override {
    const Payload& g = val(A);
    const Payload& h = val(B);
    Payload r;
    r.head = {g.head.first + h.head.first, g.head.second + h.head.second};
    r.c = g.c;
    for (auto& [v, e] : h.c) add_central(r.c, v, e);
    // shift g's a-part by h's head (moving the head left through it)
    std::map<Vec2, Int> ga;
    for (auto& [p, e] : g.a) ga[{p.first + h.head.first, p.second + h.head.second}] = e;
    // merge sorted products: moving a_q^beta (from h) left past a_p^alpha (from ga)
    // for p > q costs C(q-p)^{alpha*beta}
    r.a = ga;
    for (auto& [q, beta] : h.a) {
      for (auto& [p, alpha] : ga)
        if (p > q) add_central(r.c, {q.first - p.first, q.second - p.second}, alpha * beta);
      Int& t = r.a[q];
      t += beta;
      if (t == 0) r.a.erase(q);
    }
    return wrap(std::move(r));
  }

  Elem inv(const Elem& A) const override {
    const Payload& g = val(A);
    // candidate with correct head and a-part, then fix the central defect
    Payload cand;
    cand.head = neg(g.head);
    for (auto& [p, e] : g.a)
      cand.a[{p.first - g.head.first, p.second - g.head.second}] = -e;
    Elem c = wrap(Payload(cand));
    Elem prod = mul(A, c);  // purely central
    const Payload& d = val(prod);
    Payload r = cand;
    for (auto& [v, e] : d.c) add_central(r.c, v, -e);
    return wrap(std::move(r));
  }

  // abelianization Z^3: head coordinates and total a-exponent (all a_p identified)
  std::vector<Int> ab_moduli() const override { return {0, 0, 0}; }
  std::vector<Int> abelianize(const Elem& A) const override {
    const Payload& g = val(A);
    Int s = 0;
    for (auto& [p, e] : g.a) s += e;
    return {g.head.first, g.head.second, s};
  }

  static const Payload& val(const Elem& e) { return *static_cast<const Payload*>(e.p.get()); }

 private:
  PrimeColouring phi_;

  // add e to the central coordinate at v (any sign), reducing mod phi
  void add_central(std::map<Vec2, Int>& c, Vec2 v, Int e) const {
    if (v.first == 0 && v.second == 0) return;
    if (!positive_cone(v)) { v = neg(v); e = -e; }
    Int ord = phi_.at(v);
    if (ord == 1) return;
    Int& t = c[v];
    t += e;
    if (ord > 1) t = imod(t, ord);
    if (t == 0) c.erase(v);
  }

  Elem wrap(Payload p) const {
    // re-reduce central part defensively (payloads built internally are reduced)
    std::map<Vec2, Int> c;
    for (auto& [v, e] : p.c) add_central(c, v, e);
    p.c = std::move(c);
    std::string key = "h:(" + istr(p.head.first) + "," + istr(p.head.second) + ")a[";
    for (auto& [v, e] : p.a)
      key += "(" + istr(v.first) + "," + istr(v.second) + "):" + istr(e) + ";";
    key += "]c[";
    for (auto& [v, e] : p.c)
      key += "(" + istr(v.first) + "," + istr(v.second) + "):" + istr(e) + ";";
    key += "]";
    Elem e;
    e.p = std::make_shared<Payload>(std::move(p));
    e.key = std::move(key);
    return e;
  }
};

}  // namespace mg
