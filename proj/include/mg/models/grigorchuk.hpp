#pragma once
// The (first) Grigorchuk group acting on the binary rooted tree.
// Right action on infinite binary words, defined by the recursions
//   (0w)a = 1w          (1w)a = 0w
//   (0w)b = 0(wa)       (1w)b = 1(wc)
//   (0w)c = 0(wa)       (1w)c = 1(wd)
//   (0w)d = 0w          (1w)d = 1(wb)
// i.e. a swaps at the root, b = <<a,c>>, c = <<a,d>>, d = <<1,b>>.
// Elements are portraits: finite binary trees with leaves in the nucleus
// {1,a,b,c,d}; fully contracted, so equality is structural equality.
#include <array>
#include <cassert>

#include "mg/group.hpp"

namespace mg {

class Grigorchuk final : public Group {
 public:
  // leaf: 0..4 = 1,a,b,c,d;  -1 for an internal node
  struct Portrait {
    int leaf = 0;
    bool active = false;  // root permutation (nodes only; leaves know their own)
    std::shared_ptr<const Portrait> l, r;
  };
  using PP = std::shared_ptr<const Portrait>;

  Grigorchuk() {
    for (int i = 0; i < 5; i++) {
      auto p = std::make_shared<Portrait>();
      p->leaf = i;
      nucleus_[i] = p;
    }
  }

  std::string name() const override { return "Grig"; }
  int ngens() const override { return 4; }
  std::vector<std::string> gen_names() const override { return {"a", "b", "c", "d"}; }
  Elem id() const override { return wrap(nucleus_[0]); }
  Elem gen(int i) const override { return wrap(nucleus_[i + 1]); }
  Elem mul(const Elem& A, const Elem& B) const override { return wrap(pmul(val(A), val(B))); }
  Elem inv(const Elem& A) const override { return wrap(pinv(val(A))); }

  std::vector<Int> ab_moduli() const override { return {2, 2, 2}; }
  // Abelianization onto (Z/2)^3: a -> (1,0,0), b -> (0,1,0), c -> (0,0,1), d -> (0,1,1).
  std::vector<Int> abelianize(const Elem& A) const override {
    auto v = ab(val(A));
    return {Int(v[0]), Int(v[1]), Int(v[2])};
  }

  // Right action on a finite word, viewed as a prefix cylinder: length preserved.
  std::string apply(const Elem& A, const std::string& point) const {
    if (point.empty()) throw std::invalid_argument("empty point");
    std::string out;
    PP g = val(A);
    for (char ch : point) {
      if (ch != '0' && ch != '1') throw std::invalid_argument("point must be binary");
      auto [y, sec] = step(g, ch - '0');
      out += char('0' + y);
      g = sec;
    }
    return out;
  }

  // Image of the orbit point v000... under A, as a finite word with trailing
  // zeros stripped ("" = the basepoint 0^inf itself).
  std::string apply_orbit(const Elem& A, const std::string& v) const {
    std::string out;
    PP g = val(A);
    for (char ch : v) {
      auto [y, sec] = step(g, ch - '0');
      out += char('0' + y);
      g = sec;
    }
    // feed zeros until the remaining section fixes 0^inf; sections of leaves
    // terminate (1 stops; a,d drop to 1; b,c drop to a), so this halts
    while (g->leaf != 0) {
      auto [y, sec] = step(g, 0);
      out += char('0' + y);
      g = sec;
    }
    while (!out.empty() && out.back() == '0') out.pop_back();
    return out;
  }

  // Order by repeated squaring; 0 means "exceeds cap" (cap is a power of 2).
  Int order_by_squaring(const Elem& A, unsigned long cap = 1 << 16) const {
    Elem g = A;
    Int ord = 1;
    while (!is_id(g)) {
      g = mul(g, g);
      ord *= 2;
      if (ord > cap) return 0;
    }
    return ord;
  }

  static const PP& val(const Elem& e) { return *static_cast<const PP*>(e.p.get()); }

 private:
  PP nucleus_[5];

  Elem wrap(PP p) const {
    Elem e;
    std::string key = "G:";
    ser(p, key);
    e.p = std::make_shared<PP>(std::move(p));
    e.key = std::move(key);
    return e;
  }

  // wreath decomposition g = <<g0, g1>> sigma^active
  void decompose(const PP& g, PP& g0, PP& g1, bool& active) const {
    if (g->leaf < 0) { g0 = g->l; g1 = g->r; active = g->active; return; }
    switch (g->leaf) {
      case 0: g0 = nucleus_[0]; g1 = nucleus_[0]; active = false; break;  // 1
      case 1: g0 = nucleus_[0]; g1 = nucleus_[0]; active = true; break;   // a
      case 2: g0 = nucleus_[1]; g1 = nucleus_[3]; active = false; break;  // b
      case 3: g0 = nucleus_[1]; g1 = nucleus_[4]; active = false; break;  // c
      case 4: g0 = nucleus_[0]; g1 = nucleus_[2]; active = false; break;  // d
    }
  }

  // point letter x under g: returns (x * sigma_g, section g|_x)
  std::pair<int, PP> step(const PP& g, int x) const {
    PP g0, g1;
    bool act;
    decompose(g, g0, g1, act);
    return {act ? 1 - x : x, x == 0 ? g0 : g1};
  }

  // build <<l,r>>sigma^act, contracting back to a nucleus leaf when possible
  PP node(PP l, PP r, bool act) const {
    if (l->leaf >= 0 && r->leaf >= 0) {
      if (!act) {
        if (l->leaf == 0 && r->leaf == 0) return nucleus_[0];
        if (l->leaf == 1 && r->leaf == 3) return nucleus_[2];
        if (l->leaf == 1 && r->leaf == 4) return nucleus_[3];
        if (l->leaf == 0 && r->leaf == 2) return nucleus_[4];
      } else if (l->leaf == 0 && r->leaf == 0) {
        return nucleus_[1];
      }
    }
    auto p = std::make_shared<Portrait>();
    p->leaf = -1;
    p->active = act;
    p->l = std::move(l);
    p->r = std::move(r);
    return p;
  }

  // product: sigma_{gh} = sigma_g sigma_h, (gh)|_x = g|_x h|_{x sigma_g}
  PP pmul(const PP& g, const PP& h) const {
    if (g->leaf == 0) return h;
    if (h->leaf == 0) return g;
    if (g->leaf > 0 && h->leaf > 0) {
      // nucleus x nucleus: resolve products that stay in the nucleus directly
      // (required for termination: b,c,d generate a Klein four-group)
      if (g->leaf == h->leaf) return nucleus_[0];
      if (g->leaf >= 2 && h->leaf >= 2) return nucleus_[9 - g->leaf - h->leaf];
    }
    PP g0, g1, h0, h1;
    bool ga, ha;
    decompose(g, g0, g1, ga);
    decompose(h, h0, h1, ha);
    PP r0 = pmul(g0, ga ? h1 : h0);
    PP r1 = pmul(g1, ga ? h0 : h1);
    return node(std::move(r0), std::move(r1), ga != ha);
  }

  PP pinv(const PP& g) const {
    if (g->leaf >= 0) return g;  // the nucleus consists of involutions
    PP il = pinv(g->l), ir = pinv(g->r);
    if (g->active) return node(std::move(ir), std::move(il), true);
    return node(std::move(il), std::move(ir), false);
  }

  // Abelianization recursion.  For an inactive element <<u,v>> of St(1),
  // ab(<<u,v>>) depends only on s = ab(u)+ab(v), which always lies in the
  // span of {(1,0,1),(0,1,0)} (images of the St(1) generators b,c,d and their
  // a-conjugates are (1,0,1),(1,1,1),(0,1,0)); the induced linear map sends
  // (1,0,1) -> ab(b) = (0,1,0) and (0,1,0) -> ab(d) = (0,1,1).
  // An active element is (inactive part) * a.
  std::array<int, 3> ab(const PP& g) const {
    switch (g->leaf) {
      case 0: return {0, 0, 0};
      case 1: return {1, 0, 0};
      case 2: return {0, 1, 0};
      case 3: return {0, 0, 1};
      case 4: return {0, 1, 1};
      default: break;
    }
    auto u = ab(g->l), v = ab(g->r);
    std::array<int, 3> s{(u[0] + v[0]) & 1, (u[1] + v[1]) & 1, (u[2] + v[2]) & 1};
    assert(s[0] == s[2] && "section abelianizations outside St(1) image span");
    int alpha = s[0], beta = s[1];
    return {g->active ? 1 : 0, (alpha + beta) & 1, beta & 1};
  }

  static void ser(const PP& g, std::string& out) {
    if (g->leaf >= 0) {
      out += char('0' + g->leaf);
    } else {
      out += g->active ? '(' : '<';
      ser(g->l, out);
      out += ',';
      ser(g->r, out);
      out += '>';
    }
  }
};

}  // namespace mg
