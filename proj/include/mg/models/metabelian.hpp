#pragma once
// Free metabelian groups F_k/F_k'' via the Magnus embedding: an element is its
// abelianization vector together with the abelianized Fox derivatives, which
// are Laurent polynomials over Z in k commuting variables.  A word is trivial
// in F_k/F_k'' iff all coordinates vanish (Magnus).
#include <map>

#include "mg/group.hpp"

namespace mg {

// sparse Laurent polynomial: exponent vector -> coefficient, no zero entries
using Laurent = std::map<std::vector<long>, Int>;

inline void laurent_add(Laurent& a, const Laurent& b, const Int& scale = 1) {
  for (auto& [e, c] : b) {
    Int& t = a[e];
    t += c * scale;
    if (t == 0) a.erase(e);
  }
}

// a += mono * b, where mono has coefficient `coeff` and exponents `exps`
inline void laurent_add_shifted(Laurent& a, const Laurent& b, const std::vector<long>& exps,
                                const Int& coeff) {
  for (auto& [e, c] : b) {
    std::vector<long> ne = e;
    for (size_t i = 0; i < ne.size(); i++) ne[i] += exps[i];
    Int& t = a[ne];
    t += c * coeff;
    if (t == 0) a.erase(ne);
  }
}

class FreeMetabelian final : public Group {
 public:
  struct Payload {
    std::vector<Int> a;      // abelianization in Z^k
    std::vector<Laurent> d;  // abelianized Fox derivatives, one per generator
  };

  explicit FreeMetabelian(int k) : k_(k) {
    if (k < 1) throw std::invalid_argument("rank must be >= 1");
  }

  int rank() const { return k_; }
  std::string name() const override { return "FM" + std::to_string(k_); }
  int ngens() const override { return k_; }
  std::vector<std::string> gen_names() const override {
    static const char* nm[] = {"x", "y", "z"};
    std::vector<std::string> v;
    for (int i = 0; i < k_; i++) v.push_back(i < 3 ? nm[i] : "g" + std::to_string(i + 1));
    return v;
  }
  Elem id() const override { return wrap({std::vector<Int>(k_, 0), std::vector<Laurent>(k_)}); }
  Elem gen(int i) const override {
    Payload p{std::vector<Int>(k_, 0), std::vector<Laurent>(k_)};
    p.a[i] = 1;
    p.d[i][std::vector<long>(k_, 0)] = 1;
    return wrap(std::move(p));
  }
  // Fox product rule, abelianized: D(uv) = D(u) + u_ab * D(v).
  Elem mul(const Elem& A, const Elem& B) const override {
    const Payload& a = val(A);
    const Payload& b = val(B);
    Payload r{a.a, a.d};
    std::vector<long> sh(k_);
    for (int i = 0; i < k_; i++) {
      r.a[i] += b.a[i];
      sh[i] = to_long(a.a[i]);
    }
    for (int i = 0; i < k_; i++) laurent_add_shifted(r.d[i], b.d[i], sh, 1);
    return wrap(std::move(r));
  }
  // D(u^-1) = -u_ab^-1 D(u)
  Elem inv(const Elem& A) const override {
    const Payload& a = val(A);
    Payload r{a.a, std::vector<Laurent>(k_)};
    std::vector<long> sh(k_);
    for (int i = 0; i < k_; i++) {
      r.a[i] = -a.a[i];
      sh[i] = to_long(r.a[i]);
    }
    for (int i = 0; i < k_; i++) laurent_add_shifted(r.d[i], a.d[i], sh, -1);
    return wrap(std::move(r));
  }
  std::vector<Int> ab_moduli() const override { return std::vector<Int>(k_, 0); }
  std::vector<Int> abelianize(const Elem& A) const override { return val(A).a; }

  static const Payload& val(const Elem& e) { return *static_cast<const Payload*>(e.p.get()); }

 private:
  int k_;

  Elem wrap(Payload p) const {
    std::string key = "fm:";
    for (auto& v : p.a) key += istr(v) + ",";
    for (auto& poly : p.d) {
      key += "|";
      for (auto& [e, c] : poly) {
        for (long x : e) key += std::to_string(x) + ".";
        key += ":" + istr(c) + ";";
      }
    }
    Elem e;
    e.p = std::make_shared<Payload>(std::move(p));
    e.key = std::move(key);
    return e;
  }
};

}  // namespace mg
