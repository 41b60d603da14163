#pragma once
// Free nilpotent groups of class 2 on k generators, optionally with the
// commutators killed to order n (N_{2,k} and N_{2,k,n}).
// Mal'cev coordinates (x in Z^k, c in Z^{k(k-1)/2}); c_{ij} (i<j) counts [x_i,x_j].
#include "mg/group.hpp"

namespace mg {

class NilC2 final : public Group {
 public:
  struct Payload {
    std::vector<Int> x;  // size k
    std::vector<Int> c;  // size k(k-1)/2, pairs (i<j) in lex order
  };

  NilC2(int k, Int n) : k_(k), n_(std::move(n)) {
    if (k < 1) throw std::invalid_argument("NilC2 rank must be >= 1");
    if (n_ < 0) throw std::invalid_argument("commutator modulus must be >= 0");
  }

  int rank() const { return k_; }
  const Int& modulus() const { return n_; }
  int npairs() const { return k_ * (k_ - 1) / 2; }
  int pair_index(int i, int j) const {  // 0-based, i < j
    return i * k_ - i * (i + 1) / 2 + (j - i - 1);
  }

  std::string name() const override {
    return "N2_" + std::to_string(k_) + (n_ > 0 ? "/" + istr(n_) : "");
  }
  int ngens() const override { return k_; }
  std::vector<std::string> gen_names() const override {
    static const char* nm[] = {"x", "y", "z"};
    std::vector<std::string> v;
    for (int i = 0; i < k_; i++) v.push_back(i < 3 ? nm[i] : "g" + std::to_string(i + 1));
    return v;
  }
  Elem id() const override { return wrap({std::vector<Int>(k_, 0), std::vector<Int>(npairs(), 0)}); }
  Elem gen(int i) const override {
    Payload p{std::vector<Int>(k_, 0), std::vector<Int>(npairs(), 0)};
    p.x[i] = 1;
    return wrap(std::move(p));
  }
  // (a,e)(b,f) = (a+b, e+f+D) with D_{ij} = -a_j * b_i for i<j
  // (collecting x_i^{b_i} leftward past x_j^{a_j}, j>i, with [x_j,x_i] = c_{ij}^{-1}).
  Elem mul(const Elem& A, const Elem& B) const override {
    const Payload& a = val(A);
    const Payload& b = val(B);
    Payload r{a.x, a.c};
    for (int i = 0; i < k_; i++) r.x[i] += b.x[i];
    for (int i = 0; i < npairs(); i++) r.c[i] += b.c[i];
    for (int i = 0; i < k_; i++)
      for (int j = i + 1; j < k_; j++) r.c[pair_index(i, j)] -= a.x[j] * b.x[i];
    return wrap(std::move(r));
  }
  Elem inv(const Elem& A) const override {
    const Payload& a = val(A);
    Payload r{a.x, a.c};
    for (auto& v : r.x) v = -v;
    for (auto& v : r.c) v = -v;
    for (int i = 0; i < k_; i++)
      for (int j = i + 1; j < k_; j++) r.c[pair_index(i, j)] -= a.x[i] * a.x[j];
    return wrap(std::move(r));
  }
  std::vector<Int> ab_moduli() const override { return std::vector<Int>(k_, 0); }
  std::vector<Int> abelianize(const Elem& a) const override { return val(a).x; }

  static const Payload& val(const Elem& e) { return *static_cast<const Payload*>(e.p.get()); }

  Elem make(std::vector<Int> x, std::vector<Int> c) const {
    if ((int)x.size() != k_ || (int)c.size() != npairs())
      throw std::invalid_argument("NilC2 coordinate mismatch");
    return wrap({std::move(x), std::move(c)});
  }

 private:
  int k_;
  Int n_;

  Elem wrap(Payload p) const {
    if (n_ > 0)
      for (auto& v : p.c) v = imod(v, n_);
    std::string key = "n2:";
    for (auto& v : p.x) key += istr(v) + ",";
    key += ";";
    for (auto& v : p.c) key += istr(v) + ",";
    Elem e;
    e.p = std::make_shared<Payload>(std::move(p));
    e.key = std::move(key);
    return e;
  }
};

}  // namespace mg
