#pragma once
// Finitely generated abelian groups given as a list of cyclic factors (0 = Z).
#include "mg/group.hpp"

namespace mg {

class FinAbelian final : public Group, public Typed<std::vector<Int>> {
 public:
  explicit FinAbelian(std::vector<Int> factors) : factors_(std::move(factors)) {
    for (auto& f : factors_)
      if (f < 0) throw std::invalid_argument("negative cyclic factor");
  }

  const std::vector<Int>& factors() const { return factors_; }

  std::string name() const override {
    std::string s = "FinAbelian[";
    for (size_t i = 0; i < factors_.size(); i++) s += (i ? "," : "") + istr(factors_[i]);
    return s + "]";
  }
  int ngens() const override { return (int)factors_.size(); }
  std::vector<std::string> gen_names() const override {
    std::vector<std::string> v;
    for (size_t i = 0; i < factors_.size(); i++) v.push_back("e" + std::to_string(i + 1));
    return v;
  }
  Elem id() const override { return wrap(std::vector<Int>(factors_.size(), 0)); }
  Elem gen(int i) const override {
    std::vector<Int> v(factors_.size(), 0);
    v[i] = 1;
    return wrap(std::move(v));
  }
  Elem mul(const Elem& a, const Elem& b) const override {
    auto v = val(a);
    const auto& w = val(b);
    for (size_t i = 0; i < v.size(); i++) v[i] += w[i];
    return wrap(std::move(v));
  }
  Elem inv(const Elem& a) const override {
    auto v = val(a);
    for (auto& x : v) x = -x;
    return wrap(std::move(v));
  }
  std::vector<Int> ab_moduli() const override { return factors_; }
  std::vector<Int> abelianize(const Elem& a) const override { return val(a); }

  Elem make(std::vector<Int> v) const {
    if (v.size() != factors_.size()) throw std::invalid_argument("coordinate count mismatch");
    return wrap(std::move(v));
  }

 private:
  std::vector<Int> factors_;

  Elem wrap(std::vector<Int> v) const {
    for (size_t i = 0; i < v.size(); i++)
      if (factors_[i] > 0) v[i] = imod(v[i], factors_[i]);
    std::string key = "(";
    for (size_t i = 0; i < v.size(); i++) key += (i ? "," : "") + istr(v[i]);
    key += ")";
    Elem e;
    e.p = std::make_shared<std::vector<Int>>(std::move(v));
    e.key = std::move(key);
    return e;
  }
};

}  // namespace mg
