#pragma once
// Free group of finite rank; elements are freely reduced words.
#include "mg/group.hpp"

namespace mg {

class FreeGroup final : public Group, public Typed<std::vector<int>> {
 public:
  explicit FreeGroup(int rank) : rank_(rank) {
    if (rank < 1) throw std::invalid_argument("free group rank must be >= 1");
  }

  int rank() const { return rank_; }
  std::string name() const override { return "F" + std::to_string(rank_); }
  int ngens() const override { return rank_; }
  std::vector<std::string> gen_names() const override {
    static const char* nm[] = {"x", "y", "z"};
    std::vector<std::string> v;
    for (int i = 0; i < rank_; i++)
      v.push_back(i < 3 ? nm[i] : "g" + std::to_string(i + 1));
    return v;
  }
  Elem id() const override { return wrap({}); }
  Elem gen(int i) const override { return wrap({i + 1}); }
  Elem mul(const Elem& a, const Elem& b) const override {
    auto v = val(a);
    const auto& w = val(b);
    for (int l : w) {
      if (!v.empty() && v.back() == -l) v.pop_back();
      else v.push_back(l);
    }
    return wrap(std::move(v));
  }
  Elem inv(const Elem& a) const override {
    const auto& v = val(a);
    std::vector<int> r;
    r.reserve(v.size());
    for (auto it = v.rbegin(); it != v.rend(); ++it) r.push_back(-*it);
    return wrap(std::move(r));
  }
  std::vector<Int> ab_moduli() const override { return std::vector<Int>(rank_, 0); }
  std::vector<Int> abelianize(const Elem& a) const override {
    std::vector<Int> v(rank_, 0);
    for (int l : val(a)) v[std::abs(l) - 1] += (l > 0 ? 1 : -1);
    return v;
  }

  Elem from_word(const Word& w) const {
    if (w.arity > rank_) throw std::invalid_argument("word arity exceeds rank");
    return wrap(w.letters);
  }
  Word to_word(const Elem& e) const { return make_word(val(e), rank_); }

 private:
  int rank_;

  Elem wrap(std::vector<int> v) const {
    std::string key = "w:";
    for (size_t i = 0; i < v.size(); i++) key += (i ? "." : "") + std::to_string(v[i]);
    Elem e;
    e.p = std::make_shared<std::vector<int>>(std::move(v));
    e.key = std::move(key);
    return e;
  }
};

}  // namespace mg
