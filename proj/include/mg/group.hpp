#pragma once
// Group model interface: exact element arithmetic with canonical serialization.
// Elements are immutable; equal elements have identical canonical bytes.
#include <memory>
#include <stdexcept>
#include <string>
#include <vector>

#include "mg/int.hpp"
#include "mg/word.hpp"

namespace mg {

struct Elem {
  std::shared_ptr<const void> p;
  std::string key;  // canonical serialization; equality of keys = group equality

  bool operator==(const Elem& o) const { return key == o.key; }
  bool operator!=(const Elem& o) const { return key != o.key; }
  bool operator<(const Elem& o) const { return key < o.key; }
};

class Group {
 public:
  virtual ~Group() = default;
  virtual std::string name() const = 0;
  virtual int ngens() const = 0;  // built-in generator count
  virtual std::vector<std::string> gen_names() const {
    std::vector<std::string> v;
    for (int i = 1; i <= ngens(); i++) v.push_back("g" + std::to_string(i));
    return v;
  }
  virtual Elem id() const = 0;
  virtual Elem gen(int i) const = 0;  // 0-based
  virtual Elem mul(const Elem& a, const Elem& b) const = 0;
  virtual Elem inv(const Elem& a) const = 0;

  // Abelianization as \oplus Z/m_i (m_i = 0 meaning Z); used by the generation test.
  virtual std::vector<Int> ab_moduli() const = 0;
  virtual std::vector<Int> abelianize(const Elem& a) const = 0;

  bool is_id(const Elem& e) const { return e.key == id().key; }

  Elem pow(const Elem& a, long e) const {
    Elem base = e >= 0 ? a : inv(a);
    long n = e >= 0 ? e : -e;
    Elem r = id(), sq = base;
    while (n) {
      if (n & 1) r = mul(r, sq);
      n >>= 1;
      if (n) sq = mul(sq, sq);
    }
    return r;
  }

  Elem conj(const Elem& a, const Elem& h) const { return mul(mul(inv(h), a), h); }  // a^h
  Elem comm(const Elem& a, const Elem& b) const { return mul(mul(a, b), mul(inv(a), inv(b))); }
};

using GroupPtr = std::shared_ptr<const Group>;

template <class Payload>
struct Typed {
  static const Payload& val(const Elem& e) { return *static_cast<const Payload*>(e.p.get()); }
};

}  // namespace mg
