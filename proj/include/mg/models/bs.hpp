#pragma once
// Solvable Baumslag-Solitar groups BS(1,p) = <a,t | t^-1 a t = a^p>,
// realized as Z[1/p] x| Z.  Element (q, m) with q = num / p^e (num coprime to
// p unless zero, e >= 0); composition (q1,m1)(q2,m2) = (q1 + p^-m1 q2, m1+m2).
#include "mg/group.hpp"

namespace mg {

class BaumslagSolitar final : public Group {
 public:
  struct Payload {
    Int num;   // numerator, p-free unless 0
    long e;    // q = num / p^e, e >= 0
    Int m;     // head
  };

  explicit BaumslagSolitar(Int p) : p_(std::move(p)) {
    if (p_ < 2) throw std::invalid_argument("BS(1,p) needs p >= 2");
  }

  const Int& p() const { return p_; }
  std::string name() const override { return "BS(1," + istr(p_) + ")"; }
  int ngens() const override { return 2; }
  std::vector<std::string> gen_names() const override { return {"a", "t"}; }
  Elem id() const override { return wrap({0, 0, 0}); }
  Elem gen(int i) const override { return i == 0 ? wrap({1, 0, 0}) : wrap({0, 0, 1}); }

  Elem mul(const Elem& A, const Elem& B) const override {
    const Payload& a = val(A);
    const Payload& b = val(B);
    // q = a.q + p^{-a.m} b.q ; scale b.q by p^{-a.m}: num_b / p^{e_b + a.m}
    Int shift = Int(b.e) + a.m;  // exponent of p under b.num
    Int na, nb;
    long ea = a.e;
    // bring to a common denominator p^E
    Int Eb = shift;
    Int E = ea >= Eb ? Int(ea) : Eb;
    na = a.num * ppow(E - ea);
    nb = b.num * ppow(E - Eb);
    return wrap(normalize(na + nb, E, a.m + b.m));
  }

  Elem inv(const Elem& A) const override {
    const Payload& a = val(A);
    // (q,m)^-1 = (-p^m q, -m)
    Int E = Int(a.e) - a.m;
    return wrap(normalize(-a.num, E, -a.m));
  }

  // abelianization: a -> Z/(p-1), t -> Z
  std::vector<Int> ab_moduli() const override { return {p_ - 1, 0}; }
  std::vector<Int> abelianize(const Elem& A) const override {
    const Payload& a = val(A);
    // q = num/p^e maps to num * p^{-e} mod (p-1); p = 1 mod (p-1), so just num
    return {imod(a.num, p_ - 1), a.m};
  }

  static const Payload& val(const Elem& e) { return *static_cast<const Payload*>(e.p.get()); }

 private:
  Int p_;

  Int ppow(const Int& e) const {
    if (e < 0) throw std::logic_error("negative power in BS normalization");
    return ipow(p_, mpz_get_ui(e.get_mpz_t()));
  }

  Payload normalize(Int num, Int e, Int m) const {
    // make e >= 0 and num p-free (unless zero)
    if (num == 0) return {0, 0, std::move(m)};
    while (e < 0) { num *= p_; e += 1; }
    while (e > 0 && num % p_ == 0) { num /= p_; e -= 1; }
    return {std::move(num), to_long(e), std::move(m)};
  }

  Elem wrap(Payload pl) const {
    std::string key = "bs:" + istr(pl.num) + "/" + std::to_string(pl.e) + ";" + istr(pl.m);
    Elem e;
    e.p = std::make_shared<Payload>(std::move(pl));
    e.key = std::move(key);
    return e;
  }
};

}  // namespace mg
