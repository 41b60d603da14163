#pragma once
// Convergence witnesses: a family of source markings S_R together with a fixed
// target marking, such that radius-R balls agree.  Construction registry for
// the built-in cases, verification by literal ball comparison, target-marking
// transport, and product combinators.
#include <functional>

#include "mg/ball.hpp"
#include "mg/nillab.hpp"
#include "mg/parse.hpp"
#include "mg/smallcancel.hpp"

namespace mg {

struct Witness {
  std::string case_id;
  nlohmann::json params;
  std::function<MarkedGroup(long)> source;  // R -> S_R marking
  MarkedGroup target;
};

struct WitnessReport {
  bool agree = false;
  std::optional<long> first_divergence;  // least radius where balls differ
  long states_explored = 0;
};

inline WitnessReport verify_witness(const Witness& w, long R, long cap = kDefaultStateCap) {
  MarkedGroup src = w.source(R);
  if (src.arity() != w.target.arity())
    throw std::logic_error("witness marking sizes differ: " + w.case_id);
  BallCertificate a = ball(src, R, cap);
  BallCertificate b = ball(w.target, R, cap);
  WitnessReport rep;
  rep.states_explored = (long)(a.states.size() + b.states.size());
  rep.agree = balls_agree(a, b);
  if (!rep.agree)
    for (long r = 0; r <= R; r++)
      if (!balls_agree(truncate_ball(a, r), truncate_ball(b, r))) {
        rep.first_divergence = r;
        break;
      }
  return rep;
}

// Witness for the same marked group on both sides (combinator unit).
inline Witness self_witness(const MarkedGroup& mg) {
  Witness w;
  w.case_id = "self";
  w.params = {{"model", mg.model->name()}};
  w.source = [mg](long) { return mg; };
  w.target = mg;
  return w;
}

// Rebuild both markings through words over the target marking.  The new
// witness inherits agreement at radius floor(R / max word length).
inline Witness transport_target_marking(const Witness& w, const std::vector<Word>& words) {
  MarkedGroup new_target = w.target;
  new_target.marking = words;
  new_target.marking_elems.clear();
  for (auto& t : words)
    new_target.marking_elems.push_back(evaluate_word(*w.target.model, t, w.target.marking_elems));
  if (!new_target.generates())
    throw std::invalid_argument("transported marking fails the generation test");
  Witness out;
  out.case_id = w.case_id + "+transport";
  nlohmann::json ws = nlohmann::json::array();
  for (auto& t : words) ws.push_back(word_str(t));
  out.params = w.params;
  out.params["transport_words"] = ws;
  auto base = w.source;
  out.source = [base, words](long R) {
    MarkedGroup s = base(R);
    std::vector<Elem> elems;
    for (auto& t : words) elems.push_back(evaluate_word(*s.model, t, s.marking_elems));
    return mark_elems(s.model, std::move(elems));
  };
  out.target = std::move(new_target);
  return out;
}

namespace detail {

inline MarkedGroup direct_union(const MarkedGroup& a, const MarkedGroup& b) {
  auto m = std::make_shared<DirectProduct>(a.model, b.model);
  std::vector<Elem> elems;
  for (auto& e : a.marking_elems) elems.push_back(m->make(e, b.model->id()));
  for (auto& e : b.marking_elems) elems.push_back(m->make(a.model->id(), e));
  return mark_elems(m, std::move(elems));
}

inline MarkedGroup free_union(const MarkedGroup& a, const MarkedGroup& b) {
  auto m = std::make_shared<FreeProduct>(a.model, b.model);
  std::vector<Elem> elems;
  for (auto& e : a.marking_elems)
    elems.push_back(a.model->is_id(e) ? m->id() : m->make_syllables({{0, e}}));
  for (auto& e : b.marking_elems)
    elems.push_back(b.model->is_id(e) ? m->id() : m->make_syllables({{1, e}}));
  return mark_elems(m, std::move(elems));
}

inline MarkedGroup wreath_union(const MarkedGroup& lamp, const MarkedGroup& base) {
  auto m = std::make_shared<WreathProduct>(lamp.model, base.model);
  std::vector<Elem> elems;
  for (auto& e : lamp.marking_elems) elems.push_back(m->lamp_at(e, base.model->id()));
  for (auto& e : base.marking_elems) elems.push_back(m->base_elem(e));
  return mark_elems(m, std::move(elems));
}

}  // namespace detail

inline Witness compose_product_witness(const Witness& w1, const Witness& w2,
                                       const std::string& kind) {
  MarkedGroup (*combine)(const MarkedGroup&, const MarkedGroup&) = nullptr;
  if (kind == "direct") combine = detail::direct_union;
  else if (kind == "free") combine = detail::free_union;
  else if (kind == "wreath") combine = detail::wreath_union;
  else throw std::invalid_argument("unknown product kind: " + kind);
  Witness out;
  out.case_id = kind + "(" + w1.case_id + "," + w2.case_id + ")";
  out.params = {{"kind", kind}, {"left", w1.params}, {"right", w2.params}};
  auto s1 = w1.source, s2 = w2.source;
  out.source = [combine, s1, s2](long R) { return combine(s1(R), s2(R)); };
  out.target = combine(w1.target, w2.target);
  return out;
}

// ---- built-in cases ------------------------------------------------------

namespace detail {

inline long jget(const nlohmann::json& p, const std::string& key, long dflt) {
  return p.contains(key) ? p.at(key).get<long>() : dflt;
}
inline std::string jget(const nlohmann::json& p, const std::string& key, const std::string& dflt) {
  return p.contains(key) ? p.at(key).get<std::string>() : dflt;
}

// Z^m with basis plus powers M^j e_1, M = 2R+1: any extra relation needs
// exponent sum M > 2R, so balls agree with Z^n at radius R.
inline Witness case_zm_in_zn(const nlohmann::json& p) {
  long m = jget(p, "m", 1), n = jget(p, "n", 2);
  if (m < 1 || n <= m) throw std::invalid_argument("zm_in_zn needs 1 <= m < n");
  Witness w;
  w.case_id = "zm_in_zn";
  w.params = {{"m", m}, {"n", n}, {"multiplier", "2R+1"}};
  w.source = [m, n](long R) {
    auto g = std::make_shared<FinAbelian>(std::vector<Int>(m, 0));
    std::vector<Elem> elems;
    for (long i = 0; i < m; i++) elems.push_back(g->gen((int)i));
    Int M = 2 * R + 1, pw = M;
    for (long j = m; j < n; j++, pw *= M) {
      std::vector<Int> v(m, 0);
      v[0] = pw;
      elems.push_back(g->make(std::move(v)));
    }
    return mark_elems(g, std::move(elems));
  };
  w.target = mark_std(std::make_shared<FinAbelian>(std::vector<Int>(n, 0)));
  return w;
}

// Z/kl + Z marked {e2, e1 + R e2, l e1} against Z^2 + Z/k std.
inline Witness case_abelian_step(const nlohmann::json& p) {
  long k = jget(p, "k", 2), l = jget(p, "l", 3);
  if (k < 2 || l < 2) throw std::invalid_argument("abelian_step needs k, l >= 2");
  Witness w;
  w.case_id = "abelian_step";
  w.params = {{"k", k}, {"l", l}};
  w.source = [k, l](long R) {
    auto g = std::make_shared<FinAbelian>(std::vector<Int>{Int(k * l), 0});
    std::vector<Elem> elems{g->make({0, 1}), g->make({1, R}), g->make({Int(l), 0})};
    return mark_elems(g, std::move(elems));
  };
  w.target = mark_std(std::make_shared<FinAbelian>(std::vector<Int>{0, 0, Int(k)}));
  return w;
}

// F_m with basis plus C'(1/6) words of length >= 2R+2 against F_n std.
inline Witness case_free_mn(const nlohmann::json& p) {
  long m = jget(p, "m", 2), n = jget(p, "n", 3);
  if (m < 2 || n <= m) throw std::invalid_argument("free_mn needs 2 <= m < n");
  Witness w;
  w.case_id = "free_mn";
  w.params = {{"m", m}, {"n", n}};
  w.source = [m, n](long R) {
    auto g = std::make_shared<FreeGroup>((int)m);
    std::vector<Word> marking;
    for (long i = 1; i <= m; i++) marking.push_back(make_word({(int)i}, (int)m));
    for (auto& u : small_cancellation_words((int)m, (int)(n - m), 2 * R + 2))
      marking.push_back(u);
    return mark(g, std::move(marking));
  };
  w.target = mark_std(std::make_shared<FreeGroup>((int)n));
  return w;
}

// A * F_m marked {a_i w_i} plus the F_m basis, against F_{k+m} std; the w_i
// are C'(1/6) words so no short relation survives.
inline Witness case_free_pad(const nlohmann::json& p) {
  std::string A = jget(p, "A", std::string("Z/2"));
  long m = jget(p, "m", 2);
  if (m < 2) throw std::invalid_argument("free_pad needs m >= 2");
  GroupPtr a_model = parse_group(A);
  int k = a_model->ngens();
  Witness w;
  w.case_id = "free_pad";
  w.params = {{"A", A}, {"m", m}};
  w.source = [A, m, k](long R) {
    auto g = parse_group("(" + A + ") * F" + std::to_string(m));
    auto ws = small_cancellation_words((int)m, k, 2 * R + 2);
    std::vector<Word> marking;
    for (int i = 0; i < k; i++) {
      std::vector<int> ls{i + 1};
      for (int l : ws[i].letters) ls.push_back(l > 0 ? l + k : l - k);
      marking.push_back(make_word(std::move(ls), k + (int)m));
    }
    for (long j = 1; j <= m; j++) marking.push_back(make_word({(int)(k + j)}, k + (int)m));
    return mark(g, std::move(marking));
  };
  w.target = mark_std(std::make_shared<FreeGroup>(k + (int)m));
  return w;
}

// (A*B) wr C with the B generators displaced to a base point of norm R+1,
// against (AxB) wr C std.
inline Witness case_wreath_split(const nlohmann::json& p) {
  std::string A = jget(p, "A", std::string("Z/2"));
  std::string B = jget(p, "B", std::string("Z/3"));
  std::string C = jget(p, "C", std::string("Z"));
  Witness w;
  w.case_id = "wreath_split";
  w.params = {{"A", A}, {"B", B}, {"C", C}};
  w.source = [A, B, C](long R) {
    auto lamp = std::make_shared<FreeProduct>(parse_group(A), parse_group(B));
    auto base = parse_group(C);
    auto m = std::make_shared<WreathProduct>(lamp, base);
    // first base element of norm exactly R+1, in BFS order
    auto pts = elements_in_ball(mark_std(base), R + 1);
    size_t inner = elements_in_ball(mark_std(base), R).size();
    if (inner >= pts.size()) throw std::invalid_argument("base group too small for wreath_split");
    Elem x = pts[inner];
    int ka = lamp->left()->ngens();
    std::vector<Elem> elems;
    for (int i = 0; i < ka; i++) elems.push_back(m->lamp_at(lamp->gen(i), base->id()));
    for (int i = ka; i < lamp->ngens(); i++) elems.push_back(m->lamp_at(lamp->gen(i), x));
    for (int i = 0; i < base->ngens(); i++) elems.push_back(m->base_elem(base->gen(i)));
    return mark_elems(m, std::move(elems));
  };
  w.target = mark_std(parse_group("((" + A + ") x (" + B + ")) wr (" + C + ")"));
  return w;
}

inline Int generator_order(const Group& g, const Elem& e, long cap = 256) {
  Elem x = e;
  for (long n = 1; n <= cap; n++) {
    if (g.is_id(x)) return n;
    x = g.mul(x, e);
  }
  return 0;  // treated as infinite
}

// Schreier-graph helpers for the orbit of 0^inf under the Grigorchuk group.
struct SchreierOps {
  std::shared_ptr<const Grigorchuk> grig;
  std::vector<Elem> gens;

  explicit SchreierOps(std::shared_ptr<const Grigorchuk> g) : grig(std::move(g)) {
    for (int i = 0; i < 4; i++) gens.push_back(grig->gen(i));
  }

  // canonical rooted labeled ball: BFS ids under the fixed generator order
  std::string ball_key(const std::string& root, long R) const {
    std::unordered_map<std::string, long> idx{{root, 0}};
    std::vector<std::string> pts{root};
    std::vector<long> norm{0};
    std::string out;
    for (size_t h = 0; h < pts.size(); h++) {
      if (norm[h] == R) {
        out += "|";
        continue;
      }
      for (auto& g : gens) {
        std::string n = grig->apply_orbit(g, pts[h]);
        auto it = idx.find(n);
        long id;
        if (it == idx.end()) {
          id = (long)pts.size();
          idx.emplace(n, id);
          pts.push_back(n);
          norm.push_back(norm[h] + 1);
        } else {
          id = it->second;
        }
        out += std::to_string(id) + ",";
      }
      out += "|";
    }
    return out;
  }

  // graph distance, or -1 if not reached within the cap
  long distance(const std::string& a, const std::string& b, long cap = 64) const {
    std::unordered_map<std::string, long> d{{a, 0}};
    std::deque<std::string> q{a};
    while (!q.empty()) {
      std::string p = q.front();
      q.pop_front();
      if (p == b) return d[p];
      if (d[p] >= cap) continue;
      for (auto& g : gens) {
        std::string n = grig->apply_orbit(g, p);
        if (!d.count(n)) {
          d[n] = d[p] + 1;
          q.push_back(n);
        }
      }
    }
    return -1;
  }
};

// k-1 orbit points far from the basepoint and each other, with radius-R
// labeled Schreier balls matching the basepoint's ball.  Candidates are
// scanned by length then lexicographically, starting at the heuristic length
// 2*floor(log2 R); short candidates that fail the checks are simply skipped.
inline std::vector<std::string> grig_orbit_points(const SchreierOps& ops, int k, long R,
                                                  long max_len = 24) {
  std::vector<std::string> points{""};
  std::string want = ops.ball_key("", R);
  long start_len = 1;
  for (long r = R; r >= 2; r /= 2) start_len += 2;
  for (long len = std::max(start_len - 2, 1L); len <= max_len && (int)points.size() < k; len++) {
    for (long mask = 0; mask < (1L << (len - 1)) && (int)points.size() < k; mask++) {
      std::string v;
      for (long b = 0; b < len - 1; b++) v += (mask >> b) & 1 ? '1' : '0';
      v += '1';  // canonical orbit labels do not end in 0
      if (ops.ball_key(v, R) != want) continue;
      bool far = true;
      for (auto& q : points) {
        long d = ops.distance(v, q, R + 1);
        far = far && (d < 0 || d > R);
      }
      if (far) points.push_back(v);
    }
  }
  if ((int)points.size() < k)
    throw std::runtime_error("grig orbit point search exhausted (length cap " +
                             std::to_string(max_len) + ")");
  return points;
}

// G wr_X Grig with the G generators scattered over far-apart orbit points,
// against B wr_X Grig std for the abelian group B of the generator orders.
inline Witness case_any_to_direct(const nlohmann::json& p) {
  std::string G = jget(p, "G", std::string("(Z/2) * (Z/3)"));
  GroupPtr g_model = parse_group(G);
  int k = g_model->ngens();
  std::vector<Int> orders;
  for (int i = 0; i < k; i++) orders.push_back(generator_order(*g_model, g_model->gen(i)));
  Witness w;
  w.case_id = "any_to_direct";
  nlohmann::json ord = nlohmann::json::array();
  for (auto& e : orders) ord.push_back(istr(e));
  w.params = {{"G", G}, {"orders", ord}};
  w.source = [G, k](long R) {
    auto m = std::make_shared<PermWreathGrig>(parse_group(G));
    SchreierOps ops(m->grig());
    auto points = grig_orbit_points(ops, k, R);
    std::vector<Elem> elems;
    for (int i = 0; i < k; i++) elems.push_back(m->lamp_at(m->lamp()->gen(i), points[i]));
    for (int i = 0; i < 4; i++) elems.push_back(m->base_elem(m->grig()->gen(i)));
    return mark_elems(m, std::move(elems));
  };
  w.target = mark_std(std::make_shared<PermWreathGrig>(std::make_shared<FinAbelian>(orders)));
  return w;
}

// Z wr Z marked {t, t^n a} against the free metabelian group of rank 2.
inline Witness case_lamplighter_metab(const nlohmann::json& p) {
  long n = jget(p, "n", 4);
  if (n < 1) throw std::invalid_argument("lamplighter_metab needs n >= 1");
  Witness w;
  w.case_id = "lamplighter_metab";
  w.params = {{"n", n}};
  w.source = [n](long) {
    auto m = std::static_pointer_cast<const Group>(
        std::make_shared<WreathProduct>(parse_group("Z"), parse_group("Z")));
    Elem a = m->gen(0), t = m->gen(1);
    Elem tn = m->id();
    for (long i = 0; i < n; i++) tn = m->mul(tn, t);
    return mark_elems(m, {t, m->mul(tn, a)});
  };
  w.target = mark_std(std::make_shared<FreeMetabelian>(2));
  return w;
}

// BS(1,p) marked {a, t^(i^2+1), t^i} against Z wr Z^2 marked {a, x, y}.
inline Witness case_bs_to_wreath(const nlohmann::json& p) {
  long pp = jget(p, "p", 2), i = jget(p, "i", 4);
  if (pp < 2 || i < 1) throw std::invalid_argument("bs_to_wreath needs p >= 2, i >= 1");
  Witness w;
  w.case_id = "bs_to_wreath";
  w.params = {{"p", pp}, {"i", i}, {"m", i}, {"n", i * i + 1}};
  w.source = [pp, i](long) {
    auto m = std::static_pointer_cast<const Group>(
        std::make_shared<BaumslagSolitar>(Int(pp)));
    Elem a = m->gen(0), t = m->gen(1);
    auto tpow = [&](long e) {
      Elem r = m->id();
      for (long j = 0; j < e; j++) r = m->mul(r, t);
      return r;
    };
    return mark_elems(m, {a, tpow(i * i + 1), tpow(i)});
  };
  w.target = mark_std(parse_group("Z wr (Z^2)"));
  return w;
}

// Free class-2 nilpotent group on k generators marked by a discriminating
// N-tuple, against the rank-N relatively free group std.
inline Witness case_nil_relfree(const nlohmann::json& p) {
  long k = jget(p, "k", 2), N = jget(p, "N", 3), C0 = jget(p, "C0", 2);
  Witness w;
  w.case_id = "nil_relfree";
  w.params = {{"k", k}, {"N", N}, {"C0", C0}};
  w.source = [k, N, C0](long R) {
    auto dt = discriminating_tuple((int)k, (int)N, 2 * R, C0);
    auto model = std::make_shared<NilC2>((int)k, Int(0));
    return mark_elems(model, dt.tuple);
  };
  w.target = mark_std(std::make_shared<NilC2>((int)N, Int(0)));
  return w;
}

// F_2 wr H marked {w, w^{h_1} g_1^h, w^{h_2} g_2^h} plus the H generators,
// against F_3 * H std; w packs a free basis over the radius-(k+1)(2R+1) ball
// of H.
inline Witness case_akhmedov_free(const nlohmann::json& p) {
  std::string H = jget(p, "H", std::string("Z"));
  Witness w;
  w.case_id = "akhmedov_free";
  w.params = {{"G", "F2"}, {"H", H}};
  constexpr int k = 2;
  w.source = [H](long R) {
    constexpr int k = 2;
    auto lamp = std::make_shared<FreeGroup>((int)k);
    auto base = parse_group(H);
    auto m = std::make_shared<WreathProduct>(lamp, base);
    long Rr = 2 * R + 1;  // relation bound needed for radius-R ball agreement
    // ball B of radius (k+1)*Rr in H, and a free basis value per point:
    // q^j p q^-j indexed by BFS discovery order
    auto pts = elements_in_ball(mark_std(base), (k + 1) * Rr);
    Elem w_elem = m->id();
    Elem p0 = lamp->gen(0), q = lamp->gen(1);
    Elem conj = lamp->id();
    for (size_t j = 0; j < pts.size(); j++) {
      Elem basis = lamp->mul(lamp->mul(conj, p0), lamp->inv(conj));
      w_elem = m->mul(w_elem, m->lamp_at(basis, pts[j]));
      conj = lamp->mul(conj, q);
    }
    // h outside B: first element of norm (k+1)*Rr + 1
    auto outer = elements_in_ball(mark_std(base), (k + 1) * Rr + 1);
    if (outer.size() <= pts.size()) throw std::invalid_argument("base group too small");
    Elem h = m->base_elem(outer[pts.size()]);
    std::vector<Elem> elems{w_elem};
    for (int i = 1; i <= k; i++) {
      // h_i of norm Rr*i: first BFS element at that norm
      auto inn = elements_in_ball(mark_std(base), Rr * i - 1);
      auto all = elements_in_ball(mark_std(base), Rr * i);
      Elem hi = m->base_elem(all[inn.size()]);
      Elem gi = m->lamp_at(lamp->gen(i - 1), base->id());
      Elem whi = m->mul(m->mul(m->inv(hi), w_elem), hi);
      Elem gih = m->mul(m->mul(m->inv(h), gi), h);
      elems.push_back(m->mul(whi, gih));
    }
    for (int i = 0; i < base->ngens(); i++) elems.push_back(m->base_elem(base->gen(i)));
    return mark_elems(m, std::move(elems));
  };
  w.target = mark_std(parse_group("F" + std::to_string(k + 1) + " * (" + H + ")"));
  return w;
}

// Hall quotient H_phi marked through an SL2 change of coordinates, against
// H_psi std, where phi realizes psi's box-R restriction in its log.
inline Witness case_hall_colouring(const nlohmann::json& p) {
  PrimeColouring psi;
  if (p.contains("psi")) {
    for (auto& t : p.at("psi"))
      psi.assign({Int(t[0].get<long>()), Int(t[1].get<long>())}, Int(t[2].get<long>()));
  } else {
    psi.assign({1, 0}, 3);
    psi.assign({0, 1}, 2);
  }
  Witness w;
  w.case_id = "hall_colouring";
  nlohmann::json ps = nlohmann::json::array();
  for (auto& [v, q] : psi.assignments) ps.push_back({istr(v.first), istr(v.second), istr(q)});
  w.params = {{"psi", ps}};
  w.source = [psi](long R) {
    // build phi containing psi's box-R restriction via a separating matrix
    FiniteColouring theta;
    for (auto& [v, q] : psi.assignments)
      if (abs(v.first) <= R && abs(v.second) <= R) theta[v] = q;
    PrimeColouring phi;
    extend_colouring(phi, theta, R, false);
    const SL2& M = phi.log.back().matrix;
    auto model = std::make_shared<HallGroup>(phi);
    // x^a y^b and x^c y^d are the heads M*(1,0), M*(0,1); plus the lamp a
    Elem id = model->id();
    auto head = [&](const Vec2& v) {
      Elem x = model->gen(0), y = model->gen(1), r = model->id();
      auto pow = [&](const Elem& g, const Int& e) {
        Elem acc = model->id(), gg = e >= 0 ? g : model->inv(g);
        for (Int j = 0; j < abs(e); j += 1) acc = model->mul(acc, gg);
        return acc;
      };
      return model->mul(pow(x, v.first), pow(y, v.second));
    };
    std::vector<Elem> elems{head({M.m[0][0], M.m[1][0]}), head({M.m[0][1], M.m[1][1]}),
                            model->gen(2)};
    (void)id;
    return mark_elems(model, std::move(elems));
  };
  w.target = mark_std(std::make_shared<HallGroup>(psi));
  return w;
}

}  // namespace detail

inline std::vector<std::string> witness_case_names() {
  return {"zm_in_zn",   "abelian_step",      "free_mn",      "free_pad",
          "wreath_split", "any_to_direct",   "grig_wreath",  "lamplighter_metab",
          "bs_to_wreath", "nil_relfree",     "akhmedov_free", "hall_colouring"};
}

inline Witness make_witness(const std::string& case_id, const nlohmann::json& params = {}) {
  if (case_id == "zm_in_zn") return detail::case_zm_in_zn(params);
  if (case_id == "abelian_step") return detail::case_abelian_step(params);
  if (case_id == "free_mn") return detail::case_free_mn(params);
  if (case_id == "free_pad") return detail::case_free_pad(params);
  if (case_id == "wreath_split") return detail::case_wreath_split(params);
  if (case_id == "any_to_direct" || case_id == "grig_wreath") {
    Witness w = detail::case_any_to_direct(params);
    w.case_id = case_id;
    return w;
  }
  if (case_id == "lamplighter_metab") return detail::case_lamplighter_metab(params);
  if (case_id == "bs_to_wreath") return detail::case_bs_to_wreath(params);
  if (case_id == "nil_relfree") return detail::case_nil_relfree(params);
  if (case_id == "akhmedov_free") return detail::case_akhmedov_free(params);
  if (case_id == "hall_colouring") return detail::case_hall_colouring(params);
  throw std::invalid_argument("unknown witness case: " + case_id);
}

}  // namespace mg
