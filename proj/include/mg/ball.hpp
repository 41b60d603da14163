#pragma once
// Canonical marked-ball extraction by BFS, ball comparison, girth, growth
// tables, and relation enumeration.
#include <cmath>
#include <deque>
#include <functional>
#include <optional>
#include <unordered_map>

#include <nlohmann/json.hpp>

#include "mg/marked.hpp"

namespace mg {

constexpr long kDefaultStateCap = 5'000'000;

struct BallOverflow : std::runtime_error {
  explicit BallOverflow(long cap)
      : std::runtime_error("ball state cap exceeded (" + std::to_string(cap) + ")") {}
};

struct BallCertificate {
  long radius = 0;
  int arity = 0;  // marking size k; labels g1..gk then inverses
  struct State {
    long norm = 0;
    std::vector<long> next;  // 2k entries; -1 = outside
  };
  std::vector<State> states;

  bool operator==(const BallCertificate& o) const {
    if (radius != o.radius || arity != o.arity || states.size() != o.states.size()) return false;
    for (size_t i = 0; i < states.size(); i++)
      if (states[i].norm != o.states[i].norm || states[i].next != o.states[i].next) return false;
    return true;
  }

  nlohmann::json to_json() const {
    nlohmann::json st = nlohmann::json::array();
    for (auto& s : states) {
      nlohmann::json nx = nlohmann::json::array();
      for (long v : s.next) {
        if (v < 0) nx.push_back(nullptr);
        else nx.push_back(v);
      }
      st.push_back({{"norm", s.norm}, {"next", nx}});
    }
    return {{"radius", radius}, {"arity", arity}, {"states", st}};
  }
  // canonical bytes: sorted keys, no whitespace (nlohmann dumps sorted by default)
  std::string to_bytes() const { return to_json().dump(); }

  static BallCertificate from_json(const nlohmann::json& j) {
    BallCertificate c;
    c.radius = j.at("radius").get<long>();
    c.arity = j.at("arity").get<int>();
    for (auto& s : j.at("states")) {
      State st;
      st.norm = s.at("norm").get<long>();
      for (auto& v : s.at("next")) st.next.push_back(v.is_null() ? -1 : v.get<long>());
      c.states.push_back(std::move(st));
    }
    return c;
  }
};

// Exact radius-R ball of the marked Cayley graph; states in BFS discovery
// order under the fixed label order (generators then inverses).
inline BallCertificate ball(const MarkedGroup& mg, long R, long state_cap = kDefaultStateCap) {
  if (R < 0) throw std::invalid_argument("negative radius");
  if (mg.marking_elems.empty()) throw std::invalid_argument("empty marking");
  const Group& G = *mg.model;
  int k = mg.arity();
  std::vector<Elem> labels;
  for (auto& e : mg.marking_elems) labels.push_back(e);
  for (auto& e : mg.marking_elems) labels.push_back(G.inv(e));

  BallCertificate cert;
  cert.radius = R;
  cert.arity = k;

  std::unordered_map<std::string, long> index;
  std::vector<Elem> elems;
  auto intern = [&](const Elem& e, long norm) -> long {
    auto it = index.find(e.key);
    if (it != index.end()) return it->second;
    long id = (long)elems.size();
    if (id >= state_cap) throw BallOverflow(state_cap);
    index.emplace(e.key, id);
    elems.push_back(e);
    cert.states.push_back({norm, std::vector<long>(2 * k, -1)});
    return id;
  };

  intern(G.id(), 0);
  long head = 0;
  while (head < (long)elems.size()) {
    long cur = head++;
    long norm = cert.states[cur].norm;
    if (norm == R) continue;  // neighbours outside stay "outside" (-1)
    Elem e = elems[cur];
    for (int j = 0; j < 2 * k; j++) {
      Elem n = G.mul(e, labels[j]);
      long id = intern(n, norm + 1);
      cert.states[cur].next[j] = id;
    }
  }
  // second pass: edges from radius-R states back into the open ball.  Edges
  // joining two radius-R states stay "outside": with them excluded, two
  // certificates agree at radius R exactly when the groups share all
  // relations of length <= 2R (girth-ball equivalence), since a length-L
  // relation path touches norm floor(L/2) at most once when L <= 2R.
  for (long i = 0; i < (long)elems.size(); i++) {
    if (cert.states[i].norm != R) continue;
    for (int j = 0; j < 2 * k; j++) {
      Elem n = G.mul(elems[i], labels[j]);
      auto it = index.find(n.key);
      if (it != index.end() && cert.states[it->second].norm < R)
        cert.states[i].next[j] = it->second;
    }
  }
  return cert;
}

// The ball's elements themselves, in BFS discovery order.
inline std::vector<Elem> elements_in_ball(const MarkedGroup& mg, long R,
                                          long state_cap = kDefaultStateCap) {
  const Group& G = *mg.model;
  std::vector<Elem> labels;
  for (auto& e : mg.marking_elems) labels.push_back(e);
  for (auto& e : mg.marking_elems) labels.push_back(G.inv(e));
  std::unordered_map<std::string, long> index;
  std::vector<Elem> elems;
  std::vector<long> norm;
  index.emplace(G.id().key, 0);
  elems.push_back(G.id());
  norm.push_back(0);
  long head = 0;
  while (head < (long)elems.size()) {
    long cur = head++;
    if (norm[cur] == R) continue;
    for (auto& l : labels) {
      Elem n = G.mul(elems[cur], l);
      if (index.count(n.key)) continue;
      if ((long)elems.size() >= state_cap) throw BallOverflow(state_cap);
      index.emplace(n.key, (long)elems.size());
      elems.push_back(n);
      norm.push_back(norm[cur] + 1);
    }
  }
  return elems;
}

inline bool balls_agree(const BallCertificate& a, const BallCertificate& b) {
  if (a.radius != b.radius || a.arity != b.arity)
    throw std::invalid_argument("balls_agree: radius/arity mismatch");
  return a == b;
}

// Restriction of a certificate to radius r <= R.  BFS discovery order restricted
// to the inner ball is the inner ball's BFS order, so this is again canonical.
inline BallCertificate truncate_ball(const BallCertificate& c, long r) {
  if (r > c.radius) throw std::invalid_argument("truncate beyond radius");
  BallCertificate t;
  t.radius = r;
  t.arity = c.arity;
  std::vector<long> remap(c.states.size(), -1);
  long n = 0;
  for (size_t i = 0; i < c.states.size(); i++)
    if (c.states[i].norm <= r) remap[i] = n++;
  for (size_t i = 0; i < c.states.size(); i++) {
    if (remap[i] < 0) continue;
    BallCertificate::State s;
    s.norm = c.states[i].norm;
    for (long v : c.states[i].next) {
      bool keep = v >= 0 && remap[v] >= 0 &&
                  !(s.norm == r && c.states[v].norm == r);
      s.next.push_back(keep ? remap[v] : -1);
    }
    t.states.push_back(std::move(s));
  }
  return t;
}

struct GirthResult {
  std::optional<long> value;  // empty = exceeds 2*Rmax
  long bound = 0;             // 2*Rmax
};

// Shortest nontrivial freely reduced word in the marking evaluating to the
// identity.  Any length-L relation stays within radius ceil(L/2), so relations
// of length <= 2*Rmax are exactly the reduced closed paths at the origin of
// the radius-Rmax certificate; find the shortest by BFS over (state, last
// label) pairs that never backtracks along an inverse edge.
inline GirthResult girth_from_certificate(const BallCertificate& c) {
  int k = c.arity;
  int L = 2 * k;
  auto inv_label = [&](int j) { return j < k ? j + k : j - k; };
  long best = -1;
  size_t n = c.states.size();
  // dist[(state,last)] = shortest reduced path 0 -> state ending with label `last`
  std::vector<long> dist(n * L, -1);
  std::deque<std::pair<long, int>> q;
  for (int j = 0; j < L; j++) {
    long t = c.states[0].next[j];
    if (t < 0) continue;
    if (t == 0) { best = best < 0 ? 1 : std::min(best, 1L); continue; }
    if (dist[t * L + j] < 0) {
      dist[t * L + j] = 1;
      q.emplace_back(t, j);
    }
  }
  while (!q.empty()) {
    auto [v, last] = q.front();
    q.pop_front();
    long d = dist[v * L + last];
    if (best >= 0 && d + 1 >= best) continue;
    for (int j = 0; j < L; j++) {
      if (j == inv_label(last)) continue;
      long t = c.states[v].next[j];
      if (t < 0) continue;
      if (t == 0) {
        if (best < 0 || d + 1 < best) best = d + 1;
        continue;
      }
      if (dist[t * L + j] < 0) {
        dist[t * L + j] = d + 1;
        q.emplace_back(t, j);
      }
    }
  }
  GirthResult r;
  r.bound = 2 * c.radius;
  if (best >= 0 && best <= r.bound) r.value = best;
  return r;
}

inline GirthResult girth(const MarkedGroup& mg, long Rmax, long cap = kDefaultStateCap) {
  if (Rmax < 1) throw std::invalid_argument("Rmax must be >= 1");
  return girth_from_certificate(ball(mg, Rmax, cap));
}

struct GrowthTable {
  std::vector<Int> counts;  // nu(0..R)
  double rate_upper = 1.0;  // nu(R)^(1/R)
};

inline GrowthTable growth(const MarkedGroup& mg, long R, long cap = kDefaultStateCap) {
  BallCertificate c = ball(mg, R, cap);
  GrowthTable t;
  t.counts.assign(R + 1, 0);
  for (auto& s : c.states) t.counts[s.norm] += 1;
  for (long r = 1; r <= R; r++) t.counts[r] += t.counts[r - 1];
  if (R > 0) t.rate_upper = std::pow(t.counts[R].get_d(), 1.0 / (double)R);
  return t;
}

// All freely reduced relations of length <= L, one representative per class
// under cyclic rotation and inversion, in length-lex order.  Enumerates
// cyclically reduced words by walking the radius-ceil(L/2) ball (a relation
// never leaves it); non-cyclically-reduced relations are conjugates of
// shorter ones and are represented by their cyclic reductions.
inline std::vector<Word> relations_up_to(const MarkedGroup& mg, long L,
                                         long cap = kDefaultStateCap) {
  if (L < 1) throw std::invalid_argument("L must be >= 1");
  BallCertificate c = ball(mg, (L + 1) / 2, cap);
  int k = c.arity;
  std::vector<Word> out;
  std::vector<std::vector<int>> seen;  // canonical forms of found relations
  auto canonical = [&](const std::vector<int>& w) {
    std::vector<int> best = w;
    auto consider = [&](std::vector<int> v) {
      for (size_t i = 0; i < v.size(); i++) {
        std::rotate(v.begin(), v.begin() + 1, v.end());
        if (v < best) best = v;
      }
    };
    consider(w);
    std::vector<int> iw;
    for (auto it = w.rbegin(); it != w.rend(); ++it) iw.push_back(-*it);
    if (iw < best) best = iw;
    consider(iw);
    return best;
  };
  auto label_of = [&](int l) { return l > 0 ? l - 1 : -l - 1 + k; };
  std::vector<int> word;
  // DFS in length-lex order over reduced words; letters ordered 1..k,-1..-k
  std::vector<int> letter_order;
  for (int i = 1; i <= k; i++) letter_order.push_back(i);
  for (int i = 1; i <= k; i++) letter_order.push_back(-i);
  std::function<void(long, long, long)> dfs = [&](long state, long len, long maxlen) {
    if (len > 0 && state == 0) {
      // cyclically reduced check: first and last letters not inverse
      if (len == maxlen && word.front() != -word.back()) {
        auto cn = canonical(word);
        bool dup = false;
        for (auto& s : seen) dup = dup || s == cn;
        if (!dup) {
          seen.push_back(cn);
          out.push_back(make_word(word, k));
        }
      }
      if (len == maxlen) return;
    }
    if (len == maxlen) return;
    for (int l : letter_order) {
      if (!word.empty() && word.back() == -l) continue;
      long t = c.states[state].next[label_of(l)];
      if (t < 0) continue;  // would leave the ball: cannot close within maxlen
      word.push_back(l);
      dfs(t, len + 1, maxlen);
      word.pop_back();
    }
  };
  for (long len = 1; len <= L; len++) dfs(0, 0, len);
  return out;
}

struct TransferReport {
  bool agree = false;
  Int nu_src = 0, nu_tgt = 0;
};

inline TransferReport rate_upper_transfer(const MarkedGroup& src, const MarkedGroup& tgt, long R,
                                          long cap = kDefaultStateCap) {
  BallCertificate a = ball(src, R, cap);
  BallCertificate b = ball(tgt, R, cap);
  TransferReport r;
  r.agree = balls_agree(a, b);
  r.nu_src = (long)a.states.size();
  r.nu_tgt = (long)b.states.size();
  return r;
}

}  // namespace mg
