#pragma once
// Universal sentences: quantifier-free boolean formulas over atoms "w = 1",
// checked exhaustively on tuples from a ball.  The positive verdict is
// explicitly bounded ("holds on ball"); a witness is a sound falsification.
#include "mg/ball.hpp"

namespace mg {

struct SentenceNode {
  char op = 'a';  // 'a' atom, '!' not, '&' and, '|' or
  Word atom;
  std::vector<SentenceNode> kids;
};

struct UniversalSentence {
  int arity = 0;
  SentenceNode root;
};

namespace detail {

// Grammar: impl := or ("=>" impl)? ; or := and ("|" and)* ;
// and := prim ("&" prim)* ; prim := "!" prim | "(" impl ")" | WORD "=" "1".
// A parenthesis opens a formula group iff its matched span contains "="
// (words never do, formulas always do).
struct SentenceParser {
  const std::string& s;
  size_t pos = 0;
  int arity;
  const std::vector<std::string>& names;

  void skip() { while (pos < s.size() && isspace((unsigned char)s[pos])) pos++; }
  [[noreturn]] void fail(const std::string& msg) {
    throw std::invalid_argument("sentence syntax error at position " + std::to_string(pos) +
                                ": " + msg);
  }

  SentenceNode prim() {
    skip();
    if (pos >= s.size()) fail("expected atom");
    if (s[pos] == '!') {
      pos++;
      SentenceNode n;
      n.op = '!';
      n.kids.push_back(prim());
      return n;
    }
    if (s[pos] == '(') {
      size_t depth = 0, i = pos;
      for (; i < s.size(); i++) {
        if (s[i] == '(') depth++;
        if (s[i] == ')' && --depth == 0) break;
      }
      if (i >= s.size()) fail("unbalanced '('");
      if (s.substr(pos, i - pos).find('=') != std::string::npos) {
        pos++;
        SentenceNode n = impl();
        skip();
        if (pos >= s.size() || s[pos] != ')') fail("expected ')'");
        pos++;
        return n;
      }
      // else: the parenthesis starts a word; fall through to the atom scan
    }
    size_t eq = s.find('=', pos);
    if (eq == std::string::npos) fail("expected '=' in atom");
    SentenceNode n;
    n.atom = parse_word(s.substr(pos, eq - pos), arity, names);
    pos = eq + 1;
    skip();
    if (pos >= s.size() || s[pos] != '1') fail("atom must compare against 1");
    pos++;
    return n;
  }

  SentenceNode conj() {
    SentenceNode n = prim();
    for (skip(); pos < s.size() && s[pos] == '&'; skip()) {
      pos++;
      if (n.op != '&') {
        SentenceNode p;
        p.op = '&';
        p.kids.push_back(std::move(n));
        n = std::move(p);
      }
      n.kids.push_back(prim());
    }
    return n;
  }

  SentenceNode disj() {
    SentenceNode n = conj();
    for (skip(); pos < s.size() && s[pos] == '|'; skip()) {
      pos++;
      if (n.op != '|') {
        SentenceNode p;
        p.op = '|';
        p.kids.push_back(std::move(n));
        n = std::move(p);
      }
      n.kids.push_back(conj());
    }
    return n;
  }

  SentenceNode impl() {
    SentenceNode a = disj();
    skip();
    if (pos + 1 < s.size() && s[pos] == '=' && s[pos + 1] == '>') {
      pos += 2;
      SentenceNode b = impl();  // right-associative; a => b is !a | b
      SentenceNode na;
      na.op = '!';
      na.kids.push_back(std::move(a));
      SentenceNode n;
      n.op = '|';
      n.kids.push_back(std::move(na));
      n.kids.push_back(std::move(b));
      return n;
    }
    return a;
  }
};

}  // namespace detail

inline UniversalSentence parse_sentence(const std::string& text, int arity,
                                        const std::vector<std::string>& names = {}) {
  detail::SentenceParser p{text, 0, arity, names};
  UniversalSentence s;
  s.arity = arity;
  s.root = p.impl();
  p.skip();
  if (p.pos != text.size()) p.fail("trailing input");
  return s;
}

inline bool sentence_eval(const SentenceNode& n, const Group& g, const std::vector<Elem>& args) {
  switch (n.op) {
    case 'a': return g.is_id(evaluate_word(g, n.atom, args));
    case '!': return !sentence_eval(n.kids[0], g, args);
    case '&':
      for (auto& k : n.kids)
        if (!sentence_eval(k, g, args)) return false;
      return true;
    default:
      for (auto& k : n.kids)
        if (sentence_eval(k, g, args)) return true;
      return false;
  }
}

struct SentenceVerdict {
  bool holds_on_ball = false;
  std::vector<Elem> witness;  // falsifying tuple when !holds_on_ball
};

// Exhaustive check over all arity-tuples of ball-rho elements, in BFS x
// odometer order (deterministic).  A witness falsifies the sentence in the
// group; "holds on ball" claims nothing beyond the enumerated tuples.
inline SentenceVerdict evaluate_sentence_on_ball(const MarkedGroup& mg,
                                                 const UniversalSentence& s, long rho = 3,
                                                 long tuple_cap = 50'000'000,
                                                 long state_cap = kDefaultStateCap) {
  auto elems = elements_in_ball(mg, rho, state_cap);
  int n = s.arity;
  double total = 1;
  for (int i = 0; i < n; i++) total *= (double)elems.size();
  if (total > (double)tuple_cap) throw std::runtime_error("sentence tuple cap exceeded");
  std::vector<size_t> idx(n, 0);
  std::vector<Elem> args(n, mg.model->id());
  for (;;) {
    for (int i = 0; i < n; i++) args[i] = elems[idx[i]];
    if (!sentence_eval(s.root, *mg.model, args)) return {false, args};
    int i = n - 1;
    while (i >= 0 && ++idx[i] == elems.size()) idx[i--] = 0;
    if (i < 0) break;
  }
  return {true, {}};
}

}  // namespace mg
