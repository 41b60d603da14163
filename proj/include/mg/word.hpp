#pragma once
// Words: freely reduced sequences of signed generator indices in {±1..±k}.
#include <algorithm>
#include <stdexcept>
#include <string>
#include <vector>

#include "mg/int.hpp"

namespace mg {

struct Word {
  std::vector<int> letters;  // signed indices, never 0, |l| <= arity
  int arity = 0;

  bool empty() const { return letters.empty(); }
  size_t size() const { return letters.size(); }
  bool operator==(const Word& o) const { return arity == o.arity && letters == o.letters; }
};

// Free reduction (cancel adjacent x x^-1).
inline std::vector<int> reduce_letters(const std::vector<int>& in) {
  std::vector<int> out;
  out.reserve(in.size());
  for (int l : in) {
    if (l == 0) throw std::invalid_argument("zero letter");
    if (!out.empty() && out.back() == -l) out.pop_back();
    else out.push_back(l);
  }
  return out;
}

inline Word make_word(std::vector<int> letters, int arity) {
  Word w;
  w.letters = reduce_letters(letters);
  for (int l : w.letters)
    if (l > arity || -l > arity) throw std::invalid_argument("letter exceeds arity");
  w.arity = arity;
  return w;
}

inline Word word_inverse(const Word& w) {
  Word r;
  r.arity = w.arity;
  r.letters.reserve(w.size());
  for (auto it = w.letters.rbegin(); it != w.letters.rend(); ++it) r.letters.push_back(-*it);
  return r;
}

inline Word word_concat(const Word& a, const Word& b) {
  std::vector<int> ls = a.letters;
  ls.insert(ls.end(), b.letters.begin(), b.letters.end());
  return make_word(std::move(ls), std::max(a.arity, b.arity));
}

inline Word word_pow(const Word& w, long e) {
  Word base = e >= 0 ? w : word_inverse(w);
  long n = e >= 0 ? e : -e;
  Word r;
  r.arity = w.arity;
  for (long i = 0; i < n; i++) r = word_concat(r, base);
  return r;
}

inline Word word_commutator(const Word& u, const Word& v) {
  return word_concat(word_concat(u, v), word_concat(word_inverse(u), word_inverse(v)));
}

// Substitute: letter i of w becomes args[i-1] (as free words).
inline Word word_substitute(const Word& w, const std::vector<Word>& args) {
  int ar = 0;
  for (auto& a : args) ar = std::max(ar, a.arity);
  std::vector<int> out;
  for (int l : w.letters) {
    int i = l > 0 ? l : -l;
    if (i > (int)args.size()) throw std::invalid_argument("substitution arity overflow");
    const Word& a = l > 0 ? args[i - 1] : word_inverse(args[i - 1]);
    out.insert(out.end(), a.letters.begin(), a.letters.end());
  }
  return make_word(std::move(out), ar);
}

// w = u * c * u^-1 with c cyclically reduced; returns (u, c).
inline std::pair<Word, Word> cyclic_decompose(const Word& w) {
  size_t i = 0, j = w.size();
  while (j >= i + 2 && w.letters[i] == -w.letters[j - 1]) { i++; j--; }
  Word u, c;
  u.arity = c.arity = w.arity;
  u.letters.assign(w.letters.begin(), w.letters.begin() + i);
  c.letters.assign(w.letters.begin() + i, w.letters.begin() + j);
  return {u, c};
}

inline std::string word_str(const Word& w) {
  std::string s;
  for (int l : w.letters) {
    if (!s.empty()) s += ' ';
    s += (l > 0 ? "g" : "g-") + std::to_string(std::abs(l));
  }
  return s.empty() ? "1" : s;
}

// ---- word parser -------------------------------------------------------
// Grammar: juxtaposition; "^"INT (INT may be negative); postfix "~" inverse;
// commutator "[u,v]"; generators "g1".."gk" or names from a per-model list.
namespace detail {

struct WordParser {
  const std::string& s;
  size_t pos = 0;
  int arity;
  const std::vector<std::string>& names;  // optional model-specific generator names

  WordParser(const std::string& str, int ar, const std::vector<std::string>& nm)
      : s(str), arity(ar), names(nm) {}

  void skip() { while (pos < s.size() && isspace((unsigned char)s[pos])) pos++; }
  [[noreturn]] void fail(const std::string& msg) {
    throw std::invalid_argument("word syntax error at position " + std::to_string(pos) + ": " + msg);
  }

  long integer() {
    skip();
    size_t start = pos;
    if (pos < s.size() && (s[pos] == '-' || s[pos] == '+')) pos++;
    while (pos < s.size() && isdigit((unsigned char)s[pos])) pos++;
    if (pos == start || (pos == start + 1 && !isdigit((unsigned char)s[start])))
      fail("expected integer");
    return std::stol(s.substr(start, pos - start));
  }

  Word atom() {
    skip();
    if (pos >= s.size()) fail("expected generator or '['");
    if (s[pos] == '(') {
      pos++;
      Word w = expr();
      skip();
      if (pos >= s.size() || s[pos] != ')') fail("expected ')'");
      pos++;
      return w;
    }
    if (s[pos] == '[') {
      pos++;
      Word u = expr();
      skip();
      if (pos >= s.size() || s[pos] != ',') fail("expected ',' in commutator");
      pos++;
      Word v = expr();
      skip();
      if (pos >= s.size() || s[pos] != ']') fail("expected ']'");
      pos++;
      return word_commutator(u, v);
    }
    // gN form
    if (s[pos] == 'g' && pos + 1 < s.size() && isdigit((unsigned char)s[pos + 1])) {
      pos++;
      long i = integer();
      if (i < 1 || i > arity) fail("generator index out of range");
      return make_word({(int)i}, arity);
    }
    // named generator: longest match from names
    size_t best = 0;
    int besti = -1;
    for (size_t i = 0; i < names.size(); i++) {
      const auto& n = names[i];
      if (!n.empty() && n.size() > best && s.compare(pos, n.size(), n) == 0) {
        best = n.size();
        besti = (int)i;
      }
    }
    if (besti >= 0 && besti < arity) {
      pos += best;
      return make_word({besti + 1}, arity);
    }
    fail("unknown generator name");
  }

  Word factor() {
    Word w = atom();
    for (;;) {
      skip();
      if (pos < s.size() && s[pos] == '~') {
        pos++;
        w = word_inverse(w);
      } else if (pos < s.size() && s[pos] == '^') {
        pos++;
        long e = integer();
        w = word_pow(w, e);
      } else
        break;
    }
    return w;
  }

  Word expr() {
    Word w;
    w.arity = arity;
    for (;;) {
      skip();
      if (pos >= s.size() || s[pos] == ',' || s[pos] == ')' || s[pos] == ']') break;
      w = word_concat(w, factor());
      w.arity = arity;
    }
    return w;
  }
};

}  // namespace detail

inline Word parse_word(const std::string& text, int arity,
                       const std::vector<std::string>& names = {}) {
  detail::WordParser p(text, arity, names);
  Word w = p.expr();
  p.skip();
  if (p.pos != text.size()) p.fail("trailing input");
  w.arity = arity;
  return w;
}

}  // namespace mg
