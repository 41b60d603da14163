#pragma once
// Group descriptor parser.
//   G ::= "Z" | "Z^"INT | "Z/"INT | "F"INT | "N2_"INT["/"INT] | "Grig"
//       | "BS(1,"INT")" | "FM"INT | "Hall("path")"
//       | G "x" G | G "*" G | G "wr" G | G "wrXGrig"
// Parentheses optional around atoms; binary operators are left-associative;
// "x" of two abelian models collapses to a single FinAbelian.
#include "mg/colouring_io.hpp"
#include "mg/models/bs.hpp"
#include "mg/models/fin_abelian.hpp"
#include "mg/models/free_group.hpp"
#include "mg/models/grigorchuk.hpp"
#include "mg/models/hall.hpp"
#include "mg/models/metabelian.hpp"
#include "mg/models/nilc2.hpp"
#include "mg/models/products.hpp"
#include "mg/models/wreath.hpp"

namespace mg {

namespace detail {

struct GroupParser {
  const std::string& s;
  size_t pos = 0;

  explicit GroupParser(const std::string& str) : s(str) {}

  void skip() { while (pos < s.size() && isspace((unsigned char)s[pos])) pos++; }
  [[noreturn]] void fail(const std::string& m) {
    throw std::invalid_argument("group syntax error at position " + std::to_string(pos) + ": " + m);
  }
  bool lit(const std::string& t) {
    skip();
    if (s.compare(pos, t.size(), t) == 0) { pos += t.size(); return true; }
    return false;
  }
  long integer() {
    skip();
    size_t st = pos;
    while (pos < s.size() && isdigit((unsigned char)s[pos])) pos++;
    if (pos == st) fail("expected integer");
    return std::stol(s.substr(st, pos - st));
  }

  GroupPtr atom() {
    skip();
    if (pos >= s.size()) fail("expected group");
    if (s[pos] == '(') {
      pos++;
      GroupPtr g = expr();
      skip();
      if (pos >= s.size() || s[pos] != ')') fail("expected ')'");
      pos++;
      return g;
    }
    if (lit("Grig")) return std::make_shared<Grigorchuk>();
    if (lit("BS(1,")) {
      long p = integer();
      if (!lit(")")) fail("expected ')'");
      return std::make_shared<BaumslagSolitar>(Int(p));
    }
    if (lit("Hall(")) {
      size_t start = pos;
      int depth = 1;
      while (pos < s.size() && depth) {
        if (s[pos] == '(') depth++;
        if (s[pos] == ')') depth--;
        if (depth) pos++;
      }
      if (pos >= s.size()) fail("expected ')'");
      std::string path = s.substr(start, pos - start);
      pos++;
      return std::make_shared<HallGroup>(load_colouring_file(path));
    }
    if (lit("FM")) return std::make_shared<FreeMetabelian>((int)integer());
    if (lit("N2_")) {
      long k = integer();
      Int n = 0;
      if (lit("/")) n = integer();
      return std::make_shared<NilC2>((int)k, n);
    }
    if (lit("F")) return std::make_shared<FreeGroup>((int)integer());
    if (lit("Z")) {
      skip();
      if (pos < s.size() && s[pos] == '^') {
        pos++;
        long n = integer();
        return std::make_shared<FinAbelian>(std::vector<Int>(n, 0));
      }
      if (pos < s.size() && s[pos] == '/') {
        pos++;
        long n = integer();
        return std::make_shared<FinAbelian>(std::vector<Int>{Int(n)});
      }
      return std::make_shared<FinAbelian>(std::vector<Int>{0});
    }
    fail("unknown group descriptor");
  }

  GroupPtr expr() {
    GroupPtr g = atom();
    for (;;) {
      skip();
      if (lit("wrXGrig")) {
        g = std::make_shared<PermWreathGrig>(g);
      } else if (lit("wr")) {
        g = std::make_shared<WreathProduct>(g, atom());
      } else if (lit("x")) {
        GroupPtr h = atom();
        auto* fa = dynamic_cast<const FinAbelian*>(g.get());
        auto* fb = dynamic_cast<const FinAbelian*>(h.get());
        if (fa && fb) {
          auto fs = fa->factors();
          auto f2 = fb->factors();
          fs.insert(fs.end(), f2.begin(), f2.end());
          g = std::make_shared<FinAbelian>(std::move(fs));
        } else {
          g = std::make_shared<DirectProduct>(g, h);
        }
      } else if (lit("*")) {
        g = std::make_shared<FreeProduct>(g, atom());
      } else {
        break;
      }
    }
    return g;
  }
};

}  // namespace detail

inline GroupPtr parse_group(const std::string& descriptor) {
  detail::GroupParser p(descriptor);
  GroupPtr g = p.expr();
  p.skip();
  if (p.pos != descriptor.size()) p.fail("trailing input");
  return g;
}

}  // namespace mg
