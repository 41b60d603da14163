// Command-line front end.  Every subcommand is a thin adapter over the
// library: stdout carries a JSON (or text) report with the effective config
// and timings; -o writes the deterministic artifact (certificate, CSV,
// colouring, ...) without timing data.  Exit codes: 0 success / verdict
// true, 1 verdict false, 2 error.
#include <chrono>
#include <fstream>
#include <iostream>
#include <map>
#include <string>
#include <vector>

#include "mg/abelian.hpp"
#include "mg/colouring_io.hpp"
#include "mg/griglab.hpp"
#include "mg/growthlab.hpp"
#include "mg/identity.hpp"
#include "mg/poset.hpp"
#include "mg/sentence.hpp"
#include "mg/smallcancel.hpp"

using namespace mg;
using nlohmann::json;

static const char* kToolVersion = "1.0.0";

namespace {

struct Args {
  std::vector<std::string> pos;
  std::map<std::string, std::string> opt;
};

Args parse_args(int argc, char** argv, int from) {
  Args a;
  for (int i = from; i < argc; i++) {
    std::string t = argv[i];
    if (t.size() >= 2 && t[0] == '-' && !std::isdigit((unsigned char)t[1]) && t != "-") {
      std::string key = t.substr(t.find_first_not_of('-'));
      if (i + 1 >= argc) throw std::invalid_argument("flag " + t + " needs a value");
      a.opt[key] = argv[++i];
    } else {
      a.pos.push_back(t);
    }
  }
  return a;
}

std::string str_opt(const Args& a, const std::string& k, const std::string& def) {
  auto it = a.opt.find(k);
  return it == a.opt.end() ? def : it->second;
}

long long_opt(const Args& a, const std::string& k, long def) {
  auto it = a.opt.find(k);
  return it == a.opt.end() ? def : std::stol(it->second);
}

long require_long(const Args& a, const std::string& k) {
  auto it = a.opt.find(k);
  if (it == a.opt.end()) throw std::invalid_argument("missing required flag --" + k);
  return std::stol(it->second);
}

const std::string& require_pos(const Args& a, size_t i, const std::string& what) {
  if (i >= a.pos.size()) throw std::invalid_argument("missing argument: " + what);
  return a.pos[i];
}

std::vector<std::string> split(const std::string& s, char delim) {
  std::vector<std::string> out;
  std::string cur;
  for (char c : s) {
    if (c == delim) {
      out.push_back(cur);
      cur.clear();
    } else if (!std::isspace((unsigned char)c) || delim == ' ') {
      cur += c;
    }
  }
  out.push_back(cur);
  return out;
}

MarkedGroup marked_from(const Args& a, size_t pos, const std::string& gens_key = "gens") {
  GroupPtr g = parse_group(require_pos(a, pos, "group descriptor"));
  std::string gens = str_opt(a, gens_key, "");
  if (gens.empty()) return mark_std(std::move(g));
  return mark_words(std::move(g), split(gens, ','));
}

// the report printed to stdout; the artifact (if any) goes to -o verbatim
struct Run {
  json config = json::object();
  json result = json::object();
  std::string artifact;  // empty = result dump
  int code = 0;
};

int finish(const std::string& cmd, const Args& a, const Run& r,
           std::chrono::steady_clock::time_point t0) {
  std::string out = str_opt(a, "o", str_opt(a, "out", ""));
  if (!out.empty()) {
    std::ofstream f(out);
    if (!f) throw std::runtime_error("cannot write " + out);
    f << (r.artifact.empty() ? r.result.dump(1) + "\n" : r.artifact);
  }
  double ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0)
                  .count();
  if (str_opt(a, "format", "json") == "text") {
    for (auto& [k, v] : r.result.items())
      std::cout << k << " = " << (v.is_string() ? v.get<std::string>() : v.dump()) << "\n";
  } else {
    json rep{{"tool_version", kToolVersion},
             {"command", cmd},
             {"config", r.config},
             {"result", r.result},
             {"timings", {{"total_ms", ms}}}};
    std::cout << rep.dump(1) << "\n";
  }
  return r.code;
}

json words_json(const std::vector<Word>& ws) {
  json out = json::array();
  for (auto& w : ws) out.push_back(word_str(w));
  return out;
}

std::vector<Word> parse_words(const std::string& text, int arity, char delim = ';') {
  std::vector<Word> out;
  for (auto& s : split(text, delim)) out.push_back(parse_word(s, arity));
  return out;
}

Run cmd_ball(const Args& a) {
  Run r;
  long R = require_long(a, "R"), cap = long_opt(a, "cap", kDefaultStateCap);
  MarkedGroup m = marked_from(a, 0);
  r.config = {{"group", a.pos[0]}, {"gens", str_opt(a, "gens", "")}, {"R", R}, {"cap", cap}};
  BallCertificate c = ball(m, R, cap);
  r.artifact = c.to_bytes() + "\n";
  r.result = {{"radius", c.radius}, {"arity", c.arity}, {"states", c.states.size()}};
  return r;
}

Run cmd_compare(const Args& a) {
  Run r;
  long R = require_long(a, "R"), cap = long_opt(a, "cap", kDefaultStateCap);
  MarkedGroup m1 = marked_from(a, 0, "gens1"), m2 = marked_from(a, 1, "gens2");
  r.config = {{"group1", a.pos[0]}, {"group2", a.pos[1]}, {"gens1", str_opt(a, "gens1", "")},
              {"gens2", str_opt(a, "gens2", "")}, {"R", R}, {"cap", cap}};
  bool agree = balls_agree(ball(m1, R, cap), ball(m2, R, cap));
  r.result = {{"agree", agree}};
  r.code = agree ? 0 : 1;
  return r;
}

Run cmd_girth(const Args& a) {
  Run r;
  long rmax = long_opt(a, "rmax", long_opt(a, "R", 3));
  long cap = long_opt(a, "cap", kDefaultStateCap);
  MarkedGroup m = marked_from(a, 0);
  r.config = {{"group", a.pos[0]}, {"gens", str_opt(a, "gens", "")}, {"rmax", rmax}, {"cap", cap}};
  GirthResult g = girth(m, rmax, cap);
  r.result = {{"bound", g.bound}, {"value", g.value ? json(*g.value) : json(nullptr)}};
  return r;
}

Run cmd_growth(const Args& a) {
  Run r;
  long R = require_long(a, "R"), cap = long_opt(a, "cap", kDefaultStateCap);
  MarkedGroup m = marked_from(a, 0);
  r.config = {{"group", a.pos[0]}, {"gens", str_opt(a, "gens", "")}, {"R", R}, {"cap", cap}};
  GrowthTable t = growth(m, R, cap);
  std::string csv = "r,nu\n";
  json counts = json::array();
  for (long i = 0; i <= R; i++) {
    csv += std::to_string(i) + "," + istr(t.counts[i]) + "\n";
    counts.push_back(istr(t.counts[i]));
  }
  r.artifact = csv;
  r.result = {{"counts", counts}, {"rate_upper", t.rate_upper}};
  return r;
}

Run cmd_relations(const Args& a) {
  Run r;
  long L = require_long(a, "max-len"), cap = long_opt(a, "cap", kDefaultStateCap);
  MarkedGroup m = marked_from(a, 0);
  r.config = {{"group", a.pos[0]}, {"gens", str_opt(a, "gens", "")}, {"max-len", L}, {"cap", cap}};
  r.result = {{"relations", words_json(relations_up_to(m, L, cap))}};
  return r;
}

json witness_params(const Args& a) {
  static const std::set<std::string> reserved{"R", "cap", "o", "out", "format", "threads",
                                              "gens", "words"};
  json p = json::object();
  for (auto& [k, v] : a.opt) {
    if (reserved.count(k)) continue;
    bool num = !v.empty() && v.find_first_not_of("-0123456789") == std::string::npos;
    if (num) p[k] = std::stol(v);
    else p[k] = v;
  }
  return p;
}

Run cmd_witness(const Args& a) {
  Run r;
  long R = require_long(a, "R"), cap = long_opt(a, "cap", kDefaultStateCap);
  std::string case_id = require_pos(a, 0, "witness case");
  Witness w = make_witness(case_id, witness_params(a));
  r.config = {{"case", case_id}, {"params", w.params}, {"R", R}, {"cap", cap}};
  WitnessReport rep = verify_witness(w, R, cap);
  r.result = {{"agree", rep.agree},
              {"first_divergence",
               rep.first_divergence ? json(*rep.first_divergence) : json(nullptr)},
              {"states_explored", rep.states_explored}};
  r.code = rep.agree ? 0 : 1;
  return r;
}

Run cmd_transport(const Args& a) {
  Run r;
  long R = require_long(a, "R"), cap = long_opt(a, "cap", kDefaultStateCap);
  std::string case_id = require_pos(a, 0, "witness case");
  Witness w = make_witness(case_id, witness_params(a));
  auto names = w.target.model->gen_names();
  std::vector<Word> words;
  for (auto& s : split(str_opt(a, "words", ""), ','))
    words.push_back(parse_word(s, w.target.model->ngens(), names));
  Witness t = transport_target_marking(w, words);
  r.config = {{"case", case_id}, {"params", w.params}, {"words", words_json(words)},
              {"R", R}, {"cap", cap}};
  WitnessReport rep = verify_witness(t, R, cap);
  r.result = {{"agree", rep.agree},
              {"first_divergence",
               rep.first_divergence ? json(*rep.first_divergence) : json(nullptr)},
              {"states_explored", rep.states_explored}};
  r.code = rep.agree ? 0 : 1;
  return r;
}

AbelianNF nf_of(const std::string& descriptor) {
  return abelian_nf(parse_group(descriptor)->ab_moduli());
}

Run cmd_order_abelian(const Args& a) {
  Run r;
  AbelianNF x = nf_of(require_pos(a, 0, "abelian group")),
            y = nf_of(require_pos(a, 1, "abelian group"));
  r.config = {{"source", a.pos[0]}, {"target", a.pos[1]},
              {"hom-cap", long_opt(a, "hom-cap", 1000000)}};
  Tri t = preceq_abelian(x, y, long_opt(a, "hom-cap", 1000000));
  r.result = {{"source_nf", x.str()}, {"target_nf", y.str()},
              {"verdict", t == Tri::True ? "true" : (t == Tri::False ? "false" : "unknown")}};
  r.code = t == Tri::True ? 0 : (t == Tri::False ? 1 : 2);
  return r;
}

Run cmd_poset(const Args& a) {
  Run r;
  std::vector<Int> primes;
  for (auto& s : split(str_opt(a, "primes", "2,3,5"), ','))
    if (!s.empty()) primes.push_back(Int(s));
  std::vector<std::vector<int>> subsets;
  for (auto& part : split(str_opt(a, "subsets", ""), ';')) {
    std::vector<int> u;
    for (auto& s : split(part, ','))
      if (!s.empty()) u.push_back(std::stoi(s));
    subsets.push_back(u);
  }
  r.config = {{"primes", str_opt(a, "primes", "2,3,5")},
              {"subsets", str_opt(a, "subsets", "")}};
  auto fam = poset_from_subsets(primes, subsets);
  json names = json::array(), matrix = json::array();
  for (auto& g : fam) names.push_back(g.str());
  for (auto& x : fam) {
    json row = json::array();
    for (auto& y : fam) row.push_back(preceq_abelian(x, y) == Tri::True);
    matrix.push_back(row);
  }
  r.result = {{"groups", names}, {"matrix", matrix}};
  return r;
}

Run cmd_colouring(const Args& a) {
  Run r;
  std::vector<Int> I;
  for (auto& s : split(str_opt(a, "primes", ""), ','))
    if (!s.empty()) I.push_back(Int(s));
  // each theta: comma-separated m:n:p triples; thetas separated by ';'
  std::vector<FiniteColouring> thetas;
  std::string tspec = str_opt(a, "thetas", "");
  if (!tspec.empty())
    for (auto& part : split(tspec, ';')) {
      FiniteColouring th;
      for (auto& t : split(part, ','))
        if (!t.empty()) {
          auto f = split(t, ':');
          if (f.size() != 3) throw std::invalid_argument("theta entry needs m:n:p");
          th[{Int(f[0]), Int(f[1])}] = Int(f[2]);
        }
      thetas.push_back(th);
    }
  std::set<long> seed;
  for (auto& s : split(str_opt(a, "seed", ""), ','))
    if (!s.empty()) seed.insert(std::stol(s));
  r.config = {{"primes", str_opt(a, "primes", "")}, {"thetas", tspec},
              {"seed", str_opt(a, "seed", "")}};
  PrimeColouring phi = universal_colouring(I, thetas, seed);
  r.artifact = colouring_to_json(phi).dump(1) + "\n";
  json tp = json::array();
  for (auto& p : phi.torsion_primes()) tp.push_back(istr(p));
  r.result = {{"assignments", phi.assignments.size()}, {"log_entries", phi.log.size()},
              {"torsion_primes", tp}};
  return r;
}

Run cmd_hall(const Args& a) {
  Run r;
  long R = long_opt(a, "R", 2), cap = long_opt(a, "cap", kDefaultStateCap);
  std::string subsets = str_opt(a, "subsets", "");
  if (!subsets.empty()) {
    std::vector<std::vector<Int>> xs;
    for (auto& part : split(subsets, ';')) {
      std::vector<Int> u;
      for (auto& s : split(part, ','))
        if (!s.empty()) u.push_back(Int(s));
      xs.push_back(u);
    }
    r.config = {{"subsets", subsets}, {"R", R}};
    auto v = realize_finite_poset(xs, R);
    json matrix = json::array();
    for (auto& row : v) matrix.push_back(row);
    r.result = {{"matrix", matrix}};
    return r;
  }
  PrimeColouring phi = load_colouring_file(require_pos(a, 0, "source colouring file"));
  PrimeColouring psi = load_colouring_file(require_pos(a, 1, "target colouring file"));
  r.config = {{"source", a.pos[0]}, {"target", a.pos[1]}, {"R", R}, {"cap", cap}};
  Witness w = hall_witness(phi, psi, R);
  WitnessReport rep = verify_witness(w, R, cap);
  r.result = {{"agree", rep.agree}, {"matrix", w.params.at("matrix")}};
  r.code = rep.agree ? 0 : 1;
  return r;
}

Run cmd_discriminate(const Args& a) {
  Run r;
  int k = (int)require_long(a, "k"), n = (int)require_long(a, "n");
  long R = require_long(a, "R"), c0 = long_opt(a, "c0", 2);
  r.config = {{"k", k}, {"n", n}, {"R", R}, {"c0", c0}};
  DiscriminatingTuple t = discriminating_tuple(k, n, R, c0);
  json keys = json::array();
  for (auto& e : t.tuple) keys.push_back(e.key);
  r.result = {{"speed", t.speed}, {"verified_radius", t.verified_radius}, {"tuple", keys}};
  return r;
}

Run cmd_distinctive(const Args& a) {
  Run r;
  long hg = long_opt(a, "min-girth", 0);
  if (hg > 0) {
    r.config = {{"min-girth", hg}};
    auto grig = std::make_shared<Grigorchuk>();
    auto tuple = high_girth_tuple(hg);
    MarkedGroup m = mark_elems(grig, tuple);
    GirthResult g = girth(m, (hg + 1) / 2);
    json keys = json::array();
    for (auto& e : tuple) keys.push_back(e.key);
    r.result = {{"tuple", keys}, {"generates", m.generates()},
                {"girth", g.value ? json(*g.value) : json(nullptr)}};
    return r;
  }
  int k = (int)long_opt(a, "k", 3);
  std::string ws = str_opt(a, "word", "");
  if (ws.empty()) throw std::invalid_argument("distinctive needs --word or --min-girth");
  Word w = parse_word(ws, k);
  r.config = {{"word", ws}, {"k", k}};
  auto grig = std::make_shared<Grigorchuk>();
  auto tuple = distinctive_tuple(w, k);
  MarkedGroup m = mark_elems(grig, tuple);
  json keys = json::array();
  for (auto& e : tuple) keys.push_back(e.key);
  r.result = {{"tuple", keys}, {"generates", m.generates()},
              {"nontrivial", !grig->is_id(evaluate_word(*grig, w, tuple))}};
  return r;
}

Run cmd_sentence(const Args& a) {
  Run r;
  long rho = long_opt(a, "rho", 3), cap = long_opt(a, "cap", kDefaultStateCap);
  long tuple_cap = long_opt(a, "tuple-cap", 50'000'000);
  int vars = (int)long_opt(a, "vars", 2);
  std::string s = str_opt(a, "sentence", "");
  if (s.empty()) throw std::invalid_argument("sentence needs --sentence");
  MarkedGroup m = marked_from(a, 0);
  r.config = {{"group", a.pos[0]}, {"gens", str_opt(a, "gens", "")}, {"sentence", s},
              {"vars", vars}, {"rho", rho}, {"tuple-cap", tuple_cap}, {"cap", cap}};
  SentenceVerdict v = evaluate_sentence_on_ball(m, parse_sentence(s, vars), rho, tuple_cap, cap);
  json keys = json::array();
  for (auto& e : v.witness) keys.push_back(e.key);
  r.result = {{"holds_on_ball", v.holds_on_ball}, {"witness", keys}};
  r.code = v.holds_on_ball ? 0 : 1;
  return r;
}

Run cmd_merge(const Args& a) {
  Run r;
  int arity = (int)require_long(a, "arity");
  auto ws = parse_words(str_opt(a, "words", ""), arity);
  r.config = {{"arity", arity}, {"words", words_json(ws)}};
  r.result = {{"word", word_str(merge_identities(ws))}};
  return r;
}

Run cmd_smallcancel(const Args& a) {
  Run r;
  long den = long_opt(a, "lambda-den", 6);
  std::string gen = str_opt(a, "generate", "");
  if (!gen.empty()) {
    auto f = split(gen, ',');
    if (f.size() != 3) throw std::invalid_argument("--generate needs rank,count,min-len");
    r.config = {{"generate", gen}, {"lambda-den", den}};
    auto ws = small_cancellation_words(std::stoi(f[0]), std::stoi(f[1]), std::stol(f[2]));
    CancellationReport rep = verify_small_cancellation(ws, den);
    r.result = {{"words", words_json(ws)}, {"ok", rep.ok}, {"max_piece", rep.max_piece},
                {"min_len", rep.min_len}};
    r.code = rep.ok ? 0 : 1;
    return r;
  }
  int arity = (int)require_long(a, "arity");
  auto ws = parse_words(str_opt(a, "words", ""), arity);
  r.config = {{"arity", arity}, {"words", words_json(ws)}, {"lambda-den", den}};
  CancellationReport rep = verify_small_cancellation(ws, den);
  CancellationReport brute = verify_small_cancellation_brute(ws, den);
  if (rep.ok != brute.ok || rep.max_piece != brute.max_piece)
    throw std::logic_error("piece oracle disagreement");
  r.result = {{"ok", rep.ok}, {"max_piece", rep.max_piece}, {"min_len", rep.min_len}};
  r.code = rep.ok ? 0 : 1;
  return r;
}

Run cmd_alpha(const Args& a) {
  Run r;
  double tol = std::stod(str_opt(a, "tol", "1e-6"));
  r.config = {{"tol", tol}};
  AlphaRoot root = solve_alpha(tol);
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.10f", root.alpha);
  r.result = {{"alpha", buf}, {"lo", root.lo}, {"hi", root.hi},
              {"residual_lo", alpha_residual(root.lo)},
              {"residual_hi", alpha_residual(root.hi)}};
  return r;
}

Run cmd_nueg(const Args& a) {
  Run r;
  std::string lamp = str_opt(a, "lamp", "F2");
  std::vector<long> rs;
  for (auto& s : split(str_opt(a, "radii", "1,2"), ','))
    if (!s.empty()) rs.push_back(std::stol(s));
  long cap = long_opt(a, "cap", kDefaultStateCap);
  r.config = {{"lamp", lamp}, {"radii", str_opt(a, "radii", "1,2")}, {"cap", cap}};
  auto rows = nueg_signature(lamp, rs, cap);
  r.artifact = nueg_csv(rows);
  json jr = json::array();
  bool all = true;
  for (auto& row : rows) {
    jr.push_back({{"R", row.R}, {"nu_witness", istr(row.nu_witness)},
                  {"nu_std", istr(row.nu_std)}, {"rate_witness", row.rate_witness},
                  {"rate_std", row.rate_std}, {"agree", row.agree}});
    all = all && row.agree;
  }
  r.result = {{"rows", jr}};
  r.code = all ? 0 : 1;
  return r;
}

}  // namespace

int main(int argc, char** argv) {
  if (argc < 2) {
    std::cerr << "usage: mgtool <command> [args]\ncommands: ball compare girth growth relations "
                 "witness transport order-abelian poset colouring hall discriminate distinctive "
                 "sentence merge smallcancel alpha nueg\n";
    return 2;
  }
  std::string cmd = argv[1];
  auto t0 = std::chrono::steady_clock::now();
  try {
    Args a = parse_args(argc, argv, 2);
    (void)long_opt(a, "threads", 1);  // accepted; all computations are deterministic
    Run r;
    if (cmd == "ball") r = cmd_ball(a);
    else if (cmd == "compare") r = cmd_compare(a);
    else if (cmd == "girth") r = cmd_girth(a);
    else if (cmd == "growth") r = cmd_growth(a);
    else if (cmd == "relations") r = cmd_relations(a);
    else if (cmd == "witness") r = cmd_witness(a);
    else if (cmd == "transport") r = cmd_transport(a);
    else if (cmd == "order-abelian") r = cmd_order_abelian(a);
    else if (cmd == "poset") r = cmd_poset(a);
    else if (cmd == "colouring") r = cmd_colouring(a);
    else if (cmd == "hall") r = cmd_hall(a);
    else if (cmd == "discriminate") r = cmd_discriminate(a);
    else if (cmd == "distinctive") r = cmd_distinctive(a);
    else if (cmd == "sentence") r = cmd_sentence(a);
    else if (cmd == "merge") r = cmd_merge(a);
    else if (cmd == "smallcancel") r = cmd_smallcancel(a);
    else if (cmd == "alpha") r = cmd_alpha(a);
    else if (cmd == "nueg") r = cmd_nueg(a);
    else {
      std::cerr << "unknown command: " << cmd << "\n";
      return 2;
    }
    return finish(cmd, a, r, t0);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
}
