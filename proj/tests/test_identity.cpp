// identity-lab: roots, merging, sentences, falsification, distinctive tuples,
// small cancellation, rapid matrices, verbal subgroups.
#include <catch2/catch_amalgamated.hpp>
#include <random>

#include "mg/griglab.hpp"
#include "mg/identity.hpp"
#include "mg/nillab.hpp"
#include "mg/parse.hpp"
#include "mg/sentence.hpp"
#include "mg/smallcancel.hpp"
#include "mg/witness.hpp"

using namespace mg;

static Word W(const std::string& s, int ar) { return parse_word(s, ar); }

TEST_CASE("primitive roots") {
  auto [r1, e1] = primitive_root(W("g1^4", 1));
  REQUIRE(r1 == W("g1", 1));
  REQUIRE(e1 == 4);
  auto [r2, e2] = primitive_root(W("g1 g2", 2));
  REQUIRE(r2 == W("g1 g2", 2));
  REQUIRE(e2 == 1);
  auto [r3, e3] = primitive_root(W("(g1 g2)^3", 2));
  REQUIRE(r3 == W("g1 g2", 2));
  REQUIRE(e3 == 3);
  // conjugates keep their conjugator
  auto [r4, e4] = primitive_root(W("g2 g1^2 g2~", 2));
  REQUIRE(r4 == W("g2 g1 g2~", 2));
  REQUIRE(e4 == 2);
}

TEST_CASE("merging identities") {
  REQUIRE(merge_identities({W("g1^2", 1)}) == W("g1^2", 1));
  REQUIRE(merge_identities({W("g1^2", 1), W("g1^3", 1)}) == W("g1^6", 1));
  Word c = W("[g1,g2]", 2);
  REQUIRE(merge_identities({c, W("g1", 2)}) == word_commutator(c, W("g1", 2)));
  REQUIRE_THROWS_AS(merge_identities({}), std::invalid_argument);
  REQUIRE_THROWS_AS(merge_identities({Word{{}, 1}}), std::invalid_argument);

  // merged word vanishes whenever one input does, on random tuples
  std::vector<Word> ws{W("g1^2", 2), W("[g1,g2]", 2), W("g2^3", 2)};
  Word m = merge_identities(ws);
  REQUIRE(!m.empty());
  std::mt19937 rng(7);
  for (auto& desc : {"N2_2/12", "Z wr (Z)"}) {
    auto g = parse_group(desc);
    auto elems = elements_in_ball(mark_std(g), 3);
    std::uniform_int_distribution<size_t> pick(0, elems.size() - 1);
    for (int t = 0; t < 1000; t++) {
      std::vector<Elem> args{elems[pick(rng)], elems[pick(rng)]};
      bool some_vanishes = false;
      for (auto& w : ws)
        some_vanishes = some_vanishes || g->is_id(evaluate_word(*g, w, args));
      if (some_vanishes) REQUIRE(g->is_id(evaluate_word(*g, m, args)));
    }
  }
}

// commutative transitivity; the middle element must be nontrivial
static const char* kCommTrans = "!(g2 = 1) & [g1,g2]=1 & [g2,g3]=1 => [g1,g3]=1";
static const char* kCentral3 = "([g1,g2]=1 & [g1,g3]=1 & !([g2,g3]=1)) => [g1,g4]=1";

TEST_CASE("sentence parsing and evaluation") {
  auto g = parse_group("Z^2");
  auto s = parse_sentence("(e1 e2)^2 = 1 | !(e1 = 1)", 2, g->gen_names());
  std::vector<Elem> args{g->gen(0), g->gen(1)};
  REQUIRE(sentence_eval(s.root, *g, args));  // e1 != 1
  REQUIRE_THROWS_AS(parse_sentence("g1 = 2", 1), std::invalid_argument);
  REQUIRE_THROWS_AS(parse_sentence("g1", 1), std::invalid_argument);

  // commutation transitivity holds on the F2 ball, fails in Z x F2
  auto free2 = mark_std(parse_group("F2"));
  auto ct = parse_sentence(kCommTrans, 3);
  auto v1 = evaluate_sentence_on_ball(free2, ct, 2);
  REQUIRE(v1.holds_on_ball);
  auto zf = mark_std(parse_group("Z x F2"));
  auto v2 = evaluate_sentence_on_ball(zf, ct, 2);
  REQUIRE(!v2.holds_on_ball);
  REQUIRE(!sentence_eval(ct.root, *zf.model, v2.witness));  // sound witness
}

TEST_CASE("centrality sentence separates N22 from its square") {
  auto h = parse_group("N2_2 x N2_2");
  auto s = parse_sentence(kCentral3, 4);
  // a, z generators of the first copy; b, c of the second
  std::vector<Elem> tuple{h->gen(0), h->gen(2), h->gen(3), h->gen(1)};
  REQUIRE(!sentence_eval(s.root, *h, tuple));
  auto g = mark_std(parse_group("N2_2"));
  REQUIRE(evaluate_sentence_on_ball(g, s, 2).holds_on_ball);
}

TEST_CASE("identity falsification") {
  Word sq = W("[g1,g2]^2", 2);
  REQUIRE(!falsify_identity(parse_group("N2_2/2"), sq, 50'000).has_value());
  auto t = falsify_identity(parse_group("N2_2/3"), sq);
  REQUIRE(t.has_value());
  auto m3 = parse_group("N2_2/3");
  REQUIRE(!m3->is_id(evaluate_word(*m3, sq, *t)));
  REQUIRE(falsify_identity(parse_group("F2"), W("[g1,g2]", 2)).has_value());
}

TEST_CASE("almost-identity falsification") {
  auto grig = std::make_shared<Grigorchuk>();
  auto t = falsify_almost_identity(grig, W("g1^2", 1), 3);
  REQUIRE(t.has_value());
  REQUIRE(mark_elems(grig, *t).generates());
  REQUIRE(grig->order_by_squaring((*t)[0]) > 2);

  REQUIRE(!falsify_almost_identity(parse_group("Z/2 x Z/2"), W("[g1,g2]", 2), 2).has_value());
  auto f = falsify_almost_identity(parse_group("F2"), W("[g1,g2]", 2), 2);
  REQUIRE(f.has_value());
}

static void check_distinctive(const Word& w) {
  auto grig = std::make_shared<Grigorchuk>();
  auto tuple = distinctive_tuple(w);
  REQUIRE(tuple.size() == 3);
  REQUIRE(mark_elems(grig, tuple).generates());
  // prefix orbit points pairwise distinct, hence w(tuple) moves the basepoint
  std::vector<std::string> pts{""};
  for (int l : w.letters) {
    Elem e = l > 0 ? tuple[l - 1] : grig->inv(tuple[-l - 1]);
    pts.push_back(grig->apply_orbit(e, pts.back()));
  }
  for (size_t i = 0; i < pts.size(); i++)
    for (size_t j = i + 1; j < pts.size(); j++) REQUIRE(pts[i] != pts[j]);
  REQUIRE(!grig->is_id(evaluate_word(*grig, w, tuple)));
}

TEST_CASE("distinctive tuples") {
  check_distinctive(W("g1", 2));
  check_distinctive(W("[g1,g2]", 2));
  check_distinctive(W("(g1 g2)^4", 2));
  REQUIRE_THROWS_AS(distinctive_tuple(Word{{}, 2}), std::invalid_argument);
}

TEST_CASE("wreath almost-identities") {
  Word u = wreath_almost_identity(W("[g1,g2]", 2), W("[g1,g2]", 2));
  REQUIRE(!u.empty());
  REQUIRE_THROWS_AS(wreath_almost_identity(W("g1^2", 1), W("g1", 1)), std::runtime_error);

  // v = y^2 an identity of Z/2, w = [x1,x2] an almost-identity of Z:
  // the composite vanishes on tuples of the lamplighter Z/2 wr Z
  Word comp = wreath_almost_identity(W("g1^2", 1), W("[g1,g2]", 2));
  auto ll = parse_group("(Z/2) wr (Z)");
  auto elems = elements_in_ball(mark_std(ll), 2);
  for (auto& x : elems)
    for (auto& y : elems) REQUIRE(ll->is_id(evaluate_word(*ll, comp, {x, y})));
}

TEST_CASE("small cancellation verifiers agree and classify") {
  auto bad = std::vector<Word>{W("g1 g2 g1 g2", 2)};
  REQUIRE(!verify_small_cancellation(bad).ok);
  REQUIRE(!verify_small_cancellation(std::vector<Word>{W("g1^9", 2)}).ok);

  auto ws = small_cancellation_words(2, 2, 20);
  auto rep = verify_small_cancellation(ws);
  REQUIRE(rep.ok);
  REQUIRE(rep.min_len >= 20);
  REQUIRE(6 * rep.max_piece < rep.min_len);

  // brute force agrees with the optimized sweep on small inputs
  std::vector<std::vector<Word>> suites{
      bad,
      {W("g1^5", 2)},
      {W("g1 g2 g1 g2^2 g1 g2^3", 2)},
      {W("g1 g2^2 g1 g2^3 g1 g2^4 g1 g2^5", 2), W("g2 g1^2 g2 g1^3 g2 g1^4", 2)},
      {W("g1 g2 g1 g2^2 g1 g2^3 g1 g2^4 g1 g2^5 g1 g2^6", 2), W("g1^3 g2^7 g1^4 g2^8", 2)}};
  for (auto& su : suites) {
    long total = 0;
    for (auto& w : su) total += (long)w.size();
    REQUIRE(total <= 200);
    auto a = verify_small_cancellation_brute(su);
    auto b = verify_small_cancellation(su);
    REQUIRE(a.ok == b.ok);
    REQUIRE(a.max_piece == b.max_piece);
    REQUIRE(a.min_len == b.min_len);
  }
}

TEST_CASE("rapid matrices and speed sequences") {
  REQUIRE(speed_check({5, 3126}, 5));
  REQUIRE(!speed_check({5, 3124}, 5));
  REQUIRE(speed_check({}, 3));

  auto v1 = rapid_matrix(1, 2, 5);
  REQUIRE(v1[0][0] == 5);
  REQUIRE(v1[1][0] == 3126);

  auto v2 = rapid_matrix(2, 3, 2);
  std::vector<Int> flat;
  for (auto& r : v2)
    for (auto& x : r) flat.push_back(x);
  REQUIRE(speed_check(flat, 2));
  REQUIRE(is_probable_prime(det({{v2[0][0], v2[0][1]}, {v2[1][0], v2[1][1]}})));
  REQUIRE(is_probable_prime(v2[0][0]));
  REQUIRE(maximal_minor_gcd(v2) == 1);
  REQUIRE_THROWS_AS(rapid_matrix(2, 2, 2), std::invalid_argument);
}

TEST_CASE("discriminating tuples") {
  auto dt = discriminating_tuple(2, 3, 4);
  REQUIRE(dt.tuple.size() == 3);
  REQUIRE(dt.verified_radius == 2);
  auto model = std::make_shared<NilC2>(2, Int(0));
  REQUIRE(mark_elems(model, dt.tuple).generates());
  REQUIRE_THROWS_AS(discriminating_tuple(2, 2, 4), std::invalid_argument);
  REQUIRE(discriminating_tuple(2, 3, 0).tuple.size() == 3);
}

TEST_CASE("verbal subgroups of class-2 models") {
  Word c = W("[g1,g2]", 2);
  auto inf = verbal_subgroup(parse_group("N2_2"), {c});
  REQUIRE(!inf.finite);
  REQUIRE(inf.free_rank == 1);

  auto five = verbal_subgroup(parse_group("N2_2/5"), {c});
  REQUIRE(five.finite);
  REQUIRE(five.order == 5);
  REQUIRE(five.invariant_factors == std::vector<Int>{5});

  auto sq = verbal_subgroup(parse_group("N2_2/5 x N2_2/5"), {c});
  REQUIRE(sq.order == 25);
  REQUIRE(sq.invariant_factors == std::vector<Int>{5, 5});

  REQUIRE_THROWS_AS(verbal_subgroup(parse_group("F2"), {c}), std::invalid_argument);
}

TEST_CASE("falsifications transfer from target to source along a witness") {
  // free_mn at R = 4: balls agree at radius 4, atoms of length <= 4 may be
  // checked at rho = 1 on both sides through the shared BFS indexing
  Witness w = make_witness("free_mn");
  MarkedGroup src = w.source(4);
  REQUIRE(balls_agree(ball(src, 4), ball(w.target, 4)));
  auto s = parse_sentence("[g1,g2] = 1", 2);
  auto es = elements_in_ball(src, 1);
  auto et = elements_in_ball(w.target, 1);
  REQUIRE(es.size() == et.size());
  bool found = false;
  for (size_t i = 0; i < et.size() && !found; i++)
    for (size_t j = 0; j < et.size() && !found; j++)
      if (!sentence_eval(s.root, *w.target.model, {et[i], et[j]})) {
        found = true;
        REQUIRE(!sentence_eval(s.root, *src.model, {es[i], es[j]}));
      }
  REQUIRE(found);
}

TEST_CASE("a 3-element generating tuple with no short relation") {
  auto grig = std::make_shared<Grigorchuk>();
  auto tuple = high_girth_tuple(6);
  REQUIRE(tuple.size() == 3);
  MarkedGroup m = mark_elems(grig, tuple);
  REQUIRE(m.generates());
  GirthResult g = girth(m, 3);
  REQUIRE((!g.value || *g.value >= 6));
  for (auto& e : tuple) {
    Int ord = grig->order_by_squaring(e);
    REQUIRE((ord == 0 || ord >= 6));
  }
}
