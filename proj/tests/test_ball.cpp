// ball-engine: certificates, comparison, girth, growth, relations.
#include <catch2/catch_amalgamated.hpp>

#include "mg/ball.hpp"
#include "mg/parse.hpp"

using namespace mg;

static MarkedGroup std_of(const std::string& d) { return mark_std(parse_group(d)); }

TEST_CASE("ball shapes and growth counts") {
  auto z = std_of("Z");
  auto c = ball(z, 2);
  REQUIRE(c.states.size() == 5);

  auto z2 = std_of("Z^2");
  auto f2 = std_of("F2");
  REQUIRE(ball(z2, 1).states.size() == 5);
  REQUIRE(balls_agree(ball(z2, 1), ball(f2, 1)));
  REQUIRE(ball(z2, 2).states.size() == 13);
  REQUIRE(ball(f2, 2).states.size() == 17);
  REQUIRE(!balls_agree(ball(z2, 2), ball(f2, 2)));

  // exact growth formulas
  for (long R = 0; R <= 10; R++) {
    auto t = growth(z2, R);
    REQUIRE(t.counts[R] == 2 * R * R + 2 * R + 1);
  }
  for (long R = 0; R <= 8; R++) {
    auto t = growth(f2, R);
    REQUIRE(t.counts[R] == 2 * ipow(3, R) - 1);
  }
  // Grigorchuk: a,b,c,d distinct and nontrivial
  REQUIRE(growth(std_of("Grig"), 1).counts[1] == 5);
}

TEST_CASE("growth tables are submultiplicative and monotone") {
  for (const char* d : {"Z^2", "F2", "Grig", "BS(1,2)", "(Z/2) wr (Z)"}) {
    auto t = growth(std_of(d), 5);
    for (size_t i = 1; i < t.counts.size(); i++) REQUIRE(t.counts[i] >= t.counts[i - 1]);
    for (size_t i = 0; i < t.counts.size(); i++)
      for (size_t j = 0; i + j < t.counts.size(); j++)
        REQUIRE(t.counts[i + j] <= t.counts[i] * t.counts[j]);
  }
}

TEST_CASE("certificate consistency and determinism") {
  auto g = std_of("Grig");
  auto c1 = ball(g, 3);
  auto c2 = ball(g, 3);
  REQUIRE(c1.to_bytes() == c2.to_bytes());
  // inverse-edge duality
  int k = c1.arity;
  for (size_t i = 0; i < c1.states.size(); i++)
    for (int j = 0; j < 2 * k; j++) {
      long t = c1.states[i].next[j];
      if (t >= 0) REQUIRE(c1.states[t].next[(j + k) % (2 * k)] == (long)i);
    }
  // JSON round trip
  auto parsed = BallCertificate::from_json(nlohmann::json::parse(c1.to_bytes()));
  REQUIRE(parsed == c1);
}

TEST_CASE("truncation monotonicity") {
  auto z2 = std_of("Z^2");
  auto c4 = ball(z2, 4);
  for (long r = 0; r <= 4; r++) {
    auto t = truncate_ball(c4, r);
    REQUIRE(t == ball(z2, r));
  }
  // agreement at R implies agreement at all r <= R
  auto a = ball(std_of("F2"), 3);
  auto b = ball(std_of("(Z/2) wr (Z)"), 3);
  for (long r = 3; r >= 0; r--) {
    bool agree = balls_agree(truncate_ball(a, r), truncate_ball(b, r));
    if (agree)
      for (long s = r; s >= 0; s--)
        REQUIRE(balls_agree(truncate_ball(a, s), truncate_ball(b, s)));
  }
}

TEST_CASE("girth") {
  REQUIRE(!girth(std_of("F2"), 4).value.has_value());
  REQUIRE(girth(std_of("Z^2"), 3).value == 4);
  REQUIRE(girth(std_of("Grig"), 2).value == 2);
  REQUIRE(girth(std_of("Z/5"), 3).value == 5);
  // marking with a trivial element: girth 1
  REQUIRE(girth(mark_words(parse_group("Z"), {"e1", "e1 e1~"}), 2).value == 1);
  // girth-ball equivalence on a small suite
  for (const char* d : {"Z^2", "N2_2", "(Z) wr (Z)", "Grig", "BS(1,2)"}) {
    auto mg_ = std_of(d);
    auto free_std = std_of("F" + std::to_string(mg_.arity()));
    for (long R = 1; R <= 4; R++) {
      auto gr = girth(mg_, R);
      bool girth_exceeds = !gr.value.has_value() || *gr.value > 2 * R;
      bool agree = balls_agree(ball(mg_, R), ball(free_std, R));
      REQUIRE(girth_exceeds == agree);
    }
  }
}

TEST_CASE("relations enumeration") {
  auto rels = relations_up_to(std_of("Z^2"), 4);
  REQUIRE(rels.size() == 1);
  REQUIRE(rels[0] == parse_word("[g1,g2]", 2));
  REQUIRE(relations_up_to(std_of("F2"), 6).empty());
  REQUIRE(relations_up_to(std_of("N2_2/2"), 2).empty());
  // Grig: a^2 is the shortest
  auto gr = relations_up_to(std_of("Grig"), 2);
  REQUIRE(gr.size() == 4);  // a^2, b^2, c^2, d^2
}

TEST_CASE("rate upper transfer") {
  auto z2 = std_of("Z^2");
  auto f2 = std_of("F2");
  auto r = rate_upper_transfer(z2, f2, 2);
  REQUIRE(!r.agree);
  REQUIRE(r.nu_src == 13);
  REQUIRE(r.nu_tgt == 17);
  auto self = rate_upper_transfer(z2, z2, 4);
  REQUIRE(self.agree);
  REQUIRE(self.nu_src == self.nu_tgt);
}

TEST_CASE("resource cap overflows explicitly") {
  REQUIRE_THROWS_AS(ball(std_of("F2"), 8, 1000), BallOverflow);
}
