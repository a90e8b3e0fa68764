#include "mlift/mlift.hpp"

#include <catch2/catch_amalgamated.hpp>
#include <random>

#include "oracles.hpp"

using namespace mlift;

namespace {

Presentation P(const std::string& name, const std::string& relator) {
  Presentation p;
  p.name = name;
  p.relator = parse_cyclic(relator, 2);
  return p;
}

}  // namespace

TEST_CASE("threshold") {
  CHECK(threshold(3, 2) == 4);
  CHECK(threshold(4, 2) == 6);
  CHECK(threshold(5, 5) == 9);
  CHECK(threshold(5, 4) == 8);
  CHECK(threshold(2, 1) == 2);
  CHECK(threshold(3, 3) == 5);
  CHECK_THROWS_AS(threshold(1, 1), std::invalid_argument);
  CHECK_THROWS_AS(threshold(3, 0), std::invalid_argument);
}

TEST_CASE("fibered presentations short-circuit") {
  for (const char* w : {"xyxYXY", "xyXYxYXyxY"}) {
    MliftReport rep = find_min_m(P(w, w), Config{});
    CHECK(rep.status == Status::Fibered);
    CHECK(rep.fibered);
    CHECK_FALSE(rep.m_found);
    CHECK_FALSE(rep.n_threshold);
    CHECK(rep.conditions.empty());
    CHECK(rep.whitehead_calls == 0);
  }
}

TEST_CASE("fibered short-circuit property") {
  std::mt19937 rng(97);
  for (int t = 0; t < 25; ++t) {
    int k = 2 + t % 3;
    CyclicWord w = testing::random_fibered_word(rng, k);
    MliftReport rep = find_min_m(P("f", to_string(w, 2)), Config{});
    INFO("word " << to_string(w, 2));
    CHECK(rep.status == Status::Fibered);
    CHECK(rep.conditions.empty());
    CHECK(rep.whitehead_calls == 0);
    CHECK(rep.k == k);
  }
}

TEST_CASE("degenerate inputs produce typed outcomes") {
  // the commutator has abelianization zero, so b_1 = 2
  CHECK(find_min_m(P("c", "xyXY"), Config{}).status == Status::NotB1One);
  CHECK(find_min_m(P("z", "xxyXXY"), Config{}).status == Status::NotB1One);
  CHECK(find_min_m(P("x", "xxx"), Config{}).status == Status::MissingGen);
  CHECK(find_min_m(P("y", "yyy"), Config{}).status == Status::MissingGen);
  // (xy)^3 normalizes to a power of a single generator
  CHECK(find_min_m(P("b", "xyxyxy"), Config{}).status == Status::MissingGen);

  Presentation empty;
  empty.name = "empty";
  CHECK(find_min_m(empty, Config{}).status == Status::MissingGen);

  // a valid non-fibered word that admits no planar diagram
  MliftReport nr = find_min_m(P("nr", "xxyXXyy"), Config{});
  CHECK(nr.status == Status::NotRealizable);
  CHECK_FALSE(nr.geometric);
  CHECK(nr.k == 3);
  CHECK_FALSE(nr.fibered);
  CHECK(nr.conditions.empty());
}

TEST_CASE("not-b1-one detection") {
  // x y x^-1 y x y^-1 x^-1 y^-1 has abelianization (0, 0) and is not a
  // commutator realization issue: phi fails before anything else runs
  MliftReport rep = find_min_m(P("n", "xyXyxYXY"), Config{});
  CHECK(rep.status == Status::NotB1One);
  CHECK_FALSE(rep.b1_ok);
  CHECK(rep.k == 0);
}

TEST_CASE("conditions at m = 1 have empty index lists") {
  Presentation p = P("crafted", "xyyXyy");
  auto phi = compute_phi(p);
  REQUIRE(phi);
  auto [norm, sub] = normalize(p, *phi);
  auto s = std::get<StaggeredRelator>(staggered_rewrite(norm.relator));
  REQUIRE_FALSE(is_fibered(s));
  auto d = realize(norm.relator);
  REQUIRE(d);
  DiagramHomology h = make_homology(*d);
  ConditionResult res = check_conditions(s, h, 1, Config{});
  CHECK(res.cond3.empty());
  CHECK(res.cond4.empty());
  CHECK(res.passed() == (res.cond1 && res.cond2));
}

TEST_CASE("condition 2 fails for fibered relators") {
  // the remark after the lift condition: fibered means some disk misses
  // all the lifted curves, so condition 2 cannot hold
  for (const char* wtext : {"xyXY", "xxyXXy"}) {
    CyclicWord w = parse_cyclic(wtext, 2);
    auto stv = staggered_rewrite(w);
    if (!std::holds_alternative<StaggeredRelator>(stv)) continue;
    auto s = std::get<StaggeredRelator>(stv);
    if (!is_fibered(s)) continue;
    auto d = realize(w);
    REQUIRE(d);
    DiagramHomology h = make_homology(*d);
    for (int m = 1; m <= 2; ++m) {
      ConditionResult res = check_conditions(s, h, m, Config{});
      INFO("word " << wtext << " m " << m);
      CHECK_FALSE(res.cond2);
    }
  }
}

TEST_CASE("non-fibered words certify a least m") {
  MliftReport r1 = find_min_m(P("a", "xyyXyy"), Config{});
  CHECK(r1.status == Status::Ok);
  CHECK_FALSE(r1.fibered);
  CHECK(r1.k == 2);
  CHECK(r1.m_found == 1);
  CHECK(r1.n_threshold == 2);
  CHECK(r1.surface_genus == 1);
  CHECK(r1.conditions.size() == 1);
  CHECK(r1.conditions.back().passed());

  MliftReport r2 = find_min_m(P("b", "xxyyXyXyy"), Config{});
  CHECK(r2.status == Status::Ok);
  CHECK(r2.k == 3);
  CHECK(r2.m_found == 2);
  CHECK(r2.n_threshold == 4);
  CHECK(r2.conditions.size() == 2);
  CHECK_FALSE(r2.conditions.front().passed());
  CHECK(r2.conditions.back().passed());

  // deterministic
  MliftReport r3 = find_min_m(P("b", "xxyyXyXyy"), Config{});
  CHECK(r3.m_found == r2.m_found);
  CHECK(r3.whitehead_calls == r2.whitehead_calls);
}

TEST_CASE("search stops early when condition 1 fails") {
  // a primitive-ish relator is not disk-busting, so no m can ever pass
  MliftReport rep = find_min_m(P("p", "xxY"), Config{});
  if (!rep.fibered && rep.geometric && rep.status == Status::MExhausted)
    CHECK(rep.conditions.size() == 1);
}
