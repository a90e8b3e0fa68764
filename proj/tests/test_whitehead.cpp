#include "mlift/whitehead.hpp"

#include <catch2/catch_amalgamated.hpp>
#include <random>

#include "oracles.hpp"

using namespace mlift;

namespace {

Multiword MW(int rank, std::initializer_list<const char*> words) {
  std::vector<CyclicWord> el;
  for (const char* w : words) el.push_back(parse_cyclic(w, rank));
  return Multiword(rank, el);
}

CyclicWord random_cyclic(std::mt19937& rng, int rank, int len) {
  std::uniform_int_distribution<int> g(0, rank - 1), s(0, 1);
  for (;;) {
    LetterSeq raw;
    for (int i = 0; i < len; ++i) raw.push_back(Letter{g(rng), s(rng) ? 1 : -1});
    CyclicWord w(Word{std::move(raw)});
    if (!w.empty()) return w;
  }
}

Substitution random_automorphism(std::mt19937& rng, int rank, int steps) {
  Substitution a = Substitution::identity(rank);
  std::uniform_int_distribution<int> g(0, rank - 1), e(0, 1), kind(0, 2);
  for (int i = 0; i < steps; ++i) {
    int x = g(rng), y = g(rng);
    switch (kind(rng)) {
      case 0:
        if (x != y) a = nielsen_right(rank, x, y, e(rng) ? 1 : -1).compose(a);
        break;
      case 1:
        a = nielsen_invert(rank, x).compose(a);
        break;
      default:
        if (x != y) a = nielsen_swap(rank, x, y).compose(a);
        break;
    }
  }
  return a;
}

}  // namespace

TEST_CASE("whitehead graph edges") {
  // commutator: 4-cycle on x, y^-1, x^-1, y
  WhiteheadGraph g(MW(2, {"xyXY"}));
  CHECK(g.edge_count() == 4);
  CHECK(g.adj[letter_vertex({0, 1})][letter_vertex({1, -1})] == 1);
  CHECK(g.adj[letter_vertex({1, -1})][letter_vertex({0, -1})] == 1);
  CHECK(g.adj[letter_vertex({0, -1})][letter_vertex({1, 1})] == 1);
  CHECK(g.adj[letter_vertex({1, 1})][letter_vertex({0, 1})] == 1);
  CHECK(g.connected());
  CHECK(g.cut_vertex() == -1);

  WhiteheadGraph g1(MW(2, {"x"}));
  CHECK(g1.edge_count() == 1);
  CHECK(g1.adj[0][1] == 1);

  WhiteheadGraph g2(MW(2, {"xy"}));
  CHECK(g2.edge_count() == 2);
  CHECK(g2.adj[letter_vertex({0, 1})][letter_vertex({1, -1})] == 1);
  CHECK(g2.adj[letter_vertex({1, 1})][letter_vertex({0, -1})] == 1);
}

TEST_CASE("move length formula matches explicit application") {
  std::mt19937 rng(31);
  for (int rank : {2, 3}) {
    auto moves = all_type2_moves(rank);
    for (int t = 0; t < 60; ++t) {
      std::vector<CyclicWord> el;
      std::uniform_int_distribution<int> ec(1, 2), len(1, 8);
      int n = ec(rng);
      for (int i = 0; i < n; ++i) el.push_back(random_cyclic(rng, rank, len(rng)));
      Multiword w(rank, el);
      WhiteheadGraph g(w);
      for (const WhiteheadMove& m : moves) {
        long long d = move_length_delta(g, m);
        Multiword img = apply(m, w);
        CHECK(static_cast<long long>(img.total_length()) ==
              static_cast<long long>(w.total_length()) + d);
      }
    }
  }
}

TEST_CASE("minimize reaches expected lengths") {
  auto t1 = minimize(MW(2, {"xy"}));
  CHECK(t1.minimized.total_length() == 1);

  auto t2 = minimize(MW(2, {"xyXY"}));
  CHECK(t2.minimized.total_length() == 4);
  CHECK(t2.moves.empty());

  auto t3 = minimize(MW(2, {"x"}));
  CHECK(t3.minimized.total_length() == 1);
  CHECK(t3.moves.empty());

  // lengths strictly decrease along a trace
  std::mt19937 rng(37);
  for (int t = 0; t < 50; ++t) {
    Multiword w(2, {random_cyclic(rng, 2, 10)});
    auto tr = minimize(w);
    std::size_t prev = w.total_length();
    for (std::size_t l : tr.lengths) {
      CHECK(l < prev);
      prev = l;
    }
    // no single move decreases further
    WhiteheadGraph g(tr.minimized);
    for (const WhiteheadMove& m : all_type2_moves(2))
      CHECK(move_length_delta(g, m) >= 0);
  }
}

TEST_CASE("disk-busting basics") {
  auto r1 = is_diskbusting(MW(2, {"x"}));
  CHECK_FALSE(r1.diskbusting);
  REQUIRE(r1.witness);
  CHECK(r1.witness->kind == DiskWitness::MissingGenerator);
  CHECK(r1.witness->generator == 1);
  CHECK(r1.witness->disk_class == AbelianVector{0, 1});

  auto r2 = is_diskbusting(MW(2, {"xyXY"}));
  CHECK(r2.diskbusting);

  auto r3 = is_diskbusting(MW(2, {"xx", "yy"}));
  CHECK_FALSE(r3.diskbusting);
  REQUIRE(r3.witness);
  CHECK(r3.witness->kind == DiskWitness::DisconnectedGraph);

  auto r4 = is_diskbusting(MW(2, {"xxyy"}));
  CHECK(r4.diskbusting);
}

TEST_CASE("missing generator absent from minimized multiword") {
  std::mt19937 rng(41);
  for (int t = 0; t < 80; ++t) {
    Multiword w(2, {random_cyclic(rng, 2, 8)});
    auto r = is_diskbusting(w);
    if (!r.diskbusting && r.witness->kind == DiskWitness::MissingGenerator) {
      for (const CyclicWord& e : r.trace.minimized.elements())
        for (const Letter& l : e.letters()) CHECK(l.gen != r.witness->generator);
    }
  }
}

TEST_CASE("decision is automorphism invariant") {
  std::mt19937 rng(43);
  for (int t = 0; t < 40; ++t) {
    Multiword w(2, {random_cyclic(rng, 2, 6)});
    Substitution a = random_automorphism(rng, 2, 5);
    std::vector<CyclicWord> im;
    for (const CyclicWord& e : w.elements()) im.push_back(a.apply(e));
    Multiword wi(2, im);
    CHECK(is_diskbusting(w).diskbusting == is_diskbusting(wi).diskbusting);
  }
}

TEST_CASE("agrees with brute-force oracle on small rank-2 words") {
  std::mt19937 rng(47);
  for (int t = 0; t < 120; ++t) {
    std::uniform_int_distribution<int> len(1, 6), ec(1, 2);
    std::vector<CyclicWord> el;
    int n = ec(rng);
    for (int i = 0; i < n; ++i) el.push_back(random_cyclic(rng, 2, len(rng)));
    Multiword w(2, el);
    if (w.total_length() > 8) continue;
    CHECK(is_diskbusting(w).diskbusting == testing::diskbusting_oracle(w));
  }
}

TEST_CASE("witness transport pairs to zero against original curves") {
  std::mt19937 rng(53);
  int checked = 0;
  for (int t = 0; t < 400 && checked < 60; ++t) {
    std::uniform_int_distribution<int> len(1, 8);
    Multiword w(3, {random_cyclic(rng, 3, len(rng)), random_cyclic(rng, 3, len(rng))});
    auto r = is_diskbusting(w);
    if (r.diskbusting || r.witness->kind != DiskWitness::MissingGenerator)
      continue;
    AbelianVector d = witness_disk_class(r.trace, *r.witness);
    long long g = 0;
    for (long long x : d) g = std::gcd(g, x < 0 ? -x : x);
    CHECK(g == 1);
    for (const CyclicWord& e : w.elements()) {
      AbelianVector b = abelianize(e, 3);
      long long dot = 0;
      for (int i = 0; i < 3; ++i) dot += d[i] * b[i];
      CHECK(dot == 0);
    }
    ++checked;
  }
  CHECK(checked >= 30);
}

TEST_CASE("single-step transport is the transpose matrix") {
  // one move with matrix M sends a minimized-side class e to M^T e
  auto moves = all_type2_moves(2);
  for (const WhiteheadMove& m : moves) {
    auto cols = m.substitution().matrix();
    for (int g = 0; g < 2; ++g) {
      AbelianVector e(2, 0);
      e[g] = 1;
      AbelianVector got = pull_back_disk_class({m}, e);
      AbelianVector expect = {cols[0][g], cols[1][g]};
      CHECK(got == expect);
    }
  }
}

TEST_CASE("independence test") {
  CHECK(independent_of_span({{0, 0, 1, 0}, {0, 0, 0, 1}}, {1, 0, 0, 0}));
  CHECK_FALSE(independent_of_span({{1, 0, 0, 0}}, {1, 0, 0, 0}));
  CHECK_FALSE(independent_of_span({{1, 2, 0, 0}, {0, 0, 1, 0}}, {2, 4, 3, 0}));
  CHECK(independent_of_span({}, {0, 1}));
  CHECK_FALSE(independent_of_span({}, {0, 0}));
  CHECK_THROWS_AS(independent_of_span({{1, 0}}, {1, 0, 0}),
                  std::invalid_argument);

  // matches gcd-scaled integer row reduction on random instances
  std::mt19937 rng(59);
  std::uniform_int_distribution<long long> v(-3, 3);
  std::uniform_int_distribution<int> nrows(0, 4);
  for (int t = 0; t < 200; ++t) {
    std::size_t dim = 5;
    std::vector<AbelianVector> rows(nrows(rng), AbelianVector(dim));
    for (auto& r : rows)
      for (auto& x : r) x = v(rng);
    AbelianVector d(dim);
    for (auto& x : d) x = v(rng);
    auto rank_int = [&](std::vector<AbelianVector> m) {
      std::size_t rank = 0;
      for (std::size_t c = 0; c < dim && rank < m.size(); ++c) {
        std::size_t p = rank;
        while (p < m.size() && m[p][c] == 0) ++p;
        if (p == m.size()) continue;
        std::swap(m[rank], m[p]);
        for (std::size_t r = 0; r < m.size(); ++r) {
          if (r == rank || m[r][c] == 0) continue;
          long long a = m[rank][c], b = m[r][c];
          long long g = std::gcd(a < 0 ? -a : a, b < 0 ? -b : b);
          for (std::size_t j = 0; j < dim; ++j)
            m[r][j] = m[r][j] * (a / g) - m[rank][j] * (b / g);
        }
        ++rank;
      }
      return rank;
    };
    auto with = rows;
    with.push_back(d);
    bool expect = rank_int(with) == rank_int(rows) + 1;
    CHECK(independent_of_span(rows, d) == expect);
  }
}
