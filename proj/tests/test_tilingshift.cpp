#include <doctest.h>

#include "bmgroups/mozes.hpp"
#include "bmgroups/tilingshift.hpp"
#include "fixtures.hpp"
#include "oracles.hpp"

using namespace bmg;

namespace {

std::vector<TransitionMatrices> samples() {
  std::vector<TransitionMatrices> out;
  for (auto const& name : fixtures::sample_names()) {
    out.push_back(build_transition_matrices(fixtures::bm(name)));
  }
  out.push_back(build_transition_matrices(BMDatum::from(product_free_groups_datum(2, 3))));
  out.push_back(build_transition_matrices(BMDatum::from(mozes_datum(5, 13))));
  return out;
}

}  // namespace

TEST_CASE("alphabet order and lookups") {
  auto const tm = build_transition_matrices(fixtures::bm("2x2.01"));
  REQUIRE(tm.size() == 16);
  for (TileIndex i = 0; i + 1 < tm.size(); ++i) {
    CHECK(tm.alphabet[i] < tm.alphabet[i + 1]);
    CHECK(tm.alphabet.index_of(tm.alphabet[i]) == i);
  }
  CHECK_THROWS_AS(tm.alphabet.index_of({1, 3, -3, -1}), std::out_of_range);
}

TEST_CASE("transition matrices from the gluing rule") {
  // Square of ab = b'a': bottom a, right b, top a', left b'. Neighbours share
  // an edge and the outer boundary path stays reduced.
  struct Edges {
    Letter bottom, right, top, left;
  };
  auto edges = [](RelationTuple const& t) { return Edges{t.a, t.b, t.a2, t.b2}; };
  for (auto const& tm : samples()) {
    for (TileIndex s = 0; s < tm.size(); ++s) {
      for (TileIndex r = 0; r < tm.size(); ++r) {
        Edges const S = edges(tm.alphabet[s]);
        Edges const R = edges(tm.alphabet[r]);
        bool const beside = S.left == R.right && S.bottom != -R.bottom;
        bool const above = S.bottom == R.top && S.left != -R.left;
        CHECK(static_cast<bool>(tm.M1(s, r)) == beside);
        CHECK(static_cast<bool>(tm.M2(s, r)) == above);
      }
    }
  }
}

TEST_CASE("every 2x2 corner completes uniquely") {
  for (auto const& tm : samples()) {
    for (TileIndex r = 0; r < tm.size(); ++r) {
      for (TileIndex s : successors(tm, 1, r)) {
        for (TileIndex t : successors(tm, 2, r)) {
          int completions = 0;
          for (TileIndex u = 0; u < tm.size(); ++u) {
            completions += tm.M1(u, t) != 0 && tm.M2(u, s) != 0;
          }
          CHECK(completions == 1);
        }
      }
    }
  }
}

TEST_CASE("H conditions on samples") {
  for (auto const& tm : samples()) {
    auto const h = check_h_conditions(tm, 3);
    CHECK(h.all_pass());
    CHECK(h.degree_sums_ok);
    CHECK(h.h3_witnesses.size() == 48);
    for (auto const& w : h.h3_witnesses) {
      CHECK(w.verify(tm));
    }
  }
}

TEST_CASE("rotation conjugates M_j to its transpose") {
  for (auto const& tm : samples()) {
    auto const P = rotation_permutation(tm);
    for (TileIndex s = 0; s < tm.size(); ++s) {
      CHECK(P[P[s]] == s);
      for (TileIndex r = 0; r < tm.size(); ++r) {
        CHECK(tm.M1(P[s], P[r]) == tm.M1(r, s));
        CHECK(tm.M2(P[s], P[r]) == tm.M2(r, s));
      }
    }
  }
}

TEST_CASE("word counts agree with brute force and the closed formula") {
  auto const tm = build_transition_matrices(fixtures::bm("2x2.36"));
  for (auto [w, h] : {std::pair{0, 0}, {1, 0}, {0, 1}, {1, 1}, {2, 1}, {1, 2}}) {
    CAPTURE(w);
    CAPTURE(h);
    Integer const formula = 16 * [&] {
      Integer x = 1;
      for (int i = 0; i < w + h; ++i) x *= 3;
      return x;
    }();
    CHECK(count_words(tm, {w, h}) == formula);
    CHECK(count_words(tm, {w, h}) == oracle::brute_word_count(tm, w, h));
  }
  auto const mz = build_transition_matrices(BMDatum::from(mozes_datum(5, 13)));
  CHECK(count_words(mz, {1, 1}) == oracle::brute_word_count(mz, 1, 1));
  CHECK(count_words(mz, {2, 3}) == Integer(84) * 5 * 5 * 13 * 13 * 13);
}

TEST_CASE("extend_word") {
  auto const tm = build_transition_matrices(fixtures::bm("2x2.01"));
  Word w(TileIndex{5});
  auto const succ = successors(tm, 1, 5);
  REQUIRE(succ.size() == 3);
  auto w2 = extend_word(tm, w, Side::right, 0, succ[0]);
  CHECK(w2.shape() == std::pair{1, 0});
  auto const up = successors(tm, 2, succ[0]);
  auto w3 = extend_word(tm, w2, Side::top, 1, up[1]);
  CHECK(w3.shape() == std::pair{1, 1});
  CHECK(is_valid_word(tm, w3));
  CHECK(w3.at({1, 1}) == up[1]);
  auto w4 = extend_word(tm, w3, Side::left, 1, predecessors(tm, 1, w3.at({0, 1}))[0]);
  CHECK(is_valid_word(tm, w4));
  CHECK(w4.at({1, 0}) == 5);
  auto w5 = extend_word(tm, w4, Side::bottom, 2, predecessors(tm, 2, w4.at({2, 0}))[2]);
  CHECK(is_valid_word(tm, w5));
  CHECK(w5.shape() == std::pair{2, 2});
  CHECK(w5.at({1, 1}) == 5);

  TileIndex bad = 0;
  while (tm.M1(bad, 5) != 0) ++bad;
  CHECK_THROWS_AS(extend_word(tm, w, Side::right, 0, bad), IncompatibleTile);
  CHECK_THROWS_AS(extend_word(tm, w, Side::right, 1, succ[0]), std::invalid_argument);
}

TEST_CASE("h3 witness for a single period") {
  auto const tm = build_transition_matrices(fixtures::bm("2x2.41"));
  auto const w = h3_witness(tm, {-2, 3});
  CHECK(w.word.shape() == std::pair{2, 3});
  CHECK(w.verify(tm));
  CHECK_THROWS_AS(h3_witness(tm, {0, 0}), std::invalid_argument);
}

TEST_CASE("broken matrices are reported") {
  auto tm = build_transition_matrices(fixtures::bm("2x2.01"));
  tm.M2 = BinaryMatrix(tm.size());
  auto const h = check_h_conditions(tm, 1);
  CHECK_FALSE(h.h0);
  CHECK_FALSE(h.degree_sums_ok);
  CHECK_FALSE(h.h3());
  CHECK_FALSE(h.all_pass());
}
