#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>

#include "wron/cells.hpp"
#include "wron/sampling.hpp"
#include "wron/words.hpp"

using namespace wron;

TEST_CASE("parse and display") {
  Word w = parse_word("121321", 3);
  CHECK(w.letters == std::vector<int>{1, 2, 3, 1, 2, 1});
  CHECK(display_word(w) == "121321");
  CHECK_THROWS(parse_word("129", 3));
  CHECK_THROWS(parse_word("14", 3));
}

TEST_CASE("word_to_perm and is_reduced") {
  CHECK(word_to_perm(parse_word("121", 2)).images == std::vector<int>{3, 2, 1});
  CHECK(word_to_perm(Word{{}, 2}).images == std::vector<int>{1, 2, 3});
  CHECK(word_to_perm(parse_word("121321", 3)).images == std::vector<int>{4, 3, 2, 1});
  CHECK(is_reduced(parse_word("121", 2)));
  CHECK(!is_reduced(parse_word("11", 2)));
  CHECK(is_reduced(parse_word("121321", 3)));
}

TEST_CASE("reduced word enumeration") {
  CHECK(reduced_words_of_longest(1).size() == 1);
  auto r2 = reduced_words_of_longest(2);
  CHECK(r2.size() == 2);
  auto r3 = reduced_words_of_longest(3);
  CHECK(r3.size() == 16);
  auto has = [&](const std::string& s) {
    Word w = parse_word(s, 3);
    return std::find(r3.begin(), r3.end(), w) != r3.end();
  };
  CHECK(has("121321"));
  CHECK(has("123212"));
  for (const Word& w : r3) {
    CHECK(is_reduced(w));
    CHECK(word_to_perm(w) == longest_perm(4));
  }
}

TEST_CASE("shifted degree action") {
  CHECK(shifted_degree_action(Word{{}, 2}) == DegreeVector{0, 0});
  CHECK(shifted_degree_action(parse_word("21", 2)) == DegreeVector{1, 2});
  CHECK(shifted_degree_action(parse_word("121", 2)) == DegreeVector{2, 2});
  for (const Word& w : reduced_words_of_longest(2))
    CHECK(shifted_degree_action(w) == DegreeVector{2, 2});
  for (const Word& w : reduced_words_of_longest(3))
    CHECK(shifted_degree_action(w) == DegreeVector{3, 4, 3});
}

TEST_CASE("braid and commute moves") {
  ParamPoint p{1, 1, 1};
  CHECK(braid_move_R(p, 1) == ParamPoint{rat(1, 2), 2, rat(1, 2)});
  RationalSampler s(21);
  for (int t = 0; t < 50; ++t) {
    ParamPoint a = s.signed_vec(5);
    if (a[0] + a[2] == 0 || a[1] + a[3] == 0) continue;
    CHECK(braid_move_R(braid_move_R(a, 1), 1) == a);
    CHECK(braid_move_R(braid_move_R(a, 2), 2) == a);
    CHECK(commute_move_L(commute_move_L(a, 3), 3) == a);
  }
  CHECK(commute_move_L(ParamPoint{1, 2, 3}, 1) == ParamPoint{2, 1, 3});
  CHECK_THROWS_AS(braid_move_R(ParamPoint{1, 0, -1}, 1), PoleError);
}

TEST_CASE("chart equivariance of moves") {
  RationalSampler s(22);
  for (int rank : {2, 3}) {
    auto words = reduced_words_of_longest(rank);
    for (const Word& h : words) {
      int len = static_cast<int>(h.length());
      for (int j = 1; j + 1 < len; ++j) {
        if (!braid_applies(h, j)) continue;
        Word hp = apply_braid(h, j);
        for (int t = 0; t < 10; ++t) {
          ParamPoint a = s.positive_vec(len);
          CHECK(chart(h, a) == chart(hp, braid_move_R(a, j)));
        }
      }
      for (int j = 1; j < len; ++j) {
        if (!commute_applies(h, j)) continue;
        Word hp = apply_commute(h, j);
        for (int t = 0; t < 10; ++t) {
          ParamPoint a = s.positive_vec(len);
          CHECK(chart(h, a) == chart(hp, commute_move_L(a, j)));
        }
      }
    }
  }
}

TEST_CASE("transition map SL3") {
  Word h = parse_word("121", 2), hp = parse_word("212", 2);
  RationalSampler s(23);
  for (int t = 0; t < 100; ++t) {
    ParamPoint a = s.positive_vec(3);
    ParamPoint ap = transition_map(h, hp, a);
    Rational d = a[0] + a[2];
    CHECK(ap == ParamPoint{a[1] * a[2] / d, d, a[0] * a[1] / d});
    CHECK(transition_map(hp, h, ap) == a);
    CHECK(chart(h, a) == chart(hp, ap));
  }
  CHECK(transition_map(h, h, ParamPoint{1, 2, 3}) == ParamPoint{1, 2, 3});
  CHECK_THROWS_AS(transition_map(h, parse_word("212", 2), ParamPoint{1, 0, -1}),
                  PoleError);
  CHECK_THROWS_AS(move_path(parse_word("11", 2), parse_word("12", 2)), NoPathError);
}

TEST_CASE("transition map S4 random pairs") {
  auto words = reduced_words_of_longest(3);
  RationalSampler s(24);
  for (int t = 0; t < 30; ++t) {
    const Word& h = words[s.uniform_int(0, 15)];
    const Word& hp = words[s.uniform_int(0, 15)];
    ParamPoint a = s.positive_vec(6);
    ParamPoint ap = transition_map(h, hp, a);
    CHECK(chart(h, a) == chart(hp, ap));
    CHECK(transition_map(hp, h, ap) == a);
  }
}

TEST_CASE("permutohedron structure") {
  PermutohedronS4 p = permutohedron_S4();
  CHECK(p.vertices.size() == 24);
  CHECK(p.words.size() == 16);
  CHECK(p.classes.size() == 8);
  CHECK(p.hexagons.size() == 8);
  CHECK(p.octagon_order.size() == 8);
  size_t c1 = p.class_of(parse_word("121321", 3));
  size_t c2 = p.class_of(parse_word("212321", 3));
  bool linked = false;
  for (const auto& h : p.hexagons)
    if ((h.from_class == c1 && h.to_class == c2) ||
        (h.from_class == c2 && h.to_class == c1)) {
      linked = true;
      // Application-order position 4 = the last-applied triple, the
      // braid rewriting the leftmost three display letters.
      CHECK(h.braid_position == 4);
    }
  CHECK(linked);
  // Every class appears exactly once on the octagon.
  std::vector<size_t> sorted = p.octagon_order;
  std::sort(sorted.begin(), sorted.end());
  for (size_t i = 0; i < 8; ++i) CHECK(sorted[i] == i);
}

TEST_CASE("hexagon moves are chart-consistent") {
  PermutohedronS4 p = permutohedron_S4();
  RationalSampler s(25);
  for (const auto& h : p.hexagons) {
    for (int t = 0; t < 10; ++t) {
      ParamPoint a = s.positive_vec(6);
      CHECK(chart(h.from_word, a) ==
            chart(h.to_word, braid_move_R(a, h.braid_position)));
    }
  }
}

TEST_CASE("tetrahedron equation") {
  CHECK(tetrahedron_check(ParamPoint{1, 1, 1, 1, 1, 1}));
  RationalSampler s(26);
  int done = 0;
  while (done < 100) {
    ParamPoint a = s.positive_vec(6);
    try {
      CHECK(tetrahedron_check(a));
      CHECK(octagon_commutativity_check(a));
      ++done;
    } catch (const PoleError&) {
    }
  }
}
