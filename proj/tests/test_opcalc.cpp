#include <random>

#include "dl/opcalc.hpp"
#include "doctest.h"

using namespace dl;

namespace {

bool all_admissible(const OpPoly& p) {
  for (const auto& w : p.words()) {
    if (!is_admissible_upper(indices_of(w))) return false;
  }
  return true;
}

int index_sum(const OpWord& w) {
  int s = 0;
  for (const auto& sym : w) s += sym.index;
  return s;
}

}  // namespace

TEST_CASE("admissibility and excess") {
  CHECK(is_admissible_upper(std::vector<int>{3, 2}));
  CHECK_FALSE(is_admissible_upper(std::vector<int>{5, 2}));
  CHECK(is_admissible_upper(std::vector<int>{}));
  CHECK(is_admissible_upper(std::vector<int>{7}));
  CHECK(excess(std::vector<int>{3, 2}) == 1);
  CHECK(excess(std::vector<int>{5}) == 5);
  CHECK(excess(std::vector<int>{4, 2, 1}) == 1);
  CHECK_THROWS_AS(excess(std::vector<int>{}), Error);
}

TEST_CASE("upper Adem expansion") {
  CHECK(adem_expand_upper(4, 1) == OpPoly(upper_word({3, 2})));
  CHECK(adem_expand_upper(6, 2) == OpPoly(upper_word({5, 3})));
  CHECK(adem_expand_upper(5, 2).is_zero());
  CHECK_THROWS_AS(adem_expand_upper(4, 2), Error);
  for (int s = 0; s <= 16; ++s) {
    for (int r = 2 * s + 1; r <= 40; ++r) {
      const auto p = adem_expand_upper(r, s);
      CHECK(all_admissible(p));
      for (const auto& w : p.words()) CHECK(index_sum(w) == r + s);
    }
  }
}

TEST_CASE("the relation Q^{2n+2} Q^n = Q^{2n+1} Q^{n+1}") {
  for (int n = 1; n <= 10; ++n) {
    CHECK(normalize_upper(upper_word({2 * n + 2, n})) == OpPoly(upper_word({2 * n + 1, n + 1})));
  }
}

TEST_CASE("normalize_upper examples") {
  CHECK(to_string(normalize_upper(upper_word({4, 1}))) == "Q^3 Q^2");
  CHECK(normalize_upper(upper_word({3, 2})) == OpPoly(upper_word({3, 2})));
  CHECK(normalize_upper(OpWord{}) == OpPoly(OpWord{}));
  CHECK_THROWS_AS(normalize_upper(OpWord{lower(1)}), Error);
  const auto nf = normalize_upper(upper_word({9, 4, 2}));
  CHECK(all_admissible(nf));
}

TEST_CASE("normalization terminates, is idempotent and admissible (length <= 4, indices <= 32)") {
  for (int len = 1; len <= 4; ++len) {
    std::vector<int> idx(static_cast<std::size_t>(len), 0);
    while (true) {
      const OpWord w = upper_word(idx);
      const auto nf = normalize_upper(w);
      REQUIRE(all_admissible(nf));
      for (const auto& v : nf.words()) REQUIRE(index_sum(v) == index_sum(w));
      if (len <= 3) REQUIRE(normalize_upper(nf) == nf);
      std::size_t k = 0;
      while (k < idx.size() && ++idx[k] > 32) idx[k++] = 0;
      if (k == idx.size()) break;
    }
  }
}

TEST_CASE("left-first and right-first rewriting agree on length-3 words (indices <= 20)") {
  int doubly_inadmissible = 0;
  for (int a = 0; a <= 20; ++a) {
    for (int b = 0; b <= 20; ++b) {
      for (int c = 0; c <= 20; ++c) {
        const OpWord w = upper_word({a, b, c});
        if (a > 2 * b && b > 2 * c) ++doubly_inadmissible;
        REQUIRE(normalize_upper(w, RewriteStrategy::LeftmostFirst) ==
                normalize_upper(w, RewriteStrategy::RightmostFirst));
      }
    }
  }
  CHECK(doubly_inadmissible > 0);
}

TEST_CASE("lower Adem expansion") {
  CHECK_THROWS_AS(adem_expand_lower(3, 3), Error);
  CHECK_THROWS_AS(adem_expand_lower(1, 2), Error);
  // Q_1 Q_0 x = Q_1 (x^2) = 0 by the lower Cartan formula in characteristic 2.
  CHECK(adem_expand_lower(1, 0).is_zero());
  // Q_2 Q_0 x = Q_2 (x^2) = (Q_1 x)^2 = Q_0 Q_1 x.
  CHECK(adem_expand_lower(2, 0) == OpPoly(lower_word({0, 1})));
  for (int s = 0; s <= 8; ++s) {
    for (int r = s + 1; r <= 8; ++r) {
      const auto expansion = adem_expand_lower(r, s);
      for (const auto& w : expansion.words()) {
        REQUIRE(w.size() == 2);
        CHECK(w[0].index <= w[1].index);
        CHECK(w[0].index >= 0);
      }
    }
  }
}

TEST_CASE("lower and upper Adem relations agree under degree translation") {
  for (int s = 0; s <= 8; ++s) {
    for (int r = s + 1; r <= 8; ++r) {
      const auto lower_side = adem_expand_lower(r, s);
      for (int m = 0; m <= 8; ++m) {
        OpPoly translated;
        for (const auto& w : lower_side.words()) translated.toggle(to_upper(w, m).word);
        const auto up = to_upper(lower_word({r, s}), m).word;
        const auto expected = drop_unstable(normalize_upper(up), m);
        INFO("r=" << r << " s=" << s << " m=" << m);
        CHECK(translated == expected);
      }
    }
  }
}

TEST_CASE("normalize_lower gives non-decreasing words") {
  for (int a = 0; a <= 6; ++a)
    for (int b = 0; b <= 6; ++b)
      for (int c = 0; c <= 6; ++c) {
        const auto nf = normalize_lower(lower_word({a, b, c}));
        for (const auto& w : nf.words()) {
          for (std::size_t k = 0; k + 1 < w.size(); ++k) CHECK(w[k].index <= w[k + 1].index);
        }
        // Same answer as normalizing the translated upper word, for every base degree.
        for (int m = 0; m <= 4; ++m) {
          OpPoly translated;
          for (const auto& w : nf.words()) translated.toggle(to_upper(w, m).word);
          CHECK(translated == drop_unstable(normalize_upper(to_upper(lower_word({a, b, c}), m).word), m));
        }
      }
}

TEST_CASE("index conversion") {
  auto t = to_upper(lower_word({1}), 1);
  CHECK(t.word == upper_word({2}));
  CHECK(t.final_degree == 3);
  t = to_upper(lower_word({1, 1}), 1);
  CHECK(t.word == upper_word({4, 2}));
  CHECK(t.final_degree == 7);
  for (int m = 0; m < 6; ++m) {
    t = to_upper(lower_word({0}), m);
    CHECK(t.word == upper_word({m}));
    CHECK(t.final_degree == 2 * m);
  }
  CHECK(to_lower(upper_word({2}), 1) == lower_word({1}));
  CHECK_THROWS_AS(to_lower(upper_word({0}), 1), Error);

  std::mt19937 rng(11);
  std::uniform_int_distribution<int> len(0, 4), idx(0, 6), deg(0, 10);
  for (int trial = 0; trial < 100; ++trial) {
    OpWord w;
    const int n = len(rng);
    for (int k = 0; k < n; ++k) w.push_back(lower(idx(rng)));
    const int m = deg(rng);
    CHECK(to_lower(to_upper(w, m).word, m) == w);
  }
}

TEST_CASE("suspension") {
  CHECK(suspend(OpPoly(lower_word({0})), 1).is_zero());
  CHECK(suspend(OpPoly(lower_word({3, 1})), 1) == OpPoly(lower_word({2, 0})));
  CHECK(suspend(OpPoly(lower_word({3, 1})), 2).is_zero());
  for (int a = 0; a <= 4; ++a)
    for (int b = 0; b <= 4; ++b)
      for (int i = 0; i <= 6; ++i)
        for (int j = 0; j <= 6; ++j) {
          const OpPoly p = OpPoly(lower_word({i, j})) + OpPoly(lower_word({j}));
          CHECK(suspend(suspend(p, a), b) == suspend(p, a + b));
        }
}

TEST_CASE("weight-2 tables") {
  auto t = weight2_table(3, 2);
  REQUIRE(t.rows.size() == 2);
  CHECK(t.rows[0].target_degree == 6);
  CHECK(t.rows[1].target_degree == 7);
  CHECK(t.rows[1].images[0] == 0);
  for (const auto& row : t.rows) CHECK_FALSE(row.images[1].has_value());

  t = weight2_table(0, 1);
  REQUIRE(t.rows.size() == 1);
  CHECK(t.rows[0].index == 0);
  CHECK(t.rows[0].target_degree == 0);

  t = weight2_table(2, std::nullopt, 5);
  CHECK(t.stable);
  REQUIRE(t.rows.size() == 5);
  CHECK(t.rows[0].index == 2);
  CHECK(t.rows[0].target_degree == 4);
}
