#include <random>

#include "dl/models.hpp"
#include "doctest.h"

using namespace dl;

namespace {

const ModelAlgebra& A31() {
  static const ModelAlgebra a(ModelName::A);
  return a;
}

Poly parse_b(const ModelAlgebra& mu, std::initializer_list<std::initializer_list<std::pair<int, int>>> terms) {
  Poly p;
  for (const auto& t : terms) {
    Poly m = Poly::one();
    for (const auto& [i, e] : t) m = m * pow(mu.var(i), e);
    p += m;
  }
  return p;
}

Poly random_xi_poly(std::mt19937& rng, const ModelAlgebra& A, int maxdeg) {
  std::uniform_int_distribution<int> count(1, 3), ex(0, 3);
  Poly p;
  for (int k = count(rng); k > 0; --k) {
    Poly m = Poly::one();
    for (int i = 1; i <= 3; ++i) m = m * pow(A.var(i), ex(rng) % (i == 3 ? 2 : 4));
    if (m.max_degree().value_or(0) <= maxdeg) p += m;
  }
  return p;
}

}  // namespace

TEST_CASE("conjugation") {
  const auto& A = A31();
  CHECK(A.conjugate(A.var(1)) == A.var(1));
  CHECK(A.format(A.xibar(2)) == "xi_2 + xi_1^3");
  CHECK(A.conjugate(A.conjugate(A.var(3))) == A.var(3));
  for (int i = 0; i <= 5; ++i) CHECK(A.xibar(i).homogeneous());
  // The other-sided antipode relation: sum_i xibar_{n-i}^{2^i} xi_i = 0.
  for (int n = 1; n <= 5; ++n) {
    Poly s = A.xibar(n);
    for (int i = 1; i <= n; ++i) s += pow(A.xibar(n - i), 1 << i) * A.var(i);
    CHECK(s.is_zero());
  }
  std::mt19937 rng(1);
  for (int trial = 0; trial < 100; ++trial) {
    const Poly p = random_xi_poly(rng, A, 31);
    CHECK(A.conjugate(A.conjugate(p)) == p);
    const Poly q = random_xi_poly(rng, A, 15);
    CHECK(A.conjugate(q * q) == A.conjugate(q) * A.conjugate(q));
  }
}

TEST_CASE("Steinberger series") {
  const auto& A = A31();
  CHECK(A.steinberger_Q_on_xi1(1) == pow(A.var(1), 2));
  CHECK(A.steinberger_Q_on_xi1(2) == A.xibar(2));
  CHECK(A.steinberger_Q_on_xi1(6) == A.conjugate(A.var(3)));
  CHECK(A.steinberger_Q_on_xi1(14) == A.xibar(4));
  CHECK(A.steinberger_Q_on_xi1(30) == A.xibar(5));
  CHECK(A.series_coefficient(0) == A.xibar(1));
  CHECK_THROWS_AS(A.steinberger_Q_on_xi1(0), Error);
  CHECK_THROWS_AS(A.steinberger_Q_on_xi1(31), Error);
  // Values fixed by hand from the inverse series.
  CHECK(A.steinberger_Q_on_xi1(4) == pow(A.var(1), 2) * A.xibar(2));
  CHECK(A.steinberger_Q_on_xi1(5) == pow(A.xibar(2), 2));
}

TEST_CASE("Q on conjugate generators") {
  const auto& A = A31();
  CHECK(A.Q_on_xibar(4, 2) == A.xibar(3));
  CHECK(A.Q_on_xibar(5, 2).is_zero());
  CHECK(A.Q_on_xibar(3, 2) == pow(A.xibar(2), 2));
  CHECK(A.Q_on_xibar(2, 2).is_zero());
  for (int i = 1; i <= 4; ++i) CHECK(A.Q_on_xibar(1 << i, i) == A.xibar(i + 1));
  for (int i = 1; i <= 3; ++i) {
    for (int s = 0; s <= 24; ++s) {
      const int r = s % (1 << i);
      if (r != 0 && r != (1 << i) - 1) CHECK(A.Q_on_xibar(s, i).is_zero());
    }
  }
  // Instability and squaring agree with the generic rules.
  for (int i = 1; i <= 4; ++i) CHECK(A.Q_on_xibar((1 << i) - 1, i) == pow(A.xibar(i), 2));
}

TEST_CASE("action on A_*") {
  const auto& A = A31();
  const Poly x1 = A.var(1);
  CHECK((A.act(8, pow(x1, 2)) + pow(x1, 4) * A.act(4, pow(x1, 2))).is_zero());
  CHECK(A.act(1, Poly::one()).is_zero());
  CHECK(A.act(0, Poly::one()) == Poly::one());
  CHECK(A.act(1, x1) == pow(x1, 2));
  CHECK(A.act(0, x1).is_zero());
  CHECK(A.act(upper_word({1}), A.xibar(1)) == pow(x1, 2));
  CHECK_THROWS_AS(A.act(30, A.var(2)), Error);

  std::mt19937 rng(2);
  for (int trial = 0; trial < 60; ++trial) {
    const Poly p = random_xi_poly(rng, A, 7);
    const int m = std::uniform_int_distribution<int>(0, 8)(rng);
    const Poly sq = p * p;
    if (sq.max_degree().value_or(0) + 2 * m + 1 > 31) continue;
    CHECK(A.act(2 * m, sq) == frobenius(A.act(m, p)));
    CHECK(A.act(2 * m + 1, sq).is_zero());
  }
}

TEST_CASE("Adem relations hold in A_* (length 2, indices <= 20)") {
  const ModelAlgebra A(ModelName::A, 49);
  for (const Poly& x : {A.var(1), A.xibar(2), pow(A.var(1), 2)}) {
    for (int a = 0; a <= 20; ++a) {
      for (int b = 0; b <= 20; ++b) {
        if (a + b + x.max_degree().value_or(0) > 49) continue;
        const OpWord w = upper_word({a, b});
        CHECK(A.act(w, x) == A.act(normalize_upper(w), x));
      }
    }
  }
}

TEST_CASE("Priddy formulas in H_*MU and H_*MO") {
  const ModelAlgebra MU(ModelName::MU, 12);
  CHECK(MU.priddy_Q(2, 1) == parse_b(MU, {{{1, 2}}}));
  CHECK(MU.priddy_Q(4, 1) == parse_b(MU, {{{3, 1}}, {{1, 1}, {2, 1}}, {{1, 3}}}));
  CHECK(MU.priddy_Q(6, 1) == parse_b(MU, {{{1, 4}}}));
  CHECK(MU.priddy_Q(8, 1) == parse_b(MU, {{{5, 1}},
                                          {{1, 1}, {4, 1}},
                                          {{2, 1}, {3, 1}},
                                          {{1, 2}, {3, 1}},
                                          {{1, 1}, {2, 2}},
                                          {{1, 3}, {2, 1}},
                                          {{1, 5}}}));
  CHECK(MU.format(MU.priddy_Q(6, 2)) == "b_5 + b_1 b_4 + b_2 b_3 + b_1 b_2^2");
  CHECK(MU.act(6, MU.var(2)) == MU.priddy_Q(6, 2));

  const ModelAlgebra MO(ModelName::MO, 24);
  const ModelAlgebra MU24(ModelName::MU, 48);
  // Halved upper indices in H_*MO give the same polynomials with a for b.
  for (int k = 1; k <= 4; ++k) {
    for (int j = 0; j + k <= 12; ++j) {
      CHECK(MO.format(MO.priddy_Q(j, k)) == [&] {
        std::string s = MU24.format(MU24.priddy_Q(2 * j, k));
        for (auto& c : s) if (c == 'b') c = 'a';
        return s;
      }());
      CHECK(MU24.priddy_Q(2 * j + 1, k).is_zero());
    }
    CHECK(MO.priddy_Q(k, k) == pow(MO.var(k), 2));
    for (int j = 0; j < k; ++j) CHECK(MO.priddy_Q(j, k).is_zero());
  }
  CHECK(MO.format(MO.priddy_Q(2, 1)) == "a_3 + a_1 a_2 + a_1^3");
  CHECK_THROWS_AS(MU.priddy_Q(12, 1), Error);
}

TEST_CASE("leading terms") {
  const ModelAlgebra MO(ModelName::MO, 24);
  const ModelAlgebra MU(ModelName::MU, 24);
  CHECK(MO.leading_term_check(4, 2));
  CHECK(MU.leading_term_check(4, 1));
  CHECK(MU.priddy_Q(8, 1).contains(Monomial::from(MU.variables(), {{4, 1}})));
  CHECK(MO.leading_term_check(3, 1));
  CHECK_FALSE(MO.priddy_Q(3, 1).contains(Monomial::from(MO.variables(), {{3, 1}})));
  for (int n = 1; n <= 10; ++n)
    for (int k = 1; n + k <= 12; ++k) {
      CHECK(MO.leading_term_check(n, k));
      CHECK(MU.leading_term_check(n, k));
    }
}

TEST_CASE("subalgebra membership") {
  const auto& A = A31();
  CHECK(membership(A, SubalgebraSpec::k(1), A.xibar(1)));
  CHECK_FALSE(membership(A, SubalgebraSpec::k(1), A.xibar(2)));
  CHECK(membership(A, SubalgebraSpec::k(1), pow(A.xibar(2), 2)));
  CHECK(membership(A, SubalgebraSpec::bp(), pow(A.var(1), 2)));
  CHECK(membership(A, SubalgebraSpec::bp(), pow(A.var(2), 2) + pow(A.var(1), 6)));
  CHECK_FALSE(membership(A, SubalgebraSpec::bp(), A.var(2)));
  CHECK(membership(A, SubalgebraSpec::x2image(), pow(A.var(1), 4)));
  CHECK_FALSE(membership(A, SubalgebraSpec::x2image(), pow(A.var(2), 2)));
  CHECK(SubalgebraSpec::parse("kZ(3)").name() == "kZ(3)");
  CHECK(SubalgebraSpec::parse("k(0)").multiplicity(1) == 2);
  CHECK_THROWS_AS(SubalgebraSpec::parse("k(x)"), Error);
}

TEST_CASE("closure of k(n), kZ(n), BP and X(2)") {
  const auto& A = A31();
  for (int n = 1; n <= 4; ++n) {
    const auto v = closure_check(A, SubalgebraSpec::k(n), {lower(1)}, 31);
    REQUIRE(v.size() == 1);
    CHECK(v[0].xibar_index == n);
    CHECK(v[0].exponent == 1);
    CHECK(v[0].image == A.xibar(n + 1));
    const auto vz = closure_check(A, SubalgebraSpec::kZ(n), {lower(1)}, 31);
    CHECK(vz.empty() == (n == 1));
  }
  CHECK(closure_check(A, SubalgebraSpec::k(0), {lower(1)}, 31).empty());
  CHECK(closure_check_all_upper(A, SubalgebraSpec::bp(), 24).empty());
  CHECK_FALSE(closure_check(A, SubalgebraSpec::x2image(), {lower(2)}, 31).empty());
}

TEST_CASE("X(n) growth chain") {
  const auto& A = A31();
  const auto chain14 = xn_growth(A, 14);
  REQUIRE(chain14.size() == 3);
  CHECK(chain14[0].degree == 2);
  CHECK(chain14[1].degree == 6);
  CHECK(chain14[2].degree == 14);
  const auto chain = xn_growth(A, 30);
  REQUIRE(chain.size() == 4);
  for (const auto& step : chain) {
    CHECK(step.matches_rule);
    CHECK(step.escapes);
  }
}

TEST_CASE("BP splitting obstruction") {
  const auto r = bp_splitting_obstruction(12);
  CHECK(r.z_equals_q6b2);
  CHECK(r.nonzero_source);
  CHECK(r.zero_image);
  CHECK(r.obstructed());
  const ModelAlgebra MU(ModelName::MU, 12);
  CHECK(MU.format(r.z) == "b_5 + b_1 b_4 + b_2 b_3 + b_1 b_2^2");
  CHECK_THROWS_AS(bp_splitting_obstruction(9), Error);
}

TEST_CASE("cup-1 on integers") {
  CHECK(cup_one_int(2));
  CHECK_FALSE(cup_one_int(4));
  CHECK(cup_one_int(-1));
  for (long long m = -20; m <= 20; ++m) {
    for (long long n = -20; n <= 20; ++n) {
      CHECK(cup_one_int(m + n) == (cup_one_int(m) ^ cup_one_int(n) ^ ((m * n) % 2 != 0)));
    }
  }
}
