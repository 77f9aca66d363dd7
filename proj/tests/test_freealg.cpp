#include <algorithm>
#include <random>
#include <set>

#include "dl/freealg.hpp"
#include "doctest.h"

using namespace dl;

namespace {

GenTable one_gen(int degree, const std::string& name = "x") {
  GenTable t;
  t.add(name, degree);
  return t;
}

// Number of monomials of each degree in polynomial variables of the given degrees.
std::vector<int> monomial_counts(const std::vector<int>& var_degrees, int maxdeg) {
  std::vector<int> c(static_cast<std::size_t>(maxdeg) + 1, 0);
  c[0] = 1;
  for (int d : var_degrees) {
    for (int k = d; k <= maxdeg; ++k) c[static_cast<std::size_t>(k)] += c[static_cast<std::size_t>(k - d)];
  }
  return c;
}

std::vector<int> dual_steenrod_counts(int maxdeg) {
  std::vector<int> degs;
  for (int i = 1; (1 << i) - 1 <= maxdeg; ++i) degs.push_back((1 << i) - 1);
  return monomial_counts(degs, maxdeg);
}

// Degrees of E_infinity polynomial generators on one class of degree d, by
// brute force over all index sequences bounded by maxdeg.
std::vector<int> einf_generator_degrees(int d, int maxdeg) {
  std::vector<int> out{d};
  std::vector<int> seq;
  auto rec = [&](auto&& self, int len) -> void {
    if (static_cast<int>(seq.size()) == len) {
      int deg = d;
      for (int j : seq) deg += j;
      if (deg > maxdeg) return;
      bool adm = true;
      for (std::size_t k = 0; k + 1 < seq.size(); ++k) adm = adm && seq[k] <= 2 * seq[k + 1];
      int ex = seq[0];
      for (std::size_t k = 1; k < seq.size(); ++k) ex -= seq[k];
      if (adm && ex > d) out.push_back(deg);
      return;
    }
    for (int j = 0; j <= maxdeg; ++j) {
      seq.push_back(j);
      self(self, len);
      seq.pop_back();
    }
  };
  for (int len = 1; len <= 4; ++len) rec(rec, len);
  return out;
}

}  // namespace

TEST_CASE("E_infinity classes and operations on a degree-1 generator") {
  const auto alg = FreeAlgebra::einf(one_gen(1), 16);
  const Poly x = alg.generator(0);
  CHECK(alg.apply_op(upper(1), x) == x * x);
  CHECK(alg.apply_op(upper(0), x).is_zero());
  const Poly q2x = alg.apply_op(upper(2), x);
  CHECK(alg.format(q2x) == "Q^2 x");
  // excess(3,2) = 1 = |x|, so Q^3 Q^2 x is the square of Q^2 x.
  CHECK(alg.apply_op(upper(3), q2x) == q2x * q2x);
  CHECK(alg.format(alg.apply_op(upper(4), q2x)) == "Q^4 Q^2 x");
  // Q^4 Q^1 x = Q^3 Q^2 x = (Q^2 x)^2, and Q^4 (x^2) = (Q^2 x)^2 directly.
  CHECK(alg.apply_word(upper_word({4, 1}), x) == q2x * q2x);
  CHECK_THROWS_AS(alg.apply_op(lower(1), x), Error);
  CHECK_THROWS_AS(alg.apply_op(upper(16), x), Error);
}

TEST_CASE("E_infinity basis and Poincare series") {
  SUBCASE("degree-0 generator") {
    const auto alg = FreeAlgebra::einf(one_gen(0), 4);
    const auto cls = alg.classes_up_to(0);
    REQUIRE(cls.size() == 1);
    CHECK(cls[0].word.empty());
    CHECK_THROWS_AS(alg.basis(0), Error);
  }
  SUBCASE("class degrees match brute force") {
    for (int d : {1, 2, 3}) {
      const auto alg = FreeAlgebra::einf(one_gen(d), 20);
      std::vector<int> got;
      for (const auto& c : alg.classes()) got.push_back(c.degree);
      auto want = einf_generator_degrees(d, 20);
      std::sort(want.begin(), want.end());
      CHECK(got == want);
      CHECK(alg.poincare(20) == monomial_counts(want, 20));
    }
  }
  SUBCASE("positive-degree generator, maxdeg 0") {
    const auto alg = FreeAlgebra::einf(one_gen(3), 5);
    CHECK(alg.poincare(0) == std::vector<int>{1});
  }
  SUBCASE("first dimensions on a degree-1 generator") {
    const auto alg = FreeAlgebra::einf(one_gen(1), 20);
    const auto dims = alg.poincare(20);
    // Q^3 x already appears in degree 4, so the series leaves that of A_* there.
    CHECK(dims[4] == 3);
    CHECK(dual_steenrod_counts(20)[4] == 2);
  }
}

TEST_CASE("E_n single-generator bases") {
  SUBCASE("E_2 on degree 1, maxdeg 3") {
    const auto alg = FreeAlgebra::en(2, one_gen(1), 3);
    const auto b = alg.basis(3);
    CHECK(b.at(1).size() == 1);
    CHECK(b.at(2).size() == 1);
    REQUIRE(b.at(3).size() == 2);
    std::set<std::string> names;
    for (const auto& m : b.at(3)) names.insert(to_string(m, alg.class_table()));
    CHECK(names == std::set<std::string>{"x^3", "Q_1 x"});
  }
  SUBCASE("E_2 on degree 1 has the Poincare series of A_*") {
    const auto alg = FreeAlgebra::en(2, one_gen(1), 20);
    CHECK(alg.poincare(20) == dual_steenrod_counts(20));
    for (const auto& c : alg.classes()) CHECK(c.degree == (2 << c.word.size()) - 1);
  }
  SUBCASE("E_1 is a polynomial algebra on the generator") {
    const auto alg = FreeAlgebra::en(1, one_gen(2), 12);
    CHECK(alg.classes().size() == 1);
    CHECK(alg.poincare(6) == std::vector<int>{1, 0, 1, 0, 1, 0, 1});
  }
  SUBCASE("class naming") {
    const auto alg = FreeAlgebra::en(3, one_gen(1), 40);
    CHECK(alg.class_table()[*alg.class_id(0, lower_word({1, 1, 2}))].name == "Q_1^2 Q_2 x");
  }
  SUBCASE("multi-generator finite n rejected") {
    GenTable t;
    t.add("x", 1);
    t.add("y", 2);
    CHECK_THROWS_AS(FreeAlgebra::en(2, t, 10), Error);
  }
}

TEST_CASE("E_n lower operations agree with E_infinity under translation") {
  for (int n : {2, 3, 4}) {
    for (int d : {1, 2}) {
      const int cap = 24;
      const auto en = FreeAlgebra::en(n, one_gen(d), cap);
      const auto einf = FreeAlgebra::einf(one_gen(d), cap);
      auto translate = [&](const Poly& p) {
        Poly out;
        for (const auto& m : p.terms()) {
          Poly term = Poly::one();
          for (std::size_t id = 0; id < m.exponents().size(); ++id) {
            const int e = m.exponents()[id];
            if (e == 0) continue;
            const auto& c = en.classes()[id];
            const auto up = to_upper(c.word, d).word;
            term = term * pow(Poly::gen(einf.class_table(), *einf.class_id(0, up)), e);
          }
          out += term;
        }
        return out;
      };
      for (const auto& [deg, ms] : en.basis(10)) {
        for (const auto& m : ms) {
          for (int i = 0; i < n; ++i) {
            if (2 * deg + i > cap) continue;
            INFO("n=" << n << " d=" << d << " m=" << to_string(m, en.class_table()) << " i=" << i);
            CHECK(translate(en.apply_op(lower(i), Poly(m))) == einf.apply_op(upper(deg + i), translate(Poly(m))));
          }
        }
      }
    }
  }
  const auto en = FreeAlgebra::en(2, one_gen(1), 20);
  CHECK_THROWS_AS(en.apply_op(lower(2), en.generator(0)), Error);
}

TEST_CASE("closure of the generator reaches exactly the basis through degree 12") {
  const int top = 12;
  const auto alg = FreeAlgebra::einf(one_gen(1), top);
  std::set<Monomial, MonomialOrder> reached;
  std::vector<Monomial> frontier;
  auto visit = [&](const Poly& p) {
    for (const auto& m : p.terms()) {
      if (reached.insert(m).second) frontier.push_back(m);
    }
  };
  visit(Poly::one());
  visit(alg.generator(0));
  while (!frontier.empty()) {
    const auto batch = std::move(frontier);
    frontier.clear();
    for (const auto& m : batch) {
      for (int r = m.degree(); m.degree() + r <= top; ++r) visit(alg.apply_op(upper(r), Poly(m)));
      const std::vector<Monomial> known(reached.begin(), reached.end());
      for (const auto& k : known) {
        if (k.degree() + m.degree() <= top) visit(alg.multiply(Poly(m), Poly(k)));
      }
    }
  }
  std::set<Monomial, MonomialOrder> basis;
  for (const auto& [d, ms] : alg.basis(top)) basis.insert(ms.begin(), ms.end());
  CHECK(reached == basis);
}

TEST_CASE("additivity, Cartan, unit and weight on random elements") {
  GenTable t;
  t.add("x", 1);
  t.add("y", 2);
  const int top = 20;
  const auto alg = FreeAlgebra::einf(t, top);
  std::vector<Monomial> pool;
  for (const auto& [d, ms] : alg.basis(6)) pool.insert(pool.end(), ms.begin(), ms.end());
  std::mt19937 rng(3);
  std::uniform_int_distribution<std::size_t> pick(0, pool.size() - 1);
  std::uniform_int_distribution<int> ridx(0, 12);

  for (int r = -2; r <= 6; ++r) CHECK(alg.apply_op(upper(r), Poly::one()) == (r == 0 ? Poly::one() : Poly{}));

  for (int trial = 0; trial < 200; ++trial) {
    const Monomial ma = pool[pick(rng)], mb = pool[pick(rng)];
    const Poly a(ma), b(mb);
    const int r = ridx(rng);
    if (ma.degree() + mb.degree() + r > top) continue;
    Poly cartan;
    for (int p = 0; p <= r; ++p) cartan += alg.apply_op(upper(p), a) * alg.apply_op(upper(r - p), b);
    CHECK(alg.apply_op(upper(r), a * b) == cartan);
    if (ma.degree() == mb.degree()) {
      CHECK(alg.apply_op(upper(r), a + b) == alg.apply_op(upper(r), a) + alg.apply_op(upper(r), b));
    }
    for (const auto& m : alg.apply_op(upper(r), a).terms()) CHECK(m.weight() == 2 * ma.weight());
    for (const auto& m : alg.multiply(a, b).terms()) CHECK(m.weight() == ma.weight() + mb.weight());
  }
}
