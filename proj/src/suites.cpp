#include "dl/suites.hpp"

#include <functional>
#include <map>
#include <random>
#include <set>

#include "dl/bracket.hpp"
#include "dl/freealg.hpp"
#include "dl/models.hpp"
#include "dl/nishida.hpp"

namespace dl {

bool SuiteResult::ok() const {
  for (const auto& c : checks) {
    if (!c.ok) return false;
  }
  return true;
}

std::vector<int> polynomial_poincare(const std::vector<int>& var_degrees, int maxdeg) {
  std::vector<int> c(static_cast<std::size_t>(maxdeg) + 1, 0);
  c[0] = 1;
  for (int d : var_degrees) {
    if (d <= 0) throw Error(Errc::Unsupported, "polynomial variables need positive degree");
    for (int k = d; k <= maxdeg; ++k) c[static_cast<std::size_t>(k)] += c[static_cast<std::size_t>(k - d)];
  }
  return c;
}

std::vector<int> dual_steenrod_poincare(int maxdeg) {
  std::vector<int> degs;
  for (int i = 1; (1 << i) - 1 <= maxdeg; ++i) degs.push_back((1 << i) - 1);
  return polynomial_poincare(degs, maxdeg);
}

namespace {

class Tally {
 public:
  explicit Tally(std::string name) : name_(std::move(name)) {}

  void check(bool ok, const std::function<std::string()>& describe) {
    ++count_;
    if (!ok) {
      ++failures_;
      if (first_.empty()) first_ = describe();
    }
  }

  CheckResult result() const {
    CheckResult r{name_, failures_ == 0, count_, ""};
    r.detail = failures_ == 0 ? std::to_string(count_) + " instances"
                              : std::to_string(failures_) + " of " + std::to_string(count_) + " fail, first: " + first_;
    return r;
  }

 private:
  std::string name_;
  long count_ = 0;
  long failures_ = 0;
  std::string first_;
};

GenTable one_gen(int degree, const char* name = "x") {
  GenTable t;
  t.add(name, degree);
  return t;
}

// All words of the given length over indices 0..maxidx, outermost first.
void for_each_word(int len, int maxidx, const std::function<void(const std::vector<int>&)>& f) {
  std::vector<int> idx(static_cast<std::size_t>(len), 0);
  for (;;) {
    f(idx);
    int k = len - 1;
    while (k >= 0 && idx[static_cast<std::size_t>(k)] == maxidx) idx[static_cast<std::size_t>(k--)] = 0;
    if (k < 0) return;
    ++idx[static_cast<std::size_t>(k)];
  }
}

std::string show(const std::vector<int>& idx) {
  std::string s = "[";
  for (std::size_t k = 0; k < idx.size(); ++k) s += (k ? "," : "") + std::to_string(idx[k]);
  return s + "]";
}

SuiteResult adem_suite(const SuiteBounds& b) {
  const int M = b.maxidx.value_or(20);
  SuiteResult out{"adem", {}};

  Tally rel("Q^{2n+2} Q^n = Q^{2n+1} Q^{n+1} for n = 1..10");
  for (int n = 1; n <= 10; ++n) {
    const OpPoly nf = normalize_upper(upper_word({2 * n + 2, n}));
    rel.check(nf == OpPoly(upper_word({2 * n + 1, n + 1})), [&] { return "n=" + std::to_string(n) + ": " + to_string(nf); });
  }
  out.checks.push_back(rel.result());

  Tally adm("normal forms are admissible and idempotent (length <= 3, indices <= " + std::to_string(M) + ")");
  Tally order("leftmost and rightmost rewriting agree (length 3, indices <= " + std::to_string(M) + ")");
  for (int len = 1; len <= 3; ++len) {
    for_each_word(len, M, [&](const std::vector<int>& idx) {
      const OpWord w = upper_word(idx);
      const OpPoly nf = normalize_upper(w);
      bool good = true;
      for (const auto& v : nf.words()) good = good && is_admissible_upper(indices_of(v));
      adm.check(good && normalize_upper(nf) == nf, [&] { return show(idx); });
      if (len == 3) {
        order.check(normalize_upper(w, RewriteStrategy::RightmostFirst) == nf, [&] { return show(idx); });
      }
    });
  }
  out.checks.push_back(adm.result());
  out.checks.push_back(order.result());

  const int cap = b.cap.value_or(49);
  const int semantic_idx = std::min(M, 16);
  const int semantic_len = 3;
  const ModelAlgebra A(ModelName::A, cap);
  Tally sound("words act on A_* as their normal forms (length <= " + std::to_string(semantic_len) + ", indices <= " +
              std::to_string(semantic_idx) + ", cap " + std::to_string(cap) + ")");
  const std::vector<std::pair<std::string, Poly>> elems{
      {"xi_1", A.var(1)}, {"xibar_2", A.xibar(2)}, {"xi_1^2", pow(A.var(1), 2)}};
  for (int len = 1; len <= semantic_len; ++len) {
    for_each_word(len, semantic_idx, [&](const std::vector<int>& idx) {
      int total = 0;
      for (int j : idx) total += j;
      for (const auto& [name, x] : elems) {
        if (total + x.max_degree().value_or(0) > cap) continue;
        const OpWord w = upper_word(idx);
        sound.check(A.act(w, x) == A.act(normalize_upper(w), x), [&] { return show(idx) + " on " + name; });
      }
    });
  }
  out.checks.push_back(sound.result());
  return out;
}

SuiteResult lower_adem_suite(const SuiteBounds& b) {
  const int M = b.maxidx.value_or(8);
  SuiteResult out{"lower-adem", {}};

  Tally trans("lower relations match upper ones under degree translation (r > s, indices <= " + std::to_string(M) +
              ", base degree <= 8)");
  for (int r = 1; r <= M; ++r) {
    for (int s = 0; s < r; ++s) {
      const OpPoly lower_side = adem_expand_lower(r, s);
      for (int m = 0; m <= 8; ++m) {
        OpPoly translated;
        for (const auto& w : lower_side.words()) translated.toggle(to_upper(w, m).word);
        const OpPoly expected = drop_unstable(normalize_upper(to_upper(lower_word({r, s}), m).word), m);
        trans.check(translated == expected, [&] {
          return "Q_" + std::to_string(r) + " Q_" + std::to_string(s) + " on degree " + std::to_string(m);
        });
      }
    }
  }
  out.checks.push_back(trans.result());

  const int M3 = std::min(M, 6);
  Tally nf("lower normal forms are non-decreasing and translate correctly (length 3, indices <= " +
           std::to_string(M3) + ")");
  for_each_word(3, M3, [&](const std::vector<int>& idx) {
    OpWord w;
    for (int i : idx) w.push_back(lower(i));
    const OpPoly p = normalize_lower(w);
    bool sorted = true;
    for (const auto& v : p.words()) {
      for (std::size_t k = 0; k + 1 < v.size(); ++k) sorted = sorted && v[k].index <= v[k + 1].index;
    }
    for (int m = 0; m <= 4; ++m) {
      OpPoly translated;
      for (const auto& v : p.words()) translated.toggle(to_upper(v, m).word);
      nf.check(sorted && translated == drop_unstable(normalize_upper(to_upper(w, m).word), m),
               [&] { return show(idx) + " on degree " + std::to_string(m); });
    }
  });
  out.checks.push_back(nf.result());

  Tally susp("suspension kills Q_0, lowers Q_r, and composes additively");
  susp.check(suspend(OpPoly(lower_word({0})), 1).is_zero(), [] { return std::string("sigma Q_0"); });
  for (int r = 1; r <= M; ++r) {
    susp.check(suspend(OpPoly(lower_word({r})), 1) == OpPoly(lower_word({r - 1})),
               [&] { return "sigma Q_" + std::to_string(r); });
  }
  for (int a = 0; a <= 4; ++a)
    for (int c = 0; c <= 4; ++c)
      for (int i = 0; i <= 6; ++i)
        for (int j = 0; j <= 6; ++j) {
          const OpPoly p = OpPoly(lower_word({i, j})) + OpPoly(lower_word({j}));
          susp.check(suspend(suspend(p, a), c) == suspend(p, a + c), [&] { return to_string(p); });
        }
  out.checks.push_back(susp.result());

  Tally w2("weight-2 tables on degree m for E_n have n operations, all killed by n-fold suspension (m <= 6, n <= 5)");
  for (int m = 0; m <= 6; ++m) {
    for (int n = 1; n <= 5; ++n) {
      const auto t = weight2_table(m, n);
      bool good = static_cast<int>(t.rows.size()) == n && !t.stable;
      for (int i = 0; good && i < n; ++i) {
        const auto& row = t.rows[static_cast<std::size_t>(i)];
        good = row.index == i && row.target_degree == 2 * m + i && static_cast<int>(row.images.size()) >= n;
        for (int k = 1; good && k <= n; ++k) {
          const auto& img = row.images[static_cast<std::size_t>(k - 1)];
          good = k <= i ? img == i - k : !img.has_value();
        }
      }
      w2.check(good, [&] { return "m=" + std::to_string(m) + " n=" + std::to_string(n); });
    }
  }
  out.checks.push_back(w2.result());
  return out;
}

SuiteResult steinberger_suite(const SuiteBounds& b) {
  const ModelAlgebra A(ModelName::A, b.cap.value_or(31));
  SuiteResult out{"steinberger", {}};

  Tally q1("Q^{2^i-2} xi_1 = xibar_i, i = 2..5 (i = 1 read as the series coefficient c_0)");
  q1.check(A.series_coefficient(0) == A.xibar(1), [] { return std::string("c_0"); });
  for (int i = 2; i <= 5; ++i) {
    q1.check(A.act((1 << i) - 2, A.var(1)) == A.conjugate(A.var(i)), [&] { return "i=" + std::to_string(i); });
  }
  out.checks.push_back(q1.result());

  Tally up("Q^{2^i} xibar_i = xibar_{i+1}, i = 1..4");
  for (int i = 1; i <= 4; ++i) {
    up.check(A.act(1 << i, A.xibar(i)) == A.xibar(i + 1), [&] { return "i=" + std::to_string(i); });
  }
  out.checks.push_back(up.result());

  Tally zero("Q^s xibar_i = 0 when s mod 2^i is not 0 or 2^i - 1 (s <= 24, i <= 3)");
  for (int i = 1; i <= 3; ++i) {
    for (int s = 0; s <= 24; ++s) {
      const int r = s % (1 << i);
      if (r == 0 || r == (1 << i) - 1) continue;
      zero.check(A.act(s, A.xibar(i)).is_zero(), [&] { return "s=" + std::to_string(s) + " i=" + std::to_string(i); });
    }
  }
  out.checks.push_back(zero.result());

  Tally series("Q^s xi_1 is the degree-(s+1) part of the inverse series (1 <= s <= 30)");
  for (int s = 1; s + 1 <= A.cap(); ++s) {
    series.check(A.act(s, A.var(1)) == A.series_coefficient(s), [&] { return "s=" + std::to_string(s); });
  }
  out.checks.push_back(series.result());

  Tally route("the xibar_i rule agrees with Adem relations applied from xi_1 (i = 2, 3)");
  for (int i = 2; i <= 3; ++i) {
    std::vector<int> tail;
    for (int k = i - 1; k >= 1; --k) tail.push_back(1 << k);
    for (int s = 0; s + (1 << i) - 1 <= A.cap(); ++s) {
      std::vector<int> idx{s};
      idx.insert(idx.end(), tail.begin(), tail.end());
      route.check(A.act(normalize_upper(upper_word(idx)), A.var(1)) == A.Q_on_xibar(s, i),
                  [&] { return "s=" + std::to_string(s) + " i=" + std::to_string(i); });
    }
  }
  out.checks.push_back(route.result());
  return out;
}

SuiteResult priddy_suite(const SuiteBounds&) {
  SuiteResult out{"priddy", {}};
  const ModelAlgebra MU(ModelName::MU, 12);
  Tally ex("five standard identities in H_*MU (cap 12)");
  const std::vector<std::tuple<int, int, std::string>> expected{
      {2, 1, "b_1^2"},
      {4, 1, "b_3 + b_1 b_2 + b_1^3"},
      {6, 1, "b_1^4"},
      {8, 1, "b_5 + b_1 b_4 + b_2 b_3 + b_1^2 b_3 + b_1 b_2^2 + b_1^3 b_2 + b_1^5"},
      {6, 2, "b_5 + b_1 b_4 + b_2 b_3 + b_1 b_2^2"},
  };
  for (const auto& [j, k, text] : expected) {
    const std::string got = MU.format(MU.act(j, MU.var(k)));
    ex.check(got == text, [&, j = j, k = k] { return "Q^" + std::to_string(j) + " b_" + std::to_string(k) + " = " + got; });
  }
  out.checks.push_back(ex.result());

  const ModelAlgebra MO(ModelName::MO, 24);
  const ModelAlgebra MU48(ModelName::MU, 48);
  Tally halved("H_*MO takes the halved indices: Q^j a_k matches Q^{2j} b_k with a for b (j + k <= 12)");
  Tally odd("Q^{odd} b_k = 0 in H_*MU");
  for (int k = 1; k <= 4; ++k) {
    for (int j = 0; j + k <= 12; ++j) {
      std::string mu = MU48.format(MU48.priddy_Q(2 * j, k));
      for (auto& c : mu) {
        if (c == 'b') c = 'a';
      }
      const std::string mo = MO.format(MO.priddy_Q(j, k));
      halved.check(mo == mu, [&] { return "Q^" + std::to_string(j) + " a_" + std::to_string(k) + " = " + mo; });
      odd.check(MU48.priddy_Q(2 * j + 1, k).is_zero(), [&] { return "k=" + std::to_string(k) + " j=" + std::to_string(j); });
    }
  }
  out.checks.push_back(halved.result());
  out.checks.push_back(odd.result());

  Tally bound("Q^k a_k = a_k^2 and Q^j a_k = 0 for j < k");
  for (int k = 1; k <= 6; ++k) {
    bound.check(MO.act(k, MO.var(k)) == pow(MO.var(k), 2), [&] { return "k=" + std::to_string(k); });
    for (int j = 0; j < k; ++j) {
      bound.check(MO.act(j, MO.var(k)).is_zero(), [&] { return "j=" + std::to_string(j) + " k=" + std::to_string(k); });
    }
  }
  out.checks.push_back(bound.result());

  const ModelAlgebra MU24(ModelName::MU, 24);
  Tally lead("indecomposable coefficient of Q^n a_k and Q^{2n} b_k is binom(n-1, k) (n <= 10, n + k <= 12)");
  for (int n = 1; n <= 10; ++n) {
    for (int k = 1; n + k <= 12; ++k) {
      lead.check(MO.leading_term_check(n, k) && MU24.leading_term_check(n, k),
                 [&] { return "n=" + std::to_string(n) + " k=" + std::to_string(k); });
    }
  }
  out.checks.push_back(lead.result());
  return out;
}

SuiteResult nishida_suite(const SuiteBounds& b) {
  const int M = b.maxidx.value_or(10);
  const int top = b.maxdeg.value_or(16);
  SuiteResult out{"nishida", {}};

  Tally padem("P_3 = P_2 P_1 on the free E_infinity basis (degree <= " + std::to_string(top) + ")");
  const auto small = FreeAlgebra::einf(one_gen(1), top);
  padem.check(verify_p_adem(small, top), [] { return std::string("some basis monomial"); });
  out.checks.push_back(padem.result());

  Tally lowerform("lower-indexed form matches the upper form under translation (r, s, deg <= 8)");
  for (int r = 0; r <= 8; ++r) {
    for (int s = 0; s <= 8; ++s) {
      for (int deg = 0; deg <= 8; ++deg) {
        OpPoly translated;
        for (const auto& w : nishida_expand(r, deg + s).words()) {
          const int j = w[0].index - (deg - w[1].index);
          if (j >= 0) translated.toggle({lower(j), w[1]});
        }
        lowerform.check(nishida_lower(r, s, deg) == translated, [&] {
          return "r=" + std::to_string(r) + " s=" + std::to_string(s) + " deg=" + std::to_string(deg);
        });
      }
    }
  }
  out.checks.push_back(lowerform.result());

  const int cap = 6 + 3 * M;
  const auto alg = FreeAlgebra::einf(one_gen(1), cap);
  const SteenrodAction P(alg);
  std::vector<std::pair<std::string, Poly>> classes;
  for (const auto& c : alg.classes_up_to(6)) {
    classes.emplace_back(class_name(c.word, "x"), Poly::gen(alg.class_table(), *alg.class_id(c.gen, c.word)));
  }
  std::vector<OpSym> letters;
  for (int i = 0; i <= M; ++i) {
    letters.push_back(upper(i));
    letters.push_back(steenrod(i));
  }
  const int L = static_cast<int>(letters.size()) - 1;
  Tally mixed("mixed words evaluate like their normal forms (length <= 3, indices <= " + std::to_string(M) +
              ", classes of degree <= 6)");
  for (int len = 1; len <= 3; ++len) {
    for_each_word(len, L, [&](const std::vector<int>& pick) {
      OpWord w;
      for (int k : pick) w.push_back(letters[static_cast<std::size_t>(k)]);
      const OpPoly nf = normalize_mixed(w);
      for (const auto& [name, x] : classes) {
        Poly via;
        for (const auto& v : nf.words()) via += P.apply_word(v, x);
        mixed.check(via == P.apply_word(w, x), [&] { return to_string(w) + " on " + name; });
      }
    });
  }
  out.checks.push_back(mixed.result());

  const auto alg32 = FreeAlgebra::einf(one_gen(1), 32);
  const SteenrodAction P32(alg32);
  Tally power("P_{d|u|}(u^d) = (P_{|u|} u)^d for basis u of degree <= 10, d <= 3");
  Tally cartan("P-Cartan on products of basis monomials (total degree <= 12, d <= 4)");
  std::vector<Monomial> mons;
  for (const auto& [deg, ms] : alg32.basis(10)) {
    for (const auto& m : ms) {
      mons.push_back(m);
      for (int d = 1; d <= 3; ++d) {
        if (d * deg > alg32.cap()) continue;
        power.check(power_identity_check(alg32, Poly(m), d),
                    [&] { return alg32.format(Poly(m)) + " d=" + std::to_string(d); });
      }
    }
  }
  for (const auto& a : mons) {
    for (const auto& c : mons) {
      if (a.is_unit() || c.is_unit() || a.degree() + c.degree() > 12) continue;
      for (int d = 0; d <= 4; ++d) {
        Poly rhs;
        for (int i = 0; i <= d; ++i) rhs += P32.apply(i, Poly(a)) * P32.apply(d - i, Poly(c));
        cartan.check(P32.apply(d, Poly(a) * Poly(c)) == rhs, [&] {
          return "P_" + std::to_string(d) + " on " + alg32.format(Poly(a)) + " * " + alg32.format(Poly(c));
        });
      }
    }
  }
  out.checks.push_back(power.result());
  out.checks.push_back(cartan.result());
  return out;
}

BracketExpr random_expr(std::mt19937& rng, const BracketAlgebra& b, int depth) {
  using E = BracketExpr;
  static const char* names[] = {"x", "y", "z"};
  std::uniform_int_distribution<int> kind(0, depth <= 0 ? 1 : 5), gen(0, 2), op(0, b.n() - 1);
  switch (kind(rng)) {
    case 0:
    case 1: return E::gen(names[gen(rng)]);
    case 2: return E::product(random_expr(rng, b, depth - 1), random_expr(rng, b, depth - 1));
    case 3: return E::bracket(random_expr(rng, b, depth - 1), random_expr(rng, b, depth - 1));
    case 4: return E::op(op(rng), random_expr(rng, b, depth - 1));
    default: {
      E a = random_expr(rng, b, depth - 1), c = random_expr(rng, b, depth - 1);
      if (b.degree(a) != b.degree(c)) return a;
      return E::sum(std::move(a), std::move(c));
    }
  }
}

SuiteResult bracket_suite(const SuiteBounds& bounds) {
  using E = BracketExpr;
  SuiteResult out{"bracket", {}};
  GenTable gens;
  gens.add("x", 1);
  gens.add("y", 1);
  gens.add("z", 2);
  std::vector<int> ns;
  if (bounds.n) {
    ns.push_back(*bounds.n);
  } else {
    ns = {1, 2, 3, 4};
  }
  std::mt19937 rng(5);
  for (auto id : {BracketIdentity::Antisymmetry, BracketIdentity::Self, BracketIdentity::Unit, BracketIdentity::Leibniz,
                  BracketIdentity::Jacobi, BracketIdentity::DlVanishing, BracketIdentity::TopAdditivity,
                  BracketIdentity::TopCartan, BracketIdentity::Adjoint}) {
    Tally t(identity_name(id) + " on random expressions in x, y, z");
    for (int n : ns) {
      const BracketAlgebra b(n, gens);
      for (int trial = 0; trial < 25; ++trial) {
        std::vector<E> args;
        for (int k = 0; k < identity_arity(id); ++k) args.push_back(random_expr(rng, b, 2));
        if (id == BracketIdentity::TopAdditivity && b.degree(args[0]) != b.degree(args[1])) args[1] = args[0];
        const auto report = b.check(id, args);
        t.check(report.holds, [&] {
          std::string s = "n=" + std::to_string(n);
          for (const auto& a : args) s += " " + to_string(a);
          return s;
        });
      }
    }
    out.checks.push_back(t.result());
  }
  Tally triv("brackets vanish on single-generator free E_n algebras (n = 2, 3, degree <= 9)");
  for (int n : {2, 3}) {
    triv.check(single_gen_bracket_triviality(n, bounds.maxdeg.value_or(9)), [&] { return "n=" + std::to_string(n); });
  }
  out.checks.push_back(triv.result());
  return out;
}

// Degrees of E_infinity polynomial generators on one class of degree d, by
// brute force over index sequences.
std::vector<int> einf_generator_degrees(int d, int maxdeg) {
  std::vector<int> out{d};
  std::vector<int> seq;
  std::function<void(int, int)> rec = [&](int len, int sum) {
    if (static_cast<int>(seq.size()) == len) {
      bool adm = true;
      for (std::size_t k = 0; k + 1 < seq.size(); ++k) adm = adm && seq[k] <= 2 * seq[k + 1];
      int ex = seq[0];
      for (std::size_t k = 1; k < seq.size(); ++k) ex -= seq[k];
      if (adm && ex > d) out.push_back(d + sum);
      return;
    }
    for (int j = 0; d + sum + j <= maxdeg; ++j) {
      seq.push_back(j);
      rec(len, sum + j);
      seq.pop_back();
    }
  };
  for (int len = 1; (1 << len) * (d + 1) - 1 <= maxdeg; ++len) rec(len, 0);
  return out;
}

SuiteResult freebasis_suite(const SuiteBounds& b) {
  const int top = b.maxdeg.value_or(20);
  SuiteResult out{"freebasis", {}};

  Tally e2("E_2 on a degree-1 class has the Poincare series of A_* (degree <= " + std::to_string(top) + ")");
  const auto a_dims = dual_steenrod_poincare(top);
  const auto e2_dims = FreeAlgebra::en(2, one_gen(1), top).poincare(top);
  e2.check(e2_dims == a_dims, [] { return std::string("dimension mismatch"); });
  out.checks.push_back(e2.result());

  Tally einf("E_infinity Poincare series matches brute-force admissible sequences (degrees 1..3, degree <= " +
             std::to_string(top) + ")");
  for (int d = 1; d <= 3; ++d) {
    const auto dims = FreeAlgebra::einf(one_gen(d), top).poincare(top);
    einf.check(dims == polynomial_poincare(einf_generator_degrees(d, top), top), [&] { return "d=" + std::to_string(d); });
  }
  out.checks.push_back(einf.result());

  Tally poly("E_n on a degree-1 class is polynomial on Q_1^k x when n = 2 (degree <= " + std::to_string(top) + ")");
  const auto en = FreeAlgebra::en(2, one_gen(1), top);
  std::vector<int> expected_degrees;
  for (int k = 0; (2 << k) - 1 <= top; ++k) expected_degrees.push_back((2 << k) - 1);
  std::vector<int> got;
  bool words_ok = true;
  for (const auto& c : en.classes()) {
    got.push_back(c.degree);
    for (const auto& s : c.word) words_ok = words_ok && s == lower(1);
  }
  poly.check(words_ok && got == expected_degrees, [] { return std::string("class list differs"); });
  out.checks.push_back(poly.result());

  const int reach_top = 12;
  Tally reach("products and operations from the generator reach exactly the basis (degree <= 12)");
  const auto alg = FreeAlgebra::einf(one_gen(1), reach_top);
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
      for (int r = m.degree(); m.degree() + r <= reach_top; ++r) visit(alg.apply_op(upper(r), Poly(m)));
      const std::vector<Monomial> known(reached.begin(), reached.end());
      for (const auto& k : known) {
        if (k.degree() + m.degree() <= reach_top) visit(alg.multiply(Poly(m), Poly(k)));
      }
    }
  }
  std::set<Monomial, MonomialOrder> basis;
  for (const auto& [d, ms] : alg.basis(reach_top)) basis.insert(ms.begin(), ms.end());
  reach.check(reached == basis, [&] {
    return std::to_string(reached.size()) + " reached vs " + std::to_string(basis.size()) + " basis monomials";
  });
  out.checks.push_back(reach.result());
  return out;
}

SuiteResult cupone_suite(const SuiteBounds& b) {
  const long long M = b.maxidx.value_or(20);
  SuiteResult out{"cupone", {}};
  Tally value("Sq_1(n) = binom(n, 2) eta for |n| <= " + std::to_string(M));
  Tally add("Sq_1(m + n) = Sq_1(m) + Sq_1(n) + mn eta for |m|, |n| <= " + std::to_string(M));
  for (long long n = -M; n <= M; ++n) {
    const bool oracle = ((n * (n - 1) / 2) % 2) != 0;
    value.check(cup_one_int(n) == oracle, [&] { return "n=" + std::to_string(n); });
    for (long long m = -M; m <= M; ++m) {
      const bool rhs = cup_one_int(m) ^ cup_one_int(n) ^ ((m * n) % 2 != 0);
      add.check(cup_one_int(m + n) == rhs, [&] { return "m=" + std::to_string(m) + " n=" + std::to_string(n); });
    }
  }
  out.checks.push_back(value.result());
  out.checks.push_back(add.result());
  return out;
}

std::string xibar_generator(int i, int e) {
  std::string s = "xibar_" + std::to_string(i);
  return e > 1 ? s + "^" + std::to_string(e) : s;
}

SuiteResult obstructions_suite(const SuiteBounds& b) {
  const ModelAlgebra A(ModelName::A, b.cap.value_or(31));
  SuiteResult out{"obstructions", {}};

  Tally kn("k(n) is not Q_1-closed, witness Q_1 xibar_n = xibar_{n+1} (n = 1..4)");
  for (int n = 1; n <= 4; ++n) {
    const auto v = closure_check(A, SubalgebraSpec::k(n), {lower(1)}, A.cap());
    const bool ok = v.size() == 1 && v[0].xibar_index == n && v[0].exponent == 1 && v[0].image == A.xibar(n + 1);
    kn.check(ok, [&] {
      std::string s = "k(" + std::to_string(n) + "):";
      for (const auto& x : v) {
        s += " " + xibar_generator(x.xibar_index, x.exponent) + " -> " + to_string(A.to_xibar_coordinates(x.image), A.xibar_variables());
      }
      return s;
    });
  }
  out.checks.push_back(kn.result());

  Tally kz("kZ(n) is Q_1-closed exactly when n = 1 (n <= 4)");
  for (int n = 1; n <= 4; ++n) {
    const bool closed = closure_check(A, SubalgebraSpec::kZ(n), {lower(1)}, A.cap()).empty();
    kz.check(closed == (n == 1), [&] { return "kZ(" + std::to_string(n) + ")"; });
  }
  out.checks.push_back(kz.result());

  Tally bp("BP is closed under every Q^s through degree 24");
  const auto v = closure_check_all_upper(A, SubalgebraSpec::bp(), 24);
  bp.check(v.empty(), [&] { return "Q^" + std::to_string(v.front().op.index) + " " + xibar_generator(v.front().xibar_index, v.front().exponent); });
  out.checks.push_back(bp.result());

  Tally growth("Q_2 iterates from xi_1^2 escape every finitely generated prefix (degree <= 30)");
  const auto chain = xn_growth(A, 30);
  growth.check(chain.size() == 4, [&] { return std::to_string(chain.size()) + " steps"; });
  for (const auto& step : chain) {
    growth.check(step.escapes && step.matches_rule, [&] { return "degree " + std::to_string(step.degree); });
  }
  out.checks.push_back(growth.result());

  Tally split("Q^8 b_1 + b_1^2 Q^4 b_1 = Q^6 b_2 is nonzero in H_*MU and maps to 0 in A_*");
  const auto r = bp_splitting_obstruction(12);
  split.check(r.z_equals_q6b2, [] { return std::string("z differs from Q^6 b_2"); });
  split.check(r.nonzero_source, [] { return std::string("z vanishes"); });
  split.check(r.zero_image, [] { return std::string("image is nonzero"); });
  out.checks.push_back(split.result());
  return out;
}

}  // namespace

const std::vector<std::string>& suite_names() {
  static const std::vector<std::string> names{"adem",     "lower-adem", "steinberger", "priddy",      "nishida",
                                              "bracket",  "freebasis",  "cupone",      "obstructions"};
  return names;
}

SuiteResult run_suite(std::string_view name, const SuiteBounds& bounds) {
  if (name == "adem") return adem_suite(bounds);
  if (name == "lower-adem") return lower_adem_suite(bounds);
  if (name == "steinberger") return steinberger_suite(bounds);
  if (name == "priddy") return priddy_suite(bounds);
  if (name == "nishida") return nishida_suite(bounds);
  if (name == "bracket") return bracket_suite(bounds);
  if (name == "freebasis") return freebasis_suite(bounds);
  if (name == "cupone") return cupone_suite(bounds);
  if (name == "obstructions") return obstructions_suite(bounds);
  throw Error(Errc::Unsupported, "unknown suite '" + std::string(name) + "'");
}

}  // namespace dl
