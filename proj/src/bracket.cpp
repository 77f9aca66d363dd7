#include "dl/bracket.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

namespace dl {

namespace {

using Word = std::vector<int>;
using Tensor = std::set<Word>;

void toggle(Tensor& t, const Word& w) {
  auto [it, inserted] = t.insert(w);
  if (!inserted) t.erase(it);
}

Tensor concat(const Tensor& a, const Tensor& b) {
  Tensor out;
  for (const auto& u : a) {
    for (const auto& v : b) {
      Word w = u;
      w.insert(w.end(), v.begin(), v.end());
      toggle(out, w);
    }
  }
  return out;
}

/// Split of a Lyndon word of length >= 2 at its longest proper Lyndon suffix.
std::pair<Word, Word> standard_factorization(const Word& w) {
  for (std::size_t k = 1; k < w.size(); ++k) {
    Word suffix(w.begin() + static_cast<std::ptrdiff_t>(k), w.end());
    if (is_lyndon(suffix)) return {Word(w.begin(), w.begin() + static_cast<std::ptrdiff_t>(k)), suffix};
  }
  throw std::logic_error("word of length < 2 has no standard factorization");
}

/// Image of the standard bracketing of a Lyndon word in the tensor algebra.
Tensor expand(const Word& w) {
  if (w.size() == 1) return {w};
  const auto [u, v] = standard_factorization(w);
  const Tensor eu = expand(u), ev = expand(v);
  Tensor out = concat(eu, ev);
  for (const auto& x : concat(ev, eu)) toggle(out, x);
  return out;
}

BracketExpr sum_of(std::vector<BracketExpr> terms) {
  if (terms.empty()) return BracketExpr::zero();
  BracketExpr acc = std::move(terms[0]);
  for (std::size_t k = 1; k < terms.size(); ++k) acc = BracketExpr::sum(std::move(acc), std::move(terms[k]));
  return acc;
}

}  // namespace

bool is_lyndon(const Word& w) {
  if (w.empty()) return false;
  for (std::size_t k = 1; k < w.size(); ++k) {
    Word rot(w.begin() + static_cast<std::ptrdiff_t>(k), w.end());
    rot.insert(rot.end(), w.begin(), w.begin() + static_cast<std::ptrdiff_t>(k));
    if (!(w < rot)) return false;
  }
  return true;
}

BracketExpr BracketExpr::gen(std::string name) {
  BracketExpr e;
  e.kind_ = Kind::Gen;
  e.name_ = std::move(name);
  return e;
}

BracketExpr BracketExpr::one() {
  BracketExpr e;
  e.kind_ = Kind::One;
  return e;
}

BracketExpr BracketExpr::zero() { return {}; }

BracketExpr BracketExpr::sum(BracketExpr a, BracketExpr b) {
  BracketExpr e;
  e.kind_ = Kind::Sum;
  e.args_ = {std::move(a), std::move(b)};
  return e;
}

BracketExpr BracketExpr::product(BracketExpr a, BracketExpr b) {
  BracketExpr e;
  e.kind_ = Kind::Product;
  e.args_ = {std::move(a), std::move(b)};
  return e;
}

BracketExpr BracketExpr::bracket(BracketExpr a, BracketExpr b) {
  BracketExpr e;
  e.kind_ = Kind::Bracket;
  e.args_ = {std::move(a), std::move(b)};
  return e;
}

BracketExpr BracketExpr::op(int r, BracketExpr a) {
  BracketExpr e;
  e.kind_ = Kind::Op;
  e.index_ = r;
  e.args_ = {std::move(a)};
  return e;
}

std::string to_string(const BracketExpr& e) {
  using K = BracketExpr::Kind;
  auto wrap = [](const BracketExpr& a) {
    const std::string s = to_string(a);
    return a.kind() == K::Sum || a.kind() == K::Product ? "(" + s + ")" : s;
  };
  switch (e.kind()) {
    case K::Gen: return e.name();
    case K::One: return "1";
    case K::Zero: return "0";
    case K::Sum: return to_string(e.args()[0]) + " + " + to_string(e.args()[1]);
    case K::Product: {
      auto side = [](const BracketExpr& a) {
        const std::string s = to_string(a);
        return a.kind() == K::Sum ? "(" + s + ")" : s;
      };
      return side(e.args()[0]) + " * " + side(e.args()[1]);
    }
    case K::Bracket: return "[" + to_string(e.args()[0]) + ", " + to_string(e.args()[1]) + "]";
    case K::Op: return "Q_" + std::to_string(e.index()) + " " + wrap(e.args()[0]);
  }
  return "?";
}

std::string identity_name(BracketIdentity id) {
  switch (id) {
    case BracketIdentity::Antisymmetry: return "antisymmetry";
    case BracketIdentity::Self: return "self";
    case BracketIdentity::Unit: return "unit";
    case BracketIdentity::Leibniz: return "leibniz";
    case BracketIdentity::Jacobi: return "jacobi";
    case BracketIdentity::DlVanishing: return "dl_vanishing";
    case BracketIdentity::TopAdditivity: return "top_additivity";
    case BracketIdentity::TopCartan: return "top_cartan";
    case BracketIdentity::Adjoint: return "adjoint";
  }
  return "?";
}

std::optional<BracketIdentity> identity_from_name(std::string_view name) {
  for (auto id : {BracketIdentity::Antisymmetry, BracketIdentity::Self, BracketIdentity::Unit,
                  BracketIdentity::Leibniz, BracketIdentity::Jacobi, BracketIdentity::DlVanishing,
                  BracketIdentity::TopAdditivity, BracketIdentity::TopCartan, BracketIdentity::Adjoint}) {
    if (identity_name(id) == name) return id;
  }
  return std::nullopt;
}

int identity_arity(BracketIdentity id) {
  switch (id) {
    case BracketIdentity::Self:
    case BracketIdentity::Unit: return 1;
    case BracketIdentity::Leibniz:
    case BracketIdentity::Jacobi: return 3;
    default: return 2;
  }
}

BracketAlgebra::BracketAlgebra(int n, GenTable generators) : n_(n), gens_(std::move(generators)) {
  if (n_ < 1) throw Error(Errc::UnsupportedFlavor, "brackets need E_n with n >= 1");
  for (int g = 0; g < gens_.size(); ++g) intern({{}, {g}});
}

int BracketAlgebra::intern(const Atom& a) const {
  std::lock_guard lock(mu_);
  if (auto it = atom_ids_.find(a); it != atom_ids_.end()) return it->second;
  int degree = 0, weight = 0;
  for (int g : a.lie) {
    degree += gens_[g].degree;
    weight += gens_[g].weight;
  }
  degree += (static_cast<int>(a.lie.size()) - 1) * (n_ - 1);
  for (std::size_t k = a.word.size(); k-- > 0;) {
    degree = 2 * degree + a.word[k].index;
    weight *= 2;
  }
  const int id = atoms_.add(class_name(a.word, lie_name(a.lie)), degree, weight);
  atom_ids_.emplace(a, id);
  atom_list_.push_back(a);
  return id;
}

BracketAlgebra::Atom BracketAlgebra::atom(int id) const {
  std::lock_guard lock(mu_);
  return atom_list_.at(static_cast<std::size_t>(id));
}

Poly BracketAlgebra::atom_poly(int id, int exp) const {
  std::lock_guard lock(mu_);
  return Poly::gen(atoms_, id, exp);
}

std::string BracketAlgebra::lie_name(const Word& w) const {
  if (w.size() == 1) return gens_[w[0]].name;
  const auto [u, v] = standard_factorization(w);
  return "[" + lie_name(u) + "," + lie_name(v) + "]";
}

std::pair<Poly, GenTable> BracketAlgebra::presentation(const Poly& p) const {
  std::set<int> used;
  for (const auto& m : p.terms()) {
    const auto& e = m.exponents();
    for (std::size_t i = 0; i < e.size(); ++i) {
      if (e[i] != 0) used.insert(static_cast<int>(i));
    }
  }
  std::lock_guard lock(mu_);
  std::vector<int> order(used.begin(), used.end());
  std::sort(order.begin(), order.end(), [&](int a, int b) {
    const int da = atoms_[a].degree, db = atoms_[b].degree;
    if (da != db) return da < db;
    return atom_list_[static_cast<std::size_t>(a)] < atom_list_[static_cast<std::size_t>(b)];
  });
  GenTable table;
  std::map<int, int> rename;
  for (int id : order) rename[id] = table.add(atoms_[id].name, atoms_[id].degree, atoms_[id].weight);
  Poly out;
  for (const auto& m : p.terms()) {
    std::vector<int> e(order.size(), 0);
    for (const auto& [old_id, new_id] : rename) e[static_cast<std::size_t>(new_id)] = m.exponent(old_id);
    out.toggle(Monomial::from_exponents(table, e));
  }
  return {out, table};
}

std::string BracketAlgebra::format(const Poly& p) const {
  const auto [q, table] = presentation(p);
  return to_string(q, table);
}

Poly BracketAlgebra::generator(int gen) const {
  if (gen < 0 || gen >= gens_.size()) throw Error(Errc::UnknownGenerator, "generator id " + std::to_string(gen));
  return atom_poly(intern({{}, {gen}}));
}

Poly BracketAlgebra::letter(const OpWord& word, int gen) const {
  for (std::size_t k = 0; k < word.size(); ++k) {
    const auto& s = word[k];
    if (s.kind != OpKind::LowerQ || s.index < 1 || s.index > n_ - 1 ||
        (k > 0 && word[k - 1].index > s.index)) {
      throw Error(Errc::IndexOutOfRange, to_string(word) + " is not a basis word for E_" + std::to_string(n_));
    }
  }
  generator(gen);
  return atom_poly(intern({word, {gen}}));
}

Monomial BracketAlgebra::without_one(const Monomial& m, int id) const {
  std::vector<int> e = m.exponents();
  --e[static_cast<std::size_t>(id)];
  std::lock_guard lock(mu_);
  return Monomial::from_exponents(atoms_, std::move(e));
}

Poly BracketAlgebra::lie_bracket(const Word& u, const Word& v) const {
  const Tensor eu = expand(u), ev = expand(v);
  Tensor t = concat(eu, ev);
  for (const auto& w : concat(ev, eu)) toggle(t, w);
  Poly out;
  while (!t.empty()) {
    const Word w = *t.begin();
    if (!is_lyndon(w)) throw std::logic_error("bracket left the free Lie algebra");
    for (const auto& x : expand(w)) toggle(t, x);
    out += atom_poly(intern({{}, w}));
  }
  return out;
}

Poly BracketAlgebra::bracket_atoms(int a, int b) const {
  const Atom A = atom(a), B = atom(b);
  if (!B.word.empty()) {
    if (B.word.front().index < n_ - 1) return {};
    // Adjoint identity: [x, Q_{n-1} y] = [y, [y, x]].
    const Poly inner = atom_poly(intern({OpWord(B.word.begin() + 1, B.word.end()), B.lie}));
    return bracket(inner, bracket(inner, atom_poly(a)));
  }
  if (!A.word.empty()) return bracket_atoms(b, a);
  return lie_bracket(A.lie, B.lie);
}

Poly BracketAlgebra::bracket_monomials(const Monomial& a, const Monomial& b) const {
  // Leibniz in both slots; a factor of even multiplicity contributes twice.
  Poly out;
  const auto& ea = a.exponents();
  const auto& eb = b.exponents();
  for (std::size_t i = 0; i < ea.size(); ++i) {
    if (ea[i] % 2 == 0) continue;
    const Poly ra(without_one(a, static_cast<int>(i)));
    for (std::size_t j = 0; j < eb.size(); ++j) {
      if (eb[j] % 2 == 0) continue;
      const Poly core = bracket_atoms(static_cast<int>(i), static_cast<int>(j));
      if (core.is_zero()) continue;
      out += ra * Poly(without_one(b, static_cast<int>(j))) * core;
    }
  }
  return out;
}

Poly BracketAlgebra::bracket(const Poly& a, const Poly& b) const {
  if (n_ == 1) return {};
  Poly out;
  for (const auto& x : a.terms()) {
    for (const auto& y : b.terms()) out += bracket_monomials(x, y);
  }
  return out;
}

Poly BracketAlgebra::op_on_atom(int r, int a) const {
  if (r == 0) return atom_poly(a, 2);
  const Atom A = atom(a);
  OpWord w{lower(r)};
  w.insert(w.end(), A.word.begin(), A.word.end());
  if (A.word.empty() || r <= A.word.front().index) return atom_poly(intern({w, A.lie}));
  Poly out;
  const OpPoly nf = normalize_lower(w);
  for (const auto& v : nf.words()) {
    // Leading Q_0's are squarings.
    std::size_t zeros = 0;
    while (zeros < v.size() && v[zeros].index == 0) ++zeros;
    const int id = intern({OpWord(v.begin() + static_cast<std::ptrdiff_t>(zeros), v.end()), A.lie});
    out += atom_poly(id, 1 << zeros);
  }
  return out;
}

Poly BracketAlgebra::op_on_monomial(int r, const Monomial& m) const {
  if (m.is_unit()) return r == 0 ? Poly::one() : Poly{};
  const auto key = std::make_pair(r, m.exponents());
  {
    std::lock_guard lock(mu_);
    if (auto it = op_memo_.find(key); it != op_memo_.end()) return it->second;
  }
  const auto& e = m.exponents();
  const int first = static_cast<int>(std::find_if(e.begin(), e.end(), [](int x) { return x > 0; }) - e.begin());
  const Monomial rest = without_one(m, first);
  Poly out;
  if (rest.is_unit()) {
    out = op_on_atom(r, first);
  } else {
    for (int p = 0; p <= r; ++p) {
      const Poly left = op_on_atom(p, first);
      if (!left.is_zero()) out += left * op_on_monomial(r - p, rest);
    }
    if (r == n_ - 1) {
      // Top Cartan correction x [x,y] y.
      const Poly x = atom_poly(first), y(rest);
      out += x * bracket(x, y) * y;
    }
  }
  std::lock_guard lock(mu_);
  op_memo_.emplace(key, out);
  return out;
}

Poly BracketAlgebra::apply_op(int r, const Poly& a) const {
  if (r < 0 || r > n_ - 1) {
    throw Error(Errc::IndexOutOfRange, "Q_" + std::to_string(r) + " is not defined for E_" + std::to_string(n_));
  }
  std::map<int, std::vector<Monomial>> by_degree;
  for (const auto& m : a.terms()) by_degree[m.degree()].push_back(m);
  Poly out;
  for (const auto& [d, ms] : by_degree) {
    for (const auto& m : ms) out += op_on_monomial(r, m);
    if (r == n_ - 1) {
      // Top additivity: pairwise brackets of the summands.
      for (std::size_t k = 0; k < ms.size(); ++k) {
        for (std::size_t l = k + 1; l < ms.size(); ++l) out += bracket(Poly(ms[k]), Poly(ms[l]));
      }
    }
  }
  return out;
}

Poly BracketAlgebra::normal_form(const BracketExpr& e) const {
  using K = BracketExpr::Kind;
  switch (e.kind()) {
    case K::Gen: {
      auto id = gens_.find(e.name());
      if (!id) throw Error(Errc::UnknownGenerator, "unknown generator '" + e.name() + "'");
      return generator(*id);
    }
    case K::One: return Poly::one();
    case K::Zero: return {};
    case K::Sum: return normal_form(e.args()[0]) + normal_form(e.args()[1]);
    case K::Product: return normal_form(e.args()[0]) * normal_form(e.args()[1]);
    case K::Bracket: return bracket(normal_form(e.args()[0]), normal_form(e.args()[1]));
    case K::Op: return apply_op(e.index(), normal_form(e.args()[0]));
  }
  return {};
}

std::optional<int> BracketAlgebra::degree(const BracketExpr& e) const {
  using K = BracketExpr::Kind;
  switch (e.kind()) {
    case K::Gen: {
      auto id = gens_.find(e.name());
      if (!id) throw Error(Errc::UnknownGenerator, "unknown generator '" + e.name() + "'");
      return gens_[*id].degree;
    }
    case K::One: return 0;
    case K::Zero: return std::nullopt;
    case K::Sum: {
      const auto a = degree(e.args()[0]), b = degree(e.args()[1]);
      if (a && b && *a != *b) throw Error(Errc::NonHomogeneous, to_string(e));
      return a ? a : b;
    }
    case K::Product:
    case K::Bracket: {
      const auto a = degree(e.args()[0]), b = degree(e.args()[1]);
      if (!a || !b) return std::nullopt;
      return *a + *b + (e.kind() == K::Bracket ? n_ - 1 : 0);
    }
    case K::Op: {
      const auto a = degree(e.args()[0]);
      if (!a) return std::nullopt;
      return 2 * *a + e.index();
    }
  }
  return std::nullopt;
}

BracketReport BracketAlgebra::check(BracketIdentity id, const std::vector<BracketExpr>& args) const {
  using E = BracketExpr;
  if (static_cast<int>(args.size()) != identity_arity(id)) {
    throw Error(Errc::MalformedIdentityArgs, identity_name(id) + " takes " + std::to_string(identity_arity(id)) +
                                                 " arguments, got " + std::to_string(args.size()));
  }
  for (const auto& a : args) degree(a);
  const int top = n_ - 1;
  std::vector<std::pair<E, E>> cases;
  switch (id) {
    case BracketIdentity::Antisymmetry:
      cases.push_back({E::bracket(args[0], args[1]), E::bracket(args[1], args[0])});
      break;
    case BracketIdentity::Self:
      cases.push_back({E::bracket(args[0], args[0]), E::zero()});
      break;
    case BracketIdentity::Unit:
      cases.push_back({E::bracket(args[0], E::one()), E::zero()});
      break;
    case BracketIdentity::Leibniz:
      cases.push_back({E::bracket(args[0], E::product(args[1], args[2])),
                       E::sum(E::product(E::bracket(args[0], args[1]), args[2]),
                              E::product(args[1], E::bracket(args[0], args[2])))});
      break;
    case BracketIdentity::Jacobi:
      cases.push_back({sum_of({E::bracket(args[0], E::bracket(args[1], args[2])),
                               E::bracket(args[1], E::bracket(args[2], args[0])),
                               E::bracket(args[2], E::bracket(args[0], args[1]))}),
                       E::zero()});
      break;
    case BracketIdentity::DlVanishing:
      for (int r = 0; r < top; ++r) cases.push_back({E::bracket(args[0], E::op(r, args[1])), E::zero()});
      break;
    case BracketIdentity::TopAdditivity: {
      const auto a = degree(args[0]), b = degree(args[1]);
      if (a && b && *a != *b) {
        throw Error(Errc::MalformedIdentityArgs, "top additivity needs arguments of equal degree");
      }
      cases.push_back({E::op(top, E::sum(args[0], args[1])),
                       sum_of({E::op(top, args[0]), E::op(top, args[1]), E::bracket(args[0], args[1])})});
      break;
    }
    case BracketIdentity::TopCartan: {
      std::vector<E> rhs;
      for (int p = 0; p <= top; ++p) rhs.push_back(E::product(E::op(p, args[0]), E::op(top - p, args[1])));
      rhs.push_back(E::product(E::product(args[0], E::bracket(args[0], args[1])), args[1]));
      cases.push_back({E::op(top, E::product(args[0], args[1])), sum_of(std::move(rhs))});
      break;
    }
    case BracketIdentity::Adjoint:
      cases.push_back({E::bracket(args[0], E::op(top, args[1])), E::bracket(args[1], E::bracket(args[1], args[0]))});
      break;
  }
  BracketReport report{id, true, {}};
  for (const auto& [lhs, rhs] : cases) {
    const Poly l = normal_form(lhs), r = normal_form(rhs);
    report.holds = report.holds && l == r;
    report.sides.emplace_back(format(l), format(r));
  }
  return report;
}

bool single_gen_bracket_triviality(int n, int maxdeg, int gen_degree) {
  GenTable t;
  t.add("x", gen_degree);
  const auto alg = FreeAlgebra::en(n, t, maxdeg);
  const BracketAlgebra br(n, t);
  std::vector<Poly> elems;
  for (const auto& [d, ms] : alg.basis(maxdeg)) {
    for (const auto& m : ms) {
      Poly p = Poly::one();
      for (std::size_t id = 0; id < m.exponents().size(); ++id) {
        const int e = m.exponents()[id];
        if (e > 0) p = p * pow(br.letter(alg.classes()[id].word, 0), e);
      }
      elems.push_back(std::move(p));
    }
  }
  for (std::size_t i = 0; i < elems.size(); ++i) {
    for (std::size_t j = i; j < elems.size(); ++j) {
      if (!br.bracket(elems[i], elems[j]).is_zero()) return false;
    }
  }
  return true;
}

}  // namespace dl
