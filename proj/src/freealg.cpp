#include "dl/freealg.hpp"

#include <algorithm>
#include <functional>

namespace dl {

std::string class_name(const OpWord& word, const std::string& gen_name) {
  std::string out;
  for (std::size_t k = 0; k < word.size();) {
    std::size_t run = 1;
    if (word[k].kind == OpKind::LowerQ) {
      while (k + run < word.size() && word[k + run] == word[k]) ++run;
    }
    out += to_string(word[k]);
    if (run > 1) out += '^' + std::to_string(run);
    out += ' ';
    k += run;
  }
  return out + gen_name;
}

FreeAlgebra::FreeAlgebra(std::optional<int> n, GenTable generators, int cap)
    : n_(n), gens_(std::move(generators)), cap_(cap) {
  if (cap_ < 0) throw Error(Errc::DegreeBeyondCap, "cap must be non-negative");
  enumerate_classes();
}

FreeAlgebra::FreeAlgebra(const FreeAlgebra& other)
    : n_(other.n_),
      gens_(other.gens_),
      cap_(other.cap_),
      classes_(other.classes_),
      class_table_(other.class_table_),
      class_index_(other.class_index_) {}

FreeAlgebra::FreeAlgebra(FreeAlgebra&& other) noexcept
    : n_(other.n_),
      gens_(std::move(other.gens_)),
      cap_(other.cap_),
      classes_(std::move(other.classes_)),
      class_table_(std::move(other.class_table_)),
      class_index_(std::move(other.class_index_)) {}

FreeAlgebra FreeAlgebra::einf(GenTable generators, int cap) {
  return FreeAlgebra(std::nullopt, std::move(generators), cap);
}

FreeAlgebra FreeAlgebra::en(int n, GenTable generators, int cap) {
  if (n < 1) throw Error(Errc::UnsupportedFlavor, "E_n needs n >= 1");
  if (generators.size() != 1) {
    throw Error(Errc::UnsupportedFlavor, "finite-n free algebras are supported on one generator only");
  }
  return FreeAlgebra(n, std::move(generators), cap);
}

void FreeAlgebra::enumerate_classes() {
  std::vector<AdmissibleClass> found;
  for (const auto& g : gens_.all()) {
    if (g.degree > cap_) continue;
    found.push_back({g.id, {}, g.degree, g.weight});
    if (!n_) {
      // Prepend Q^j with j above the current degree; admissibility bounds j by
      // twice the current outer index, and excess only shrinks as we extend.
      std::function<void(const OpWord&, int, int)> extend = [&](const OpWord& w, int deg, int wt) {
        for (int j = deg + 1; deg + j <= cap_; ++j) {
          if (!w.empty() && j > 2 * w.front().index) break;
          OpWord next{upper(j)};
          next.insert(next.end(), w.begin(), w.end());
          const auto idx = indices_of(next);
          if (excess(idx) <= g.degree) continue;
          found.push_back({g.id, next, deg + j, 2 * wt});
          extend(next, deg + j, 2 * wt);
        }
      };
      extend({}, g.degree, g.weight);
    } else {
      // (Q_1)^{j_1} ... (Q_{n-1})^{j_{n-1}}: indices non-decreasing left to right.
      std::function<void(const OpWord&, int, int)> extend = [&](const OpWord& w, int deg, int wt) {
        const int top = w.empty() ? *n_ - 1 : w.front().index;
        for (int i = 1; i <= top; ++i) {
          if (2 * deg + i > cap_) break;
          OpWord next{lower(i)};
          next.insert(next.end(), w.begin(), w.end());
          found.push_back({g.id, next, 2 * deg + i, 2 * wt});
          extend(next, 2 * deg + i, 2 * wt);
        }
      };
      extend({}, g.degree, g.weight);
    }
  }
  std::sort(found.begin(), found.end(), [](const AdmissibleClass& a, const AdmissibleClass& b) {
    if (a.degree != b.degree) return a.degree < b.degree;
    if (a.gen != b.gen) return a.gen < b.gen;
    if (a.word.size() != b.word.size()) return a.word.size() < b.word.size();
    return a.word < b.word;
  });
  classes_ = std::move(found);
  for (std::size_t k = 0; k < classes_.size(); ++k) {
    const auto& c = classes_[k];
    class_table_.add(class_name(c.word, gens_[c.gen].name), c.degree, c.weight);
    class_index_.emplace(std::make_pair(c.gen, c.word), static_cast<int>(k));
  }
}

std::vector<AdmissibleClass> FreeAlgebra::classes_up_to(int maxdeg) const {
  check_cap(maxdeg);
  std::vector<AdmissibleClass> out;
  for (const auto& c : classes_) {
    if (c.degree <= maxdeg) out.push_back(c);
  }
  return out;
}

std::optional<int> FreeAlgebra::class_id(int gen, const OpWord& word) const {
  auto it = class_index_.find({gen, word});
  if (it == class_index_.end()) return std::nullopt;
  return it->second;
}

void FreeAlgebra::check_cap(int degree) const {
  if (degree > cap_) {
    throw Error(Errc::DegreeBeyondCap,
                "degree " + std::to_string(degree) + " exceeds the algebra cap " + std::to_string(cap_));
  }
}

Poly FreeAlgebra::class_poly(int class_index) const {
  return Poly::gen(class_table_, class_index);
}

Poly FreeAlgebra::generator(int gen) const {
  auto id = class_id(gen, {});
  if (!id) check_cap(gens_[gen].degree);
  return class_poly(*id);
}

std::map<int, std::vector<Monomial>> FreeAlgebra::basis(int maxdeg) const {
  if (maxdeg < 0) throw Error(Errc::IndexOutOfRange, "maxdeg must be non-negative");
  check_cap(maxdeg);
  std::vector<int> usable;
  for (std::size_t k = 0; k < classes_.size(); ++k) {
    if (classes_[k].degree > maxdeg) break;
    if (classes_[k].degree == 0) {
      throw Error(Errc::Unsupported, "degree-0 class " + class_table_[static_cast<int>(k)].name +
                                         " gives infinitely many monomials in degree 0");
    }
    usable.push_back(static_cast<int>(k));
  }
  std::map<int, std::vector<Monomial>> out;
  for (int d = 0; d <= maxdeg; ++d) out[d];
  std::vector<int> exps(classes_.size(), 0);
  std::function<void(std::size_t, int)> walk = [&](std::size_t pos, int deg) {
    if (pos == usable.size()) {
      out[deg].push_back(Monomial::from_exponents(class_table_, exps));
      return;
    }
    const int id = usable[pos];
    const int cd = classes_[static_cast<std::size_t>(id)].degree;
    for (int e = 0; deg + e * cd <= maxdeg; ++e) {
      exps[static_cast<std::size_t>(id)] = e;
      walk(pos + 1, deg + e * cd);
    }
    exps[static_cast<std::size_t>(id)] = 0;
  };
  walk(0, 0);
  for (auto& [d, ms] : out) std::sort(ms.begin(), ms.end(), MonomialOrder{});
  return out;
}

std::vector<int> FreeAlgebra::poincare(int maxdeg) const {
  std::vector<int> dims;
  for (const auto& [d, ms] : basis(maxdeg)) dims.push_back(static_cast<int>(ms.size()));
  return dims;
}

Poly FreeAlgebra::multiply(const Poly& a, const Poly& b) const {
  Poly r = mul(a, b);
  if (auto top = r.max_degree()) check_cap(*top);
  return r;
}

Poly FreeAlgebra::apply_op(const OpSym& op, const Poly& elem) const {
  if (!n_) {
    if (op.kind != OpKind::UpperQ) {
      throw Error(Errc::Unsupported, "E_infinity algebras take upper-indexed operations, got " + to_string(op));
    }
  } else {
    if (op.kind != OpKind::LowerQ) {
      throw Error(Errc::Unsupported, "E_n algebras take lower-indexed operations, got " + to_string(op));
    }
    if (op.index < 0 || op.index >= *n_) {
      throw Error(Errc::IndexOutOfRange,
                  to_string(op) + " is not defined for E_" + std::to_string(*n_) + " algebras");
    }
  }
  Poly out;
  for (const auto& m : elem.terms()) {
    if (!n_) {
      if (op.index < m.degree()) continue;
      if (m.is_unit() && op.index != 0) continue;
      check_cap(m.degree() + op.index);
    } else {
      check_cap(2 * m.degree() + op.index);
    }
    out += op_on_monomial(op, m);
  }
  return out;
}

Poly FreeAlgebra::apply_word(const OpWord& w, const Poly& elem) const {
  Poly cur = elem;
  for (std::size_t k = w.size(); k-- > 0;) {
    if (cur.is_zero()) break;
    cur = apply_op(w[k], cur);
  }
  return cur;
}

Poly FreeAlgebra::op_on_monomial(const OpSym& op, const Monomial& m) const {
  const bool upper_op = op.kind == OpKind::UpperQ;
  if (m.is_unit()) return op.index == 0 ? Poly::one() : Poly{};
  if (upper_op && op.index < m.degree()) return {};

  const auto key = std::make_pair(op, m.exponents());
  {
    std::lock_guard lock(memo_mu_);
    if (auto it = memo_.find(key); it != memo_.end()) return it->second;
  }

  const auto& e = m.exponents();
  Poly result;
  bool square = true;
  for (int x : e) square = square && (x % 2 == 0);
  if (square) {
    // Cartan in characteristic 2: Q(a^2) = (Q_{half} a)^2, or 0 for odd index.
    if (op.index % 2 == 0) {
      std::vector<int> half(e.size());
      for (std::size_t i = 0; i < e.size(); ++i) half[i] = e[i] / 2;
      result = frobenius(op_on_monomial({op.kind, op.index / 2}, Monomial::from_exponents(class_table_, half)));
    }
  } else {
    std::size_t first = 0;
    while (e[first] == 0) ++first;
    const int fid = static_cast<int>(first);
    std::vector<int> rest_e = e;
    --rest_e[first];
    const Monomial rest = Monomial::from_exponents(class_table_, rest_e);
    if (rest.is_unit()) {
      result = op_on_class(op, fid);
    } else {
      const int fdeg = class_table_[fid].degree;
      if (upper_op) {
        for (int p = fdeg; p <= op.index - rest.degree(); ++p) {
          Poly left = op_on_class(upper(p), fid);
          if (left.is_zero()) continue;
          result += mul(left, op_on_monomial(upper(op.index - p), rest));
        }
      } else {
        for (int p = 0; p <= op.index; ++p) {
          Poly left = op_on_class(lower(p), fid);
          if (left.is_zero()) continue;
          result += mul(left, op_on_monomial(lower(op.index - p), rest));
        }
      }
    }
  }

  std::lock_guard lock(memo_mu_);
  memo_.emplace(key, result);
  return result;
}

Poly FreeAlgebra::op_on_class(const OpSym& op, int class_index) const {
  const auto& c = classes_[static_cast<std::size_t>(class_index)];
  const Poly self = class_poly(class_index);
  OpWord w{op};
  w.insert(w.end(), c.word.begin(), c.word.end());

  if (op.kind == OpKind::UpperQ) {
    if (op.index < c.degree) return {};
    if (op.index == c.degree) return mul(self, self);
    const auto idx = indices_of(w);
    if (is_admissible_upper(idx)) {
      check_cap(c.degree + op.index);
      return class_poly(*class_id(c.gen, w));
    }
    Poly out;
    const OpPoly nf = normalize_upper(w);
    for (const auto& k : nf.words()) out += apply_word(k, generator(c.gen));
    return out;
  }

  if (op.index == 0) return mul(self, self);
  if (c.word.empty() || op.index <= c.word.front().index) {
    check_cap(2 * c.degree + op.index);
    return class_poly(*class_id(c.gen, w));
  }
  Poly out;
  const OpPoly nf = normalize_lower(w);
  for (const auto& k : nf.words()) out += apply_word(k, generator(c.gen));
  return out;
}

}  // namespace dl
