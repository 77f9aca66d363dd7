#include "dl/nishida.hpp"

namespace dl {

OpPoly nishida_expand(int r, int s) {
  if (r < 0) throw Error(Errc::IndexOutOfRange, "P_r needs r >= 0");
  OpPoly out;
  for (int i = 0; 2 * i <= r; ++i) {
    if (binom2(s - r, r - 2 * i)) out.toggle({upper(s - r + i), steenrod(i)});
  }
  return out;
}

OpPoly nishida_lower(int r, int s, int deg) {
  if (r < 0 || s < 0 || deg < 0) throw Error(Errc::IndexOutOfRange, "nishida_lower needs r, s, deg >= 0");
  OpPoly out;
  for (int i = 0; 2 * i <= r; ++i) {
    const int j = s - r + 2 * i;
    if (j < 0) continue;
    if (binom2(deg + s - r, r - 2 * i)) out.toggle({lower(j), steenrod(i)});
  }
  return out;
}

namespace {

std::map<OpWord, OpPoly>& mixed_cache() {
  static std::map<OpWord, OpPoly> cache;
  return cache;
}

std::mutex& mixed_mutex() {
  static std::mutex mu;
  return mu;
}

}  // namespace

OpPoly normalize_mixed(const OpWord& w) {
  for (const auto& sym : w) {
    if (sym.kind == OpKind::LowerQ) throw Error(Errc::Unsupported, "mixed words take upper Q and P symbols");
    if (sym.kind == OpKind::UpperQ && sym.index < 0) return {};
  }
  {
    std::lock_guard lock(mixed_mutex());
    if (auto it = mixed_cache().find(w); it != mixed_cache().end()) return it->second;
  }
  OpPoly result;
  std::size_t at = w.size();
  for (std::size_t k = 0; k + 1 < w.size(); ++k) {
    if (w[k].kind == OpKind::SteenrodP && w[k + 1].kind == OpKind::UpperQ) {
      at = k;
      break;
    }
  }
  if (at < w.size()) {
    const OpPoly expansion = nishida_expand(w[at].index, w[at + 1].index);
    for (const auto& pair : expansion.words()) {
      OpWord next(w.begin(), w.begin() + static_cast<std::ptrdiff_t>(at));
      next.insert(next.end(), pair.begin(), pair.end());
      next.insert(next.end(), w.begin() + static_cast<std::ptrdiff_t>(at) + 2, w.end());
      result += normalize_mixed(next);
    }
  } else {
    OpWord qs, ps;
    for (const auto& sym : w) {
      if (sym.kind == OpKind::UpperQ) qs.push_back(sym);
      else if (sym.index != 0) ps.push_back(sym);
    }
    const OpPoly nf = normalize_upper(qs);
    for (const auto& q : nf.words()) {
      OpWord full = q;
      full.insert(full.end(), ps.begin(), ps.end());
      result.toggle(full);
    }
  }
  std::lock_guard lock(mixed_mutex());
  mixed_cache().emplace(w, result);
  return result;
}

SteenrodAction::SteenrodAction(const FreeAlgebra& alg, SeedTable seed) : alg_(alg), seed_(std::move(seed)) {
  if (!alg_.is_einf()) throw Error(Errc::UnsupportedFlavor, "Steenrod actions are modelled on E_infinity algebras");
}

Poly SteenrodAction::apply(int d, const Poly& elem) const {
  if (d < 0) throw Error(Errc::IndexOutOfRange, "P_d needs d >= 0");
  Poly out;
  for (const auto& m : elem.terms()) out += on_monomial(d, m);
  return out;
}

Poly SteenrodAction::apply_word(const OpWord& w, const Poly& elem) const {
  Poly cur = elem;
  for (std::size_t k = w.size(); k-- > 0 && !cur.is_zero();) {
    if (w[k].kind == OpKind::SteenrodP) {
      cur = apply(w[k].index, cur);
    } else if (w[k].index < 0) {
      cur = {};
    } else {
      cur = alg_.apply_op(w[k], cur);
    }
  }
  return cur;
}

Poly SteenrodAction::on_generator(int d, int gen) const {
  if (auto it = seed_.find({gen, d}); it != seed_.end()) return it->second;
  return d == 0 ? alg_.generator(gen) : Poly{};
}

Poly SteenrodAction::on_class(int d, int class_index) const {
  const auto& c = alg_.classes()[static_cast<std::size_t>(class_index)];
  if (c.word.empty()) return on_generator(d, c.gen);
  OpWord w{steenrod(d)};
  w.insert(w.end(), c.word.begin(), c.word.end());
  const OpPoly nf = normalize_mixed(w);
  const Poly base = alg_.generator(c.gen);
  Poly out;
  for (const auto& word : nf.words()) out += apply_word(word, base);
  return out;
}

Poly SteenrodAction::on_monomial(int d, const Monomial& m) const {
  if (d == 0) return Poly(m);
  if (d > m.degree()) return {};
  const auto key = std::make_pair(d, m.exponents());
  {
    std::lock_guard lock(mu_);
    if (auto it = memo_.find(key); it != memo_.end()) return it->second;
  }
  auto e = m.exponents();
  Poly out;
  bool square = true;
  for (int x : e) square = square && x % 2 == 0;
  if (square) {
    if (d % 2 == 0) {
      for (auto& x : e) x /= 2;
      out = frobenius(on_monomial(d / 2, Monomial::from_exponents(alg_.class_table(), e)));
    }
  } else {
    std::size_t first = 0;
    while (e[first] == 0) ++first;
    --e[first];
    const Monomial rest = Monomial::from_exponents(alg_.class_table(), e);
    if (rest.is_unit()) {
      out = on_class(d, static_cast<int>(first));
    } else {
      const Poly a = Poly::gen(alg_.class_table(), static_cast<int>(first));
      for (int p = 0; p <= d; ++p) {
        const Poly left = p == 0 ? a : on_class(p, static_cast<int>(first));
        if (!left.is_zero()) out += left * on_monomial(d - p, rest);
      }
    }
  }
  std::lock_guard lock(mu_);
  memo_.emplace(key, out);
  return out;
}

Poly steenrod_action_free(const FreeAlgebra& alg, int d, const Poly& elem) {
  return SteenrodAction(alg).apply(d, elem);
}

bool verify_p_adem(const FreeAlgebra& alg, int maxdeg) {
  const SteenrodAction P(alg);
  for (const auto& [deg, ms] : alg.basis(maxdeg)) {
    for (const auto& m : ms) {
      const Poly x(m);
      if (P.apply(3, x) != P.apply(2, P.apply(1, x))) return false;
    }
  }
  return true;
}

bool power_identity_check(const FreeAlgebra& alg, const Poly& u, int d) {
  if (!u.homogeneous()) throw Error(Errc::NonHomogeneous, "power identity needs a homogeneous element");
  if (d < 0) throw Error(Errc::IndexOutOfRange, "power must be non-negative");
  const SteenrodAction P(alg);
  const int du = u.min_degree().value_or(0);
  return P.apply(d * du, pow(u, d)) == pow(P.apply(du, u), d);
}

}  // namespace dl
