#pragma once

// Dual Steenrod operations P_r on free E_infinity algebras, driven through
// Dyer-Lashof words by the Nishida relations.

#include <map>
#include <mutex>
#include <utility>

#include "dl/freealg.hpp"
#include "dl/opcalc.hpp"

namespace dl {

/// P_r Q^s as a sum of words [Q^{s-r+i}, P_i].
OpPoly nishida_expand(int r, int s);

/// P_r Q_s on a class of degree deg as a sum of words [Q_{s-r+2i}, P_i];
/// terms with a negative lower index are unstable and dropped.
OpPoly nishida_lower(int r, int s, int deg);

/// Moves every P to the right of every Q, Adem-normalizes the Q part and
/// drops P_0. Words with a negative upper index vanish on classes of
/// non-negative degree and are dropped. P words are left unreduced.
OpPoly normalize_mixed(const OpWord& w);

/// Values of P_d on the base generators, keyed by (generator id, d). Missing
/// entries default to the sphere action: P_0 is the identity, P_d = 0 above.
using SeedTable = std::map<std::pair<int, int>, Poly>;

class SteenrodAction {
 public:
  explicit SteenrodAction(const FreeAlgebra& alg, SeedTable seed = {});

  Poly apply(int d, const Poly& elem) const;
  /// Applies a word of P and upper Q symbols right to left.
  Poly apply_word(const OpWord& w, const Poly& elem) const;

 private:
  Poly on_monomial(int d, const Monomial& m) const;
  Poly on_class(int d, int class_index) const;
  Poly on_generator(int d, int gen) const;

  const FreeAlgebra& alg_;
  SeedTable seed_;
  mutable std::mutex mu_;
  mutable std::map<std::pair<int, std::vector<int>>, Poly> memo_;
};

Poly steenrod_action_free(const FreeAlgebra& alg, int d, const Poly& elem);

/// P_3 x = P_2 (P_1 x) for every basis monomial x of degree <= maxdeg.
bool verify_p_adem(const FreeAlgebra& alg, int maxdeg);

/// P_{d|u|}(u^d) = (P_{|u|} u)^d for homogeneous u.
bool power_identity_check(const FreeAlgebra& alg, const Poly& u, int d);

}  // namespace dl
