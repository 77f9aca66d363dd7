#pragma once

// Free E_n and E_infinity algebras on graded generators.
//
// Elements are Polys whose variables are the polynomial generators of the free
// algebra (the admissible classes), enumerated up to a fixed degree cap when
// the algebra is built. Class ids follow (degree, generator, word) order.

#include <map>
#include <mutex>
#include <optional>
#include <utility>
#include <vector>

#include "dl/gf2poly.hpp"
#include "dl/opcalc.hpp"

namespace dl {

struct AdmissibleClass {
  int gen = 0;   // id in the base generator table
  OpWord word;   // upper word (E_infinity) or non-decreasing lower word (E_n)
  int degree = 0;
  int weight = 0;
};

class FreeAlgebra {
 public:
  static FreeAlgebra einf(GenTable generators, int cap);
  /// Single-generator free E_n algebra, 1 <= n < infinity.
  static FreeAlgebra en(int n, GenTable generators, int cap);

  FreeAlgebra(const FreeAlgebra& other);
  FreeAlgebra(FreeAlgebra&& other) noexcept;

  bool is_einf() const { return !n_; }
  std::optional<int> n() const { return n_; }
  int cap() const { return cap_; }
  const GenTable& generators() const { return gens_; }
  /// Table of polynomial generators; Polys over the algebra use these ids.
  const GenTable& class_table() const { return class_table_; }
  const std::vector<AdmissibleClass>& classes() const { return classes_; }
  std::vector<AdmissibleClass> classes_up_to(int maxdeg) const;
  std::optional<int> class_id(int gen, const OpWord& word) const;

  /// The fundamental class of base generator `gen`.
  Poly generator(int gen) const;

  /// Monomials of each degree up to maxdeg, canonically ordered.
  std::map<int, std::vector<Monomial>> basis(int maxdeg) const;
  std::vector<int> poincare(int maxdeg) const;

  Poly apply_op(const OpSym& op, const Poly& elem) const;
  /// Applies the word right to left.
  Poly apply_word(const OpWord& w, const Poly& elem) const;
  Poly multiply(const Poly& a, const Poly& b) const;

  std::string format(const Poly& p) const { return to_string(p, class_table_); }

 private:
  FreeAlgebra(std::optional<int> n, GenTable generators, int cap);
  void enumerate_classes();
  void check_cap(int degree) const;
  Poly class_poly(int class_index) const;

  Poly op_on_monomial(const OpSym& op, const Monomial& m) const;
  Poly op_on_class(const OpSym& op, int class_index) const;

  std::optional<int> n_;
  GenTable gens_;
  int cap_ = 0;
  std::vector<AdmissibleClass> classes_;
  GenTable class_table_;
  std::map<std::pair<int, OpWord>, int> class_index_;

  mutable std::mutex memo_mu_;
  mutable std::map<std::pair<OpSym, std::vector<int>>, Poly> memo_;
};

/// Name of a class as printed: "Q^3 Q^2 x" or "Q_1^2 Q_2 x".
std::string class_name(const OpWord& word, const std::string& gen_name);

}  // namespace dl
