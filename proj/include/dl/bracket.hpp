#pragma once

// Browder brackets on E_n algebras in characteristic 2.
//
// Expressions built from generators, products, brackets and lower operations
// are reduced to a normal form: a commutative polynomial in atoms, where an
// atom is a Lyndon-basis Lie monomial in the generators (a single generator
// included), optionally under a non-decreasing word of Q_i with i >= 1.
// Brackets are pushed onto atoms with the Leibniz rule, killed by
// Dyer-Lashof vanishing, and rewritten by the adjoint identity when the
// outer operation is Q_{n-1}. Lie monomials are multiplied out in the tensor
// algebra via [a,b] = ab + ba and read back in the Lyndon basis.

#include <map>
#include <memory>
#include <mutex>
#include <string>
#include <vector>

#include "dl/freealg.hpp"
#include "dl/gf2poly.hpp"
#include "dl/opcalc.hpp"

namespace dl {

class BracketExpr {
 public:
  enum class Kind { Gen, One, Zero, Sum, Product, Bracket, Op };

  static BracketExpr gen(std::string name);
  static BracketExpr one();
  static BracketExpr zero();
  static BracketExpr sum(BracketExpr a, BracketExpr b);
  static BracketExpr product(BracketExpr a, BracketExpr b);
  static BracketExpr bracket(BracketExpr a, BracketExpr b);
  /// Q_r applied to a.
  static BracketExpr op(int r, BracketExpr a);

  Kind kind() const { return kind_; }
  const std::string& name() const { return name_; }
  int index() const { return index_; }
  const std::vector<BracketExpr>& args() const { return args_; }

 private:
  Kind kind_ = Kind::Zero;
  std::string name_;
  int index_ = 0;
  std::vector<BracketExpr> args_;
};

std::string to_string(const BracketExpr& e);

enum class BracketIdentity {
  Antisymmetry,
  Self,
  Unit,
  Leibniz,
  Jacobi,
  DlVanishing,
  TopAdditivity,
  TopCartan,
  Adjoint,
};

std::string identity_name(BracketIdentity id);
std::optional<BracketIdentity> identity_from_name(std::string_view name);
/// Number of expression arguments the identity takes.
int identity_arity(BracketIdentity id);

struct BracketReport {
  BracketIdentity identity;
  bool holds = true;
  /// Normal forms of both sides, one pair per instance checked
  /// (dl_vanishing checks every r < n-1).
  std::vector<std::pair<std::string, std::string>> sides;
};

class BracketAlgebra {
 public:
  /// E_n with n >= 1 on symbolic generators. For n = 1 the bracket is the
  /// commutator, which vanishes in this commutative representation.
  BracketAlgebra(int n, GenTable generators);

  int n() const { return n_; }
  const GenTable& generators() const { return gens_; }

  Poly normal_form(const BracketExpr& e) const;
  /// Degree of an expression; nullopt for zero. Throws NonHomogeneous for
  /// sums of different degrees.
  std::optional<int> degree(const BracketExpr& e) const;

  Poly generator(int gen) const;
  Poly bracket(const Poly& a, const Poly& b) const;
  Poly apply_op(int r, const Poly& a) const;
  /// The atom Q_word g for a non-decreasing lower word with indices in [1, n-1].
  Poly letter(const OpWord& word, int gen) const;

  BracketReport check(BracketIdentity id, const std::vector<BracketExpr>& args) const;

  /// p over a table of just its atoms, ordered by degree, then operation
  /// word, then Lie word. Printing through it does not depend on the order
  /// in which atoms were first met.
  std::pair<Poly, GenTable> presentation(const Poly& p) const;
  std::string format(const Poly& p) const;

 private:
  struct Atom {
    OpWord word;            // lower word, indices >= 1, non-decreasing
    std::vector<int> lie;   // Lyndon word in generator ids
    auto operator<=>(const Atom&) const = default;
  };

  int intern(const Atom& a) const;
  Atom atom(int id) const;
  Poly atom_poly(int id, int exp = 1) const;
  Poly bracket_monomials(const Monomial& a, const Monomial& b) const;
  Poly bracket_atoms(int a, int b) const;
  Poly lie_bracket(const std::vector<int>& u, const std::vector<int>& v) const;
  Poly op_on_monomial(int r, const Monomial& m) const;
  Poly op_on_atom(int r, int a) const;
  Monomial without_one(const Monomial& m, int id) const;
  std::string lie_name(const std::vector<int>& w) const;

  int n_;
  GenTable gens_;
  mutable std::mutex mu_;
  mutable GenTable atoms_;
  mutable std::map<Atom, int> atom_ids_;
  mutable std::vector<Atom> atom_list_;
  mutable std::map<std::pair<int, std::vector<int>>, Poly> op_memo_;
};

/// Lyndon words: strictly smaller than every proper rotation.
bool is_lyndon(const std::vector<int>& w);

/// True iff every bracket of two basis monomials of the free E_n algebra on
/// one generator, both of degree <= maxdeg, normalizes to zero.
bool single_gen_bracket_triviality(int n, int maxdeg, int gen_degree = 1);

}  // namespace dl
