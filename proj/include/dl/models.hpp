#pragma once

// Presented algebras with Dyer-Lashof actions: the dual Steenrod algebra A_*
// (rule-based, in conjugate coordinates), and H_*MO, H_*MU (series-based).
// Also the exponent-pattern subalgebras of A_* and the nonexistence checks
// built on them.

#include <map>
#include <mutex>
#include <optional>
#include <string>
#include <vector>

#include "dl/gf2poly.hpp"
#include "dl/opcalc.hpp"

namespace dl {

enum class ModelName { A, MO, MU };

std::string model_name(ModelName m);
std::optional<ModelName> model_from_name(std::string_view name);

class ModelAlgebra {
 public:
  static constexpr int kDefaultCapA = 31;
  static constexpr int kDefaultCapBordism = 24;

  explicit ModelAlgebra(ModelName name, std::optional<int> cap = std::nullopt);

  ModelAlgebra(const ModelAlgebra& other);

  ModelName name() const { return name_; }
  int cap() const { return cap_; }
  /// xi_i (A), a_i (MO) or b_i (MU) in the table order, i >= 1.
  const GenTable& variables() const { return vars_; }
  Poly var(int i) const;
  /// Looks up xi_i / a_i / b_i, and for A also xibar_i.
  std::optional<Poly> named(std::string_view name) const;

  /// Q^s on p, extended over sums and products by additivity and Cartan.
  Poly act(int s, const Poly& p) const;
  /// Applies an upper word right to left.
  Poly act(const OpWord& w, const Poly& p) const;
  Poly act(const OpPoly& w, const Poly& p) const;

  std::string format(const Poly& p) const { return to_string(p, vars_); }

  // A_* only.
  /// The antipode, applied multiplicatively and truncated at the cap.
  Poly conjugate(const Poly& p) const;
  /// xibar_i written in xi coordinates.
  const Poly& xibar(int i) const;
  /// Degree-(s+1) part of (1 + xi_1 + xi_2 + ...)^{-1}; s >= 0.
  Poly series_coefficient(int s) const;
  /// Q^s xi_1 for s >= 1, read off the inverse series.
  Poly steinberger_Q_on_xi1(int s) const;
  Poly Q_on_xibar(int s, int i) const;
  /// p written as a polynomial in the xibar variables (same exponent vectors).
  Poly to_xibar_coordinates(const Poly& p) const;
  const GenTable& xibar_variables() const { return xibar_vars_; }

  // MO / MU only.
  /// Q^j on the k-th generator via the formal series identity.
  Poly priddy_Q(int j, int k) const;
  /// Coefficient of the indecomposable in Q^n a_k (MO) or Q^{2n} b_k (MU)
  /// against binom(n-1, k).
  bool leading_term_check(int n, int k) const;

 private:
  void require(ModelName m, const char* what) const;
  void check_degree(int degree) const;
  Poly act_monomial(int s, const Monomial& m) const;
  Poly act_generator(int s, int id) const;

  ModelName name_;
  int cap_;
  GenTable vars_;
  GenTable xibar_vars_;
  std::vector<Poly> xibar_;    // index i, in xi coordinates
  Poly inverse_series_;        // (1 + xi_1 + ...)^{-1} or (sum a_n)^{-1}

  mutable std::mutex mu_;
  mutable std::map<std::pair<int, std::vector<int>>, Poly> memo_;
};

/// Per-variable exponent rule in xibar coordinates: exponents of xibar_i must
/// be multiples of m_i; m_i = 0 forbids the variable.
class SubalgebraSpec {
 public:
  SubalgebraSpec(std::string name, std::vector<int> leading, int tail);

  static SubalgebraSpec k(int n);
  static SubalgebraSpec kZ(int n);
  static SubalgebraSpec bp();
  static SubalgebraSpec x2image();
  /// Parses "k(2)", "kZ(1)", "BP", "X2image".
  static SubalgebraSpec parse(std::string_view text);

  const std::string& name() const { return name_; }
  int multiplicity(int i) const;
  /// Polynomial generators xibar_i^{m_i} of degree <= maxdeg, as (i, m_i).
  std::vector<std::pair<int, int>> generators(int maxdeg) const;
  bool contains_xibar_monomial(const Monomial& m) const;

 private:
  std::string name_;
  std::vector<int> leading_;
  int tail_;
};

bool membership(const ModelAlgebra& A, const SubalgebraSpec& sub, const Poly& p);

struct ClosureViolation {
  int xibar_index = 0;
  int exponent = 1;
  OpSym op;
  Poly image;  // xi coordinates
};

/// Applies each op (upper Q^s or lower Q_i) to each subalgebra generator whose
/// image lies in degree <= maxdeg, and reports images outside the subalgebra.
std::vector<ClosureViolation> closure_check(const ModelAlgebra& A, const SubalgebraSpec& sub,
                                            const std::vector<OpSym>& ops, int maxdeg);
/// Same with every Q^s whose image lies in degree <= maxdeg.
std::vector<ClosureViolation> closure_check_all_upper(const ModelAlgebra& A, const SubalgebraSpec& sub,
                                                      int maxdeg);

struct GrowthStep {
  Poly element;      // xi coordinates
  int degree = 0;
  bool escapes = false;      // not in the subalgebra generated by the earlier steps
  bool matches_rule = false; // equals xibar_i^2 computed from the conjugation table
};

/// Iterates Q_2 from xi_1^2 while the degree stays <= maxdeg.
std::vector<GrowthStep> xn_growth(const ModelAlgebra& A, int maxdeg);

struct ObstructionReport {
  Poly z;             // Q^8 b_1 + b_1^2 Q^4 b_1 in H_*MU
  Poly q6b2;          // Q^6 b_2
  Poly image;         // Q^8(xi_1^2) + xi_1^4 Q^4(xi_1^2) in A_*
  bool z_equals_q6b2 = false;
  bool nonzero_source = false;
  bool zero_image = false;
  int threshold = 7;  // operations up to Q_6 are used, so E_7 structure suffices
  bool obstructed() const { return z_equals_q6b2 && nonzero_source && zero_image; }
};

ObstructionReport bp_splitting_obstruction(int cap);

/// Coefficient of eta in Sq_1(n) for n in Z: binom(n, 2) mod 2.
bool cup_one_int(long long n);

}  // namespace dl
