#pragma once

// Evaluation of parsed expressions in a model algebra, a free E_infinity
// algebra or the bracket calculus of a free E_n algebra.

#include <memory>
#include <optional>
#include <string>

#include "dl/bracket.hpp"
#include "dl/freealg.hpp"
#include "dl/models.hpp"
#include "dl/nishida.hpp"
#include "dl/parse.hpp"

namespace dl {

class EvalContext {
 public:
  virtual ~EvalContext() = default;

  /// Throws UnknownGenerator for undeclared names.
  virtual Poly variable(const std::string& name, std::size_t pos) const = 0;
  virtual Poly apply(const OpSym& op, const Poly& p) const = 0;
  virtual Poly multiply(const Poly& a, const Poly& b) const { return mul(a, b); }
  virtual Poly bracket(const Poly& a, const Poly& b) const = 0;
  /// p written over a table of named variables, ready for printing.
  virtual std::pair<Poly, GenTable> presentation(const Poly& p) const = 0;

  std::string format(const Poly& p) const {
    const auto [q, table] = presentation(p);
    return to_string(q, table);
  }
};

class ModelContext : public EvalContext {
 public:
  explicit ModelContext(ModelAlgebra alg) : alg_(std::move(alg)) {}
  const ModelAlgebra& algebra() const { return alg_; }

  Poly variable(const std::string& name, std::size_t pos) const override;
  Poly apply(const OpSym& op, const Poly& p) const override;
  /// Brackets vanish in an E_infinity algebra.
  Poly bracket(const Poly&, const Poly&) const override { return {}; }
  std::pair<Poly, GenTable> presentation(const Poly& p) const override { return {p, alg_.variables()}; }

 private:
  ModelAlgebra alg_;
};

class FreeEinfContext : public EvalContext {
 public:
  FreeEinfContext(GenTable gens, int cap);
  const FreeAlgebra& algebra() const { return *alg_; }

  Poly variable(const std::string& name, std::size_t pos) const override;
  Poly apply(const OpSym& op, const Poly& p) const override;
  Poly multiply(const Poly& a, const Poly& b) const override { return alg_->multiply(a, b); }
  Poly bracket(const Poly&, const Poly&) const override { return {}; }
  std::pair<Poly, GenTable> presentation(const Poly& p) const override { return {p, alg_->class_table()}; }

 private:
  std::unique_ptr<FreeAlgebra> alg_;
  std::unique_ptr<SteenrodAction> steenrod_;
};

class BracketContext : public EvalContext {
 public:
  BracketContext(int n, GenTable gens) : alg_(n, std::move(gens)) {}
  const BracketAlgebra& algebra() const { return alg_; }

  Poly variable(const std::string& name, std::size_t pos) const override;
  /// Upper operations are translated per homogeneous degree: Q^s = Q_{s-|x|}.
  Poly apply(const OpSym& op, const Poly& p) const override;
  Poly bracket(const Poly& a, const Poly& b) const override { return alg_.bracket(a, b); }
  std::pair<Poly, GenTable> presentation(const Poly& p) const override { return alg_.presentation(p); }

 private:
  BracketAlgebra alg_;
};

Poly evaluate(const Expr& e, const EvalContext& ctx);

/// Sq_1 on an integer literal, as the coefficient of eta.
std::optional<bool> cup_one_literal(const Expr& e);

}  // namespace dl
