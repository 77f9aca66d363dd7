#include "dl/eval.hpp"

#include <map>

namespace dl {

namespace {

[[noreturn]] void unknown(const std::string& name, std::size_t pos) {
  throw Error(Errc::UnknownGenerator, "at position " + std::to_string(pos) + ": '" + name + "' is not declared");
}

std::map<int, Poly> by_degree(const Poly& p) {
  std::map<int, Poly> pieces;
  for (const auto& m : p.terms()) pieces[m.degree()].toggle(m);
  return pieces;
}

}  // namespace

Poly ModelContext::variable(const std::string& name, std::size_t pos) const {
  if (auto v = alg_.named(name)) return *v;
  unknown(name, pos);
}

Poly ModelContext::apply(const OpSym& op, const Poly& p) const { return alg_.act(OpWord{op}, p); }

FreeEinfContext::FreeEinfContext(GenTable gens, int cap)
    : alg_(std::make_unique<FreeAlgebra>(FreeAlgebra::einf(std::move(gens), cap))),
      steenrod_(std::make_unique<SteenrodAction>(*alg_)) {}

Poly FreeEinfContext::variable(const std::string& name, std::size_t pos) const {
  if (auto id = alg_->generators().find(name)) return alg_->generator(*id);
  unknown(name, pos);
}

Poly FreeEinfContext::apply(const OpSym& op, const Poly& p) const {
  switch (op.kind) {
    case OpKind::UpperQ:
      return alg_->apply_op(op, p);
    case OpKind::LowerQ: {
      Poly out;
      for (const auto& [d, piece] : by_degree(p)) out += alg_->apply_op(upper(d + op.index), piece);
      return out;
    }
    case OpKind::SteenrodP:
      return steenrod_->apply(op.index, p);
  }
  return {};
}

Poly BracketContext::variable(const std::string& name, std::size_t pos) const {
  if (auto id = alg_.generators().find(name)) return alg_.generator(*id);
  unknown(name, pos);
}

Poly BracketContext::apply(const OpSym& op, const Poly& p) const {
  switch (op.kind) {
    case OpKind::LowerQ:
      return alg_.apply_op(op.index, p);
    case OpKind::UpperQ: {
      Poly out;
      for (const auto& [d, piece] : by_degree(p)) {
        if (op.index >= d) out += alg_.apply_op(op.index - d, piece);
      }
      return out;
    }
    case OpKind::SteenrodP:
      throw Error(Errc::Unsupported, "Steenrod operations are only modelled on free E_infinity algebras");
  }
  return {};
}

Poly evaluate(const Expr& e, const EvalContext& ctx) {
  switch (e.kind) {
    case Expr::Kind::Gen:
      return ctx.variable(e.name, e.pos);
    case Expr::Kind::Int:
      return e.value % 2 != 0 ? Poly::one() : Poly{};
    case Expr::Kind::Sum: {
      Poly out;
      for (const auto& a : e.args) out += evaluate(a, ctx);
      return out;
    }
    case Expr::Kind::Product: {
      Poly out = evaluate(e.args.front(), ctx);
      for (std::size_t k = 1; k < e.args.size(); ++k) out = ctx.multiply(out, evaluate(e.args[k], ctx));
      return out;
    }
    case Expr::Kind::Power: {
      Poly base = evaluate(e.args.front(), ctx);
      Poly out = Poly::one();
      for (long long k = e.value; k > 0; k >>= 1) {
        if (k & 1) out = ctx.multiply(out, base);
        if (k > 1) base = ctx.multiply(base, base);
      }
      return out;
    }
    case Expr::Kind::Bracket:
      return ctx.bracket(evaluate(e.args[0], ctx), evaluate(e.args[1], ctx));
    case Expr::Kind::Apply: {
      Poly cur = evaluate(e.args.front(), ctx);
      for (std::size_t k = e.word.size(); k-- > 0;) cur = ctx.apply(e.word[k], cur);
      return cur;
    }
    case Expr::Kind::Word:
      throw Error(Errc::SyntaxError,
                  "at position " + std::to_string(e.pos) + ": operator word " + to_string(e.word) + " has no operand");
    case Expr::Kind::CupOne:
      throw Error(Errc::Unsupported, "at position " + std::to_string(e.pos) + ": Sq_1 is evaluated on integer literals only");
  }
  return {};
}

std::optional<bool> cup_one_literal(const Expr& e) {
  if (e.kind != Expr::Kind::CupOne || e.args.front().kind != Expr::Kind::Int) return std::nullopt;
  return cup_one_int(e.args.front().value);
}

}  // namespace dl
