#include "dl/models.hpp"

#include <charconv>
#include <regex>

namespace dl {

std::string model_name(ModelName m) {
  switch (m) {
    case ModelName::A: return "A";
    case ModelName::MO: return "MO";
    case ModelName::MU: return "MU";
  }
  return "?";
}

std::optional<ModelName> model_from_name(std::string_view name) {
  if (name == "A") return ModelName::A;
  if (name == "MO") return ModelName::MO;
  if (name == "MU") return ModelName::MU;
  return std::nullopt;
}

namespace {

std::optional<int> suffix_index(std::string_view name, std::string_view prefix) {
  if (name.substr(0, prefix.size()) != prefix) return std::nullopt;
  const auto digits = name.substr(prefix.size());
  int v = 0;
  auto [ptr, ec] = std::from_chars(digits.data(), digits.data() + digits.size(), v);
  if (ec != std::errc{} || ptr != digits.data() + digits.size() || digits.empty()) return std::nullopt;
  return v;
}

}  // namespace

ModelAlgebra::ModelAlgebra(ModelName name, std::optional<int> cap)
    : name_(name), cap_(cap.value_or(name == ModelName::A ? kDefaultCapA : kDefaultCapBordism)) {
  if (cap_ < 1) throw Error(Errc::CapTooSmall, "model cap must be at least 1");
  Poly total = Poly::one();
  switch (name_) {
    case ModelName::A:
      for (int i = 1; (1 << i) - 1 <= cap_; ++i) {
        vars_.add("xi_" + std::to_string(i), (1 << i) - 1);
        xibar_vars_.add("xibar_" + std::to_string(i), (1 << i) - 1);
      }
      break;
    case ModelName::MO:
      for (int i = 1; i <= cap_; ++i) vars_.add("a_" + std::to_string(i), i);
      break;
    case ModelName::MU:
      for (int i = 1; 2 * i <= cap_; ++i) vars_.add("b_" + std::to_string(i), 2 * i);
      break;
  }
  for (int id = 0; id < vars_.size(); ++id) total += Poly::gen(vars_, id);
  inverse_series_ = invert(TruncatedSeries(total, cap_)).body;

  if (name_ == ModelName::A) {
    // Antipode recursion: xibar_n = sum_{i=1}^{n} xi_i^{2^{n-i}} xibar_{n-i}.
    xibar_.push_back(Poly::one());
    for (int n = 1; n <= vars_.size(); ++n) {
      Poly x;
      for (int i = 1; i <= n; ++i) x += Poly::gen(vars_, i - 1, 1 << (n - i)) * xibar_[static_cast<std::size_t>(n - i)];
      xibar_.push_back(std::move(x));
    }
  }
}

ModelAlgebra::ModelAlgebra(const ModelAlgebra& other)
    : name_(other.name_),
      cap_(other.cap_),
      vars_(other.vars_),
      xibar_vars_(other.xibar_vars_),
      xibar_(other.xibar_),
      inverse_series_(other.inverse_series_) {}

void ModelAlgebra::require(ModelName m, const char* what) const {
  const bool ok = m == ModelName::A ? name_ == ModelName::A : name_ != ModelName::A;
  if (!ok) throw Error(Errc::Unsupported, std::string(what) + " is not available in model " + model_name(name_));
}

void ModelAlgebra::check_degree(int degree) const {
  if (degree > cap_) {
    throw Error(Errc::CapTooSmall, "degree " + std::to_string(degree) + " exceeds the model cap " +
                                       std::to_string(cap_));
  }
}

Poly ModelAlgebra::var(int i) const {
  if (i < 1 || i > vars_.size()) {
    throw Error(Errc::CapTooSmall, "generator " + std::to_string(i) + " lies above the model cap");
  }
  return Poly::gen(vars_, i - 1);
}

std::optional<Poly> ModelAlgebra::named(std::string_view name) const {
  if (auto id = vars_.find(name)) return Poly::gen(vars_, *id);
  if (name_ == ModelName::A) {
    if (auto i = suffix_index(name, "xibar_"); i && *i >= 1 && *i <= vars_.size()) return xibar(*i);
  }
  return std::nullopt;
}

const Poly& ModelAlgebra::xibar(int i) const {
  require(ModelName::A, "conjugation");
  if (i < 0 || i >= static_cast<int>(xibar_.size())) {
    throw Error(Errc::CapTooSmall, "xibar_" + std::to_string(i) + " lies above the model cap");
  }
  return xibar_[static_cast<std::size_t>(i)];
}

Poly ModelAlgebra::conjugate(const Poly& p) const {
  require(ModelName::A, "conjugation");
  Poly out;
  for (const auto& m : p.terms()) {
    check_degree(m.degree());
    Poly term = Poly::one();
    const auto& e = m.exponents();
    for (std::size_t id = 0; id < e.size(); ++id) {
      if (e[id] > 0) term = mul(term, pow(xibar_[id + 1], e[id], cap_), cap_);
    }
    out += term;
  }
  return out;
}

Poly ModelAlgebra::to_xibar_coordinates(const Poly& p) const { return conjugate(p); }

Poly ModelAlgebra::series_coefficient(int s) const {
  require(ModelName::A, "the Steinberger series");
  if (s < 0) throw Error(Errc::IndexOutOfRange, "series index must be non-negative");
  check_degree(s + 1);
  return graded_component(inverse_series_, s + 1);
}

Poly ModelAlgebra::steinberger_Q_on_xi1(int s) const {
  if (s < 1) throw Error(Errc::IndexOutOfRange, "Q^s xi_1 is read off the series for s >= 1");
  return series_coefficient(s);
}

Poly ModelAlgebra::Q_on_xibar(int s, int i) const {
  require(ModelName::A, "Q on xibar");
  if (i < 1) throw Error(Errc::IndexOutOfRange, "xibar index must be positive");
  const int d = (1 << i) - 1;
  if (s < d) return {};
  check_degree(s + d);
  const int r = s % (1 << i);
  if (r != 0 && r != d) return {};
  return steinberger_Q_on_xi1(s + d - 1);
}

Poly ModelAlgebra::priddy_Q(int j, int k) const {
  require(ModelName::MO, "the Priddy series");
  const int scale = name_ == ModelName::MU ? 2 : 1;
  if (k < 1) throw Error(Errc::IndexOutOfRange, "generator index must be positive");
  const int target = j + scale * k;
  check_degree(target);
  if (j < scale * k) return {};
  if (j % scale != 0) return {};
  auto v = [&](int i) { return i == 0 ? Poly::one() : Poly::gen(vars_, i - 1); };
  // Numerator terms a_{n+u} a_{k-u} have index sum n + k.
  Poly numerator;
  for (int n = k; scale * (n + k) <= target; ++n) {
    for (int u = 0; u <= k; ++u) {
      if (binom2(n - k + u - 1, u)) numerator += v(n + u) * v(k - u);
    }
  }
  return graded_component(mul(numerator, inverse_series_, target), target);
}

bool ModelAlgebra::leading_term_check(int n, int k) const {
  require(ModelName::MO, "the leading-term check");
  const int scale = name_ == ModelName::MU ? 2 : 1;
  const Poly q = priddy_Q(scale * n, k);
  const bool present = q.contains(Monomial::from(vars_, {{n + k - 1, 1}}));
  return present == binom2(n - 1, k);
}

Poly ModelAlgebra::act_generator(int s, int id) const {
  return name_ == ModelName::A ? Q_on_xibar(s, id + 1) : priddy_Q(s, id + 1);
}

Poly ModelAlgebra::act_monomial(int s, const Monomial& m) const {
  if (m.is_unit()) return s == 0 ? Poly::one() : Poly{};
  if (s < m.degree()) return {};
  check_degree(s + m.degree());
  const auto key = std::make_pair(s, m.exponents());
  {
    std::lock_guard lock(mu_);
    if (auto it = memo_.find(key); it != memo_.end()) return it->second;
  }
  auto e = m.exponents();
  Poly out;
  bool square = true;
  for (int x : e) square = square && x % 2 == 0;
  if (square) {
    if (s % 2 == 0) {
      for (auto& x : e) x /= 2;
      out = frobenius(act_monomial(s / 2, Monomial::from_exponents(vars_, e)));
    }
  } else {
    std::size_t first = 0;
    while (e[first] == 0) ++first;
    --e[first];
    const Monomial rest = Monomial::from_exponents(vars_, e);
    const int gd = vars_[static_cast<int>(first)].degree;
    if (rest.is_unit()) {
      out = act_generator(s, static_cast<int>(first));
    } else {
      for (int p = gd; p <= s - rest.degree(); ++p) {
        const Poly left = act_generator(p, static_cast<int>(first));
        if (!left.is_zero()) out += mul(left, act_monomial(s - p, rest), cap_);
      }
    }
  }
  std::lock_guard lock(mu_);
  memo_.emplace(key, out);
  return out;
}

Poly ModelAlgebra::act(int s, const Poly& p) const {
  const Poly coords = name_ == ModelName::A ? conjugate(p) : p;
  Poly out;
  for (const auto& m : coords.terms()) out += act_monomial(s, m);
  return out;
}

Poly ModelAlgebra::act(const OpWord& w, const Poly& p) const {
  Poly cur = p;
  for (std::size_t k = w.size(); k-- > 0;) {
    const auto& sym = w[k];
    if (sym.kind == OpKind::UpperQ) {
      cur = act(sym.index, cur);
    } else if (sym.kind == OpKind::LowerQ) {
      // Q_i is Q^{|x|+i} on each homogeneous piece.
      std::map<int, Poly> pieces;
      for (const auto& m : cur.terms()) pieces[m.degree()].toggle(m);
      Poly next;
      for (const auto& [d, piece] : pieces) next += act(d + sym.index, piece);
      cur = std::move(next);
    } else {
      throw Error(Errc::Unsupported, "Steenrod operations are not modelled on " + model_name(name_));
    }
  }
  return cur;
}

Poly ModelAlgebra::act(const OpPoly& w, const Poly& p) const {
  Poly out;
  for (const auto& word : w.words()) out += act(word, p);
  return out;
}

SubalgebraSpec::SubalgebraSpec(std::string name, std::vector<int> leading, int tail)
    : name_(std::move(name)), leading_(std::move(leading)), tail_(tail) {}

SubalgebraSpec SubalgebraSpec::k(int n) {
  if (n < 0) throw Error(Errc::IndexOutOfRange, "k(n) needs n >= 0");
  std::vector<int> m(static_cast<std::size_t>(n), 1);
  m.push_back(2);
  return {"k(" + std::to_string(n) + ")", m, 1};
}

SubalgebraSpec SubalgebraSpec::kZ(int n) {
  if (n < 1) throw Error(Errc::IndexOutOfRange, "kZ(n) needs n >= 1");
  // Printed list: xibar_1^2, xibar_2, ..., xibar_n, xibar_{n+1}^2, xibar_{n+2}, ...
  std::vector<int> m{2};
  for (int i = 2; i <= n; ++i) m.push_back(1);
  m.push_back(2);
  return {"kZ(" + std::to_string(n) + ")", m, 1};
}

SubalgebraSpec SubalgebraSpec::bp() { return {"BP", {}, 2}; }

SubalgebraSpec SubalgebraSpec::x2image() { return {"X2image", {2}, 0}; }

SubalgebraSpec SubalgebraSpec::parse(std::string_view text) {
  static const std::regex pattern(R"(^\s*(k|kZ)\((\d+)\)\s*$)");
  const std::string s(text);
  std::smatch match;
  if (std::regex_match(s, match, pattern)) {
    const int n = std::stoi(match[2]);
    return match[1] == "k" ? k(n) : kZ(n);
  }
  if (s == "BP") return bp();
  if (s == "X2image") return x2image();
  throw Error(Errc::SyntaxError, "unknown subalgebra '" + s + "'");
}

int SubalgebraSpec::multiplicity(int i) const {
  if (i >= 1 && i <= static_cast<int>(leading_.size())) return leading_[static_cast<std::size_t>(i - 1)];
  return tail_;
}

std::vector<std::pair<int, int>> SubalgebraSpec::generators(int maxdeg) const {
  std::vector<std::pair<int, int>> out;
  for (int i = 1; (1 << i) - 1 <= maxdeg; ++i) {
    const int m = multiplicity(i);
    if (m > 0 && m * ((1 << i) - 1) <= maxdeg) out.emplace_back(i, m);
  }
  return out;
}

bool SubalgebraSpec::contains_xibar_monomial(const Monomial& m) const {
  const auto& e = m.exponents();
  for (std::size_t id = 0; id < e.size(); ++id) {
    const int mult = multiplicity(static_cast<int>(id) + 1);
    if (mult == 0 ? e[id] != 0 : e[id] % mult != 0) return false;
  }
  return true;
}

bool membership(const ModelAlgebra& A, const SubalgebraSpec& sub, const Poly& p) {
  for (const auto& m : A.to_xibar_coordinates(p).terms()) {
    if (!sub.contains_xibar_monomial(m)) return false;
  }
  return true;
}

namespace {

std::vector<ClosureViolation> closure_impl(const ModelAlgebra& A, const SubalgebraSpec& sub,
                                           const std::vector<OpSym>& ops, bool all_upper, int maxdeg) {
  std::vector<ClosureViolation> out;
  for (const auto& [i, m] : sub.generators(maxdeg)) {
    const Poly g = pow(A.xibar(i), m);
    const int deg = m * ((1 << i) - 1);
    std::vector<OpSym> todo = ops;
    if (all_upper) {
      for (int s = deg; deg + s <= maxdeg; ++s) todo.push_back(upper(s));
    }
    for (const auto& op : todo) {
      int s = op.index;
      if (op.kind == OpKind::LowerQ) s += deg;
      else if (op.kind != OpKind::UpperQ) throw Error(Errc::Unsupported, "closure checks take Q operations only");
      if (deg + s > maxdeg) continue;
      Poly image = A.act(s, g);
      if (!membership(A, sub, image)) out.push_back({i, m, op, std::move(image)});
    }
  }
  return out;
}

}  // namespace

std::vector<ClosureViolation> closure_check(const ModelAlgebra& A, const SubalgebraSpec& sub,
                                            const std::vector<OpSym>& ops, int maxdeg) {
  return closure_impl(A, sub, ops, false, maxdeg);
}

std::vector<ClosureViolation> closure_check_all_upper(const ModelAlgebra& A, const SubalgebraSpec& sub,
                                                      int maxdeg) {
  return closure_impl(A, sub, {}, true, maxdeg);
}

std::vector<GrowthStep> xn_growth(const ModelAlgebra& A, int maxdeg) {
  if (maxdeg < 2) throw Error(Errc::IndexOutOfRange, "the chain starts in degree 2");
  std::vector<GrowthStep> chain;
  Poly x = pow(A.var(1), 2);
  int deg = 2;
  for (int i = 1;; ++i) {
    const SubalgebraSpec earlier("F2[xibar_1^2..xibar_" + std::to_string(i - 1) + "^2]",
                                 std::vector<int>(static_cast<std::size_t>(i - 1), 2), 0);
    chain.push_back({x, deg, !membership(A, earlier, x), x == frobenius(A.xibar(i))});
    if (2 * deg + 2 > maxdeg) break;
    x = A.act(deg + 2, x);
    deg = 2 * deg + 2;
  }
  return chain;
}

ObstructionReport bp_splitting_obstruction(int cap) {
  if (cap < 10) throw Error(Errc::CapTooSmall, "the obstruction lives in degree 10");
  const ModelAlgebra MU(ModelName::MU, cap);
  const ModelAlgebra A(ModelName::A, cap);
  ObstructionReport r;
  const Poly b1 = MU.var(1);
  r.z = MU.act(8, b1) + pow(b1, 2) * MU.act(4, b1);
  r.q6b2 = MU.act(6, MU.var(2));
  const Poly x = pow(A.var(1), 2);
  r.image = A.act(8, x) + pow(A.var(1), 4) * A.act(4, x);
  r.z_equals_q6b2 = r.z == r.q6b2;
  r.nonzero_source = !r.z.is_zero();
  r.zero_image = r.image.is_zero();
  return r;
}

bool cup_one_int(long long n) { return binom2(n, 2); }

}  // namespace dl
