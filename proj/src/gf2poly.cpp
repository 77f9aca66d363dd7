#include "dl/gf2poly.hpp"

#include <algorithm>
#include <map>

namespace dl {

int GenTable::add(std::string name, int degree, int weight) {
  if (degree < 0 || weight < 1) {
    throw Error(Errc::Unsupported, "generator '" + name + "' needs degree >= 0 and weight >= 1");
  }
  if (find(name)) {
    throw Error(Errc::Unsupported, "generator '" + name + "' declared twice");
  }
  const int id = size();
  gens_.push_back(GenSym{id, std::move(name), degree, weight});
  return id;
}

std::optional<int> GenTable::find(std::string_view name) const {
  for (const auto& g : gens_) {
    if (g.name == name) return g.id;
  }
  return std::nullopt;
}

Monomial Monomial::from(const GenTable& table, std::initializer_list<std::pair<int, int>> factors) {
  std::vector<int> exps;
  for (const auto& [id, e] : factors) {
    if (id >= static_cast<int>(exps.size())) exps.resize(static_cast<std::size_t>(id) + 1, 0);
    exps[static_cast<std::size_t>(id)] += e;
  }
  return from_exponents(table, std::move(exps));
}

Monomial Monomial::from_exponents(const GenTable& table, std::vector<int> exps) {
  Monomial m;
  m.exps_ = std::move(exps);
  for (std::size_t i = 0; i < m.exps_.size(); ++i) {
    const int e = m.exps_[i];
    if (e < 0) throw Error(Errc::Unsupported, "negative exponent");
    if (e == 0) continue;
    const auto& g = table[static_cast<int>(i)];
    m.degree_ += e * g.degree;
    m.weight_ += e * g.weight;
  }
  m.trim();
  return m;
}

int Monomial::length() const {
  int n = 0;
  for (int e : exps_) n += e;
  return n;
}

void Monomial::trim() {
  while (!exps_.empty() && exps_.back() == 0) exps_.pop_back();
}

Monomial Monomial::operator*(const Monomial& other) const {
  Monomial r;
  r.exps_.assign(std::max(exps_.size(), other.exps_.size()), 0);
  for (std::size_t i = 0; i < exps_.size(); ++i) r.exps_[i] += exps_[i];
  for (std::size_t i = 0; i < other.exps_.size(); ++i) r.exps_[i] += other.exps_[i];
  r.degree_ = degree_ + other.degree_;
  r.weight_ = weight_ + other.weight_;
  return r;
}

Monomial Monomial::squared() const { return *this * *this; }

bool MonomialOrder::operator()(const Monomial& a, const Monomial& b) const {
  if (a.degree() != b.degree()) return a.degree() < b.degree();
  const auto& ea = a.exponents();
  const auto& eb = b.exponents();
  for (std::size_t i = std::max(ea.size(), eb.size()); i-- > 0;) {
    const int x = i < ea.size() ? ea[i] : 0;
    const int y = i < eb.size() ? eb[i] : 0;
    if (x != y) return x > y;
  }
  return false;
}

Poly Poly::gen(const GenTable& table, int id, int exp) {
  return Poly(Monomial::from(table, {{id, exp}}));
}

void Poly::toggle(const Monomial& m) {
  auto [it, inserted] = terms_.insert(m);
  if (!inserted) terms_.erase(it);
}

Poly& Poly::operator+=(const Poly& other) {
  for (const auto& m : other.terms_) toggle(m);
  return *this;
}

Poly Poly::mul(const Poly& a, const Poly& b, std::optional<int> cap) {
  Poly r;
  for (const auto& x : a.terms_) {
    for (const auto& y : b.terms_) {
      if (cap && x.degree() + y.degree() > *cap) continue;
      r.toggle(x * y);
    }
  }
  return r;
}

bool Poly::homogeneous() const {
  return terms_.empty() || terms_.begin()->degree() == terms_.rbegin()->degree();
}

std::optional<int> Poly::max_degree() const {
  if (terms_.empty()) return std::nullopt;
  return terms_.rbegin()->degree();
}

std::optional<int> Poly::min_degree() const {
  if (terms_.empty()) return std::nullopt;
  return terms_.begin()->degree();
}

Poly add(const Poly& p, const Poly& q) { return p + q; }

Poly mul(const Poly& p, const Poly& q, std::optional<int> cap) { return Poly::mul(p, q, cap); }

Poly pow(const Poly& p, int k, std::optional<int> cap) {
  Poly result = Poly::one();
  Poly base = p;
  while (k > 0) {
    if (k & 1) result = mul(result, base, cap);
    k >>= 1;
    if (k > 0) base = mul(base, base, cap);
  }
  return result;
}

Poly graded_component(const Poly& p, int d) {
  Poly r;
  for (const auto& m : p.terms()) {
    if (m.degree() == d) r.toggle(m);
  }
  return r;
}

Poly truncate(const Poly& p, int cap) {
  Poly r;
  for (const auto& m : p.terms()) {
    if (m.degree() <= cap) r.toggle(m);
  }
  return r;
}

Poly frobenius(const Poly& p) {
  Poly r;
  // Squaring is injective on monomials, so no cancellation can occur.
  for (const auto& m : p.terms()) r.toggle(m.squared());
  return r;
}

bool binom2(long long a, long long b) {
  if (b < 0) return false;
  if (a < 0) a = b - a - 1;
  if (b > a) return false;
  return (b & (a - b)) == 0;
}

TruncatedSeries operator*(const TruncatedSeries& a, const TruncatedSeries& b) {
  const int cap = std::min(a.cap, b.cap);
  return TruncatedSeries(mul(a.body, b.body, cap), cap);
}

TruncatedSeries invert(const TruncatedSeries& s) {
  if (graded_component(s.body, 0) != Poly::one()) {
    throw Error(Errc::NoConstantTerm, "series must have constant term 1");
  }
  std::vector<Poly> parts(static_cast<std::size_t>(s.cap) + 1);
  for (int d = 1; d <= s.cap; ++d) parts[static_cast<std::size_t>(d)] = graded_component(s.body, d);

  std::vector<Poly> inv(static_cast<std::size_t>(s.cap) + 1);
  inv[0] = Poly::one();
  for (int d = 1; d <= s.cap; ++d) {
    Poly t;
    for (int k = 1; k <= d; ++k) {
      const auto& sk = parts[static_cast<std::size_t>(k)];
      if (sk.is_zero()) continue;
      t += mul(sk, inv[static_cast<std::size_t>(d - k)]);
    }
    inv[static_cast<std::size_t>(d)] = std::move(t);
  }
  Poly body;
  for (const auto& p : inv) body += p;
  return TruncatedSeries(std::move(body), s.cap);
}

std::string to_string(const Monomial& m, const GenTable& table) {
  if (m.is_unit()) return "1";
  std::string out;
  const auto& e = m.exponents();
  for (std::size_t i = 0; i < e.size(); ++i) {
    if (e[i] == 0) continue;
    if (!out.empty()) out += ' ';
    const auto& name = table[static_cast<int>(i)].name;
    // Composite class names such as "Q^2 x" need parentheses before a power.
    const bool compound = name.find(' ') != std::string::npos;
    if (e[i] > 1 && compound) {
      out += '(' + name + ")^" + std::to_string(e[i]);
    } else {
      out += name;
      if (e[i] > 1) out += '^' + std::to_string(e[i]);
    }
  }
  return out;
}

std::string to_string(const Poly& p, const GenTable& table) {
  if (p.is_zero()) return "0";
  std::string out;
  for (const auto& m : p.terms()) {
    if (!out.empty()) out += " + ";
    out += to_string(m, table);
  }
  return out;
}

}  // namespace dl
