#pragma once

// Sparse polynomials and truncated power series over GF(2) in graded generators.
//
// A Poly is a set of monomials: inserting a monomial that is already present
// removes it. Monomials carry their own degree and weight so that products can
// be formed without consulting the generator table.

#include <compare>
#include <cstdint>
#include <initializer_list>
#include <optional>
#include <set>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "dl/error.hpp"

namespace dl {

struct GenSym {
  int id = 0;
  std::string name;
  int degree = 0;
  int weight = 1;
};

/// Declaration-ordered table of generators. Ids are dense and start at 0.
class GenTable {
 public:
  int add(std::string name, int degree, int weight = 1);

  const GenSym& operator[](int id) const { return gens_.at(static_cast<std::size_t>(id)); }
  std::optional<int> find(std::string_view name) const;
  int size() const { return static_cast<int>(gens_.size()); }
  const std::vector<GenSym>& all() const { return gens_; }

 private:
  std::vector<GenSym> gens_;
};

class Monomial {
 public:
  Monomial() = default;

  /// Builds a monomial from (generator id, exponent) pairs; repeated ids accumulate.
  static Monomial from(const GenTable& table, std::initializer_list<std::pair<int, int>> factors);
  static Monomial from_exponents(const GenTable& table, std::vector<int> exps);

  int degree() const { return degree_; }
  int weight() const { return weight_; }
  bool is_unit() const { return exps_.empty(); }

  /// Exponent of generator `id` (0 when absent).
  int exponent(int id) const {
    return id < static_cast<int>(exps_.size()) ? exps_[static_cast<std::size_t>(id)] : 0;
  }
  const std::vector<int>& exponents() const { return exps_; }
  /// Number of generators appearing, counted with multiplicity.
  int length() const;

  Monomial operator*(const Monomial& other) const;
  Monomial squared() const;

  bool operator==(const Monomial& other) const = default;

 private:
  void trim();

  std::vector<int> exps_;
  int degree_ = 0;
  int weight_ = 0;
};

/// Canonical term order: ascending degree; within a degree, the monomial with
/// the larger exponent at the highest differing generator id comes first.
struct MonomialOrder {
  bool operator()(const Monomial& a, const Monomial& b) const;
};

class Poly {
 public:
  using Terms = std::set<Monomial, MonomialOrder>;

  Poly() = default;
  explicit Poly(Monomial m) { terms_.insert(std::move(m)); }

  static Poly zero() { return {}; }
  static Poly one() { return Poly(Monomial{}); }
  static Poly gen(const GenTable& table, int id, int exp = 1);

  bool is_zero() const { return terms_.empty(); }
  bool is_one() const { return terms_.size() == 1 && terms_.begin()->is_unit(); }
  std::size_t size() const { return terms_.size(); }
  const Terms& terms() const& { return terms_; }
  Terms terms() && { return std::move(terms_); }
  bool contains(const Monomial& m) const { return terms_.count(m) != 0; }

  /// Adds one copy of m (removing it if already present).
  void toggle(const Monomial& m);

  Poly& operator+=(const Poly& other);
  friend Poly operator+(Poly a, const Poly& b) { return a += b; }
  friend Poly operator*(const Poly& a, const Poly& b) { return mul(a, b); }

  bool operator==(const Poly& other) const { return terms_ == other.terms_; }

  /// GF(2) product; terms of degree above `cap` are dropped when a cap is given.
  static Poly mul(const Poly& a, const Poly& b, std::optional<int> cap = std::nullopt);

  /// Whether every term has the same degree (the zero poly counts as homogeneous).
  bool homogeneous() const;
  std::optional<int> max_degree() const;
  std::optional<int> min_degree() const;

 private:
  Terms terms_;
};

Poly add(const Poly& p, const Poly& q);
Poly mul(const Poly& p, const Poly& q, std::optional<int> cap = std::nullopt);
Poly pow(const Poly& p, int k, std::optional<int> cap = std::nullopt);
Poly graded_component(const Poly& p, int d);
Poly truncate(const Poly& p, int cap);
/// p^2, obtained by doubling every exponent.
Poly frobenius(const Poly& p);

/// Binomial coefficient mod 2 with the polynomial convention for negative tops.
bool binom2(long long a, long long b);

struct TruncatedSeries {
  Poly body;
  int cap = 0;

  TruncatedSeries() = default;
  TruncatedSeries(Poly p, int c) : body(truncate(p, c)), cap(c) {}

  friend TruncatedSeries operator*(const TruncatedSeries& a, const TruncatedSeries& b);
};

/// Multiplicative inverse up to the cap, degree by degree.
TruncatedSeries invert(const TruncatedSeries& s);

std::string to_string(const Monomial& m, const GenTable& table);
std::string to_string(const Poly& p, const GenTable& table);

}  // namespace dl
