#pragma once

// Operation words and their Adem normal forms.
//
// Words are written outermost first: the word {Q^a, Q^b} denotes the composite
// Q^a Q^b, so the last symbol acts first.

#include <compare>
#include <optional>
#include <set>
#include <span>
#include <string>
#include <vector>

#include "dl/error.hpp"

namespace dl {

enum class OpKind { UpperQ, LowerQ, SteenrodP };

struct OpSym {
  OpKind kind = OpKind::UpperQ;
  int index = 0;

  auto operator<=>(const OpSym&) const = default;
};

inline OpSym upper(int s) { return {OpKind::UpperQ, s}; }
inline OpSym lower(int i) { return {OpKind::LowerQ, i}; }
inline OpSym steenrod(int d) { return {OpKind::SteenrodP, d}; }

using OpWord = std::vector<OpSym>;

OpWord upper_word(std::span<const int> indices);
OpWord upper_word(std::initializer_list<int> indices);
OpWord lower_word(std::initializer_list<int> indices);
std::vector<int> indices_of(const OpWord& w);

/// GF(2) combination of words.
class OpPoly {
 public:
  using Words = std::set<OpWord>;

  OpPoly() = default;
  explicit OpPoly(OpWord w) { words_.insert(std::move(w)); }

  void toggle(const OpWord& w);
  OpPoly& operator+=(const OpPoly& other);
  friend OpPoly operator+(OpPoly a, const OpPoly& b) { return a += b; }
  bool operator==(const OpPoly&) const = default;

  bool is_zero() const { return words_.empty(); }
  std::size_t size() const { return words_.size(); }
  const Words& words() const& { return words_; }
  Words words() && { return std::move(words_); }
  bool contains(const OpWord& w) const { return words_.count(w) != 0; }

 private:
  Words words_;
};

bool is_admissible_upper(std::span<const int> j);
int excess(std::span<const int> j);

/// Q^r Q^s for r > 2s as a sum of admissible composites.
OpPoly adem_expand_upper(int r, int s);

enum class RewriteStrategy { LeftmostFirst, RightmostFirst };

/// Admissible form of a word of upper operations, rewriting one inadmissible
/// adjacent pair at a time. Results for the default strategy are memoized.
OpPoly normalize_upper(const OpWord& w, RewriteStrategy strategy = RewriteStrategy::LeftmostFirst);
OpPoly normalize_upper(const OpPoly& p, RewriteStrategy strategy = RewriteStrategy::LeftmostFirst);

/// Q_r Q_s for r > s >= 0; output words are non-decreasing in index.
OpPoly adem_expand_lower(int r, int s);

/// Lower-admissible (non-decreasing) form of a word of lower operations.
OpPoly normalize_lower(const OpWord& w);

struct UpperTrace {
  OpWord word;
  int final_degree = 0;
};

/// Rewrites Q_i on a class of degree m as Q^{m+i}, threading m -> 2m+i right to left.
UpperTrace to_upper(const OpWord& lower_w, int base_degree);
/// Inverse of to_upper; throws UnstableWord when a lower index would be negative.
OpWord to_lower(const OpWord& upper_w, int base_degree);
/// Drops the words that vanish on a class of the given degree by instability.
OpPoly drop_unstable(const OpPoly& upper_p, int base_degree);

/// `times`-fold suspension of lower-indexed words: Q_0 dies, Q_r becomes Q_{r-1}.
OpPoly suspend(const OpPoly& p, int times);

struct Weight2Row {
  int index = 0;          // lower index i (finite n) or upper index r (n infinite)
  int target_degree = 0;  // 2m+i, resp. m+r
  /// images[k-1] = lower index of sigma^k applied to the row operation, nullopt when 0.
  std::vector<std::optional<int>> images;
};

struct Weight2Table {
  int m = 0;
  std::optional<int> n;  // nullopt means E_infinity
  bool stable = false;   // suspension acts as the identity on every row
  std::vector<Weight2Row> rows;
};

/// Weight-2 operations on degree m for E_n algebras. For n infinite the first
/// `stable_rows` upper operations Q^m, Q^{m+1}, ... are listed.
Weight2Table weight2_table(int m, std::optional<int> n, int stable_rows = 8);

std::string to_string(const OpSym& s);
std::string to_string(const OpWord& w);
std::string to_string(const OpPoly& p);

}  // namespace dl
