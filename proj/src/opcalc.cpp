#include "dl/opcalc.hpp"

#include <map>
#include <mutex>

#include "dl/gf2poly.hpp"

namespace dl {

OpWord upper_word(std::span<const int> indices) {
  OpWord w;
  w.reserve(indices.size());
  for (int s : indices) w.push_back(upper(s));
  return w;
}

OpWord upper_word(std::initializer_list<int> indices) {
  return upper_word(std::span<const int>(indices.begin(), indices.size()));
}

OpWord lower_word(std::initializer_list<int> indices) {
  OpWord w;
  for (int i : indices) w.push_back(lower(i));
  return w;
}

std::vector<int> indices_of(const OpWord& w) {
  std::vector<int> out;
  out.reserve(w.size());
  for (const auto& s : w) out.push_back(s.index);
  return out;
}

void OpPoly::toggle(const OpWord& w) {
  auto [it, inserted] = words_.insert(w);
  if (!inserted) words_.erase(it);
}

OpPoly& OpPoly::operator+=(const OpPoly& other) {
  for (const auto& w : other.words_) toggle(w);
  return *this;
}

bool is_admissible_upper(std::span<const int> j) {
  for (std::size_t k = 0; k + 1 < j.size(); ++k) {
    if (j[k] > 2 * j[k + 1]) return false;
  }
  return true;
}

int excess(std::span<const int> j) {
  if (j.empty()) throw Error(Errc::EmptyWord, "excess of the empty word");
  int e = j[0];
  for (std::size_t k = 1; k < j.size(); ++k) e -= j[k];
  return e;
}

OpPoly adem_expand_upper(int r, int s) {
  if (r <= 2 * s) {
    throw Error(Errc::NotInadmissible,
                "Q^" + std::to_string(r) + " Q^" + std::to_string(s) + " is already admissible");
  }
  // binom(i-s-1, 2i-r) vanishes unless ceil(r/2) <= i <= r-s-1.
  OpPoly out;
  const int lo = r >= 0 ? (r + 1) / 2 : r / 2;
  for (int i = lo; i <= r - s - 1; ++i) {
    if (binom2(i - s - 1, 2 * i - r)) out.toggle({upper(s + r - i), upper(i)});
  }
  return out;
}

namespace {

void require_kind(const OpWord& w, OpKind kind, const char* what) {
  for (const auto& sym : w) {
    if (sym.kind != kind) throw Error(Errc::Unsupported, std::string(what) + ": " + to_string(w));
  }
}

std::optional<std::size_t> find_inadmissible_upper(const OpWord& w, RewriteStrategy strategy) {
  if (w.size() < 2) return std::nullopt;
  if (strategy == RewriteStrategy::LeftmostFirst) {
    for (std::size_t k = 0; k + 1 < w.size(); ++k) {
      if (w[k].index > 2 * w[k + 1].index) return k;
    }
  } else {
    for (std::size_t k = w.size() - 1; k-- > 0;) {
      if (w[k].index > 2 * w[k + 1].index) return k;
    }
  }
  return std::nullopt;
}

OpWord splice(const OpWord& w, std::size_t at, const OpWord& pair) {
  OpWord out(w.begin(), w.begin() + static_cast<std::ptrdiff_t>(at));
  out.insert(out.end(), pair.begin(), pair.end());
  out.insert(out.end(), w.begin() + static_cast<std::ptrdiff_t>(at) + 2, w.end());
  return out;
}

/// Write-once memo table shared by the normalizers.
class NormalFormCache {
 public:
  std::optional<OpPoly> get(const OpWord& w) const {
    std::lock_guard lock(mu_);
    auto it = table_.find(w);
    if (it == table_.end()) return std::nullopt;
    return it->second;
  }
  void put(const OpWord& w, const OpPoly& p) {
    std::lock_guard lock(mu_);
    table_.emplace(w, p);
  }

 private:
  mutable std::mutex mu_;
  std::map<OpWord, OpPoly> table_;
};

NormalFormCache& upper_cache() {
  static NormalFormCache cache;
  return cache;
}

NormalFormCache& lower_cache() {
  static NormalFormCache cache;
  return cache;
}

OpPoly normalize_upper_impl(const OpWord& w, RewriteStrategy strategy) {
  const bool memo = strategy == RewriteStrategy::LeftmostFirst;
  if (memo) {
    if (auto hit = upper_cache().get(w)) return *hit;
  }
  OpPoly result;
  if (auto at = find_inadmissible_upper(w, strategy)) {
    const OpPoly expansion = adem_expand_upper(w[*at].index, w[*at + 1].index);
    for (const auto& pair : expansion.words()) {
      result += normalize_upper_impl(splice(w, *at, pair), strategy);
    }
  } else {
    result.toggle(w);
  }
  if (memo) upper_cache().put(w, result);
  return result;
}

}  // namespace

OpPoly normalize_upper(const OpWord& w, RewriteStrategy strategy) {
  require_kind(w, OpKind::UpperQ, "normalize_upper expects upper operations only");
  return normalize_upper_impl(w, strategy);
}

OpPoly normalize_upper(const OpPoly& p, RewriteStrategy strategy) {
  OpPoly out;
  for (const auto& w : p.words()) out += normalize_upper(w, strategy);
  return out;
}

OpPoly adem_expand_lower(int r, int s) {
  if (s < 0) throw Error(Errc::IndexOutOfRange, "lower index must be non-negative");
  if (r <= s) {
    throw Error(Errc::NotInadmissible,
                "Q_" + std::to_string(r) + " Q_" + std::to_string(s) + " is already admissible");
  }
  // Non-zero coefficients need (r+s)/2 <= j <= r-1; the outer index r+2s-2j
  // must also stay non-negative.
  OpPoly out;
  for (int j = (r + s + 1) / 2; j <= r - 1; ++j) {
    const int outer = r + 2 * s - 2 * j;
    if (outer < 0) continue;
    if (binom2(j - s - 1, 2 * j - r - s)) out.toggle({lower(outer), lower(j)});
  }
  return out;
}

OpPoly normalize_lower(const OpWord& w) {
  require_kind(w, OpKind::LowerQ, "normalize_lower expects lower operations only");
  if (auto hit = lower_cache().get(w)) return *hit;
  OpPoly result;
  std::optional<std::size_t> at;
  for (std::size_t k = 0; k + 1 < w.size(); ++k) {
    if (w[k].index > w[k + 1].index) {
      at = k;
      break;
    }
  }
  if (at) {
    const OpPoly expansion = adem_expand_lower(w[*at].index, w[*at + 1].index);
    for (const auto& pair : expansion.words()) {
      result += normalize_lower(splice(w, *at, pair));
    }
  } else {
    result.toggle(w);
  }
  lower_cache().put(w, result);
  return result;
}

UpperTrace to_upper(const OpWord& lower_w, int base_degree) {
  require_kind(lower_w, OpKind::LowerQ, "to_upper expects lower operations only");
  UpperTrace t;
  t.word.resize(lower_w.size());
  int m = base_degree;
  for (std::size_t k = lower_w.size(); k-- > 0;) {
    const int i = lower_w[k].index;
    t.word[k] = upper(m + i);
    m = 2 * m + i;
  }
  t.final_degree = m;
  return t;
}

OpWord to_lower(const OpWord& upper_w, int base_degree) {
  require_kind(upper_w, OpKind::UpperQ, "to_lower expects upper operations only");
  OpWord out(upper_w.size());
  int m = base_degree;
  for (std::size_t k = upper_w.size(); k-- > 0;) {
    const int s = upper_w[k].index;
    if (s < m) {
      throw Error(Errc::UnstableWord, to_string(upper_w) + " vanishes on degree " +
                                          std::to_string(base_degree));
    }
    out[k] = lower(s - m);
    m += s;
  }
  return out;
}

OpPoly drop_unstable(const OpPoly& upper_p, int base_degree) {
  OpPoly out;
  for (const auto& w : upper_p.words()) {
    int m = base_degree;
    bool stable = true;
    for (std::size_t k = w.size(); k-- > 0;) {
      if (w[k].index < m) {
        stable = false;
        break;
      }
      m += w[k].index;
    }
    if (stable) out.toggle(w);
  }
  return out;
}

OpPoly suspend(const OpPoly& p, int times) {
  OpPoly out;
  for (const auto& w : p.words()) {
    require_kind(w, OpKind::LowerQ, "suspend expects lower operations only");
    OpWord s = w;
    bool alive = true;
    for (int t = 0; t < times && alive; ++t) {
      for (auto& sym : s) {
        if (sym.index == 0) {
          alive = false;
          break;
        }
        --sym.index;
      }
    }
    if (alive) out.toggle(s);
  }
  return out;
}

Weight2Table weight2_table(int m, std::optional<int> n, int stable_rows) {
  if (m < 0) throw Error(Errc::IndexOutOfRange, "source degree must be non-negative");
  if (n && *n < 1) throw Error(Errc::IndexOutOfRange, "operadic level must be at least 1");
  Weight2Table t;
  t.m = m;
  t.n = n;
  if (!n) {
    t.stable = true;
    for (int r = m; r < m + stable_rows; ++r) t.rows.push_back({r, m + r, {}});
    return t;
  }
  for (int i = 0; i < *n; ++i) {
    Weight2Row row{i, 2 * m + i, {}};
    for (int k = 1; k <= *n; ++k) {
      row.images.push_back(i >= k ? std::optional<int>(i - k) : std::nullopt);
    }
    t.rows.push_back(std::move(row));
  }
  return t;
}

std::string to_string(const OpSym& s) {
  switch (s.kind) {
    case OpKind::UpperQ: return "Q^" + std::to_string(s.index);
    case OpKind::LowerQ: return "Q_" + std::to_string(s.index);
    case OpKind::SteenrodP: return "P_" + std::to_string(s.index);
  }
  return "?";
}

std::string to_string(const OpWord& w) {
  if (w.empty()) return "1";
  std::string out;
  for (const auto& s : w) {
    if (!out.empty()) out += ' ';
    out += to_string(s);
  }
  return out;
}

std::string to_string(const OpPoly& p) {
  if (p.is_zero()) return "0";
  std::string out;
  for (const auto& w : p.words()) {
    if (!out.empty()) out += " + ";
    out += to_string(w);
  }
  return out;
}

}  // namespace dl
