#pragma once

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <vector>

namespace qord {

using Exp = std::uint32_t;

/// Exponent vector indexed by 0-based variable slot. Trailing zero entries
/// are stripped, so structurally equal vectors compare equal and the map
/// orderings built on top of this are canonical.
class ExpVec {
 public:
  ExpVec() = default;
  explicit ExpVec(std::vector<Exp> entries) : v_(std::move(entries)) { strip(); }

  static ExpVec unit(std::size_t slot, Exp e = 1) {
    ExpVec out;
    out.set(slot, e);
    return out;
  }

  Exp get(std::size_t slot) const { return slot < v_.size() ? v_[slot] : 0; }

  void set(std::size_t slot, Exp e) {
    if (slot >= v_.size()) {
      if (e == 0) return;
      v_.resize(slot + 1, 0);
    }
    v_[slot] = e;
    strip();
  }

  /// Number of tracked slots; the last tracked slot is always nonzero.
  std::size_t size() const { return v_.size(); }
  bool empty() const { return v_.empty(); }

  Exp total() const {
    Exp s = 0;
    for (Exp e : v_) s += e;
    return s;
  }

  ExpVec plus(const ExpVec& o) const {
    std::vector<Exp> out(std::max(v_.size(), o.v_.size()), 0);
    for (std::size_t k = 0; k < out.size(); ++k) out[k] = get(k) + o.get(k);
    return ExpVec(std::move(out));
  }

  /// Componentwise difference; empty when any entry would go negative.
  std::optional<ExpVec> minus(const ExpVec& o) const {
    std::vector<Exp> out(std::max(v_.size(), o.v_.size()), 0);
    for (std::size_t k = 0; k < out.size(); ++k) {
      if (get(k) < o.get(k)) return std::nullopt;
      out[k] = get(k) - o.get(k);
    }
    return ExpVec(std::move(out));
  }

  bool operator==(const ExpVec&) const = default;

  const std::vector<Exp>& entries() const { return v_; }

 private:
  void strip() {
    while (!v_.empty() && v_.back() == 0) v_.pop_back();
  }

  std::vector<Exp> v_;
};

/// Slot-by-slot lexicographic order; missing trailing slots count as zero.
inline bool lex_less(const ExpVec& a, const ExpVec& b) {
  const std::size_t n = std::max(a.size(), b.size());
  for (std::size_t k = 0; k < n; ++k) {
    if (a.get(k) != b.get(k)) return a.get(k) < b.get(k);
  }
  return false;
}

/// Graded order (total degree, then lexicographic); the key order of
/// wavefunction term maps.
inline bool operator<(const ExpVec& a, const ExpVec& b) {
  const Exp ta = a.total();
  const Exp tb = b.total();
  if (ta != tb) return ta < tb;
  return lex_less(a, b);
}

}  // namespace qord
