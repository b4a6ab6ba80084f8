#pragma once

// Incremental exact row reduction over Q(zeta_m) for sparse vectors.

#include <map>
#include <vector>

#include "cherednik/scalars.hpp"

namespace cherednik {

template <class Key, class Compare = std::less<Key>>
class RowReducer {
 public:
  using Vector = std::map<Key, CycRational, Compare>;

  // Reduces v against the stored rows. Returns true and keeps it when it is
  // independent of them.
  bool add(Vector v) {
    reduce(v);
    if (v.empty()) return false;
    const Key pivot = v.begin()->first;
    const CycRational inv = v.begin()->second.inverse();
    for (auto& [k, c] : v) c *= inv;
    // keep the stored rows fully reduced against the new pivot
    for (auto& row : rows_) eliminate(row, pivot, v);
    rows_.push_back(std::move(v));
    return true;
  }

  bool independent(Vector v) const {
    reduce(v);
    return !v.empty();
  }

  std::size_t rank() const { return rows_.size(); }

 private:
  static void eliminate(Vector& target, const Key& pivot, const Vector& row) {
    auto it = target.find(pivot);
    if (it == target.end()) return;
    const CycRational factor = it->second;
    for (const auto& [k, c] : row) {
      auto [pos, inserted] = target.try_emplace(k, CycRational());
      pos->second -= factor * c;
      if (pos->second.is_zero()) target.erase(pos);
    }
  }

  void reduce(Vector& v) const {
    for (auto it = v.begin(); it != v.end();) {
      if (it->second.is_zero()) {
        it = v.erase(it);
      } else {
        ++it;
      }
    }
    for (const auto& row : rows_) eliminate(v, row.begin()->first, row);
  }

  std::vector<Vector> rows_;
};

}  // namespace cherednik
