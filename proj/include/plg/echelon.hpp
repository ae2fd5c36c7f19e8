#pragma once

#include <map>
#include <optional>
#include <vector>

#include "plg/rational.hpp"

namespace plg {

// Sparse reduced row echelon form over ordered keys.  Rows are normalized
// to pivot coefficient 1 and fully inter-reduced, so the reduced form of a
// vector is the canonical residue modulo the row span (RREF is unique, so
// the result does not depend on insertion order).
// Gaussian elimination with combination tracking: solves whether a target
// lies in the span of tagged rows and returns the witness combination.
template <class K, class Tag>
class TrackedSolver {
 public:
  using Vec = std::map<K, Rat>;

  void add_row(Vec v, Tag tag) {
    Row r{std::move(v), {}};
    size_t idx = tags_.size();
    tags_.push_back(std::move(tag));
    r.who.emplace(idx, Rat(1));
    reduce_row(r);
    if (r.v.empty()) return;
    Rat lead = r.v.begin()->second;
    for (auto& [k, c] : r.v) c /= lead;
    for (auto& [k, c] : r.who) c /= lead;
    basis_.push_back(std::move(r));
  }

  // target = sum c_i * row(tag_i) if solvable.
  std::optional<std::vector<std::pair<Tag, Rat>>> solve(Vec target) const {
    Row r{std::move(target), {}};
    reduce_row(r);
    if (!r.v.empty()) return std::nullopt;
    std::vector<std::pair<Tag, Rat>> out;
    for (auto& [idx, c] : r.who) out.emplace_back(tags_[idx], -c);
    return out;
  }

 private:
  struct Row {
    Vec v;
    std::map<size_t, Rat> who;  // v = original + sum who * rows
  };

  void reduce_row(Row& r) const {
    bool changed = true;
    while (changed) {
      changed = false;
      for (auto& b : basis_) {
        if (r.v.empty()) return;
        auto it = r.v.find(b.v.begin()->first);
        if (it == r.v.end()) continue;
        Rat f = it->second;
        for (auto& [k, c] : b.v) {
          auto jt = r.v.find(k);
          if (jt == r.v.end()) {
            Rat nc = -f * c;
            if (nc != 0) r.v.emplace(k, std::move(nc));
          } else {
            jt->second -= f * c;
            if (jt->second == 0) r.v.erase(jt);
          }
        }
        for (auto& [k, c] : b.who) {
          auto jt = r.who.find(k);
          if (jt == r.who.end()) {
            Rat nc = -f * c;
            if (nc != 0) r.who.emplace(k, std::move(nc));
          } else {
            jt->second -= f * c;
            if (jt->second == 0) r.who.erase(jt);
          }
        }
        changed = true;
      }
    }
  }

  std::vector<Row> basis_;
  std::vector<Tag> tags_;
};

template <class K>
class SparseEchelon {
 public:
  using Vec = std::map<K, Rat>;

  const std::map<K, Vec>& rows() const { return rows_; }

  Vec reduce(Vec v) const {
    bool changed = true;
    while (changed) {
      changed = false;
      for (auto it = v.begin(); it != v.end(); ++it) {
        auto p = rows_.find(it->first);
        if (p == rows_.end()) continue;
        axpy(v, -it->second, p->second);
        changed = true;
        break;
      }
    }
    return v;
  }

  // Adds v to the span; returns false if v was already in it.
  bool add(Vec v) {
    v = reduce(std::move(v));
    if (v.empty()) return false;
    Rat lead = v.begin()->second;
    for (auto& [k, c] : v) c /= lead;
    K pivot = v.begin()->first;
    for (auto& [pk, row] : rows_) {
      auto it = row.find(pivot);
      if (it == row.end()) continue;
      axpy(row, -it->second, v);
    }
    rows_.emplace(pivot, std::move(v));
    return true;
  }

  bool contains(const Vec& v) const { return reduce(v).empty(); }

 private:
  static void axpy(Vec& x, const Rat& a, const Vec& y) {
    for (auto& [k, c] : y) {
      auto it = x.find(k);
      if (it == x.end()) {
        Rat nc = a * c;
        if (nc != 0) x.emplace(k, std::move(nc));
      } else {
        it->second += a * c;
        if (it->second == 0) x.erase(it);
      }
    }
  }

  std::map<K, Vec> rows_;
};

}  // namespace plg
