#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "ccsmooth/core.hpp"

namespace ccsmooth {

/// Sorted subset of {0, ..., n-1} stored as a doubly linked list over the
/// universe, so neighbour lookups, insertion next to a known member, and
/// erasure are O(1).
class IndexSet {
 public:
  explicit IndexSet(std::size_t universe = 0);
  static IndexSet from_sorted(std::size_t universe, std::span<const std::size_t> members);

  std::size_t universe() const { return next_.size(); }
  std::size_t size() const { return count_; }
  bool empty() const { return count_ == 0; }
  bool contains(std::size_t i) const { return i < member_.size() && member_[i]; }

  /// Neighbouring members of a member `i`; npos at the ends.
  std::size_t next(std::size_t i) const { return next_[i]; }
  std::size_t prev(std::size_t i) const { return prev_[i]; }
  std::size_t first() const { return head_; }
  std::size_t last() const { return tail_; }

  /// Largest member < j / smallest member > j for arbitrary j (walks gaps).
  std::size_t below(std::size_t j) const;
  std::size_t above(std::size_t j) const;

  /// Inserts i, whose predecessor among members is `pred` (npos if none).
  void insert_after(std::size_t pred, std::size_t i);
  void insert(std::size_t i);
  void erase(std::size_t i);
  /// Erases every member strictly between members a < b; returns the count.
  std::size_t erase_between(std::size_t a, std::size_t b);

  std::vector<std::size_t> to_vector() const;
  std::vector<std::size_t> members_in(std::size_t lo, std::size_t hi) const;

 private:
  std::vector<std::size_t> next_;
  std::vector<std::size_t> prev_;
  std::vector<bool> member_;
  std::size_t head_ = npos;
  std::size_t tail_ = npos;
  std::size_t count_ = 0;
};

}  // namespace ccsmooth
