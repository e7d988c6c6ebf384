#include "ccsmooth/index_set.hpp"

#include <algorithm>

namespace ccsmooth {

IndexSet::IndexSet(std::size_t universe)
    : next_(universe, npos), prev_(universe, npos), member_(universe, false) {}

IndexSet IndexSet::from_sorted(std::size_t universe, std::span<const std::size_t> members) {
  IndexSet set(universe);
  std::size_t pred = npos;
  for (std::size_t i : members) {
    if (i >= universe || (pred != npos && i <= pred)) {
      throw ArgumentError("IndexSet: members must be sorted, distinct and in range");
    }
    set.insert_after(pred, i);
    pred = i;
  }
  return set;
}

std::size_t IndexSet::below(std::size_t j) const {
  if (j == 0 || empty()) return npos;
  std::size_t i = std::min(j, universe()) - 1;
  while (true) {
    if (member_[i]) return i;
    if (i == 0) return npos;
    --i;
  }
}

std::size_t IndexSet::above(std::size_t j) const {
  for (std::size_t i = j + 1; i < universe(); ++i) {
    if (member_[i]) return i;
  }
  return npos;
}

void IndexSet::insert_after(std::size_t pred, std::size_t i) {
  if (member_[i]) return;
  const std::size_t succ = pred == npos ? head_ : next_[pred];
  prev_[i] = pred;
  next_[i] = succ;
  if (pred == npos) {
    head_ = i;
  } else {
    next_[pred] = i;
  }
  if (succ == npos) {
    tail_ = i;
  } else {
    prev_[succ] = i;
  }
  member_[i] = true;
  ++count_;
}

void IndexSet::insert(std::size_t i) {
  if (i >= universe()) throw ArgumentError("IndexSet::insert: index out of range");
  if (!member_[i]) insert_after(below(i), i);
}

void IndexSet::erase(std::size_t i) {
  if (i >= universe() || !member_[i]) return;
  const std::size_t p = prev_[i];
  const std::size_t n = next_[i];
  if (p == npos) {
    head_ = n;
  } else {
    next_[p] = n;
  }
  if (n == npos) {
    tail_ = p;
  } else {
    prev_[n] = p;
  }
  member_[i] = false;
  next_[i] = prev_[i] = npos;
  --count_;
}

std::size_t IndexSet::erase_between(std::size_t a, std::size_t b) {
  std::size_t erased = 0;
  std::size_t i = next_[a];
  while (i != npos && i < b) {
    const std::size_t nx = next_[i];
    erase(i);
    ++erased;
    i = nx;
  }
  return erased;
}

std::vector<std::size_t> IndexSet::to_vector() const {
  std::vector<std::size_t> out;
  out.reserve(count_);
  for (std::size_t i = head_; i != npos; i = next_[i]) out.push_back(i);
  return out;
}

std::vector<std::size_t> IndexSet::members_in(std::size_t lo, std::size_t hi) const {
  std::vector<std::size_t> out;
  if (lo > hi || lo >= universe()) return out;
  std::size_t i = member_[lo] ? lo : above(lo);
  for (; i != npos && i <= hi; i = next_[i]) out.push_back(i);
  return out;
}

}  // namespace ccsmooth
