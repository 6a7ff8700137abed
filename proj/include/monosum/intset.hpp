#pragma once

#include <cstdint>
#include <initializer_list>
#include <iosfwd>
#include <stdexcept>
#include <string>
#include <vector>

namespace monosum {

// Finite set of distinct positive integers, kept strictly increasing.
class IntSet {
 public:
  IntSet() = default;
  IntSet(std::initializer_list<long long> xs) : IntSet(std::vector<long long>(xs)) {}

  // Sorts the input; throws std::invalid_argument on duplicates or x < 1.
  explicit IntSet(std::vector<long long> xs);

  const std::vector<long long>& elements() const { return elems_; }
  std::size_t size() const { return elems_.size(); }
  bool empty() const { return elems_.empty(); }
  bool contains(long long x) const;

  // Sum of all elements (the largest subset sum).
  long long total() const;

  bool operator==(const IntSet&) const = default;

  // One ASCII decimal per line, arbitrary order, duplicates rejected.
  static IntSet from_stream(std::istream& in);
  static IntSet from_file(const std::string& path);

 private:
  std::vector<long long> elems_;
};

struct Interval {
  long long lo = 0;
  long long hi = 0;  // inclusive
  long long length() const { return hi - lo + 1; }
  bool operator==(const Interval&) const = default;
};

// Sorted, pairwise disjoint, non-adjacent intervals (each one maximal).
class IntervalList {
 public:
  IntervalList() = default;
  IntervalList(std::initializer_list<Interval> xs);

  // Merges overlapping/adjacent input intervals into maximal ones.
  static IntervalList from_unmerged(std::vector<Interval> xs);

  const std::vector<Interval>& intervals() const { return ivs_; }
  bool empty() const { return ivs_.empty(); }
  std::size_t size() const { return ivs_.size(); }

  bool contains(long long x) const;
  // Number of members in [1, t].
  long long count_up_to(long long t) const;
  long long total_length() const;

  IntervalList clipped(long long lo, long long hi) const;

  bool operator==(const IntervalList&) const = default;

 private:
  std::vector<Interval> ivs_;
};

}  // namespace monosum
