#include "monosum/intset.hpp"

#include <algorithm>
#include <fstream>
#include <istream>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace monosum {

IntSet::IntSet(std::vector<long long> xs) : elems_(std::move(xs)) {
  std::sort(elems_.begin(), elems_.end());
  for (std::size_t i = 0; i < elems_.size(); ++i) {
    if (elems_[i] < 1) throw std::invalid_argument("IntSet: elements must be >= 1");
    if (i > 0 && elems_[i] == elems_[i - 1])
      throw std::invalid_argument("IntSet: duplicate element " + std::to_string(elems_[i]));
  }
}

bool IntSet::contains(long long x) const {
  return std::binary_search(elems_.begin(), elems_.end(), x);
}

long long IntSet::total() const {
  return std::accumulate(elems_.begin(), elems_.end(), 0ll);
}

IntSet IntSet::from_stream(std::istream& in) {
  std::vector<long long> xs;
  std::string line;
  while (std::getline(in, line)) {
    std::size_t pos = line.find_first_not_of(" \t\r");
    if (pos == std::string::npos || line[pos] == '#') continue;
    std::size_t used = 0;
    long long v = std::stoll(line.substr(pos), &used);
    xs.push_back(v);
  }
  return IntSet(std::move(xs));
}

IntSet IntSet::from_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open " + path);
  return from_stream(in);
}

IntervalList::IntervalList(std::initializer_list<Interval> xs) {
  *this = from_unmerged(std::vector<Interval>(xs));
}

IntervalList IntervalList::from_unmerged(std::vector<Interval> xs) {
  for (const auto& iv : xs)
    if (iv.lo > iv.hi) throw std::invalid_argument("IntervalList: lo > hi");
  std::sort(xs.begin(), xs.end(),
            [](const Interval& a, const Interval& b) { return a.lo < b.lo; });
  IntervalList out;
  for (const auto& iv : xs) {
    if (!out.ivs_.empty() && iv.lo <= out.ivs_.back().hi + 1)
      out.ivs_.back().hi = std::max(out.ivs_.back().hi, iv.hi);
    else
      out.ivs_.push_back(iv);
  }
  return out;
}

bool IntervalList::contains(long long x) const {
  auto it = std::upper_bound(ivs_.begin(), ivs_.end(), x,
                             [](long long v, const Interval& iv) { return v < iv.lo; });
  if (it == ivs_.begin()) return false;
  --it;
  return x <= it->hi;
}

long long IntervalList::count_up_to(long long t) const {
  long long n = 0;
  for (const auto& iv : ivs_) {
    if (iv.lo > t) break;
    long long lo = std::max(iv.lo, 1ll);
    long long hi = std::min(iv.hi, t);
    if (lo <= hi) n += hi - lo + 1;
  }
  return n;
}

long long IntervalList::total_length() const {
  long long n = 0;
  for (const auto& iv : ivs_) n += iv.length();
  return n;
}

IntervalList IntervalList::clipped(long long lo, long long hi) const {
  std::vector<Interval> out;
  for (const auto& iv : ivs_) {
    long long a = std::max(iv.lo, lo);
    long long b = std::min(iv.hi, hi);
    if (a <= b) out.push_back({a, b});
  }
  IntervalList r;
  r.ivs_ = std::move(out);
  return r;
}

}  // namespace monosum
