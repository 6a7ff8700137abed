#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "monosum/intset.hpp"

namespace monosum {

// Parameters of the iterated-log coloring: color(n) = floor(log_b(log n)) mod r.
// The inner log defaults to the natural log; inner_base = 2 gives the classical
// floor(log_4 log_2 n) variant.
struct LogLogParams {
  long double b = 4.0L;   // outer log base, > 1
  int r = 2;              // number of colors, >= 2
  long double inner_base = 0.0L;  // 0 means natural log
};

struct LogLogColor {
  int color = 0;
  long long floor_value = 0;  // floor(log_b(log n)), 0 for n in {1,2}
  bool boundary_tie = false;  // log n indistinguishable from a power of b at 64-bit precision
};

// n in {1,2} gets color 0 by convention (log log undefined/negative there).
// Boundary ties are flagged, not silently resolved.
LogLogColor loglog_color_detailed(long long n, const LogLogParams& p);
int loglog_color(long long n, const LogLogParams& p);

// Coloring constant on blocks [H_j, H_{j+1}); H_0 = 1. Default color rule is
// cyclic: block j has color (j+1) mod r. Explicit per-block colors supported.
class BlockColoring {
 public:
  // breakpoints must start at 1 and be strictly increasing.
  explicit BlockColoring(std::vector<long long> breakpoints, int r = 2);
  BlockColoring(std::vector<long long> breakpoints, std::vector<int> block_colors, int r);

  const std::vector<long long>& breakpoints() const { return h_; }
  int num_colors() const { return r_; }
  // Blocks between consecutive breakpoints; the open block starting at the
  // last breakpoint is not counted here.
  std::size_t num_blocks() const { return h_.size() - 1; }

  int block_color(std::size_t j) const;  // color of block j (open block allowed)
  bool has_explicit_colors() const { return !colors_.empty(); }

  // True iff H_{i+2} > 2(H_{i+1}-1) for every represented i.
  bool separated() const;

  // z_n = (H_{n-1}-1)/(H_n-1) for n = 1..num_blocks, as exact rationals.
  std::vector<std::pair<long long, long long>> z_ratios() const;

  // One breakpoint per line; optional second column = explicit block color.
  static BlockColoring from_stream(std::istream& in, int r = 2);
  static BlockColoring from_file(const std::string& path, int r = 2);

 private:
  std::vector<long long> h_;
  std::vector<int> colors_;  // empty => cyclic rule
  int r_;
};

// Color of the block containing n. Throws std::out_of_range for n >= H_last.
int block_color(long long n, const BlockColoring& c);

// Positive integers n whose half-open lookback window [n/2, n] meets color i.
struct PhiSet {
  int color = 0;
  IntervalList intervals;
};

// Union over color-i blocks j of [H_j, 2(H_{j+1}-1)], clipped to [1, range_max],
// merged maximal. The open block starting at H_last contributes [H_last, range_max]
// when its color is i (range_max <= 2(H_last - 1) keeps that well-defined).
PhiSet phi_set(const BlockColoring& c, int color, long long range_max);

// Direct membership test: exists j in [ceil(n/2), n] whose block color is i.
// Requires n < H_last. Used as the oracle for the interval form.
bool phi_contains_direct(const BlockColoring& c, int color, long long n);

// Repeatedly merges the first block violating H_{i+2} > 2(H_{i+1}-1) into its
// predecessor's color. The result's phi-sets never gain elements.
BlockColoring make_separated(const BlockColoring& c);

}  // namespace monosum
