#include "monosum/colorings.hpp"

#include <algorithm>
#include <cfloat>
#include <cmath>
#include <fstream>
#include <istream>
#include <sstream>
#include <stdexcept>

namespace monosum {

namespace {

int mod_color(long long v, int r) {
  long long m = v % r;
  return static_cast<int>(m < 0 ? m + r : m);
}

}  // namespace

LogLogColor loglog_color_detailed(long long n, const LogLogParams& p) {
  if (n < 1) throw std::invalid_argument("loglog_color: n must be >= 1");
  if (!(p.b > 1.0L)) throw std::invalid_argument("loglog_color: outer base must be > 1");
  if (p.r < 2) throw std::invalid_argument("loglog_color: r must be >= 2");
  if (n <= 2) return {0, 0, false};

  long double L = logl(static_cast<long double>(n));
  if (p.inner_base > 0.0L) L /= logl(p.inner_base);
  // floor(log_b L): the float estimate is corrected against the exact block
  // boundaries b^k, then ties within rounding error are flagged.
  long long k = static_cast<long long>(floorl(logl(L) / logl(p.b)));
  while (powl(p.b, static_cast<long double>(k)) > L) --k;
  while (powl(p.b, static_cast<long double>(k + 1)) <= L) ++k;

  const long double lo = powl(p.b, static_cast<long double>(k));
  const long double hi = powl(p.b, static_cast<long double>(k + 1));
  const long double slack = 64.0L * LDBL_EPSILON * std::max(L, hi);
  bool tie = (L - lo) <= slack || (hi - L) <= slack;
  return {mod_color(k, p.r), k, tie};
}

int loglog_color(long long n, const LogLogParams& p) {
  return loglog_color_detailed(n, p).color;
}

BlockColoring::BlockColoring(std::vector<long long> breakpoints, int r)
    : h_(std::move(breakpoints)), r_(r) {
  if (r_ < 2) throw std::invalid_argument("BlockColoring: r must be >= 2");
  if (h_.empty() || h_.front() != 1)
    throw std::invalid_argument("BlockColoring: breakpoints must start at H_0 = 1");
  for (std::size_t i = 1; i < h_.size(); ++i)
    if (h_[i] <= h_[i - 1])
      throw std::invalid_argument("BlockColoring: breakpoints must be strictly increasing");
}

BlockColoring::BlockColoring(std::vector<long long> breakpoints, std::vector<int> block_colors,
                             int r)
    : BlockColoring(std::move(breakpoints), r) {
  colors_ = std::move(block_colors);
  if (colors_.size() != h_.size() - 1)
    throw std::invalid_argument("BlockColoring: need one color per closed block");
  for (int c : colors_)
    if (c < 0 || c >= r_) throw std::invalid_argument("BlockColoring: color out of range");
}

int BlockColoring::block_color(std::size_t j) const {
  if (colors_.empty()) return mod_color(static_cast<long long>(j) + 1, r_);
  if (j >= colors_.size())
    throw std::out_of_range("BlockColoring: no explicit color for block " + std::to_string(j));
  return colors_[j];
}

bool BlockColoring::separated() const {
  for (std::size_t i = 0; i + 2 < h_.size(); ++i)
    if (h_[i + 2] <= 2 * (h_[i + 1] - 1)) return false;
  return true;
}

std::vector<std::pair<long long, long long>> BlockColoring::z_ratios() const {
  std::vector<std::pair<long long, long long>> z;
  for (std::size_t n = 1; n < h_.size(); ++n) z.emplace_back(h_[n - 1] - 1, h_[n] - 1);
  return z;
}

BlockColoring BlockColoring::from_stream(std::istream& in, int r) {
  std::vector<long long> h;
  std::vector<int> colors;
  bool any_color = false;
  std::string line;
  while (std::getline(in, line)) {
    std::istringstream ls(line);
    long long bp;
    if (!(ls >> bp)) continue;
    h.push_back(bp);
    int c;
    if (ls >> c) {
      colors.push_back(c);
      any_color = true;
    } else {
      colors.push_back(-1);
    }
  }
  if (!any_color) return BlockColoring(std::move(h), r);
  colors.pop_back();  // the open block carries no explicit color
  for (int c : colors)
    if (c < 0) throw std::invalid_argument("BlockColoring file: missing color column");
  return BlockColoring(std::move(h), std::move(colors), r);
}

BlockColoring BlockColoring::from_file(const std::string& path, int r) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open " + path);
  return from_stream(in, r);
}

int block_color(long long n, const BlockColoring& c) {
  if (n < 1) throw std::invalid_argument("block_color: n must be >= 1");
  const auto& h = c.breakpoints();
  if (n >= h.back())
    throw std::out_of_range("block_color: n=" + std::to_string(n) +
                            " is at or beyond the last breakpoint " + std::to_string(h.back()));
  // Block j is [H_j, H_{j+1}).
  auto it = std::upper_bound(h.begin(), h.end(), n);
  std::size_t j = static_cast<std::size_t>(it - h.begin()) - 1;
  return c.block_color(j);
}

PhiSet phi_set(const BlockColoring& c, int color, long long range_max) {
  const auto& h = c.breakpoints();
  if (range_max > 2 * (h.back() - 1))
    throw std::invalid_argument("phi_set: range_max beyond 2(H_last - 1) is undetermined");
  std::vector<Interval> parts;
  for (std::size_t j = 0; j + 1 < h.size(); ++j) {
    if (c.block_color(j) != color) continue;
    parts.push_back({h[j], 2 * (h[j + 1] - 1)});
  }
  // Open block [H_last, ...): its phi interval covers at least up to
  // 2 H_last - 2 >= range_max, so the clip determines it fully.
  if (!c.has_explicit_colors() && c.block_color(c.num_blocks()) == color && h.back() <= range_max)
    parts.push_back({h.back(), range_max});
  std::vector<Interval> clipped;
  for (const auto& iv : parts) {
    long long lo = std::max(iv.lo, 1ll), hi = std::min(iv.hi, range_max);
    if (lo <= hi) clipped.push_back({lo, hi});
  }
  return {color, IntervalList::from_unmerged(std::move(clipped))};
}

bool phi_contains_direct(const BlockColoring& c, int color, long long n) {
  if (n < 1) throw std::invalid_argument("phi_contains_direct: n must be >= 1");
  long long j_lo = (n + 1) / 2;  // smallest integer >= n/2
  for (long long j = j_lo; j <= n; ++j)
    if (block_color(j, c) == color) return true;
  return false;
}

namespace {

std::size_t first_violation(const std::vector<long long>& h) {
  for (std::size_t i = 0; i + 2 < h.size(); ++i)
    if (h[i + 2] <= 2 * (h[i + 1] - 1)) return i;
  return h.size();
}

}  // namespace

BlockColoring make_separated(const BlockColoring& c) {
  std::vector<long long> h = c.breakpoints();
  // Recoloring block i+1 to block i's color merges blocks i and i+1; under the
  // alternating two-coloring block i+2 already carries block i's color, so the
  // merge swallows it too and both H_{i+1} and H_{i+2} drop. That keeps the
  // result on the cyclic rule. The merge is only sound at a violating index:
  // H_{i+2} <= 2(H_{i+1}-1) is what keeps phi from gaining elements.
  if (!c.has_explicit_colors() && c.num_colors() == 2) {
    for (std::size_t i = first_violation(h); i < h.size(); i = first_violation(h))
      h.erase(h.begin() + static_cast<std::ptrdiff_t>(i + 1),
              h.begin() + static_cast<std::ptrdiff_t>(i + 3));
    return BlockColoring(std::move(h), c.num_colors());
  }

  // General colorings: recolor block i+1, then drop breakpoints between
  // equal-colored neighbours.
  std::vector<int> colors;
  for (std::size_t j = 0; j + 1 < h.size(); ++j)
    colors.push_back(c.has_explicit_colors() ? c.block_color(j)
                                             : static_cast<int>((j + 1) % c.num_colors()));
  for (std::size_t i = first_violation(h); i < h.size(); i = first_violation(h)) {
    colors[i + 1] = colors[i];
    std::vector<long long> nh{h[0]};
    std::vector<int> nc{colors[0]};
    for (std::size_t j = 1; j < colors.size(); ++j) {
      if (colors[j] == nc.back()) continue;
      nh.push_back(h[j]);
      nc.push_back(colors[j]);
    }
    nh.push_back(h.back());
    h = std::move(nh);
    colors = std::move(nc);
  }
  return BlockColoring(std::move(h), std::move(colors), c.num_colors());
}

}  // namespace monosum
