#pragma once

#include <functional>
#include <optional>
#include <utility>
#include <vector>

#include "monosum/rational.hpp"

namespace monosum {

struct Point2 {
  double a = 0;
  double b = 0;
  bool operator==(const Point2&) const = default;
};

struct RatPoint2 {
  Rational a;
  Rational b;
  bool operator==(const RatPoint2&) const = default;
};

// One application of the density step map (a, b) -> (b z + 1 - z/2, a z).
// z must lie in [0, 1/2].
Point2 step(const Point2& x, double z);
RatPoint2 step(const RatPoint2& x, const Rational& z);

// Image of z in [0, 1/2] under step(x, .): the segment from (1, 0) to
// (b/2 + 3/4, a/2).
std::pair<Point2, Point2> reach_segment(const Point2& x);

// Fixed point of step(., z): a = (1 - z/2)/(1 - z^2), b = a z. Rejects z >= 1.
Point2 fixed_point(double z);
RatPoint2 fixed_point(const Rational& z);

// The box B = [0, f2 - epsilon]^2. bound may come out <= 0 (empty region).
struct Box {
  double epsilon = 0;
  double bound = 0;
  static Box from_epsilon(double epsilon);
  bool empty() const { return bound <= 0; }
};

// Closed convex region, CCW vertex list. Empty list = empty set. A single
// vertex or two vertices are valid degenerate regions.
class ConvexPolygon {
 public:
  ConvexPolygon() = default;
  explicit ConvexPolygon(std::vector<Point2> ccw_vertices) : v_(std::move(ccw_vertices)) {}

  static ConvexPolygon box(double lo, double hi);
  // Convex hull (monotone chain); collinear points dropped.
  static ConvexPolygon hull_of(std::vector<Point2> points);

  const std::vector<Point2>& vertices() const { return v_; }
  bool empty() const { return v_.empty(); }
  std::size_t size() const { return v_.size(); }

  bool contains(const Point2& p, double tol = 0) const;
  // All consecutive-edge cross products >= -tol.
  bool is_convex_ccw(double tol = 1e-12) const;

  // Minkowski-style outward offset: hull of vertex +- (rho, rho) corners.
  ConvexPolygon offset_outward(double rho) const;
  // Intersection with [lo, hi]^2 (Sutherland-Hodgman on axis lines).
  ConvexPolygon clip_to_box(double lo, double hi) const;

 private:
  std::vector<Point2> v_;
};

// Largest z in [0, 1/2] with step(x, z) in P, or nullopt when the reach
// segment misses P. Handles degenerate P (point, segment).
std::optional<double> max_step(const ConvexPolygon& P, const Point2& x, double tol = 1e-12);

struct SkOptions {
  int grid = 512;     // grid cells per axis (grid+1 sample points)
  double tol = 1e-9;  // extra outward inflation per iteration
  int k_max = 10000;
  int threads = 0;    // 0 = hardware concurrency
  // Called after each iteration with (k, polygon); optional.
  std::function<void(int, const ConvexPolygon&)> on_polygon;
};

// Outer approximations of S_1, S_2, ... : each returned polygon is a certified
// superset of the true S_K. Stops at the first empty polygon or after k_max
// iterations. Grid membership tests run in parallel; results are independent
// of the thread count.
std::vector<ConvexPolygon> sk_iterate(const Box& box, const SkOptions& opt);

struct CertifyResult {
  std::optional<int> K;  // smallest K with empty outer approximation
  std::vector<ConvexPolygon> polygons;  // P_1 .. P_last (last is empty iff certified)
};

// Emptiness certificate for the nested sets S_K at this epsilon. NotCertified
// (K == nullopt) when k_max is reached first.
CertifyResult certify_empty(const Box& box, const SkOptions& opt);

}  // namespace monosum
