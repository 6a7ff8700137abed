#include "monosum/dynamics.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <thread>

#include "monosum/optimize.hpp"

namespace monosum {

namespace {

void check_z(double z) {
  if (!(z >= 0.0 && z <= 0.5)) throw std::domain_error("step: z must lie in [0, 1/2]");
}

double cross(const Point2& o, const Point2& a, const Point2& b) {
  return (a.a - o.a) * (b.b - o.b) - (a.b - o.b) * (b.a - o.a);
}

struct Halfplane {
  // n . p <= c, outward normal n = (nx, ny), norm = |n|.
  double nx, ny, c, norm;
};

std::vector<Halfplane> halfplanes_of(const ConvexPolygon& P) {
  std::vector<Halfplane> hs;
  const auto& v = P.vertices();
  for (std::size_t i = 0; i < v.size(); ++i) {
    const Point2& u = v[i];
    const Point2& w = v[(i + 1) % v.size()];
    double ex = w.a - u.a, ey = w.b - u.b;
    Halfplane h;
    h.nx = ey;
    h.ny = -ex;
    h.c = h.nx * u.a + h.ny * u.b;
    h.norm = std::hypot(h.nx, h.ny);
    hs.push_back(h);
  }
  return hs;
}

// Feasible z-window of {z in [0,1/2] : p0 + z d satisfies n.p <= c + relax for
// every halfplane}. Division by near-zero slopes is safe: the bound lands far
// outside [0,1/2] and is clamped.
bool segment_window(const std::vector<Halfplane>& hs, const Point2& x, double relax_per_norm,
                    double& z_lo, double& z_hi) {
  const double p0a = 1.0, p0b = 0.0;
  const double da = x.b - 0.5, db = x.a;
  z_lo = 0.0;
  z_hi = 0.5;
  for (const auto& h : hs) {
    const double base = h.nx * p0a + h.ny * p0b;
    const double slope = h.nx * da + h.ny * db;
    // Outward float slack keeps the test conservative (never rejects a point
    // whose exact segment meets the exact polygon).
    const double slack = 1e-12 * (std::abs(base) + std::abs(h.c) + std::abs(slope)) + 1e-300;
    const double rhs = h.c + relax_per_norm * h.norm + slack - base;
    if (slope == 0.0) {
      if (rhs < 0) return false;
    } else if (slope > 0) {
      z_hi = std::min(z_hi, rhs / slope);
    } else {
      z_lo = std::max(z_lo, rhs / slope);
    }
    if (z_lo > z_hi) return false;
  }
  return true;
}

}  // namespace

Point2 step(const Point2& x, double z) {
  check_z(z);
  return {x.b * z + 1.0 - z / 2.0, x.a * z};
}

RatPoint2 step(const RatPoint2& x, const Rational& z) {
  if (z < 0 || z > Rational(1, 2)) throw std::domain_error("step: z must lie in [0, 1/2]");
  RatPoint2 y{x.b * z + 1 - z / 2, x.a * z};
  y.a.canonicalize();
  y.b.canonicalize();
  return y;
}

std::pair<Point2, Point2> reach_segment(const Point2& x) {
  return {Point2{1.0, 0.0}, Point2{x.b / 2.0 + 0.75, x.a / 2.0}};
}

Point2 fixed_point(double z) {
  if (z >= 1.0) throw std::domain_error("fixed_point: z >= 1 has no fixed point in the square");
  if (z < 0.0) throw std::domain_error("fixed_point: z must be >= 0");
  double a = (1.0 - z / 2.0) / (1.0 - z * z);
  return {a, z * a};
}

RatPoint2 fixed_point(const Rational& z) {
  if (z >= 1) throw std::domain_error("fixed_point: z >= 1 has no fixed point in the square");
  if (z < 0) throw std::domain_error("fixed_point: z must be >= 0");
  Rational a = (1 - z / 2) / (1 - z * z);
  a.canonicalize();
  RatPoint2 p{a, z * a};
  p.b.canonicalize();
  return p;
}

Box Box::from_epsilon(double epsilon) {
  if (!(epsilon > 0)) throw std::domain_error("Box: epsilon must be > 0");
  long double bl = kF2 - static_cast<long double>(epsilon);
  double b = static_cast<double>(bl);
  // Round the bound upward so the box is a superset of the exact one.
  if (static_cast<long double>(b) < bl) b = std::nextafter(b, 2.0);
  return {epsilon, b};
}

ConvexPolygon ConvexPolygon::box(double lo, double hi) {
  if (hi < lo) return ConvexPolygon();
  if (hi == lo) return ConvexPolygon({{lo, lo}});
  return ConvexPolygon({{lo, lo}, {hi, lo}, {hi, hi}, {lo, hi}});
}

ConvexPolygon ConvexPolygon::hull_of(std::vector<Point2> pts) {
  std::sort(pts.begin(), pts.end(), [](const Point2& p, const Point2& q) {
    return p.a < q.a || (p.a == q.a && p.b < q.b);
  });
  pts.erase(std::unique(pts.begin(), pts.end()), pts.end());
  const std::size_t n = pts.size();
  if (n <= 2) return ConvexPolygon(std::move(pts));
  std::vector<Point2> h(2 * n);
  std::size_t k = 0;
  for (std::size_t i = 0; i < n; ++i) {  // lower chain
    while (k >= 2 && cross(h[k - 2], h[k - 1], pts[i]) <= 0) --k;
    h[k++] = pts[i];
  }
  for (std::size_t i = n - 1, t = k + 1; i-- > 0;) {  // upper chain
    while (k >= t && cross(h[k - 2], h[k - 1], pts[i]) <= 0) --k;
    h[k++] = pts[i];
  }
  h.resize(k - 1);
  if (h.size() < 3) return ConvexPolygon({pts.front(), pts.back()});
  return ConvexPolygon(std::move(h));
}

bool ConvexPolygon::contains(const Point2& p, double tol) const {
  if (v_.empty()) return false;
  if (v_.size() == 1)
    return std::abs(p.a - v_[0].a) <= tol && std::abs(p.b - v_[0].b) <= tol;
  if (v_.size() == 2) {
    double c = cross(v_[0], v_[1], p);
    double len = std::hypot(v_[1].a - v_[0].a, v_[1].b - v_[0].b);
    if (std::abs(c) > tol * std::max(1.0, len)) return false;
    double t = ((p.a - v_[0].a) * (v_[1].a - v_[0].a) + (p.b - v_[0].b) * (v_[1].b - v_[0].b));
    return t >= -tol && t <= len * len + tol;
  }
  for (std::size_t i = 0; i < v_.size(); ++i)
    if (cross(v_[i], v_[(i + 1) % v_.size()], p) < -tol) return false;
  return true;
}

bool ConvexPolygon::is_convex_ccw(double tol) const {
  if (v_.size() < 3) return true;
  for (std::size_t i = 0; i < v_.size(); ++i) {
    const Point2& a = v_[i];
    const Point2& b = v_[(i + 1) % v_.size()];
    const Point2& c = v_[(i + 2) % v_.size()];
    if (cross(a, b, c) < -tol) return false;
  }
  return true;
}

ConvexPolygon ConvexPolygon::offset_outward(double rho) const {
  if (v_.empty()) return ConvexPolygon();
  std::vector<Point2> pts;
  pts.reserve(v_.size() * 4);
  for (const auto& p : v_) {
    pts.push_back({p.a - rho, p.b - rho});
    pts.push_back({p.a + rho, p.b - rho});
    pts.push_back({p.a - rho, p.b + rho});
    pts.push_back({p.a + rho, p.b + rho});
  }
  return hull_of(std::move(pts));
}

ConvexPolygon ConvexPolygon::clip_to_box(double lo, double hi) const {
  if (v_.empty()) return ConvexPolygon();
  if (v_.size() == 1) {
    const Point2& p = v_[0];
    if (p.a >= lo && p.a <= hi && p.b >= lo && p.b <= hi) return *this;
    return ConvexPolygon();
  }
  // Sutherland-Hodgman against the four box lines; a.x*nx + a.y*ny <= c kept.
  auto clip_line = [](const std::vector<Point2>& in, double nx, double ny,
                      double c) {
    std::vector<Point2> out;
    const std::size_t n = in.size();
    for (std::size_t i = 0; i < n; ++i) {
      const Point2& a = in[i];
      const Point2& b = in[(i + 1) % n];
      double da = nx * a.a + ny * a.b - c;
      double db = nx * b.a + ny * b.b - c;
      if (da <= 0) out.push_back(a);
      if ((da < 0 && db > 0) || (da > 0 && db < 0)) {
        double t = da / (da - db);
        out.push_back({a.a + t * (b.a - a.a), a.b + t * (b.b - a.b)});
      }
    }
    return out;
  };
  std::vector<Point2> cur = v_;
  cur = clip_line(cur, -1, 0, -lo);
  if (!cur.empty()) cur = clip_line(cur, 1, 0, hi);
  if (!cur.empty()) cur = clip_line(cur, 0, -1, -lo);
  if (!cur.empty()) cur = clip_line(cur, 0, 1, hi);
  if (cur.size() < 3) return ConvexPolygon(std::move(cur));
  // Re-hull to drop duplicates/collinear points the clip can introduce.
  return hull_of(std::move(cur));
}

std::optional<double> max_step(const ConvexPolygon& P, const Point2& x, double tol) {
  if (P.empty()) return std::nullopt;
  const double da = x.b - 0.5, db = x.a;  // p(z) = (1,0) + z (b - 1/2, a)
  const auto& v = P.vertices();
  if (v.size() >= 3) {
    double z_lo, z_hi;
    auto hs = halfplanes_of(P);
    for (auto& h : hs) h.c += tol * h.norm;
    if (!segment_window(hs, x, 0.0, z_lo, z_hi)) return std::nullopt;
    return z_hi;
  }
  if (v.size() == 2) {
    // Segment target: p(z) must sit on [v0, v1].
    double ex = v[1].a - v[0].a, ey = v[1].b - v[0].b;
    double c0 = (1.0 - v[0].a) * ey - (0.0 - v[0].b) * ex;  // cross(e, p(0)-v0)
    double c1 = da * ey - db * ex;                          // d cross contribution
    double len2 = ex * ex + ey * ey;
    auto on_segment_z = [&](double z) -> bool {
      double pa = 1.0 + z * da, pb = z * db;
      double t = ((pa - v[0].a) * ex + (pb - v[0].b) * ey);
      return t >= -tol && t <= len2 + tol;
    };
    if (std::abs(c1) <= tol) {
      if (std::abs(c0) > tol) return std::nullopt;
      // Collinear: the projection parameter t(z) = t0 + z t1 must land in
      // [0, len2]; take the largest feasible z.
      double t0 = (1.0 - v[0].a) * ex + (0.0 - v[0].b) * ey;
      double t1 = da * ex + db * ey;
      double z_lo = 0.0, z_hi = 0.5;
      if (t1 == 0.0) {
        if (t0 < -tol || t0 > len2 + tol) return std::nullopt;
      } else if (t1 > 0) {
        z_lo = std::max(z_lo, (0.0 - t0) / t1);
        z_hi = std::min(z_hi, (len2 - t0) / t1);
      } else {
        z_lo = std::max(z_lo, (len2 - t0) / t1);
        z_hi = std::min(z_hi, (0.0 - t0) / t1);
      }
      if (z_lo > z_hi + tol) return std::nullopt;
      return std::clamp(z_hi, 0.0, 0.5);
    }
    double z = -c0 / c1;
    if (z < -tol || z > 0.5 + tol) return std::nullopt;
    z = std::clamp(z, 0.0, 0.5);
    if (!on_segment_z(z)) return std::nullopt;
    return z;
  }
  // Single point target.
  const Point2& t = v[0];
  if (std::abs(da) <= tol && std::abs(db) <= tol) {
    // Degenerate reach segment {(1,0)}.
    return (std::abs(t.a - 1.0) <= tol && std::abs(t.b) <= tol) ? std::optional<double>(0.5)
                                                                : std::nullopt;
  }
  double z = std::abs(da) >= std::abs(db) ? (t.a - 1.0) / da : t.b / db;
  if (z < -tol || z > 0.5 + tol) return std::nullopt;
  z = std::clamp(z, 0.0, 0.5);
  double pa = 1.0 + z * da, pb = z * db;
  if (std::abs(pa - t.a) <= tol && std::abs(pb - t.b) <= tol) return z;
  return std::nullopt;
}

std::vector<ConvexPolygon> sk_iterate(const Box& box, const SkOptions& opt) {
  if (opt.grid < 64) throw std::invalid_argument("sk_iterate: grid must be >= 64");
  if (!(opt.tol > 0)) throw std::invalid_argument("sk_iterate: tol must be > 0");
  if (opt.k_max < 1) throw std::invalid_argument("sk_iterate: k_max must be >= 1");

  std::vector<ConvexPolygon> polys;
  if (box.empty()) {
    polys.emplace_back();
    if (opt.on_polygon) opt.on_polygon(1, polys.back());
    return polys;
  }

  const double bound = box.bound;
  const int n = opt.grid;
  const double cell = bound / n;
  const double diag = std::sqrt(2.0) * cell;
  // A point of the true S_K lies within diag/2 of some grid point, and the
  // step map moves nearby points by at most half their distance, so accepting
  // within diag/2 of the previous polygon loses nothing.
  const double tau = diag / 2.0;

  int threads = opt.threads > 0 ? opt.threads
                                : static_cast<int>(std::thread::hardware_concurrency());
  if (threads < 1) threads = 1;

  ConvexPolygon prev = ConvexPolygon::box(0.0, bound);
  for (int k = 1; k <= opt.k_max; ++k) {
    const auto hs = halfplanes_of(prev);
    // Per-row accepted points, concatenated in row order: thread-count
    // independent.
    std::vector<std::vector<Point2>> rows(static_cast<std::size_t>(n + 1));
    auto run_rows = [&](int i_begin, int i_end) {
      for (int i = i_begin; i < i_end; ++i) {
        auto& row = rows[static_cast<std::size_t>(i)];
        const double a = std::min(i * cell, bound);
        for (int j = 0; j <= n; ++j) {
          const double b = std::min(j * cell, bound);
          double z_lo, z_hi;
          if (segment_window(hs, {a, b}, tau, z_lo, z_hi)) row.push_back({a, b});
        }
      }
    };
    if (threads == 1) {
      run_rows(0, n + 1);
    } else {
      std::vector<std::thread> pool;
      int chunk = (n + threads) / threads;
      for (int t = 0; t < threads; ++t) {
        int b0 = t * chunk, b1 = std::min(n + 1, b0 + chunk);
        if (b0 >= b1) break;
        pool.emplace_back(run_rows, b0, b1);
      }
      for (auto& th : pool) th.join();
    }

    std::vector<Point2> accepted;
    for (auto& row : rows) accepted.insert(accepted.end(), row.begin(), row.end());

    ConvexPolygon pk;
    if (!accepted.empty()) {
      pk = ConvexPolygon::hull_of(std::move(accepted))
               .offset_outward(diag + opt.tol)
               .clip_to_box(0.0, bound);
    }
    polys.push_back(pk);
    if (opt.on_polygon) opt.on_polygon(k, polys.back());
    if (pk.empty()) break;
    prev = std::move(pk);
  }
  return polys;
}

CertifyResult certify_empty(const Box& box, const SkOptions& opt) {
  CertifyResult res;
  res.polygons = sk_iterate(box, opt);
  if (!res.polygons.empty() && res.polygons.back().empty())
    res.K = static_cast<int>(res.polygons.size());
  return res;
}

}  // namespace monosum
