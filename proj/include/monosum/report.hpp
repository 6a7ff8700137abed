#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "monosum/dynamics.hpp"

namespace monosum {

// Reals in primary outputs carry 15 significant digits so reruns are
// byte-identical.
std::string format_real(long double v);
std::string format_real(double v);

struct RunManifest {
  std::string subcommand;
  std::map<std::string, std::string> parameters;
  std::uint64_t seed = 0;
  std::string tool_version;
  double wall_time_ms = 0;
  std::vector<std::string> outputs;

  std::string to_json() const;
  static RunManifest from_json_file(const std::string& path);
  void write(const std::string& path) const;
};

inline constexpr const char* kToolVersion = "0.1.0";

// Minimal static SVG plotting, enough for profile lines and polygon overlays.
class SvgWriter {
 public:
  SvgWriter(double width, double height) : w_(width), h_(height) {}

  void add_polyline(const std::vector<std::pair<double, double>>& pts,
                    const std::string& stroke);
  void add_polygon(const std::vector<std::pair<double, double>>& pts,
                   const std::string& stroke, const std::string& fill);
  void add_text(double x, double y, const std::string& text);

  // Fits all added data into the viewport with a small margin, y up.
  void write(const std::string& path) const;

 private:
  struct Shape {
    enum Kind { kPolyline, kPolygon, kText } kind;
    std::vector<std::pair<double, double>> pts;
    std::string stroke, fill, text;
  };
  double w_, h_;
  std::vector<Shape> shapes_;
};

void write_polygon_csv(const std::string& path, const std::vector<ConvexPolygon>& polys);
void write_snapshot_svg(const std::string& path, const std::vector<ConvexPolygon>& polys,
                        double bound);

}  // namespace monosum
