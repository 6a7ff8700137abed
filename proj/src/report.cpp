#include "monosum/report.hpp"

#include <cstdio>
#include <fstream>
#include <limits>
#include <sstream>
#include <stdexcept>

#include "json.hpp"

namespace monosum {

std::string format_real(long double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.15Lg", v);
  return buf;
}

std::string format_real(double v) { return format_real(static_cast<long double>(v)); }

std::string RunManifest::to_json() const {
  nlohmann::json j;
  j["subcommand"] = subcommand;
  j["parameters"] = parameters;
  j["seed"] = seed;
  j["tool_version"] = tool_version;
  j["wall_time_ms"] = wall_time_ms;
  j["outputs"] = outputs;
  return j.dump(2) + "\n";
}

RunManifest RunManifest::from_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open manifest " + path);
  nlohmann::json j;
  in >> j;
  RunManifest m;
  m.subcommand = j.at("subcommand").get<std::string>();
  m.parameters = j.at("parameters").get<std::map<std::string, std::string>>();
  m.seed = j.at("seed").get<std::uint64_t>();
  m.tool_version = j.at("tool_version").get<std::string>();
  m.wall_time_ms = j.at("wall_time_ms").get<double>();
  m.outputs = j.at("outputs").get<std::vector<std::string>>();
  return m;
}

void RunManifest::write(const std::string& path) const {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot write manifest " + path);
  out << to_json();
}

void SvgWriter::add_polyline(const std::vector<std::pair<double, double>>& pts,
                             const std::string& stroke) {
  shapes_.push_back({Shape::kPolyline, pts, stroke, "none", ""});
}

void SvgWriter::add_polygon(const std::vector<std::pair<double, double>>& pts,
                            const std::string& stroke, const std::string& fill) {
  shapes_.push_back({Shape::kPolygon, pts, stroke, fill, ""});
}

void SvgWriter::add_text(double x, double y, const std::string& text) {
  shapes_.push_back({Shape::kText, {{x, y}}, "", "", text});
}

void SvgWriter::write(const std::string& path) const {
  double xmin = std::numeric_limits<double>::max(), xmax = -xmin;
  double ymin = xmin, ymax = -xmin;
  for (const auto& s : shapes_)
    for (const auto& [x, y] : s.pts) {
      xmin = std::min(xmin, x);
      xmax = std::max(xmax, x);
      ymin = std::min(ymin, y);
      ymax = std::max(ymax, y);
    }
  if (shapes_.empty() || xmin > xmax) {
    xmin = ymin = 0;
    xmax = ymax = 1;
  }
  if (xmax == xmin) xmax = xmin + 1;
  if (ymax == ymin) ymax = ymin + 1;
  const double margin = 40;
  auto tx = [&](double x) { return margin + (x - xmin) / (xmax - xmin) * (w_ - 2 * margin); };
  auto ty = [&](double y) { return h_ - margin - (y - ymin) / (ymax - ymin) * (h_ - 2 * margin); };

  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot write svg " + path);
  out << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << w_ << "\" height=\"" << h_
      << "\" viewBox=\"0 0 " << w_ << " " << h_ << "\">\n";
  out << "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";
  for (const auto& s : shapes_) {
    if (s.kind == Shape::kText) {
      out << "<text x=\"" << tx(s.pts[0].first) << "\" y=\"" << ty(s.pts[0].second)
          << "\" font-size=\"12\" font-family=\"monospace\">" << s.text << "</text>\n";
      continue;
    }
    out << (s.kind == Shape::kPolyline ? "<polyline" : "<polygon") << " points=\"";
    for (const auto& [x, y] : s.pts) out << tx(x) << "," << ty(y) << " ";
    out << "\" stroke=\"" << s.stroke << "\" fill=\"" << s.fill
        << "\" stroke-width=\"1.2\" vector-effect=\"non-scaling-stroke\"/>\n";
  }
  out << "</svg>\n";
}

void write_polygon_csv(const std::string& path, const std::vector<ConvexPolygon>& polys) {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot write " + path);
  out << "k,vertex_index,a,b\n";
  for (std::size_t k = 0; k < polys.size(); ++k) {
    const auto& v = polys[k].vertices();
    for (std::size_t i = 0; i < v.size(); ++i)
      out << (k + 1) << "," << i << "," << format_real(v[i].a) << "," << format_real(v[i].b)
          << "\n";
  }
}

void write_snapshot_svg(const std::string& path, const std::vector<ConvexPolygon>& polys,
                        double bound) {
  SvgWriter svg(640, 640);
  svg.add_polygon({{0, 0}, {bound, 0}, {bound, bound}, {0, bound}}, "black", "none");
  const char* colors[] = {"#1f77b4", "#ff7f0e", "#2ca02c", "#d62728", "#9467bd", "#8c564b"};
  for (std::size_t k = 0; k < polys.size(); ++k) {
    std::vector<std::pair<double, double>> pts;
    for (const auto& p : polys[k].vertices()) pts.emplace_back(p.a, p.b);
    if (!pts.empty()) svg.add_polygon(pts, colors[k % 6], "none");
  }
  svg.add_text(0, bound, "S_K outer approximations, K = 1.." + std::to_string(polys.size()));
  svg.write(path);
}

}  // namespace monosum
