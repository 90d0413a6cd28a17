#include "rectcolor/io.hpp"

#include <json.hpp>

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <sstream>
#include <unordered_set>

#include "rectcolor/errors.hpp"

namespace rectcolor {

using nlohmann::json;

namespace {

Scalar field_scalar(const json& obj, const char* key, std::size_t index, const char* fallback) {
  std::string where = "rectangles[" + std::to_string(index) + "]." + key;
  auto it = obj.find(key);
  if (it == obj.end()) {
    if (fallback) return parse_scalar(fallback);
    throw ParseError(where + ": missing");
  }
  try {
    if (it->is_string()) return parse_scalar(it->get<std::string>());
    if (it->is_number_integer()) return Scalar(std::to_string(it->get<long long>()));
  } catch (const std::invalid_argument& e) {
    throw ParseError(where + ": " + e.what());
  }
  throw ParseError(where + ": expected a decimal or fraction string");
}

std::string fmt(double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.10g", v);
  return buf;
}

std::string xml_escape(const std::string& s) {
  std::string out;
  for (char c : s) {
    switch (c) {
      case '&': out += "&amp;"; break;
      case '<': out += "&lt;"; break;
      case '>': out += "&gt;"; break;
      case '"': out += "&quot;"; break;
      default: out += c;
    }
  }
  return out;
}

std::pair<long, long> ordered_pair(Rng& rng, long lo, long hi) {
  long a = rng.uniform(lo, hi), b = rng.uniform(lo, hi);
  if (a > b) std::swap(a, b);
  if (a == b) {
    if (b < hi)
      ++b;
    else
      --a;
  }
  return {a, b};
}

Rect make_rect(int index, long x1, long y1, long x2, long y2) {
  Rect r;
  r.id = "r" + std::to_string(index);
  r.x_lo = x1;
  r.x_hi = x2;
  r.y_lo = y1;
  r.y_hi = y2;
  return r;
}

}  // namespace

long Rng::uniform(long lo, long hi) {
  const std::uint64_t span = static_cast<std::uint64_t>(hi - lo) + 1;
  if (span == 0) return static_cast<long>(next());
  const std::uint64_t limit = (~std::uint64_t{0} / span) * span;
  std::uint64_t v;
  do v = next();
  while (v >= limit);
  return lo + static_cast<long>(v % span);
}

Instance parse_instance(std::string_view json_text, LoadOptions options) {
  json doc;
  try {
    doc = json::parse(json_text.begin(), json_text.end());
  } catch (const json::parse_error& e) {
    throw ParseError(std::string("malformed JSON: ") + e.what());
  }
  if (!doc.is_object() || !doc.contains("rectangles") || !doc["rectangles"].is_array())
    throw ParseError("document must be an object with a \"rectangles\" array");
  std::vector<Rect> rects;
  std::size_t index = 0;
  for (const json& item : doc["rectangles"]) {
    if (!item.is_object()) throw ParseError("rectangles[" + std::to_string(index) + "]: expected an object");
    Rect r;
    auto id = item.find("id");
    if (id == item.end() || !id->is_string())
      throw ParseError("rectangles[" + std::to_string(index) + "].id: missing or not a string");
    r.id = id->get<std::string>();
    r.x_lo = field_scalar(item, "x1", index, nullptr);
    r.y_lo = field_scalar(item, "y1", index, nullptr);
    r.x_hi = field_scalar(item, "x2", index, nullptr);
    r.y_hi = field_scalar(item, "y2", index, nullptr);
    r.weight = field_scalar(item, "weight", index, "1");
    if (!(r.x_lo < r.x_hi)) throw ValidationError("rectangle '" + r.id + "': x1 must be < x2");
    if (!(r.y_lo < r.y_hi)) throw ValidationError("rectangle '" + r.id + "': y1 must be < y2");
    if (r.weight < 0) throw ValidationError("rectangle '" + r.id + "': negative weight");
    ++index;
    if (options.drop_zero_weights && r.weight == 0) continue;
    rects.push_back(std::move(r));
  }
  return Instance(std::move(rects));
}

Instance load_instance(const std::string& path, LoadOptions options) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ParseError("cannot open '" + path + "'");
  std::stringstream buf;
  buf << in.rdbuf();
  return parse_instance(buf.str(), options);
}

std::string dump_instance(const Instance& inst) {
  json rects = json::array();
  for (const Rect& r : inst.rects())
    rects.push_back({{"id", r.id},
                     {"x1", to_string(r.x_lo)},
                     {"y1", to_string(r.y_lo)},
                     {"x2", to_string(r.x_hi)},
                     {"y2", to_string(r.y_hi)},
                     {"weight", to_string(r.weight)}});
  json doc = {{"rectangles", rects}};
  return doc.dump(2) + "\n";
}

void save_instance(const Instance& inst, const std::string& path) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw ParseError("cannot write '" + path + "'");
  out << dump_instance(inst);
}

GeneratorKind parse_generator_kind(std::string_view name) {
  if (name == "uniform") return GeneratorKind::Uniform;
  if (name == "squares") return GeneratorKind::Squares;
  if (name == "concentric") return GeneratorKind::Concentric;
  if (name == "vertical") return GeneratorKind::Vertical;
  if (name == "crossgrid") return GeneratorKind::CrossGrid;
  throw std::invalid_argument("unknown generator kind '" + std::string(name) + "'");
}

const char* to_string(GeneratorKind kind) {
  switch (kind) {
    case GeneratorKind::Uniform: return "uniform";
    case GeneratorKind::Squares: return "squares";
    case GeneratorKind::Concentric: return "concentric";
    case GeneratorKind::Vertical: return "vertical";
    case GeneratorKind::CrossGrid: return "crossgrid";
  }
  return "?";
}

Instance generate(const GeneratorSpec& spec) {
  Rng rng(spec.seed);
  const long g = std::max(spec.grid, 4L);
  const int n = std::max(spec.n, 0);
  std::vector<Rect> rects;
  rects.reserve(n);

  switch (spec.kind) {
    case GeneratorKind::Uniform:
      for (int i = 0; i < n; ++i) {
        auto [x1, x2] = ordered_pair(rng, 0, g);
        auto [y1, y2] = ordered_pair(rng, 0, g);
        rects.push_back(make_rect(i, x1, y1, x2, y2));
      }
      break;
    case GeneratorKind::Squares: {
      const long max_side = std::max(1L, g / 8);
      for (int i = 0; i < n; ++i) {
        long side = rng.uniform(1, max_side);
        long x = rng.uniform(0, g - side), y = rng.uniform(0, g - side);
        rects.push_back(make_rect(i, x, y, x + side, y + side));
      }
      break;
    }
    case GeneratorKind::Concentric: {
      // Clusters of rectangles around shared centers; clusters never meet.
      const int clusters = std::max(1, (n + 7) / 8);
      const int per_row = static_cast<int>(std::ceil(std::sqrt(static_cast<double>(clusters))));
      const long cell = std::max(4L, g / per_row);
      const long reach = std::max(1L, cell / 2 - 1);
      for (int i = 0; i < n; ++i) {
        long c = rng.uniform(0, clusters - 1);
        long cx = (c % per_row) * cell + cell / 2, cy = (c / per_row) * cell + cell / 2;
        long hw = rng.uniform(1, reach), hh = rng.uniform(1, reach);
        rects.push_back(make_rect(i, cx - hw, cy - hh, cx + hw, cy + hh));
      }
      break;
    }
    case GeneratorKind::Vertical: {
      // Nested y-ranges: every intersecting pair is vertical.
      const long h = std::max(1L, g / 10);
      for (int i = 0; i < n; ++i) {
        auto [x1, x2] = ordered_pair(rng, 0, g);
        rects.push_back(make_rect(i, x1, -i, x2, h + i));
      }
      break;
    }
    case GeneratorKind::CrossGrid: {
      // ceil(n/2) wide strips crossed by the remaining tall strips.
      const int wide = (n + 1) / 2, tall = n - wide;
      const long q_wide = std::max(1L, g / (2L * wide + 1));
      const long q_tall = std::max(1L, g / (2L * tall + 1));
      const long extent = std::max({g, q_wide * (2L * wide + 1), q_tall * (2L * tall + 1)});
      for (int i = 0; i < wide; ++i)
        rects.push_back(make_rect(i, 0, (2L * i + 1) * q_wide, extent, (2L * i + 2) * q_wide));
      for (int j = 0; j < tall; ++j)
        rects.push_back(make_rect(wide + j, (2L * j + 1) * q_tall, 0, (2L * j + 2) * q_tall, extent));
      break;
    }
  }
  if (spec.weights == WeightMode::UniformRandom)
    for (Rect& r : rects) r.weight = rng.uniform(1, 100);
  return Instance(std::move(rects));
}

std::string render_svg(const Instance& inst, const Coloring* coloring, std::span<const int> highlight) {
  static constexpr const char* kPalette[12] = {"#1f77b4", "#ff7f0e", "#2ca02c", "#d62728",
                                               "#9467bd", "#8c564b", "#e377c2", "#7f7f7f",
                                               "#bcbd22", "#17becf", "#393b79", "#637939"};
  std::ostringstream out;
  out << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n";
  if (inst.empty()) {
    out << "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" width=\"0\" height=\"0\" "
           "viewBox=\"0 0 1 1\"/>\n";
    return out.str();
  }
  double min_x = to_double(inst.rect(0).x_lo), max_x = to_double(inst.rect(0).x_hi);
  double min_y = to_double(inst.rect(0).y_lo), max_y = to_double(inst.rect(0).y_hi);
  for (const Rect& r : inst.rects()) {
    min_x = std::min(min_x, to_double(r.x_lo));
    max_x = std::max(max_x, to_double(r.x_hi));
    min_y = std::min(min_y, to_double(r.y_lo));
    max_y = std::max(max_y, to_double(r.y_hi));
  }
  const double span = std::max(max_x - min_x, max_y - min_y);
  const double margin = 0.02 * span, stroke = 0.002 * span;
  const std::unordered_set<int> marked(highlight.begin(), highlight.end());
  out << "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" width=\"800\" height=\""
      << fmt(800.0 * (max_y - min_y + 2 * margin) / (max_x - min_x + 2 * margin)) << "\" viewBox=\""
      << fmt(min_x - margin) << ' ' << fmt(-max_y - margin) << ' ' << fmt(max_x - min_x + 2 * margin)
      << ' ' << fmt(max_y - min_y + 2 * margin) << "\">\n";
  for (int i = 0; i < inst.size(); ++i) {
    const Rect& r = inst.rect(i);
    int c = coloring && i < static_cast<int>(coloring->color.size()) ? coloring->color[i] : -1;
    const char* fill = c >= 0 ? kPalette[c % 12] : "#cccccc";
    // y is flipped so that larger coordinates are drawn higher up.
    out << "  <rect id=\"" << xml_escape(r.id) << "\" x=\"" << fmt(to_double(r.x_lo)) << "\" y=\""
        << fmt(-to_double(r.y_hi)) << "\" width=\"" << fmt(to_double(r.width())) << "\" height=\""
        << fmt(to_double(r.height())) << "\" fill=\"" << fill
        << "\" fill-opacity=\"0.4\" stroke=\"black\" stroke-width=\""
        << fmt(marked.count(i) ? 4 * stroke : stroke) << "\"/>\n";
  }
  out << "</svg>\n";
  return out.str();
}

}  // namespace rectcolor
