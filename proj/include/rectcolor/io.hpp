#pragma once

#include <cstdint>
#include <random>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "rectcolor/coloring.hpp"
#include "rectcolor/geom.hpp"

namespace rectcolor {

struct LoadOptions {
  /// Weighted-packing mode: rectangles of weight 0 are discarded.
  bool drop_zero_weights = false;
};

/// {"rectangles": [{"id", "x1", "y1", "x2", "y2", "weight"?}, ...]} with
/// numbers as decimal or fraction strings. Throws ParseError / ValidationError.
Instance parse_instance(std::string_view json_text, LoadOptions options = {});
Instance load_instance(const std::string& path, LoadOptions options = {});

/// Canonical document: keys sorted, numbers in canonical rational form,
/// weight always present, two-space indentation, trailing newline.
std::string dump_instance(const Instance& inst);
void save_instance(const Instance& inst, const std::string& path);

enum class GeneratorKind { Uniform, Squares, Concentric, Vertical, CrossGrid };
enum class WeightMode { Unit, UniformRandom };

GeneratorKind parse_generator_kind(std::string_view name);
const char* to_string(GeneratorKind kind);

struct GeneratorSpec {
  GeneratorKind kind = GeneratorKind::Uniform;
  int n = 0;
  std::uint64_t seed = 0;
  long grid = 10000;
  WeightMode weights = WeightMode::Unit;
};

/// Deterministic: std::mt19937_64 seeded with `seed`, bounded draws by
/// rejection sampling on the raw 64-bit output (no std distributions).
Instance generate(const GeneratorSpec& spec);

/// Bounded uniform integers from std::mt19937_64, portable across standard
/// libraries.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}
  std::uint64_t next() { return engine_(); }
  /// Uniform in [lo, hi].
  long uniform(long lo, long hi);

 private:
  std::mt19937_64 engine_;
};

/// SVG 1.1 drawing: one <rect> per rectangle (id as element id), 40% fill
/// opacity, 12-hue palette indexed by color, thick stroke on highlighted ids.
std::string render_svg(const Instance& inst, const Coloring* coloring = nullptr,
                       std::span<const int> highlight = {});

}  // namespace rectcolor
