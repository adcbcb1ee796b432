#pragma once

#include <cstddef>
#include <cstdint>
#include <filesystem>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "sortdel/convex_hull.hpp"
#include "sortdel/delaunay.hpp"
#include "sortdel/errors.hpp"

namespace sortdel::io {

enum class OutputFormat { Edges, Triangles, Off, Svg };

std::optional<OutputFormat> parse_format(std::string_view name);

struct GeneratorSpec {
    std::size_t n = 0;
    std::uint64_t seed = 0;
};

class ConfigError : public Error {
public:
    using Error::Error;
};

/// Everything one CLI invocation needs.
struct RunConfig {
    std::optional<std::filesystem::path> input;
    std::optional<GeneratorSpec> generator;
    OutputFormat format = OutputFormat::Triangles;
    std::optional<std::filesystem::path> out;
    bool counters = false;
    bool verify = false;
    std::vector<std::size_t> sizes;
    std::size_t reps = 5;
    bool parallel = false;

    /// Exactly one input source; n >= 3 when a triangulation is requested.
    void validate(bool needs_triangulation) const;
};

/// One point per line, `x,y` or `x y`; blank lines and `#` comments skipped.
/// Throws ParseError or NonFiniteCoordinate with 1-based line numbers.
std::vector<Point2> parse_points(std::string_view text);
std::vector<Point2> ingest(const std::filesystem::path& path);

/// Shortest round-trip decimal, `x,y` per line.
std::string format_points(std::span<const Point2> pts);

/// Uniform in [0,1)^2, reproducible across platforms for a given seed.
std::vector<Point2> generate_uniform(std::size_t n, std::uint64_t seed);

/// `i j k` per triangle in input indexing, i < j < k, lines sorted.
std::string emit_triangles(const PointSet& ps, const TriangulationMap& tri);
/// `i j` per edge in input indexing, i < j, lines sorted.
std::string emit_edges(const PointSet& ps, const TriangulationMap& tri);
/// OFF with every input point (z = 0) and CCW faces.
std::string emit_off(const PointSet& ps, const TriangulationMap& tri);
std::string emit_svg(const PointSet& ps, const TriangulationMap& tri, const HullChain& hull);
/// Hull vertices in input indexing, one per line, counterclockwise.
std::string emit_hull(const PointSet& ps, const HullChain& hull);

std::string format_counters(const OpCounters& c);

struct BenchConfig {
    std::vector<std::size_t> sizes;
    std::size_t reps = 5;
    std::uint64_t seed = 1;
    bool parallel = false;
};

struct BenchRow {
    std::size_t n = 0;
    std::int64_t sort_ns = 0;
    std::int64_t build_ns = 0;
    std::uint64_t to_left_calls = 0;
    std::uint64_t in_circle_calls = 0;
};

struct HullBenchRow {
    std::size_t n = 0;
    std::int64_t hull_ns = 0;
    std::int64_t monotone_chain_ns = 0;
    std::uint64_t to_left_calls = 0;
};

struct BenchReport {
    std::vector<BenchRow> rows;
    std::vector<HullBenchRow> hull_rows;

    /// Triangulation CSV, a blank line, then the hull comparison CSV.
    std::string to_csv() const;
};

/// Throws ConfigError unless sizes ascend and reps >= 3.
BenchReport bench(const BenchConfig& config);

}  // namespace sortdel::io
