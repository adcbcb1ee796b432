#include "sortdel/io.hpp"

#include <algorithm>
#include <array>
#include <charconv>
#include <cmath>
#include <fstream>
#include <sstream>

namespace sortdel::io {

namespace {

std::string num(double v)
{
    std::array<char, 32> buf{};
    auto [end, ec] = std::to_chars(buf.data(), buf.data() + buf.size(), v);
    return std::string(buf.data(), end);
}

std::array<std::size_t, 3> original_triangle(const PointSet& ps, const Triangle& t)
{
    std::array<std::size_t, 3> o{ps.original_index[t[0]], ps.original_index[t[1]],
                                 ps.original_index[t[2]]};
    std::sort(o.begin(), o.end());
    return o;
}

std::vector<std::array<std::size_t, 3>> original_triangles(const PointSet& ps,
                                                           const TriangulationMap& tri)
{
    std::vector<std::array<std::size_t, 3>> out;
    for (const Triangle& t : tri.triangles()) out.push_back(original_triangle(ps, t));
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<std::pair<std::size_t, std::size_t>> original_edges(const PointSet& ps,
                                                                const TriangulationMap& tri)
{
    std::vector<std::pair<std::size_t, std::size_t>> out;
    out.reserve(tri.edge_count());
    for (const EdgeKey& e : tri.edges()) {
        const auto a = ps.original_index[e.lo];
        const auto b = ps.original_index[e.hi];
        out.emplace_back(std::min(a, b), std::max(a, b));
    }
    std::sort(out.begin(), out.end());
    return out;
}

const Point2& input_point(const PointSet& ps, std::size_t i) { return ps.points[ps.input_to_sorted[i]]; }

}  // namespace

std::optional<OutputFormat> parse_format(std::string_view name)
{
    if (name == "edges") return OutputFormat::Edges;
    if (name == "triangles") return OutputFormat::Triangles;
    if (name == "off") return OutputFormat::Off;
    if (name == "svg") return OutputFormat::Svg;
    return std::nullopt;
}

void RunConfig::validate(bool needs_triangulation) const
{
    if (input.has_value() == generator.has_value()) {
        throw ConfigError("exactly one of --input or --gen is required");
    }
    if (needs_triangulation && generator && generator->n < 3) {
        throw ConfigError("--gen needs at least 3 points");
    }
}

std::vector<Point2> parse_points(std::string_view text)
{
    std::vector<Point2> pts;
    std::size_t line_no = 0;
    while (!text.empty()) {
        ++line_no;
        const auto nl = text.find('\n');
        std::string_view line = text.substr(0, nl);
        text = nl == std::string_view::npos ? std::string_view{} : text.substr(nl + 1);
        if (const auto hash = line.find('#'); hash != std::string_view::npos) line = line.substr(0, hash);

        std::array<double, 2> xy{};
        std::size_t pos = 0;
        int fields = 0;
        const auto is_sep = [](char ch) { return ch == ' ' || ch == '\t' || ch == '\r'; };
        bool comma_seen = false;
        for (;;) {
            while (pos < line.size() && is_sep(line[pos])) ++pos;
            if (pos == line.size()) break;
            if (fields == 2) throw ParseError(line_no, pos + 1, "trailing characters");
            if (fields == 1 && !comma_seen && line[pos] == ',') {
                comma_seen = true;
                ++pos;
                continue;
            }
            const char* first = line.data() + pos;
            const char* last = line.data() + line.size();
            auto [ptr, ec] = std::from_chars(first, last, xy[fields]);
            if (ec != std::errc{} || (ptr != last && !is_sep(*ptr) && *ptr != ',')) {
                throw ParseError(line_no, pos + 1, "expected a number");
            }
            pos = static_cast<std::size_t>(ptr - line.data());
            ++fields;
        }
        if (fields == 0 && !comma_seen) continue;
        if (fields != 2) throw ParseError(line_no, pos + 1, "expected two coordinates");
        if (!std::isfinite(xy[0]) || !std::isfinite(xy[1])) throw NonFiniteCoordinate(line_no);
        pts.push_back({xy[0], xy[1]});
    }
    return pts;
}

std::vector<Point2> ingest(const std::filesystem::path& path)
{
    std::ifstream in(path, std::ios::binary);
    if (!in) throw Error("cannot open " + path.string());
    std::ostringstream ss;
    ss << in.rdbuf();
    return parse_points(ss.str());
}

std::string format_points(std::span<const Point2> pts)
{
    std::string out;
    for (const Point2& p : pts) {
        out += num(p.x);
        out += ',';
        out += num(p.y);
        out += '\n';
    }
    return out;
}

std::vector<Point2> generate_uniform(std::size_t n, std::uint64_t seed)
{
    // splitmix64: fixed bit stream, unlike the std distributions.
    std::uint64_t state = seed;
    const auto next = [&state] {
        std::uint64_t z = (state += 0x9e3779b97f4a7c15ULL);
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
        return z ^ (z >> 31);
    };
    const auto unit = [&] { return static_cast<double>(next() >> 11) * 0x1.0p-53; };
    std::vector<Point2> pts(n);
    for (auto& p : pts) {
        p.x = unit();
        p.y = unit();
    }
    return pts;
}

std::string emit_triangles(const PointSet& ps, const TriangulationMap& tri)
{
    std::string out;
    for (const auto& t : original_triangles(ps, tri)) {
        out += std::to_string(t[0]) + ' ' + std::to_string(t[1]) + ' ' + std::to_string(t[2]) + '\n';
    }
    return out;
}

std::string emit_edges(const PointSet& ps, const TriangulationMap& tri)
{
    std::string out;
    for (const auto& [a, b] : original_edges(ps, tri)) out += std::to_string(a) + ' ' + std::to_string(b) + '\n';
    return out;
}

std::string emit_off(const PointSet& ps, const TriangulationMap& tri)
{
    const auto tris = original_triangles(ps, tri);
    const std::size_t nv = ps.input_to_sorted.size();
    std::string out = "OFF\n" + std::to_string(nv) + ' ' + std::to_string(tris.size()) + " 0\n";
    for (std::size_t i = 0; i < nv; ++i) {
        const Point2& p = input_point(ps, i);
        out += num(p.x) + ' ' + num(p.y) + " 0\n";
    }
    for (auto t : tris) {
        if (cross(input_point(ps, t[0]), input_point(ps, t[1]), input_point(ps, t[2])) < 0) {
            std::swap(t[1], t[2]);
        }
        out += "3 " + std::to_string(t[0]) + ' ' + std::to_string(t[1]) + ' ' + std::to_string(t[2]) + '\n';
    }
    return out;
}

std::string emit_svg(const PointSet& ps, const TriangulationMap& tri, const HullChain& hull)
{
    double minx = 0, maxx = 0, miny = 0, maxy = 0;
    if (ps.size() > 0) {
        minx = maxx = ps.points[0].x;
        miny = maxy = ps.points[0].y;
        for (const Point2& p : ps.points) {
            minx = std::min(minx, p.x);
            maxx = std::max(maxx, p.x);
            miny = std::min(miny, p.y);
            maxy = std::max(maxy, p.y);
        }
    }
    double extent = std::max(maxx - minx, maxy - miny);
    if (!(extent > 0)) extent = 1.0;
    const double margin = 0.05 * extent;
    const double stroke = extent / 500.0;

    // SVG y grows downward; negate so the picture keeps its orientation.
    std::string out = "<svg xmlns=\"http://www.w3.org/2000/svg\" viewBox=\"" + num(minx - margin) + ' ' +
                      num(-maxy - margin) + ' ' + num(maxx - minx + 2 * margin) + ' ' +
                      num(maxy - miny + 2 * margin) + "\">\n";
    out += "<g class=\"edges\" stroke=\"#808080\" stroke-width=\"" + num(stroke) + "\">\n";
    for (const auto& [a, b] : original_edges(ps, tri)) {
        const Point2& p = input_point(ps, a);
        const Point2& q = input_point(ps, b);
        out += "<line x1=\"" + num(p.x) + "\" y1=\"" + num(-p.y) + "\" x2=\"" + num(q.x) + "\" y2=\"" +
               num(-q.y) + "\"/>\n";
    }
    out += "</g>\n<polygon class=\"hull\" fill=\"none\" stroke=\"#c00000\" stroke-width=\"" +
           num(2 * stroke) + "\" points=\"";
    for (std::size_t i = 0; i < hull.indices.size(); ++i) {
        const Point2& p = ps[hull.indices[i]];
        out += (i ? " " : "") + num(p.x) + ',' + num(-p.y);
    }
    out += "\"/>\n<g class=\"points\" fill=\"#000000\">\n";
    for (const Point2& p : ps.points) {
        out += "<circle cx=\"" + num(p.x) + "\" cy=\"" + num(-p.y) + "\" r=\"" + num(2 * stroke) + "\"/>\n";
    }
    out += "</g>\n</svg>\n";
    return out;
}

std::string emit_hull(const PointSet& ps, const HullChain& hull)
{
    std::string out;
    for (const Index v : hull.indices) out += std::to_string(ps.original_index[v]) + '\n';
    return out;
}

std::string format_counters(const OpCounters& c)
{
    std::ostringstream os;
    os << "to_left_calls=" << c.to_left_calls << '\n'
       << "in_circle_calls=" << c.in_circle_calls << '\n'
       << "in_circle_fast_path=" << c.in_circle_fast_path << '\n'
       << "k1=" << c.k1 << '\n'
       << "h=" << c.h << '\n'
       << "delta_l=" << c.delta_l << '\n'
       << "l=" << c.l << '\n'
       << "insertions=" << c.insertions << '\n';
    return os.str();
}

std::string BenchReport::to_csv() const
{
    std::ostringstream os;
    os << "n,sort_ns,build_ns,to_left_calls,in_circle_calls\n";
    for (const auto& r : rows) {
        os << r.n << ',' << r.sort_ns << ',' << r.build_ns << ',' << r.to_left_calls << ','
           << r.in_circle_calls << '\n';
    }
    os << "\nn,hull_ns,monotone_chain_ns,hull_to_left_calls\n";
    for (const auto& r : hull_rows) {
        os << r.n << ',' << r.hull_ns << ',' << r.monotone_chain_ns << ',' << r.to_left_calls << '\n';
    }
    return os.str();
}

}  // namespace sortdel::io
