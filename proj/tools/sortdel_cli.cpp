#include <fstream>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "sortdel/delaunay.hpp"
#include "sortdel/io.hpp"
#include "sortdel/verification.hpp"

namespace {

using namespace sortdel;

constexpr int kOk = 0;
constexpr int kInputError = 1;
constexpr int kDegenerate = 2;
constexpr int kVerifyFailed = 3;

// Above this size the empty-circle check switches to the local edge test.
constexpr std::size_t kGlobalCheckMax = 2000;

std::vector<Point2> load(const io::RunConfig& cfg)
{
    if (cfg.input) return io::ingest(*cfg.input);
    return io::generate_uniform(cfg.generator->n, cfg.generator->seed);
}

void write(const io::RunConfig& cfg, const std::string& text)
{
    if (!cfg.out) {
        std::cout << text;
        return;
    }
    std::ofstream f(*cfg.out, std::ios::binary);
    if (!f) throw Error("cannot write " + cfg.out->string());
    f << text;
}

std::uint64_t seed_of(const io::RunConfig& cfg) { return cfg.generator ? cfg.generator->seed : 0; }

std::vector<verify::VerificationReport> verify_triangulation(const Triangulation& t, std::uint64_t seed)
{
    std::vector<verify::VerificationReport> reports;
    const PointSet& ps = t.points;
    reports.push_back(verify::check_map_consistency(ps, t.map, seed));
    reports.push_back(verify::check_structure(ps.size(), t.hull.size(), t.map.triangle_count(),
                                              t.map.edge_count(), seed));
    if (ps.size() <= kGlobalCheckMax) {
        reports.push_back(verify::check_empty_circumcircle(ps, t.map, 1e-9, seed));
    } else {
        reports.push_back(verify::check_locally_delaunay(ps, t.map, 1e-9, seed));
    }
    reports.push_back(verify::check_hull_encloses(ps, t.hull, seed));
    reports.push_back(verify::check_hull_baseline(ps, t.hull, seed));
    if (ps.size() <= verify::kBruteForceMax) reports.push_back(verify::check_brute_force(ps, t.map, seed));

    const HullResult hull = convex_hull(ps);
    reports.push_back(verify::audit_counts(hull.counters, ps.size(), seed));

    verify::VerificationReport guard;
    guard.property = "erosion_guard_unused";
    guard.seed = seed;
    guard.measured = static_cast<std::int64_t>(t.ear_skips);
    guard.expected = 0;
    guard.pass = t.ear_skips == 0;
    reports.push_back(guard);
    return reports;
}

int run_gen(const io::RunConfig& cfg)
{
    if (!cfg.generator) throw io::ConfigError("gen requires --gen N");
    write(cfg, io::format_points(io::generate_uniform(cfg.generator->n, cfg.generator->seed)));
    return kOk;
}

int run_hull(const io::RunConfig& cfg)
{
    cfg.validate(false);
    const HullResult r = convex_hull(load(cfg));
    write(cfg, io::emit_hull(r.points, r.hull));
    if (cfg.counters) std::cerr << io::format_counters(r.counters);
    return r.hull.degenerate ? kDegenerate : kOk;
}

int run_tri(const io::RunConfig& cfg)
{
    cfg.validate(true);
    TriangulateOptions opts;
    opts.check_opposite_side = cfg.verify;
    const Triangulation t = triangulate(load(cfg), opts);
    switch (cfg.format) {
        case io::OutputFormat::Edges: write(cfg, io::emit_edges(t.points, t.map)); break;
        case io::OutputFormat::Triangles: write(cfg, io::emit_triangles(t.points, t.map)); break;
        case io::OutputFormat::Off: write(cfg, io::emit_off(t.points, t.map)); break;
        case io::OutputFormat::Svg: write(cfg, io::emit_svg(t.points, t.map, t.hull)); break;
    }
    if (cfg.counters) std::cerr << io::format_counters(t.counters);
    if (cfg.verify) {
        bool ok = true;
        for (const auto& r : verify_triangulation(t, seed_of(cfg))) {
            std::cerr << r.to_line() << '\n';
            ok = ok && r.pass;
        }
        if (!ok) return kVerifyFailed;
    }
    return kOk;
}

int run_verify(const io::RunConfig& cfg)
{
    cfg.validate(true);
    TriangulateOptions opts;
    opts.check_opposite_side = true;
    const Triangulation t = triangulate(load(cfg), opts);
    bool ok = true;
    std::ostringstream os;
    for (const auto& r : verify_triangulation(t, seed_of(cfg))) {
        os << r.to_line() << '\n';
        ok = ok && r.pass;
    }
    write(cfg, os.str());
    if (cfg.counters) std::cerr << io::format_counters(t.counters);
    return ok ? kOk : kVerifyFailed;
}

int run_bench(const io::RunConfig& cfg)
{
    io::BenchConfig b;
    b.sizes = cfg.sizes;
    b.reps = cfg.reps;
    b.parallel = cfg.parallel;
    if (cfg.generator) b.seed = cfg.generator->seed;
    write(cfg, io::bench(b).to_csv());
    return kOk;
}

}  // namespace

int main(int argc, char** argv)
{
    CLI::App app{"Sorted incremental Delaunay triangulation and convex hull"};
    app.require_subcommand(1);

    io::RunConfig cfg;
    std::string input, out, format = "triangles";
    std::size_t gen_n = 0;
    std::uint64_t seed = 1;
    std::vector<std::size_t> sizes{10000, 20000, 40000};

    const auto add_source = [&](CLI::App* sub) {
        auto* in = sub->add_option("--input", input, "Point file: `x,y` or `x y` per line");
        auto* g = sub->add_option("--gen", gen_n, "Generate N uniform points in the unit square");
        in->excludes(g);
        sub->add_option("--seed", seed, "Generator seed")->capture_default_str();
    };
    const auto add_common = [&](CLI::App* sub) {
        sub->add_option("--out", out, "Output path (default stdout)");
        sub->add_flag("--counters", cfg.counters, "Print operation counters to stderr");
    };

    auto* hull = app.add_subcommand("hull", "Convex hull vertices, counterclockwise");
    add_source(hull);
    add_common(hull);

    auto* tri = app.add_subcommand("tri", "Delaunay triangulation");
    add_source(tri);
    add_common(tri);
    tri->add_option("--format", format, "edges|triangles|off|svg")
        ->check(CLI::IsMember({"edges", "triangles", "off", "svg"}))
        ->capture_default_str();
    tri->add_flag("--verify", cfg.verify, "Run the oracle checks after building");

    auto* ver = app.add_subcommand("verify", "Build and check every property, one PROP line each");
    add_source(ver);
    add_common(ver);

    auto* bench = app.add_subcommand("bench", "Timing and counter CSV for uniform inputs");
    bench->add_option("--sizes", sizes, "Ascending sizes")->delimiter(',');
    bench->add_option("--reps", cfg.reps, "Repetitions per size (>= 3)")->capture_default_str();
    bench->add_option("--seed", seed, "Generator seed")->capture_default_str();
    bench->add_flag("--parallel", cfg.parallel, "Run sizes concurrently");
    bench->add_option("--out", out, "Output path (default stdout)");

    auto* gen = app.add_subcommand("gen", "Write uniform random points");
    gen->add_option("--gen", gen_n, "Number of points")->required();
    gen->add_option("--seed", seed, "Generator seed")->capture_default_str();
    gen->add_option("--out", out, "Output path (default stdout)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? kOk : kInputError;
    }

    if (!input.empty()) cfg.input = input;
    if (gen_n > 0 || gen->parsed()) cfg.generator = io::GeneratorSpec{gen_n, seed};
    if (bench->parsed()) cfg.generator = io::GeneratorSpec{0, seed};
    if (!out.empty()) cfg.out = out;
    cfg.format = *io::parse_format(format);
    cfg.sizes = sizes;

    try {
        if (gen->parsed()) return run_gen(cfg);
        if (hull->parsed()) return run_hull(cfg);
        if (tri->parsed()) return run_tri(cfg);
        if (ver->parsed()) return run_verify(cfg);
        return run_bench(cfg);
    } catch (const DegenerateInput& e) {
        std::cerr << "degenerate input: " << e.what() << '\n';
        return kDegenerate;
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kInputError;
    }
}
