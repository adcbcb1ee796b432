#include <algorithm>
#include <chrono>
#include <future>

#include "sortdel/io.hpp"
#include "sortdel/verification.hpp"

namespace sortdel::io {

namespace {

using Clock = std::chrono::steady_clock;

template <class F>
std::int64_t time_ns(F&& f)
{
    const auto t0 = Clock::now();
    f();
    return std::chrono::duration_cast<std::chrono::nanoseconds>(Clock::now() - t0).count();
}

std::int64_t median(std::vector<std::int64_t> v)
{
    std::sort(v.begin(), v.end());
    const std::size_t m = v.size() / 2;
    return v.size() % 2 ? v[m] : (v[m - 1] + v[m]) / 2;
}

std::pair<BenchRow, HullBenchRow> run_size(std::size_t n, std::size_t reps, std::uint64_t seed)
{
    const auto raw = generate_uniform(n, seed ^ (0x9e3779b97f4a7c15ULL * n));
    BenchRow row{n};
    HullBenchRow hrow{n};
    std::vector<std::int64_t> sort_t, build_t, hull_t, base_t;

    PointSet sorted;
    for (std::size_t r = 0; r < reps; ++r) {
        sort_t.push_back(time_ns([&] { sorted = sort_points(raw); }));

        PointSet copy = sorted;
        Triangulation tri;
        build_t.push_back(time_ns([&] { tri = triangulate(std::move(copy)); }));
        row.to_left_calls = tri.counters.to_left_calls;
        row.in_circle_calls = tri.counters.in_circle_calls;

        PointSet hcopy = sorted;
        HullResult hull;
        hull_t.push_back(time_ns([&] { hull = convex_hull(std::move(hcopy)); }));
        hrow.to_left_calls = hull.counters.to_left_calls;

        std::vector<Index> base;
        base_t.push_back(time_ns([&] { base = verify::monotone_chain_hull(sorted); }));
    }
    row.sort_ns = median(sort_t);
    row.build_ns = median(build_t);
    hrow.hull_ns = median(hull_t);
    hrow.monotone_chain_ns = median(base_t);
    return {row, hrow};
}

}  // namespace

BenchReport bench(const BenchConfig& config)
{
    if (config.reps < 3) throw ConfigError("--reps must be at least 3");
    if (config.sizes.empty()) throw ConfigError("no benchmark sizes given");
    if (!std::is_sorted(config.sizes.begin(), config.sizes.end())) {
        throw ConfigError("benchmark sizes must be ascending");
    }
    for (const std::size_t n : config.sizes) {
        if (n < 3) throw ConfigError("benchmark sizes must be at least 3");
    }

    BenchReport report;
    if (config.parallel) {
        std::vector<std::future<std::pair<BenchRow, HullBenchRow>>> jobs;
        for (const std::size_t n : config.sizes) {
            jobs.push_back(std::async(std::launch::async, run_size, n, config.reps, config.seed));
        }
        for (auto& j : jobs) {
            auto [row, hrow] = j.get();
            report.rows.push_back(row);
            report.hull_rows.push_back(hrow);
        }
    } else {
        for (const std::size_t n : config.sizes) {
            auto [row, hrow] = run_size(n, config.reps, config.seed);
            report.rows.push_back(row);
            report.hull_rows.push_back(hrow);
        }
    }
    return report;
}

}  // namespace sortdel::io
