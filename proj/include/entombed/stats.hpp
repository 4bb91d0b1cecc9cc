#pragma once

#include <algorithm>
#include <cstdint>
#include <limits>
#include <stdexcept>
#include <vector>

#include "entombed/generator.hpp"
#include "entombed/verifier.hpp"

namespace entombed {

/// One row of a Monte Carlo run.
struct SeedStats {
    std::uint64_t seed = 0;
    std::size_t invariant1 = 0;
    std::size_t invariant2 = 0; // interior-only count
    std::size_t invariant3 = 0;
    bool solvable = false;
    GenCounters counters;
};

struct MetricSummary {
    std::size_t total = 0;
    std::size_t min = 0;
    std::size_t max = 0;
    double mean = 0.0;
};

struct StatsReport {
    int dimension = 2;
    std::array<int, 3> sizes{};
    std::string boundary;
    std::uint64_t seed0 = 0;
    std::size_t trials = 0;

    std::vector<SeedStats> rows; // sorted by seed

    MetricSummary invariant1, invariant2, invariant3;
    double solvable_fraction = 0.0;
    /// fraction of trial mazes containing at least one disconnected path
    double disconnected_maze_fraction = 0.0;
    /// generation steps that landed on a conflicted table entry / all steps
    double conflicted_hit_fraction = 0.0;
};

namespace detail {
inline MetricSummary summarize(const std::vector<std::size_t>& xs) {
    MetricSummary s;
    if (xs.empty()) return s;
    s.min = std::numeric_limits<std::size_t>::max();
    for (std::size_t x : xs) {
        s.total += x;
        s.min = std::min(s.min, x);
        s.max = std::max(s.max, x);
    }
    s.mean = static_cast<double>(s.total) / static_cast<double>(xs.size());
    return s;
}
} // namespace detail

/// Generate `trials` mazes with seeds seed0 .. seed0+trials-1 from the same
/// config, verify each (invariant 2 interior-only), and aggregate.
inline StatsReport monte_carlo(const GenConfig& cfg_template, std::size_t trials,
                               std::uint64_t seed0) {
    if (trials < 1) throw std::invalid_argument("monte_carlo: trials must be >= 1");
    StatsReport rep;
    rep.dimension = cfg_template.dimension;
    rep.boundary = cfg_template.boundary.name();
    rep.seed0 = seed0;
    rep.trials = trials;
    rep.sizes = cfg_template.dimension == 2
                    ? std::array<int, 3>{cfg_template.width, cfg_template.height, 0}
                    : std::array<int, 3>{cfg_template.cols, cfg_template.rows,
                                         cfg_template.layers};

    std::vector<std::size_t> v1, v2, v3;
    std::size_t solvable = 0, disconnected = 0;
    std::uint64_t conflicted = 0, cells = 0;
    for (std::size_t t = 0; t < trials; ++t) {
        GenConfig cfg = cfg_template;
        cfg.seed = seed0 + t;
        SeedStats row;
        row.seed = cfg.seed;
        VerifyReport vr;
        if (cfg.dimension == 2) {
            const Maze2D maze = generate2d(cfg, &row.counters);
            vr = verify(maze, /*interior_only=*/true);
        } else {
            const Maze3D maze = generate3d(cfg, &row.counters);
            vr = verify(maze, /*interior_only=*/true);
        }
        row.invariant1 = vr.invariant1.size();
        row.invariant2 = vr.invariant2.size();
        row.invariant3 = vr.invariant3.size();
        row.solvable = vr.solvable;
        v1.push_back(row.invariant1);
        v2.push_back(row.invariant2);
        v3.push_back(row.invariant3);
        solvable += vr.solvable ? 1 : 0;
        disconnected += row.invariant3 > 0 ? 1 : 0;
        conflicted += row.counters.conflicted_hits;
        cells += row.counters.cells;
        rep.rows.push_back(std::move(row));
    }
    rep.invariant1 = detail::summarize(v1);
    rep.invariant2 = detail::summarize(v2);
    rep.invariant3 = detail::summarize(v3);
    rep.solvable_fraction = static_cast<double>(solvable) / static_cast<double>(trials);
    rep.disconnected_maze_fraction =
        static_cast<double>(disconnected) / static_cast<double>(trials);
    rep.conflicted_hit_fraction =
        cells ? static_cast<double>(conflicted) / static_cast<double>(cells) : 0.0;
    return rep;
}

} // namespace entombed
