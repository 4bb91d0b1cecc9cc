#pragma once

#include <cstdint>
#include <stdexcept>
#include <utility>

#include "entombed/grid.hpp"
#include "entombed/rng.hpp"
#include "entombed/rules.hpp"

namespace entombed {

/// Everything that determines a generated maze. Equal configs produce
/// byte-identical mazes.
struct GenConfig {
    int dimension = 2;
    int width = 0, height = 0;            // 2D: W columns x H rows
    int cols = 0, rows = 0, layers = 0;   // 3D: V x U x Z
    std::uint64_t seed = 0;
    BoundaryPolicy boundary = BoundaryPolicy::solid();
    bool mirror = false;                  // 2D only: left/right symmetric output
    LookupTable table{2, {}};
};

/// Per-generation accounting, mostly for statistics and tests: how many
/// random bits went where and how often a conflicted entry decided a cell.
struct GenCounters {
    std::uint64_t cells = 0;
    std::uint64_t random_entry_draws = 0;
    std::uint64_t boundary_random_draws = 0;
    std::uint64_t conflicted_hits = 0;
};

namespace detail {

inline void check_common(const GenConfig& cfg, int dimension) {
    if (cfg.dimension != dimension)
        throw std::invalid_argument("generate: config dimension mismatch");
    if (cfg.table.dimension() != dimension)
        throw std::invalid_argument("generate: table dimension mismatch");
    if (cfg.table.size() != (dimension == 2 ? 32u : 1024u))
        throw std::invalid_argument("generate: table has wrong entry count");
    if (!cfg.boundary.valid_for(dimension))
        throw std::invalid_argument("generate: boundary policy not valid for dimension");
}

// Scanline fill: row-major, i outer ascending, j inner. Each cell is the
// table's decision on its five-variable context.
inline Maze2D fill2d(int width, int height, const GenConfig& cfg, SplitMix64& rng,
                     GenCounters* counters) {
    Maze2D maze(width, height);
    for (int i = 0; i < height; ++i) {
        for (int j = 0; j < width; ++j) {
            const std::uint64_t before = rng.words_drawn();
            const Context5 ctx = context2d(maze, i, j, cfg.boundary, rng);
            const std::uint16_t code = encode_context(ctx);
            const TableEntry& entry = cfg.table.entry(code);
            maze.set(i, j, table_entry(cfg.table, code, rng));
            if (counters) {
                ++counters->cells;
                counters->conflicted_hits += entry.conflicted ? 1 : 0;
                const bool random_entry = entry.value == TableValue::random_choice;
                counters->random_entry_draws += random_entry ? 1 : 0;
                counters->boundary_random_draws +=
                    rng.words_drawn() - before - (random_entry ? 1 : 0);
            }
        }
    }
    return maze;
}

} // namespace detail

/// Generate a 2D maze. With mirror set, a half of ceil(W/2) columns is
/// generated and reflected; the centre column is shared when W is odd. The
/// reflected half is copied, not regenerated, so the seam is not re-checked
/// against the rules (the original game behaves the same way).
inline Maze2D generate2d(const GenConfig& cfg, GenCounters* counters = nullptr) {
    detail::check_common(cfg, 2);
    if (cfg.width < 1 || cfg.height < 1)
        throw std::invalid_argument("generate2d: width and height must be >= 1");

    SplitMix64 rng(cfg.seed);
    if (!cfg.mirror) return detail::fill2d(cfg.width, cfg.height, cfg, rng, counters);

    const int half_w = (cfg.width + 1) / 2;
    const Maze2D half = detail::fill2d(half_w, cfg.height, cfg, rng, counters);
    Maze2D maze(cfg.width, cfg.height);
    for (int i = 0; i < cfg.height; ++i) {
        for (int j = 0; j < half_w; ++j) {
            maze.set(i, j, half.at(i, j));
            maze.set(i, cfg.width - 1 - j, half.at(i, j));
        }
    }
    return maze;
}

/// Generate a 3D maze, layers w ascending, then rows u, then columns v —
/// the one scan order under which every context variable is already
/// generated when read.
inline Maze3D generate3d(const GenConfig& cfg, GenCounters* counters = nullptr) {
    detail::check_common(cfg, 3);
    if (cfg.cols < 1 || cfg.rows < 1 || cfg.layers < 1)
        throw std::invalid_argument("generate3d: all three sizes must be >= 1");
    if (cfg.mirror)
        throw std::invalid_argument("generate3d: mirror is 2D only");

    SplitMix64 rng(cfg.seed);
    Maze3D maze(cfg.cols, cfg.rows, cfg.layers);
    for (int w = 0; w < cfg.layers; ++w) {
        for (int u = 0; u < cfg.rows; ++u) {
            for (int v = 0; v < cfg.cols; ++v) {
                const std::uint64_t before = rng.words_drawn();
                const Context10 ctx = context3d(maze, w, u, v, cfg.boundary, rng);
                const std::uint16_t code = encode_context(ctx);
                const TableEntry& entry = cfg.table.entry(code);
                maze.set(w, u, v, table_entry(cfg.table, code, rng));
                if (counters) {
                    ++counters->cells;
                    counters->conflicted_hits += entry.conflicted ? 1 : 0;
                    const bool random_entry = entry.value == TableValue::random_choice;
                    counters->random_entry_draws += random_entry ? 1 : 0;
                    counters->boundary_random_draws +=
                        rng.words_drawn() - before - (random_entry ? 1 : 0);
                }
            }
        }
    }
    return maze;
}

} // namespace entombed
