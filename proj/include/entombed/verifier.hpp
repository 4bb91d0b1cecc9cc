#pragma once

#include <algorithm>
#include <array>
#include <cstdint>
#include <deque>
#include <string>
#include <string_view>
#include <vector>

#include "entombed/grid.hpp"

namespace entombed {

/// One failed invariant at one location. 2D locations are {i,j,0}; 3D are
/// {w,u,v}.
struct Violation {
    int invariant = 0; // 1, 2 or 3
    std::string kind;
    std::array<int, 3> at{};
    std::string detail;
};

// ---------------------------------------------------------------------------
// invariant 1: no 2x2 square of equal cells
// ---------------------------------------------------------------------------

inline std::vector<Violation> check_invariant1(const Maze2D& m) {
    std::vector<Violation> out;
    for (int i = 0; i + 1 < m.height(); ++i) {
        for (int j = 0; j + 1 < m.width(); ++j) {
            const Cell c = m.at(i, j);
            if (c == m.at(i, j + 1) && c == m.at(i + 1, j) && c == m.at(i + 1, j + 1))
                out.push_back({1, c ? "2x2-walls" : "2x2-paths", {i, j, 0}, ""});
        }
    }
    return out;
}

/// 3D: 2x2 windows of equal cells in each of the three axis-aligned plane
/// orientations. Locations are the window's lowest corner.
inline std::vector<Violation> check_invariant1(const Maze3D& m) {
    std::vector<Violation> out;
    auto push = [&](Cell c, int w, int u, int v, const char* plane) {
        out.push_back({1, c ? "2x2-walls" : "2x2-paths", {w, u, v}, plane});
    };
    for (int w = 0; w < m.layers(); ++w)
        for (int u = 0; u + 1 < m.rows(); ++u)
            for (int v = 0; v + 1 < m.cols(); ++v) {
                const Cell c = m.at(w, u, v);
                if (c == m.at(w, u, v + 1) && c == m.at(w, u + 1, v) &&
                    c == m.at(w, u + 1, v + 1))
                    push(c, w, u, v, "u-v plane");
            }
    for (int w = 0; w + 1 < m.layers(); ++w)
        for (int u = 0; u < m.rows(); ++u)
            for (int v = 0; v + 1 < m.cols(); ++v) {
                const Cell c = m.at(w, u, v);
                if (c == m.at(w, u, v + 1) && c == m.at(w + 1, u, v) &&
                    c == m.at(w + 1, u, v + 1))
                    push(c, w, u, v, "w-v plane");
            }
    for (int w = 0; w + 1 < m.layers(); ++w)
        for (int u = 0; u + 1 < m.rows(); ++u)
            for (int v = 0; v < m.cols(); ++v) {
                const Cell c = m.at(w, u, v);
                if (c == m.at(w, u + 1, v) && c == m.at(w + 1, u, v) &&
                    c == m.at(w + 1, u + 1, v))
                    push(c, w, u, v, "w-u plane");
            }
    return out;
}

// ---------------------------------------------------------------------------
// invariant 2: no wall or path starts or ends with thickness one
// (start/end in the scan direction: rows in 2D, layers in 3D)
// ---------------------------------------------------------------------------

/// Flags every cell whose horizontal run has width one and which starts or
/// ends there. interior_only skips cells in the first/last row or column,
/// where boundary substitutions legitimately break the guarantee. Without
/// it, out-of-bounds neighbours count as opposite-type, so a run touching
/// the rim is width one there and a run at row 0 "starts".
inline std::vector<Violation> check_invariant2(const Maze2D& m, bool interior_only) {
    std::vector<Violation> out;
    auto opposite = [&](int i, int j, Cell v) { return !m.in_bounds(i, j) || m.at(i, j) != v; };
    for (int i = 0; i < m.height(); ++i) {
        for (int j = 0; j < m.width(); ++j) {
            if (interior_only &&
                (i == 0 || i == m.height() - 1 || j == 0 || j == m.width() - 1))
                continue;
            const Cell v = m.at(i, j);
            if (!opposite(i, j - 1, v) || !opposite(i, j + 1, v)) continue;
            const char* type = v ? "wall" : "path";
            if (opposite(i - 1, j, v))
                out.push_back({2, std::string("width1-") + type + "-start", {i, j, 0}, ""});
            if (opposite(i + 1, j, v))
                out.push_back({2, std::string("width1-") + type + "-end", {i, j, 0}, ""});
        }
    }
    return out;
}

/// 3D: a cell forming a 1x1 lateral pillar (all four in-layer neighbours
/// opposite) that starts or ends along the layer axis.
inline std::vector<Violation> check_invariant2(const Maze3D& m, bool interior_only) {
    std::vector<Violation> out;
    auto opposite = [&](int w, int u, int v, Cell c) {
        return !m.in_bounds(w, u, v) || m.at(w, u, v) != c;
    };
    for (int w = 0; w < m.layers(); ++w) {
        for (int u = 0; u < m.rows(); ++u) {
            for (int v = 0; v < m.cols(); ++v) {
                if (interior_only &&
                    (w == 0 || w == m.layers() - 1 || u == 0 || u == m.rows() - 1 ||
                     v == 0 || v == m.cols() - 1))
                    continue;
                const Cell c = m.at(w, u, v);
                if (!opposite(w, u - 1, v, c) || !opposite(w, u + 1, v, c) ||
                    !opposite(w, u, v - 1, c) || !opposite(w, u, v + 1, c))
                    continue;
                const char* type = c ? "wall" : "path";
                if (opposite(w - 1, u, v, c))
                    out.push_back({2, std::string("width1-") + type + "-start", {w, u, v}, ""});
                if (opposite(w + 1, u, v, c))
                    out.push_back({2, std::string("width1-") + type + "-end", {w, u, v}, ""});
            }
        }
    }
    return out;
}

// ---------------------------------------------------------------------------
// invariant 3: every path connects onward to the next line / layer
// ---------------------------------------------------------------------------

inline constexpr std::string_view kInv3Semantics2D =
    "2D: every maximal horizontal run of path cells in row i (i < H-1) must "
    "have a path directly below at least one of its cells; a disconnected "
    "run is reported once, at its rightmost cell";

inline constexpr std::string_view kInv3Semantics3D =
    "3D: every path cell at (w,u,v) with w < Z-1 must have a path at "
    "(w+1,u,v), (w,u,v+1) or (w,u+1,v)";

/// The lookup rules guarantee connectivity per run, not per cell: a run may
/// reach the next row through any of its cells (often not the rightmost
/// one). So the check walks maximal horizontal path runs.
inline std::vector<Violation> check_invariant3(const Maze2D& m) {
    std::vector<Violation> out;
    for (int i = 0; i + 1 < m.height(); ++i) {
        int j = 0;
        while (j < m.width()) {
            if (m.at(i, j) != 0) { ++j; continue; }
            int end = j;
            bool connected = false;
            while (end < m.width() && m.at(i, end) == 0) {
                if (m.at(i + 1, end) == 0) connected = true;
                ++end;
            }
            if (!connected)
                out.push_back({3, "disconnected-path", {i, end - 1, 0},
                               "run spans columns " + std::to_string(j) + ".." +
                                   std::to_string(end - 1)});
            j = end;
        }
    }
    return out;
}

inline std::vector<Violation> check_invariant3(const Maze3D& m) {
    std::vector<Violation> out;
    for (int w = 0; w + 1 < m.layers(); ++w)
        for (int u = 0; u < m.rows(); ++u)
            for (int v = 0; v < m.cols(); ++v) {
                if (m.at(w, u, v) != 0) continue;
                if (m.at(w + 1, u, v) == 0) continue;
                if (v + 1 < m.cols() && m.at(w, u, v + 1) == 0) continue;
                if (u + 1 < m.rows() && m.at(w, u + 1, v) == 0) continue;
                out.push_back({3, "disconnected-path", {w, u, v}, ""});
            }
    return out;
}

// ---------------------------------------------------------------------------
// solvability
// ---------------------------------------------------------------------------

struct SolveResult {
    bool solvable = false;
    std::vector<std::array<int, 3>> witness; // one shortest path, entry to exit
};

/// Breadth-first search over path cells, 4-connected, from every top-row
/// path cell to any bottom-row path cell.
inline SolveResult solve2d(const Maze2D& m) {
    SolveResult res;
    const int H = m.height(), W = m.width();
    std::vector<int> prev(static_cast<std::size_t>(H) * W, -2);
    std::deque<int> queue;
    for (int j = 0; j < W; ++j)
        if (m.at(0, j) == 0) { prev[static_cast<std::size_t>(j)] = -1; queue.push_back(j); }
    static constexpr int di[4] = {1, -1, 0, 0};
    static constexpr int dj[4] = {0, 0, 1, -1};
    while (!queue.empty()) {
        const int cur = queue.front();
        queue.pop_front();
        const int i = cur / W, j = cur % W;
        if (i == H - 1) {
            for (int at = cur; at >= 0; at = prev[static_cast<std::size_t>(at)])
                res.witness.push_back({at / W, at % W, 0});
            std::reverse(res.witness.begin(), res.witness.end());
            res.solvable = true;
            return res;
        }
        for (int d = 0; d < 4; ++d) {
            const int ni = i + di[d], nj = j + dj[d];
            if (!m.in_bounds(ni, nj) || m.at(ni, nj) != 0) continue;
            const int nxt = ni * W + nj;
            if (prev[static_cast<std::size_t>(nxt)] != -2) continue;
            prev[static_cast<std::size_t>(nxt)] = cur;
            queue.push_back(nxt);
        }
    }
    return res;
}

/// 6-connected BFS from every top-layer path cell to any bottom-layer one.
inline SolveResult solve3d(const Maze3D& m) {
    SolveResult res;
    const int Z = m.layers(), U = m.rows(), V = m.cols();
    auto id = [&](int w, int u, int v) { return (w * U + u) * V + v; };
    std::vector<int> prev(static_cast<std::size_t>(Z) * U * V, -2);
    std::deque<int> queue;
    for (int u = 0; u < U; ++u)
        for (int v = 0; v < V; ++v)
            if (m.at(0, u, v) == 0) {
                prev[static_cast<std::size_t>(id(0, u, v))] = -1;
                queue.push_back(id(0, u, v));
            }
    static constexpr int dw[6] = {1, -1, 0, 0, 0, 0};
    static constexpr int du[6] = {0, 0, 1, -1, 0, 0};
    static constexpr int dv[6] = {0, 0, 0, 0, 1, -1};
    while (!queue.empty()) {
        const int cur = queue.front();
        queue.pop_front();
        const int w = cur / (U * V), u = (cur / V) % U, v = cur % V;
        if (w == Z - 1) {
            for (int at = cur; at >= 0; at = prev[static_cast<std::size_t>(at)])
                res.witness.push_back({at / (U * V), (at / V) % U, at % V});
            std::reverse(res.witness.begin(), res.witness.end());
            res.solvable = true;
            return res;
        }
        for (int d = 0; d < 6; ++d) {
            const int nw = w + dw[d], nu = u + du[d], nv = v + dv[d];
            if (!m.in_bounds(nw, nu, nv) || m.at(nw, nu, nv) != 0) continue;
            const int nxt = id(nw, nu, nv);
            if (prev[static_cast<std::size_t>(nxt)] != -2) continue;
            prev[static_cast<std::size_t>(nxt)] = cur;
            queue.push_back(nxt);
        }
    }
    return res;
}

// ---------------------------------------------------------------------------
// full report
// ---------------------------------------------------------------------------

struct VerifyReport {
    int dimension = 2;
    std::array<int, 3> sizes{}; // {W,H,-} or {V,U,Z}
    bool interior_only = false;
    std::vector<Violation> invariant1;
    std::vector<Violation> invariant2;
    std::vector<Violation> invariant3;
    bool solvable = false;
    std::vector<std::array<int, 3>> witness;
    std::string inv3_semantics;

    std::size_t total_violations() const {
        return invariant1.size() + invariant2.size() + invariant3.size();
    }
};

inline VerifyReport verify(const Maze2D& m, bool interior_only) {
    VerifyReport r;
    r.dimension = 2;
    r.sizes = {m.width(), m.height(), 0};
    r.interior_only = interior_only;
    r.invariant1 = check_invariant1(m);
    r.invariant2 = check_invariant2(m, interior_only);
    r.invariant3 = check_invariant3(m);
    SolveResult s = solve2d(m);
    r.solvable = s.solvable;
    r.witness = std::move(s.witness);
    r.inv3_semantics = std::string(kInv3Semantics2D);
    return r;
}

inline VerifyReport verify(const Maze3D& m, bool interior_only) {
    VerifyReport r;
    r.dimension = 3;
    r.sizes = {m.cols(), m.rows(), m.layers()};
    r.interior_only = interior_only;
    r.invariant1 = check_invariant1(m);
    r.invariant2 = check_invariant2(m, interior_only);
    r.invariant3 = check_invariant3(m);
    SolveResult s = solve3d(m);
    r.solvable = s.solvable;
    r.witness = std::move(s.witness);
    r.inv3_semantics = std::string(kInv3Semantics3D);
    return r;
}

} // namespace entombed
