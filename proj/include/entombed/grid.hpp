#pragma once

#include <array>
#include <cassert>
#include <cstdint>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "entombed/rng.hpp"

namespace entombed {

// Cells are one bit each: 1 = wall, 0 = path.
using Cell = std::uint8_t;

/// Dense binary grid, H rows x W columns, row-major. Fresh cells are 0.
class Maze2D {
public:
    Maze2D(int width, int height)
        : width_(width), height_(height),
          cells_(static_cast<std::size_t>(width) * height, 0) {
        if (width < 1 || height < 1)
            throw std::invalid_argument("Maze2D: dimensions must be >= 1");
    }

    int width() const { return width_; }
    int height() const { return height_; }

    bool in_bounds(int i, int j) const {
        return i >= 0 && i < height_ && j >= 0 && j < width_;
    }

    Cell at(int i, int j) const {
        assert(in_bounds(i, j));
        return cells_[static_cast<std::size_t>(i) * width_ + j];
    }

    void set(int i, int j, Cell v) {
        assert(in_bounds(i, j));
        assert(v == 0 || v == 1);
        cells_[static_cast<std::size_t>(i) * width_ + j] = v;
    }

    std::span<const Cell> cells() const { return cells_; }

    friend bool operator==(const Maze2D&, const Maze2D&) = default;

private:
    int width_;
    int height_;
    std::vector<Cell> cells_;
};

/// Dense binary voxel grid, Z layers x U rows x V columns. Layers are the
/// generation axis: layer w is complete before layer w+1 starts.
class Maze3D {
public:
    Maze3D(int cols_v, int rows_u, int layers_z)
        : cols_(cols_v), rows_(rows_u), layers_(layers_z),
          cells_(static_cast<std::size_t>(cols_v) * rows_u * layers_z, 0) {
        if (cols_v < 1 || rows_u < 1 || layers_z < 1)
            throw std::invalid_argument("Maze3D: dimensions must be >= 1");
    }

    int cols() const { return cols_; }    // V, index v
    int rows() const { return rows_; }    // U, index u
    int layers() const { return layers_; } // Z, index w

    bool in_bounds(int w, int u, int v) const {
        return w >= 0 && w < layers_ && u >= 0 && u < rows_ && v >= 0 && v < cols_;
    }

    Cell at(int w, int u, int v) const {
        assert(in_bounds(w, u, v));
        return cells_[(static_cast<std::size_t>(w) * rows_ + u) * cols_ + v];
    }

    void set(int w, int u, int v, Cell value) {
        assert(in_bounds(w, u, v));
        assert(value == 0 || value == 1);
        cells_[(static_cast<std::size_t>(w) * rows_ + u) * cols_ + v] = value;
    }

    std::span<const Cell> cells() const { return cells_; }

    friend bool operator==(const Maze3D&, const Maze3D&) = default;

private:
    int cols_;
    int rows_;
    int layers_;
    std::vector<Cell> cells_;
};

/// What to read when a context variable's coordinates fall outside the maze.
enum class Subst : std::uint8_t { fixed0, fixed1, random_bit };

/// Per-variable out-of-bounds substitution for the context reads. A policy
/// carries one entry per context variable (5 in 2D, 10 in 3D; 2D policies
/// leave the tail unused).
class BoundaryPolicy {
public:
    /// All walls outside: a..k read 1. Valid for both dimensions.
    static BoundaryPolicy solid() { return BoundaryPolicy(Subst::fixed1, "solid", 3); }
    /// All paths outside: a..k read 0.
    static BoundaryPolicy open() { return BoundaryPolicy(Subst::fixed0, "open", 3); }
    /// Every out-of-bounds read draws a fresh bit.
    static BoundaryPolicy random_all() { return BoundaryPolicy(Subst::random_bit, "random", 3); }

    /// The substitutions of the original Atari implementation: a=0, b=1,
    /// c and e random. The game never documents d on the first row; it is
    /// random here by analogy with c and e. 2D only.
    static BoundaryPolicy atari2d() {
        BoundaryPolicy p(Subst::random_bit, "atari2d", 2);
        p.subst_[0] = Subst::fixed0;
        p.subst_[1] = Subst::fixed1;
        return p;
    }

    static BoundaryPolicy custom(std::span<const Subst> subs, std::string name = "custom") {
        if (subs.size() != 5 && subs.size() != 10)
            throw std::invalid_argument("BoundaryPolicy: need 5 or 10 substitutions");
        BoundaryPolicy p(Subst::fixed1, std::move(name), subs.size() == 5 ? 2 : 3);
        for (std::size_t k = 0; k < subs.size(); ++k) p.subst_[k] = subs[k];
        return p;
    }

    static std::optional<BoundaryPolicy> named(std::string_view name, int dimension) {
        BoundaryPolicy p = solid();
        if (name == "solid")        p = solid();
        else if (name == "open")    p = open();
        else if (name == "random")  p = random_all();
        else if (name == "atari2d") p = atari2d();
        else return std::nullopt;
        if (!p.valid_for(dimension)) return std::nullopt;
        return p;
    }

    Subst at(std::size_t var) const {
        assert(var < subst_.size());
        return subst_[var];
    }

    const std::string& name() const { return name_; }
    bool valid_for(int dimension) const { return dimension <= max_dimension_; }

private:
    BoundaryPolicy(Subst fill, std::string name, int max_dim)
        : name_(std::move(name)), max_dimension_(max_dim) {
        subst_.fill(fill);
    }

    std::array<Subst, 10> subst_;
    std::string name_;
    int max_dimension_;
};

using Context5 = std::array<Cell, 5>;
using Context10 = std::array<Cell, 10>;

// Offsets of the context variables relative to the cell being generated,
// in the fixed variable order. Every offset points at a cell generated
// strictly earlier in scan order; tests verify this statically.
//
// 2D, variables a,b,c,d,e, offsets (di,dj):
inline constexpr std::array<std::array<int, 2>, 5> kContextOffsets2D{{
    {0, -2}, {0, -1}, {-1, -1}, {-1, 0}, {-1, 1},
}};

// 3D, variables a,b,c,d,e,f,g,h,j,k, offsets (dw,du,dv). a..e live in the
// previous layer, f..k in the current one.
inline constexpr std::array<std::array<int, 3>, 10> kContextOffsets3D{{
    {-1, 0, -1}, {-1, 0, 0}, {-1, 0, 1}, {-1, 1, 0}, {-1, -1, 0},
    {0, -2, 0},  {0, -1, 0}, {0, -1, 1}, {0, -1, -1}, {0, 0, -1},
}};

inline constexpr std::string_view kContextVarNames = "abcdefghjk";

template <class Rng>
Cell substitute(Subst s, Rng& rng) {
    switch (s) {
    case Subst::fixed0: return 0;
    case Subst::fixed1: return 1;
    case Subst::random_bit: return rng.next_bit();
    }
    return 0; // unreachable
}

/// Read the five-variable context for cell (i,j). Out-of-bounds reads are
/// substituted per policy; random substitutions consume one bit each, in
/// variable order a,b,c,d,e.
template <class Rng = SplitMix64>
Context5 context2d(const Maze2D& maze, int i, int j, const BoundaryPolicy& policy, Rng& rng) {
    assert(maze.in_bounds(i, j));
    Context5 ctx{};
    for (std::size_t k = 0; k < 5; ++k) {
        const int ii = i + kContextOffsets2D[k][0];
        const int jj = j + kContextOffsets2D[k][1];
        ctx[k] = maze.in_bounds(ii, jj) ? maze.at(ii, jj) : substitute(policy.at(k), rng);
    }
    return ctx;
}

/// Read the ten-variable context for cell (w,u,v), substitutions in variable
/// order a..k. Layer w-1 reads with w=0 fall outside the maze and use the
/// same per-variable policy as lateral out-of-bounds reads.
template <class Rng = SplitMix64>
Context10 context3d(const Maze3D& maze, int w, int u, int v, const BoundaryPolicy& policy,
                    Rng& rng) {
    assert(maze.in_bounds(w, u, v));
    Context10 ctx{};
    for (std::size_t k = 0; k < 10; ++k) {
        const int ww = w + kContextOffsets3D[k][0];
        const int uu = u + kContextOffsets3D[k][1];
        const int vv = v + kContextOffsets3D[k][2];
        ctx[k] = maze.in_bounds(ww, uu, vv) ? maze.at(ww, uu, vv) : substitute(policy.at(k), rng);
    }
    return ctx;
}

/// Pack a context into its table code, first variable in the most
/// significant bit, so the binary digits of the code read as the context
/// string a,b,c,d,e(,f,g,h,j,k).
inline std::uint16_t encode_context(std::span<const Cell> ctx) {
    std::uint16_t code = 0;
    for (Cell bit : ctx) code = static_cast<std::uint16_t>((code << 1) | (bit & 1u));
    return code;
}

inline std::uint16_t encode_context(const Context5& c) {
    return encode_context(std::span<const Cell>(c));
}
inline std::uint16_t encode_context(const Context10& c) {
    return encode_context(std::span<const Cell>(c));
}

/// The context digits of `code` as a string, a first (left to right).
inline std::string context_string(std::uint16_t code, int n_vars) {
    std::string s(static_cast<std::size_t>(n_vars), '0');
    for (int k = 0; k < n_vars; ++k)
        if (code & (1u << (n_vars - 1 - k))) s[static_cast<std::size_t>(k)] = '1';
    return s;
}

} // namespace entombed
