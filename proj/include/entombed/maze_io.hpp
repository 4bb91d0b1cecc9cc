#pragma once

#include <cctype>
#include <charconv>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "entombed/grid.hpp"

namespace entombed {

// ---------------------------------------------------------------------------
// MazeFile: the plain-text interchange format.
//
//   2D:  "MAZE2 <W> <H>\n"  then H lines of W characters from {0,1}
//   3D:  "MAZE3 <V> <U> <Z>\n" then Z layer blocks of U lines of V
//        characters, blocks separated by one blank line
//
// Lines end with LF; the final line keeps its newline. parse(serialize(m))
// is the identity for every maze.
// ---------------------------------------------------------------------------

struct ParseError : std::runtime_error {
    ParseError(std::string kind_, int line_, int column_, const std::string& what_)
        : std::runtime_error(kind_ + " at line " + std::to_string(line_) + ", column " +
                             std::to_string(column_) + ": " + what_),
          kind(std::move(kind_)), line(line_), column(column_) {}
    std::string kind; // malformed-header | shape-mismatch | illegal-character
    int line;
    int column;
};

inline std::string serialize(const Maze2D& m) {
    std::string out = "MAZE2 " + std::to_string(m.width()) + " " +
                      std::to_string(m.height()) + "\n";
    for (int i = 0; i < m.height(); ++i) {
        for (int j = 0; j < m.width(); ++j) out.push_back(m.at(i, j) ? '1' : '0');
        out.push_back('\n');
    }
    return out;
}

inline std::string serialize(const Maze3D& m) {
    std::string out = "MAZE3 " + std::to_string(m.cols()) + " " +
                      std::to_string(m.rows()) + " " + std::to_string(m.layers()) + "\n";
    for (int w = 0; w < m.layers(); ++w) {
        if (w > 0) out.push_back('\n');
        for (int u = 0; u < m.rows(); ++u) {
            for (int v = 0; v < m.cols(); ++v) out.push_back(m.at(w, u, v) ? '1' : '0');
            out.push_back('\n');
        }
    }
    return out;
}

using ParsedMaze = std::variant<Maze2D, Maze3D>;

namespace detail {

class LineReader {
public:
    explicit LineReader(std::string_view text) : text_(text) {}

    bool at_end() const { return pos_ >= text_.size(); }
    int line_number() const { return line_; } // 1-based, line about to be read

    std::string_view next_line() {
        const std::size_t nl = text_.find('\n', pos_);
        if (nl == std::string_view::npos)
            throw ParseError("shape-mismatch", line_, 1,
                             at_end() ? "unexpected end of input"
                                      : "missing trailing newline");
        std::string_view out = text_.substr(pos_, nl - pos_);
        pos_ = nl + 1;
        ++line_;
        return out;
    }

private:
    std::string_view text_;
    std::size_t pos_ = 0;
    int line_ = 1;
};

inline int parse_dim(std::string_view tok, int line, int col, const char* name) {
    int value = 0;
    const auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), value);
    if (ec != std::errc{} || ptr != tok.data() + tok.size() || value < 1)
        throw ParseError("malformed-header", line, col,
                         std::string(name) + " must be a positive integer, got '" +
                             std::string(tok) + "'");
    return value;
}

inline void read_row(std::string_view line, int line_no, int want_width,
                     auto&& store_bit) {
    if (static_cast<int>(line.size()) != want_width)
        throw ParseError("shape-mismatch", line_no, static_cast<int>(line.size()) + 1,
                         "expected " + std::to_string(want_width) + " characters, got " +
                             std::to_string(line.size()));
    for (int j = 0; j < want_width; ++j) {
        const char c = line[static_cast<std::size_t>(j)];
        if (c != '0' && c != '1')
            throw ParseError("illegal-character", line_no, j + 1,
                             std::string("expected '0' or '1', got '") + c + "'");
        store_bit(j, static_cast<Cell>(c - '0'));
    }
}

} // namespace detail

/// Parse MazeFile bytes into the maze they describe. Throws ParseError with
/// the offending line and column on malformed input.
inline ParsedMaze parse_maze(std::string_view text) {
    detail::LineReader reader(text);
    if (reader.at_end()) throw ParseError("malformed-header", 1, 1, "empty input");

    const std::string_view header = reader.next_line();
    std::vector<std::string_view> tokens;
    std::vector<int> token_cols;
    std::size_t p = 0;
    while (p < header.size()) {
        while (p < header.size() && header[p] == ' ') ++p;
        if (p >= header.size()) break;
        std::size_t q = p;
        while (q < header.size() && header[q] != ' ') ++q;
        tokens.push_back(header.substr(p, q - p));
        token_cols.push_back(static_cast<int>(p) + 1);
        p = q;
    }
    if (tokens.empty() || (tokens[0] != "MAZE2" && tokens[0] != "MAZE3"))
        throw ParseError("malformed-header", 1, 1, "expected MAZE2 or MAZE3 magic");

    if (tokens[0] == "MAZE2") {
        if (tokens.size() != 3)
            throw ParseError("malformed-header", 1, 1, "expected 'MAZE2 <W> <H>'");
        const int W = detail::parse_dim(tokens[1], 1, token_cols[1], "width");
        const int H = detail::parse_dim(tokens[2], 1, token_cols[2], "height");
        Maze2D maze(W, H);
        for (int i = 0; i < H; ++i) {
            const int line_no = reader.line_number();
            detail::read_row(reader.next_line(), line_no, W,
                             [&](int j, Cell b) { maze.set(i, j, b); });
        }
        if (!reader.at_end())
            throw ParseError("shape-mismatch", reader.line_number(), 1,
                             "trailing content after maze body");
        return maze;
    }

    if (tokens.size() != 4)
        throw ParseError("malformed-header", 1, 1, "expected 'MAZE3 <V> <U> <Z>'");
    const int V = detail::parse_dim(tokens[1], 1, token_cols[1], "cols");
    const int U = detail::parse_dim(tokens[2], 1, token_cols[2], "rows");
    const int Z = detail::parse_dim(tokens[3], 1, token_cols[3], "layers");
    Maze3D maze(V, U, Z);
    for (int w = 0; w < Z; ++w) {
        if (w > 0) {
            const int line_no = reader.line_number();
            if (!reader.next_line().empty())
                throw ParseError("shape-mismatch", line_no, 1,
                                 "expected blank line between layers");
        }
        for (int u = 0; u < U; ++u) {
            const int line_no = reader.line_number();
            detail::read_row(reader.next_line(), line_no, V,
                             [&](int v, Cell b) { maze.set(w, u, v, b); });
        }
    }
    if (!reader.at_end())
        throw ParseError("shape-mismatch", reader.line_number(), 1,
                         "trailing content after maze body");
    return maze;
}

// ---------------------------------------------------------------------------
// renderings
// ---------------------------------------------------------------------------

/// Walls as `wall_glyph`, paths as `path_glyph`, one output line per row.
/// Glyphs are strings so multi-byte characters work.
inline std::string render_ascii(const Maze2D& m, std::string_view wall_glyph = "#",
                                std::string_view path_glyph = ".") {
    std::string out;
    for (int i = 0; i < m.height(); ++i) {
        for (int j = 0; j < m.width(); ++j)
            out += m.at(i, j) ? wall_glyph : path_glyph;
        out.push_back('\n');
    }
    return out;
}

/// Layer blocks in generation order, separated by blank lines.
inline std::string render_ascii(const Maze3D& m, std::string_view wall_glyph = "#",
                                std::string_view path_glyph = ".") {
    std::string out;
    for (int w = 0; w < m.layers(); ++w) {
        if (w > 0) out.push_back('\n');
        for (int u = 0; u < m.rows(); ++u) {
            for (int v = 0; v < m.cols(); ++v)
                out += m.at(w, u, v) ? wall_glyph : path_glyph;
            out.push_back('\n');
        }
    }
    return out;
}

/// Binary PGM (P5), walls black (0), paths white (255), each cell rendered
/// as a scale x scale pixel block.
inline std::string render_pgm(const Maze2D& m, int scale = 1) {
    if (scale < 1) throw std::invalid_argument("render_pgm: scale must be >= 1");
    const int pw = m.width() * scale, ph = m.height() * scale;
    std::string out = "P5\n" + std::to_string(pw) + " " + std::to_string(ph) + "\n255\n";
    out.reserve(out.size() + static_cast<std::size_t>(pw) * ph);
    for (int y = 0; y < ph; ++y)
        for (int x = 0; x < pw; ++x)
            out.push_back(m.at(y / scale, x / scale) ? '\0' : static_cast<char>(255));
    return out;
}

/// Wavefront OBJ subset (`v` and `f` lines only): one unit cube, 8 vertices
/// and 12 triangles, per wall voxel, anchored at integer coordinates
/// (v,u,w). Shared vertices are not deduplicated and faces between
/// neighbouring walls are not culled; meshes stay desk-scale.
inline std::string export_obj(const Maze3D& m) {
    std::string out;
    long base = 0;
    // triangles over the cube corners, corner bits = (x,y,z)
    static constexpr int tris[12][3] = {
        {0, 1, 3}, {0, 3, 2}, // x = 0
        {4, 6, 7}, {4, 7, 5}, // x = 1
        {0, 4, 5}, {0, 5, 1}, // y = 0
        {2, 3, 7}, {2, 7, 6}, // y = 1
        {0, 2, 6}, {0, 6, 4}, // z = 0
        {1, 5, 7}, {1, 7, 3}, // z = 1
    };
    for (int w = 0; w < m.layers(); ++w)
        for (int u = 0; u < m.rows(); ++u)
            for (int v = 0; v < m.cols(); ++v) {
                if (m.at(w, u, v) != 1) continue;
                for (int corner = 0; corner < 8; ++corner) {
                    const int x = v + ((corner >> 2) & 1);
                    const int y = u + ((corner >> 1) & 1);
                    const int z = w + (corner & 1);
                    out += "v " + std::to_string(x) + " " + std::to_string(y) + " " +
                           std::to_string(z) + "\n";
                }
                for (const auto& t : tris)
                    out += "f " + std::to_string(base + t[0] + 1) + " " +
                           std::to_string(base + t[1] + 1) + " " +
                           std::to_string(base + t[2] + 1) + "\n";
                base += 8;
            }
    return out;
}

} // namespace entombed
