// Command-line front end: compile lookup tables, generate mazes, verify
// them, collect Monte Carlo statistics, and inspect rule conflicts.
//
// Exit codes: 0 success / clean verify, 1 verification failures found,
// 2 usage or input parse error, 3 generation retries exhausted.

#include <CLI11.hpp>

#include <cstdint>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "entombed/entombed.hpp"

namespace {

using namespace entombed;

struct SizeSpec {
    std::vector<int> parts;
};

bool parse_size(const std::string& text, int dimension, SizeSpec& out) {
    out.parts.clear();
    std::stringstream ss(text);
    std::string tok;
    while (std::getline(ss, tok, 'x')) {
        try {
            std::size_t used = 0;
            const int v = std::stoi(tok, &used);
            if (used != tok.size() || v < 1) return false;
            out.parts.push_back(v);
        } catch (const std::exception&) {
            return false;
        }
    }
    return static_cast<int>(out.parts.size()) == dimension;
}

int write_output(const std::string& payload, const std::string& out_path) {
    if (out_path.empty() || out_path == "-") {
        std::cout << payload;
        return 0;
    }
    std::ofstream f(out_path, std::ios::binary);
    if (!f) {
        std::cerr << "error: cannot open output file '" << out_path << "'\n";
        return 2;
    }
    f << payload;
    return 0;
}

std::string describe(const Violation& v, int dimension) {
    std::ostringstream os;
    os << "invariant " << v.invariant << " " << v.kind << " at (";
    if (dimension == 2)
        os << v.at[0] << "," << v.at[1];
    else
        os << v.at[0] << "," << v.at[1] << "," << v.at[2];
    os << ")";
    if (!v.detail.empty()) os << " [" << v.detail << "]";
    return os.str();
}

void print_report_text(const VerifyReport& r, std::ostream& os) {
    os << "maze " << (r.dimension == 2 ? "2D " : "3D ");
    if (r.dimension == 2)
        os << r.sizes[0] << "x" << r.sizes[1];
    else
        os << r.sizes[0] << "x" << r.sizes[1] << "x" << r.sizes[2];
    os << (r.interior_only ? " (interior-only invariant 2)" : "") << "\n";
    os << "note: " << r.inv3_semantics << "\n";
    os << "invariant 1 violations: " << r.invariant1.size() << "\n";
    os << "invariant 2 violations: " << r.invariant2.size() << "\n";
    os << "invariant 3 violations: " << r.invariant3.size() << "\n";
    for (const auto* list : {&r.invariant1, &r.invariant2, &r.invariant3})
        for (const Violation& v : *list) os << "  " << describe(v, r.dimension) << "\n";
    os << "solvable: " << (r.solvable ? "yes" : "no");
    if (r.solvable) os << " (witness length " << r.witness.size() << ")";
    os << "\n";
}

int cmd_table(int dim, const std::string& out_path) {
    const RuleSet rs = dim == 2 ? builtin_rules_2d() : builtin_rules_3d();
    return write_output(export_table_json(compile(rs)), out_path);
}

int cmd_gen(int dim, const SizeSpec& size, std::uint64_t seed, const std::string& boundary,
            bool mirror, int max_retries, const std::string& render, int scale,
            const std::string& out_path) {
    const std::optional<BoundaryPolicy> policy = BoundaryPolicy::named(boundary, dim);
    if (!policy) {
        std::cerr << "error: boundary preset '" << boundary << "' is not valid for --dim "
                  << dim << "\n";
        return 2;
    }
    if (mirror && dim != 2) {
        std::cerr << "error: --mirror applies to 2D generation only\n";
        return 2;
    }
    const bool render_2d_only = render == "pgm";
    const bool render_3d_only = render == "obj";
    if ((render_2d_only && dim != 2) || (render_3d_only && dim != 3)) {
        std::cerr << "error: --render " << render << " requires --dim "
                  << (render_2d_only ? 2 : 3) << "\n";
        return 2;
    }

    GenConfig cfg;
    cfg.dimension = dim;
    cfg.seed = seed;
    cfg.boundary = *policy;
    cfg.mirror = mirror;
    if (dim == 2) {
        cfg.width = size.parts[0];
        cfg.height = size.parts[1];
        cfg.table = compile(builtin_rules_2d());
    } else {
        cfg.cols = size.parts[0];
        cfg.rows = size.parts[1];
        cfg.layers = size.parts[2];
        cfg.table = compile(builtin_rules_3d());
    }

    int retries = 0;
    bool clean = false;
    std::string payload;
    for (;; ++retries) {
        std::size_t violations = 0;
        if (dim == 2) {
            const Maze2D maze = generate2d(cfg);
            const VerifyReport r = verify(maze, /*interior_only=*/true);
            violations = r.total_violations();
            if (render == "ascii")
                payload = render_ascii(maze);
            else if (render == "pgm")
                payload = render_pgm(maze, scale);
            else
                payload = serialize(maze);
        } else {
            const Maze3D maze = generate3d(cfg);
            const VerifyReport r = verify(maze, /*interior_only=*/true);
            violations = r.total_violations();
            if (render == "ascii")
                payload = render_ascii(maze);
            else if (render == "obj")
                payload = export_obj(maze);
            else
                payload = serialize(maze);
        }
        clean = violations == 0;
        if (clean || retries >= max_retries) break;
        std::cerr << "seed " << cfg.seed << ": " << violations
                  << " invariant violations, retrying\n";
        ++cfg.seed;
    }
    std::cerr << "seed used: " << cfg.seed << ", retries: " << retries << "\n";
    const int rc = write_output(payload, out_path);
    if (rc != 0) return rc;
    if (max_retries > 0 && !clean) return 3;
    return 0;
}

int cmd_verify(const std::string& file, bool interior_only, bool as_json) {
    std::ifstream f(file, std::ios::binary);
    if (!f) {
        std::cerr << "error: cannot open '" << file << "'\n";
        return 2;
    }
    std::stringstream buf;
    buf << f.rdbuf();
    ParsedMaze parsed = [&]() -> ParsedMaze {
        return parse_maze(buf.str());
    }();
    const VerifyReport report = std::visit(
        [&](const auto& maze) { return verify(maze, interior_only); }, parsed);
    if (as_json)
        std::cout << export_report_json(report);
    else
        print_report_text(report, std::cout);
    return report.total_violations() == 0 ? 0 : 1;
}

int cmd_stats(int dim, const SizeSpec& size, std::size_t trials, std::uint64_t seed0,
              const std::string& boundary, bool as_json) {
    const std::optional<BoundaryPolicy> policy = BoundaryPolicy::named(boundary, dim);
    if (!policy) {
        std::cerr << "error: boundary preset '" << boundary << "' is not valid for --dim "
                  << dim << "\n";
        return 2;
    }
    GenConfig cfg;
    cfg.dimension = dim;
    cfg.boundary = *policy;
    if (dim == 2) {
        cfg.width = size.parts[0];
        cfg.height = size.parts[1];
        cfg.table = compile(builtin_rules_2d());
    } else {
        cfg.cols = size.parts[0];
        cfg.rows = size.parts[1];
        cfg.layers = size.parts[2];
        cfg.table = compile(builtin_rules_3d());
    }
    const StatsReport rep = monte_carlo(cfg, trials, seed0);
    if (as_json) {
        std::cout << export_stats_json(rep);
        return 0;
    }
    std::cout << "trials: " << rep.trials << "  boundary: " << rep.boundary << "\n";
    auto metric = [&](const char* name, const MetricSummary& m) {
        std::cout << name << ": total " << m.total << ", mean " << m.mean << ", min "
                  << m.min << ", max " << m.max << "\n";
    };
    metric("invariant 1 violations", rep.invariant1);
    metric("invariant 2 violations (interior)", rep.invariant2);
    metric("invariant 3 violations", rep.invariant3);
    std::cout << "solvable fraction: " << rep.solvable_fraction << "\n";
    std::cout << "mazes with disconnected paths: " << rep.disconnected_maze_fraction << "\n";
    std::cout << "conflicted-entry hit fraction: " << rep.conflicted_hit_fraction << "\n";
    std::cout << "seed  inv1  inv2  inv3  solvable  conflicted_hits\n";
    for (const SeedStats& s : rep.rows)
        std::cout << s.seed << "  " << s.invariant1 << "  " << s.invariant2 << "  "
                  << s.invariant3 << "  " << (s.solvable ? "yes" : "no") << "  "
                  << s.counters.conflicted_hits << "\n";
    return 0;
}

int cmd_conflicts(int dim, bool include_prevention, bool as_json) {
    const RuleSet rs = dim == 2 ? builtin_rules_2d() : builtin_rules_3d();
    const ConflictReport rep = enumerate_conflicts(rs, include_prevention);
    if (as_json) {
        std::cout << export_conflicts_json(rep, rs.n_vars());
        return 0;
    }
    std::cout << "dimension " << dim << (include_prevention ? " (full rule set)" : " (invariant rules only)")
              << "\n";
    std::cout << "conflicting contexts: " << rep.context_count() << "\n";
    std::cout << "distinct conflicting rule pairs: " << rep.rule_pairs.size() << "\n";
    std::cout << "(context, pair) instances: " << rep.pair_instances << "\n";
    for (const ConflictContext& c : rep.conflicts) {
        std::cout << "  " << context_string(c.code, rs.n_vars()) << ":";
        for (const auto& [label, out] : c.matching)
            std::cout << "  [" << label << " demands " << int(out) << "]";
        std::cout << "\n";
    }
    std::cout << "prevention analysis (invariant-rule conflicts vs prevention rules):\n";
    std::cout << "  method: " << rep.prevention_method << "\n";
    std::cout << "  prevented: " << rep.prevented.size() << " (fraction "
              << rep.prevented_fraction << ")\n";
    for (const PreventedContext& p : rep.prevented)
        std::cout << "    " << context_string(p.code, rs.n_vars()) << " by " << p.rule_label
                  << " at var " << p.predecessor_var << "\n";
    std::cout << "  overridden: " << rep.overridden.size() << "\n";
    for (std::uint16_t code : rep.overridden)
        std::cout << "    " << context_string(code, rs.n_vars()) << "\n";
    std::cout << "  residual: " << rep.residual.size() << " ("
              << rep.residual_context_fraction * 100.0 << "% of "
              << rs.table_size() << " contexts)\n";
    for (std::uint16_t code : rep.residual)
        std::cout << "    " << context_string(code, rs.n_vars()) << "\n";
    return 0;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Lookup-table maze generator (Entombed style): 2D and 3D mazes from "
                 "hyper-local context rules"};
    app.require_subcommand(1);

    // table
    auto* table = app.add_subcommand("table", "emit the compiled lookup table as JSON");
    int t_dim = 2;
    std::string t_out;
    table->add_option("--dim", t_dim, "maze dimension")->check(CLI::IsMember({2, 3}))->required();
    table->add_option("--out", t_out, "output file (default stdout)");
    std::string t_format = "json";
    table->add_option("--format", t_format, "output format")->check(CLI::IsMember({"json"}));

    // gen
    auto* gen = app.add_subcommand("gen", "generate a maze");
    int g_dim = 2;
    std::string g_size, g_boundary = "atari2d", g_render = "text", g_out;
    std::uint64_t g_seed = 0;
    bool g_mirror = false;
    int g_retries = 0, g_scale = 4;
    gen->add_option("--dim", g_dim, "maze dimension")->check(CLI::IsMember({2, 3}))->required();
    gen->add_option("--size", g_size, "WxH (2D) or VxUxZ (3D)")->required();
    gen->add_option("--seed", g_seed, "64-bit seed (default 0)");
    gen->add_option("--boundary", g_boundary,
                    "out-of-bounds policy: atari2d|solid|open|random (default atari2d)");
    gen->add_flag("--mirror", g_mirror, "left/right symmetric output (2D)");
    gen->add_option("--max-retries", g_retries,
                    "re-run with seed+1 while the verifier finds violations");
    gen->add_option("--render", g_render, "text|ascii|pgm|obj (default text)")
        ->check(CLI::IsMember({"text", "ascii", "pgm", "obj"}));
    gen->add_option("--scale", g_scale, "pixels per cell for pgm (default 4)");
    gen->add_option("--out", g_out, "output file (default stdout)");

    // verify
    auto* ver = app.add_subcommand("verify", "check a maze file against the invariants");
    std::string v_file;
    bool v_interior = false, v_json = false;
    ver->add_option("file", v_file, "maze file (MAZE2/MAZE3 format)")->required();
    ver->add_flag("--interior-only", v_interior, "skip rim cells in the invariant-2 check");
    ver->add_flag("--json", v_json, "emit the report as JSON");

    // stats
    auto* st = app.add_subcommand("stats", "Monte Carlo statistics over many seeds");
    int s_dim = 2;
    std::string s_size, s_boundary = "atari2d";
    std::size_t s_trials = 100;
    std::uint64_t s_seed0 = 0;
    bool s_json = false;
    st->add_option("--dim", s_dim, "maze dimension")->check(CLI::IsMember({2, 3}))->required();
    st->add_option("--size", s_size, "WxH (2D) or VxUxZ (3D)")->required();
    st->add_option("--trials", s_trials, "number of seeds (default 100)")
        ->check(CLI::PositiveNumber);
    st->add_option("--seed0", s_seed0, "first seed (default 0)");
    st->add_option("--boundary", s_boundary, "boundary preset (default atari2d)");
    st->add_flag("--json", s_json, "emit the report as JSON");

    // conflicts
    auto* co = app.add_subcommand("conflicts", "enumerate contexts where rules disagree");
    int c_dim = 2;
    bool c_prev = false, c_json = false;
    co->add_option("--dim", c_dim, "maze dimension")->check(CLI::IsMember({2, 3}))->required();
    co->add_flag("--include-prevention", c_prev,
                 "include the prevention rules in the enumeration");
    co->add_flag("--json", c_json, "emit the report as JSON");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    }

    try {
        if (*table) return cmd_table(t_dim, t_out);
        if (*gen) {
            SizeSpec size;
            if (!parse_size(g_size, g_dim, size)) {
                std::cerr << "error: --size must be " << (g_dim == 2 ? "WxH" : "VxUxZ")
                          << " with positive integers\n";
                return 2;
            }
            return cmd_gen(g_dim, size, g_seed, g_boundary, g_mirror, g_retries, g_render,
                           g_scale, g_out);
        }
        if (*ver) return cmd_verify(v_file, v_interior, v_json);
        if (*st) {
            SizeSpec size;
            if (!parse_size(s_size, s_dim, size)) {
                std::cerr << "error: --size must be " << (s_dim == 2 ? "WxH" : "VxUxZ")
                          << " with positive integers\n";
                return 2;
            }
            return cmd_stats(s_dim, size, s_trials, s_seed0, s_boundary, s_json);
        }
        if (*co) return cmd_conflicts(c_dim, c_prev, c_json);
    } catch (const ParseError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 0;
}
