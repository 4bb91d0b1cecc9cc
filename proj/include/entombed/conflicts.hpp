#pragma once

#include <algorithm>
#include <array>
#include <cstdint>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "entombed/grid.hpp"
#include "entombed/rules.hpp"

namespace entombed {

/// One context matched by rules demanding both outputs.
struct ConflictContext {
    std::uint16_t code;
    std::vector<std::pair<std::string, Cell>> matching; // (rule label, demanded cell)
};

/// A base conflict made unreachable: `rule_label` fires unconditionally at
/// the generation step of context variable `predecessor_var` and forces the
/// opposite of the value the conflict needs there.
struct PreventedContext {
    std::uint16_t code;
    std::string rule_label;
    char predecessor_var;
};

struct ConflictReport {
    int dimension = 2;
    bool include_prevention = false;

    // Enumeration over the selected rules (base only, or full set).
    std::vector<ConflictContext> conflicts;                       // sorted by code
    std::vector<std::pair<std::string, std::string>> rule_pairs;  // distinct disagreeing pairs
    std::size_t pair_instances = 0; // (context, disagreeing pair) count

    // Static reachability analysis of the base conflicts against the set's
    // prevention rules and overrides (computed regardless of the flag).
    std::vector<PreventedContext> prevented;
    std::vector<std::uint16_t> overridden; // base conflicts pinned by an override
    std::vector<std::uint16_t> residual;   // neither prevented nor overridden
    double prevented_fraction = 0.0;       // prevented / base conflicts
    double residual_context_fraction = 0.0; // residual / table size
    std::string prevention_method;

    std::size_t context_count() const { return conflicts.size(); }
};

namespace detail {

inline std::array<int, 3> offset3(int dimension, std::size_t var) {
    if (dimension == 2) {
        const auto& o = kContextOffsets2D[var];
        return {0, o[0], o[1]};
    }
    return kContextOffsets3D[var];
}

// Cell values of a context, indexed by variable.
inline std::vector<Cell> context_bits(std::uint16_t code, int n_vars) {
    std::vector<Cell> bits(static_cast<std::size_t>(n_vars));
    for (int k = 0; k < n_vars; ++k)
        bits[static_cast<std::size_t>(k)] =
            static_cast<Cell>((code >> (n_vars - 1 - k)) & 1);
    return bits;
}

// Does `rule`, evaluated at the step that generated context variable `p`,
// fire for every completion of that step's own context and force the
// opposite of the conflict's value at p? True only when each constrained
// position of the rule lands on a cell the conflict context pins.
inline bool prevents_at(const Rule& rule, int dimension, std::size_t p,
                        const std::vector<Cell>& bits) {
    const int n = dimension == 2 ? 5 : 10;
    if (rule.output == bits[p]) return false;
    const std::array<int, 3> base = offset3(dimension, p);
    for (int q = 0; q < n; ++q) {
        const char pc = rule.pattern[static_cast<std::size_t>(q)];
        if (pc == '*') continue;
        const std::array<int, 3> off = offset3(dimension, static_cast<std::size_t>(q));
        const std::array<int, 3> cell{base[0] + off[0], base[1] + off[1], base[2] + off[2]};
        bool visible = false;
        for (int r = 0; r < n; ++r) {
            if (offset3(dimension, static_cast<std::size_t>(r)) != cell) continue;
            if (bits[static_cast<std::size_t>(r)] != pc - '0') return false;
            visible = true;
            break;
        }
        if (!visible) return false; // constrains a cell outside the window
    }
    return true;
}

} // namespace detail

/// Enumerate every concrete context matched by at least two rules with
/// differing outputs. With include_prevention false only the invariant
/// rules participate; true adds the prevention rules. The report also
/// carries a static analysis of which base conflicts the prevention rules
/// make unreachable during generation.
inline ConflictReport enumerate_conflicts(const RuleSet& rs, bool include_prevention) {
    ConflictReport rep;
    rep.dimension = rs.dimension();
    rep.include_prevention = include_prevention;
    rep.prevention_method =
        "a base conflict is counted prevented when some prevention rule, taken at "
        "the generation step of one of the context's own cells, has all of its "
        "constrained positions pinned by the context and forces the opposite cell "
        "value there, so no completion of the surrounding cells can reach the "
        "conflicting context";

    const int n = rs.n_vars();
    std::set<std::pair<std::string, std::string>> pairs;

    auto scan = [&](bool with_prevention) {
        std::vector<ConflictContext> out;
        for (std::uint32_t code = 0; code < rs.table_size(); ++code) {
            ConflictContext cc;
            cc.code = static_cast<std::uint16_t>(code);
            bool saw0 = false, saw1 = false;
            for (const Rule& r : rs.rules()) {
                if (!with_prevention && r.group == RuleGroup::prevention) continue;
                if (!r.matches(cc.code)) continue;
                cc.matching.emplace_back(r.label, r.output);
                (r.output ? saw1 : saw0) = true;
            }
            if (saw0 && saw1) out.push_back(std::move(cc));
        }
        return out;
    };

    rep.conflicts = scan(include_prevention);
    for (const ConflictContext& cc : rep.conflicts) {
        for (std::size_t x = 0; x < cc.matching.size(); ++x) {
            for (std::size_t y = x + 1; y < cc.matching.size(); ++y) {
                if (cc.matching[x].second == cc.matching[y].second) continue;
                ++rep.pair_instances;
                auto pr = std::minmax(cc.matching[x].first, cc.matching[y].first);
                pairs.insert({pr.first, pr.second});
            }
        }
    }
    rep.rule_pairs.assign(pairs.begin(), pairs.end());

    // Reachability of the base conflicts.
    const std::vector<ConflictContext> base = scan(false);
    for (const ConflictContext& cc : base) {
        bool handled = false;
        for (const Override& ov : rs.overrides()) {
            if (ov.code == cc.code) {
                rep.overridden.push_back(cc.code);
                handled = true;
                break;
            }
        }
        if (handled) continue;
        const std::vector<Cell> bits = detail::context_bits(cc.code, n);
        for (std::size_t p = 0; p < static_cast<std::size_t>(n) && !handled; ++p) {
            for (const Rule& r : rs.rules()) {
                if (r.group != RuleGroup::prevention) continue;
                if (detail::prevents_at(r, rs.dimension(), p, bits)) {
                    rep.prevented.push_back({cc.code, r.label, kContextVarNames[p]});
                    handled = true;
                    break;
                }
            }
        }
        if (!handled) rep.residual.push_back(cc.code);
    }
    if (!base.empty())
        rep.prevented_fraction =
            static_cast<double>(rep.prevented.size()) / static_cast<double>(base.size());
    rep.residual_context_fraction =
        static_cast<double>(rep.residual.size()) / static_cast<double>(rs.table_size());
    return rep;
}

} // namespace entombed
