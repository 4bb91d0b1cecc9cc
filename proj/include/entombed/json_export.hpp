#pragma once

#include <string>

#include <json.hpp>

#include "entombed/conflicts.hpp"
#include "entombed/rules.hpp"
#include "entombed/stats.hpp"
#include "entombed/verifier.hpp"

// JSON documents use nlohmann's ordered_json so key order is stable and
// re-serialization is byte-identical.

namespace entombed {

using ojson = nlohmann::ordered_json;

inline ojson table_to_json(const LookupTable& table) {
    ojson doc;
    doc["dimension"] = table.dimension();
    ojson entries = ojson::array();
    for (std::size_t code = 0; code < table.size(); ++code) {
        const TableEntry& e = table.entries()[code];
        ojson j;
        j["code"] = code;
        j["pattern_string"] = context_string(static_cast<std::uint16_t>(code), table.n_vars());
        j["value"] = e.value == TableValue::random_choice ? "R"
                     : e.value == TableValue::wall        ? "1"
                                                          : "0";
        j["rules"] = e.rules;
        j["conflicted"] = e.conflicted;
        entries.push_back(std::move(j));
    }
    doc["entries"] = std::move(entries);
    return doc;
}

inline std::string export_table_json(const LookupTable& table) {
    return table_to_json(table).dump(2) + "\n";
}

inline ojson violations_to_json(const std::vector<Violation>& vs) {
    ojson arr = ojson::array();
    for (const Violation& v : vs) {
        ojson j;
        j["invariant"] = v.invariant;
        j["kind"] = v.kind;
        j["at"] = v.at;
        if (!v.detail.empty()) j["detail"] = v.detail;
        arr.push_back(std::move(j));
    }
    return arr;
}

inline ojson report_to_json(const VerifyReport& r) {
    ojson doc;
    doc["dimension"] = r.dimension;
    doc["sizes"] = r.sizes;
    doc["interior_only"] = r.interior_only;
    doc["invariant3_semantics"] = r.inv3_semantics;
    doc["counts"] = {{"invariant1", r.invariant1.size()},
                     {"invariant2", r.invariant2.size()},
                     {"invariant3", r.invariant3.size()}};
    doc["violations"] = {{"invariant1", violations_to_json(r.invariant1)},
                         {"invariant2", violations_to_json(r.invariant2)},
                         {"invariant3", violations_to_json(r.invariant3)}};
    doc["solvable"] = r.solvable;
    doc["witness"] = r.witness;
    return doc;
}

inline std::string export_report_json(const VerifyReport& r) {
    return report_to_json(r).dump(2) + "\n";
}

inline ojson stats_to_json(const StatsReport& r) {
    auto metric = [](const MetricSummary& m) {
        return ojson{{"total", m.total}, {"mean", m.mean}, {"min", m.min}, {"max", m.max}};
    };
    ojson doc;
    doc["dimension"] = r.dimension;
    doc["sizes"] = r.sizes;
    doc["boundary"] = r.boundary;
    doc["seed0"] = r.seed0;
    doc["trials"] = r.trials;
    doc["invariant1"] = metric(r.invariant1);
    doc["invariant2_interior"] = metric(r.invariant2);
    doc["invariant3"] = metric(r.invariant3);
    doc["solvable_fraction"] = r.solvable_fraction;
    doc["disconnected_maze_fraction"] = r.disconnected_maze_fraction;
    doc["conflicted_hit_fraction"] = r.conflicted_hit_fraction;
    ojson rows = ojson::array();
    for (const SeedStats& s : r.rows) {
        rows.push_back({{"seed", s.seed},
                        {"invariant1", s.invariant1},
                        {"invariant2_interior", s.invariant2},
                        {"invariant3", s.invariant3},
                        {"solvable", s.solvable},
                        {"conflicted_hits", s.counters.conflicted_hits},
                        {"random_entry_draws", s.counters.random_entry_draws},
                        {"boundary_random_draws", s.counters.boundary_random_draws},
                        {"cells", s.counters.cells}});
    }
    doc["rows"] = std::move(rows);
    return doc;
}

inline std::string export_stats_json(const StatsReport& r) {
    return stats_to_json(r).dump(2) + "\n";
}

inline ojson conflicts_to_json(const ConflictReport& r, int n_vars) {
    ojson doc;
    doc["dimension"] = r.dimension;
    doc["include_prevention"] = r.include_prevention;
    doc["context_count"] = r.context_count();
    doc["rule_pair_count"] = r.rule_pairs.size();
    doc["pair_instance_count"] = r.pair_instances;
    ojson confs = ojson::array();
    for (const ConflictContext& c : r.conflicts) {
        ojson j;
        j["code"] = c.code;
        j["context"] = context_string(c.code, n_vars);
        ojson rules = ojson::array();
        for (const auto& [label, out] : c.matching)
            rules.push_back({{"rule", label}, {"demands", out}});
        j["rules"] = std::move(rules);
        confs.push_back(std::move(j));
    }
    doc["conflicts"] = std::move(confs);
    ojson pairs = ojson::array();
    for (const auto& [a, b] : r.rule_pairs) pairs.push_back({a, b});
    doc["rule_pairs"] = std::move(pairs);

    ojson prev;
    prev["method"] = r.prevention_method;
    ojson plist = ojson::array();
    for (const PreventedContext& p : r.prevented)
        plist.push_back({{"context", context_string(p.code, n_vars)},
                         {"by", p.rule_label},
                         {"at_var", std::string(1, p.predecessor_var)}});
    prev["prevented"] = std::move(plist);
    ojson olist = ojson::array();
    for (std::uint16_t code : r.overridden) olist.push_back(context_string(code, n_vars));
    prev["overridden"] = std::move(olist);
    ojson rlist = ojson::array();
    for (std::uint16_t code : r.residual) rlist.push_back(context_string(code, n_vars));
    prev["residual"] = std::move(rlist);
    prev["prevented_fraction"] = r.prevented_fraction;
    prev["residual_context_fraction"] = r.residual_context_fraction;
    doc["prevention"] = std::move(prev);
    return doc;
}

inline std::string export_conflicts_json(const ConflictReport& r, int n_vars) {
    return conflicts_to_json(r, n_vars).dump(2) + "\n";
}

} // namespace entombed
