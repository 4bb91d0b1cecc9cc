#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "entombed/grid.hpp"

namespace entombed {

/// Which maze property a rule encodes. The three invariants:
///   1 - no 2x2 square of equal cells,
///   2 - no wall or path starts or ends (scan direction) with thickness one,
///   3 - every path connects onward to the next line (2D) / layer (3D).
/// Prevention rules do not encode an invariant directly; they force earlier
/// cells so that contexts with contradictory demands cannot arise.
enum class RuleGroup : std::uint8_t { invariant1, invariant2, invariant3, prevention };

/// A wildcard pattern over one context plus the cell it forces. Rules never
/// force a random choice; "random" is the absence of any matching rule.
struct Rule {
    std::string pattern; // one char per variable: '0', '1' or '*'
    Cell output;         // 0 or 1
    RuleGroup group;
    std::string label;   // stable provenance id, e.g. "inv1 *000*->1"

    bool matches(std::uint16_t code) const {
        const int n = static_cast<int>(pattern.size());
        for (int k = 0; k < n; ++k) {
            const char p = pattern[static_cast<std::size_t>(k)];
            if (p == '*') continue;
            const int bit = (code >> (n - 1 - k)) & 1;
            if (bit != p - '0') return false;
        }
        return true;
    }
};

/// A concrete-context resolution of a rule conflict (contexts matched by
/// rules demanding both outputs get their value pinned here instead).
struct Override {
    std::uint16_t code;
    Cell value;
    std::string label;
};

namespace detail {
inline Rule make_rule(std::string_view pattern, int output, RuleGroup group,
                      std::string_view group_name) {
    Rule r;
    r.pattern = std::string(pattern);
    r.output = static_cast<Cell>(output);
    r.group = group;
    r.label = std::string(group_name) + " " + std::string(pattern) + "->" +
              (output ? "1" : "0");
    return r;
}
} // namespace detail

/// Ordered rule list for one dimension. Order follows the source listing
/// (invariant 1, 2, 3, then prevention); it is used only for deterministic
/// earliest-rule-wins resolution of unresolved conflicts and for stable
/// provenance output.
class RuleSet {
public:
    RuleSet(int dimension, std::vector<Rule> rules, std::vector<Override> overrides)
        : dimension_(dimension), rules_(std::move(rules)), overrides_(std::move(overrides)) {
        if (dimension_ != 2 && dimension_ != 3)
            throw std::invalid_argument("RuleSet: dimension must be 2 or 3");
        const std::size_t want = dimension_ == 2 ? 5 : 10;
        for (const Rule& r : rules_) {
            if (r.pattern.size() != want)
                throw std::invalid_argument("RuleSet: pattern length mismatch: " + r.pattern);
            if (r.output != 0 && r.output != 1)
                throw std::invalid_argument("RuleSet: rule output must be 0 or 1");
            for (char c : r.pattern)
                if (c != '0' && c != '1' && c != '*')
                    throw std::invalid_argument("RuleSet: bad pattern char in " + r.pattern);
        }
        // An override is only legal where rules genuinely disagree.
        for (const Override& ov : overrides_) {
            bool saw0 = false, saw1 = false;
            for (const Rule& r : rules_) {
                if (!r.matches(ov.code)) continue;
                (r.output ? saw1 : saw0) = true;
            }
            if (!(saw0 && saw1))
                throw std::invalid_argument(
                    "RuleSet: override at non-conflicting context " +
                    context_string(ov.code, n_vars()));
        }
    }

    int dimension() const { return dimension_; }
    int n_vars() const { return dimension_ == 2 ? 5 : 10; }
    std::size_t table_size() const { return std::size_t{1} << n_vars(); }
    const std::vector<Rule>& rules() const { return rules_; }
    const std::vector<Override>& overrides() const { return overrides_; }

private:
    int dimension_;
    std::vector<Rule> rules_;
    std::vector<Override> overrides_;
};

/// The 2D rule set: two rules per 2x2 orientation of invariant 1, four
/// thickness-one rules for invariant 2, the single extra connectivity rule
/// of invariant 3 (its second rule *,*,1,0,1->0 is already the invariant-2
/// rule), the prevention rule *0100->0, and the 01001->1 override that
/// resolves the one context where invariants 2 and 3 collide.
inline RuleSet builtin_rules_2d() {
    using detail::make_rule;
    std::vector<Rule> rules;
    rules.push_back(make_rule("*000*", 1, RuleGroup::invariant1, "inv1"));
    rules.push_back(make_rule("*111*", 0, RuleGroup::invariant1, "inv1"));
    rules.push_back(make_rule("**010", 1, RuleGroup::invariant2, "inv2"));
    rules.push_back(make_rule("**101", 0, RuleGroup::invariant2, "inv2"));
    rules.push_back(make_rule("010**", 1, RuleGroup::invariant2, "inv2"));
    rules.push_back(make_rule("101**", 0, RuleGroup::invariant2, "inv2"));
    rules.push_back(make_rule("*1001", 0, RuleGroup::invariant3, "inv3"));
    rules.push_back(make_rule("*0100", 0, RuleGroup::prevention, "prevent"));
    std::vector<Override> overrides;
    overrides.push_back(Override{0b01001, 1, "override 01001->1"});
    return RuleSet(2, std::move(rules), std::move(overrides));
}

/// The 3D rule set: 13 invariant rules plus 5 prevention rules, variables
/// in column order a,b,c,d,e,f,g,h,j,k. No overrides: the residual
/// conflicts are resolved earliest-rule-wins at compile time and flagged.
inline RuleSet builtin_rules_3d() {
    using detail::make_rule;
    std::vector<Rule> rules;
    // invariant 1, one rule pair per 2x2 plane orientation through the new cell
    rules.push_back(make_rule("00*******0", 1, RuleGroup::invariant1, "inv1"));
    rules.push_back(make_rule("11*******1", 0, RuleGroup::invariant1, "inv1"));
    rules.push_back(make_rule("******0*00", 1, RuleGroup::invariant1, "inv1"));
    rules.push_back(make_rule("******1*11", 0, RuleGroup::invariant1, "inv1"));
    rules.push_back(make_rule("*0**0*0***", 1, RuleGroup::invariant1, "inv1"));
    rules.push_back(make_rule("*1**1*1***", 0, RuleGroup::invariant1, "inv1"));
    // invariant 2
    rules.push_back(make_rule("01000*****", 1, RuleGroup::invariant2, "inv2"));
    rules.push_back(make_rule("10111*****", 0, RuleGroup::invariant2, "inv2"));
    rules.push_back(make_rule("****00100*", 1, RuleGroup::invariant2, "inv2"));
    rules.push_back(make_rule("****11011*", 0, RuleGroup::invariant2, "inv2"));
    // invariant 3
    rules.push_back(make_rule("00111****1", 0, RuleGroup::invariant3, "inv3"));
    rules.push_back(make_rule("10110*1***", 0, RuleGroup::invariant3, "inv3"));
    rules.push_back(make_rule("00110*1**1", 0, RuleGroup::invariant3, "inv3"));
    // prevention rules, added to make conflicting contexts unreachable
    rules.push_back(make_rule("*11***01**", 0, RuleGroup::prevention, "prevent"));
    rules.push_back(make_rule("*00***10**", 1, RuleGroup::prevention, "prevent"));
    rules.push_back(make_rule("*01***11**", 0, RuleGroup::prevention, "prevent"));
    rules.push_back(make_rule("*10***00**", 1, RuleGroup::prevention, "prevent"));
    rules.push_back(make_rule("**011*01**", 0, RuleGroup::prevention, "prevent"));
    return RuleSet(3, std::move(rules), {});
}

enum class TableValue : std::uint8_t { path = 0, wall = 1, random_choice = 2 };

struct TableEntry {
    TableValue value = TableValue::random_choice;
    bool conflicted = false;          // matching rules disagreed, earliest won
    std::vector<std::string> rules;   // provenance; empty iff value is random
};

/// Compiled decision table: one entry per concrete context.
class LookupTable {
public:
    LookupTable(int dimension, std::vector<TableEntry> entries)
        : dimension_(dimension), entries_(std::move(entries)) {}

    int dimension() const { return dimension_; }
    int n_vars() const { return dimension_ == 2 ? 5 : 10; }
    std::size_t size() const { return entries_.size(); }

    const TableEntry& entry(std::uint16_t code) const {
        assert(code < entries_.size());
        return entries_[code];
    }

    const std::vector<TableEntry>& entries() const { return entries_; }

private:
    int dimension_;
    std::vector<TableEntry> entries_;
};

/// Expand a rule set into its full table. For each concrete context: an
/// override wins outright; otherwise agreeing rules force their value; no
/// matching rule means a random entry; disagreeing rules resolve to the
/// earliest-listed match with the entry flagged conflicted. Conflicts are
/// data, not failures — generation must proceed.
inline LookupTable compile(const RuleSet& rs) {
    std::vector<TableEntry> entries(rs.table_size());
    for (std::uint32_t code = 0; code < rs.table_size(); ++code) {
        TableEntry& e = entries[code];
        const Override* ov = nullptr;
        for (const Override& o : rs.overrides())
            if (o.code == code) { ov = &o; break; }

        bool saw0 = false, saw1 = false;
        const Rule* first = nullptr;
        for (const Rule& r : rs.rules()) {
            if (!r.matches(static_cast<std::uint16_t>(code))) continue;
            if (!first) first = &r;
            (r.output ? saw1 : saw0) = true;
            e.rules.push_back(r.label);
        }
        if (ov) {
            e.value = ov->value ? TableValue::wall : TableValue::path;
            e.rules.insert(e.rules.begin(), ov->label);
        } else if (!saw0 && !saw1) {
            e.value = TableValue::random_choice;
        } else if (saw0 != saw1) {
            e.value = saw1 ? TableValue::wall : TableValue::path;
        } else {
            e.value = first->output ? TableValue::wall : TableValue::path;
            e.conflicted = true;
        }
    }
    return LookupTable(rs.dimension(), std::move(entries));
}

/// Resolve one table entry to a cell; random entries draw exactly one bit.
template <class Rng = SplitMix64>
Cell table_entry(const LookupTable& table, std::uint16_t code, Rng& rng) {
    switch (table.entry(code).value) {
    case TableValue::path: return 0;
    case TableValue::wall: return 1;
    case TableValue::random_choice: return rng.next_bit();
    }
    return 0; // unreachable
}

} // namespace entombed
