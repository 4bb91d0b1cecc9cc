#include <catch2/catch_amalgamated.hpp>

#include <string>
#include <vector>

#include "entombed/rules.hpp"
#include "support/window_oracle.hpp"

using namespace entombed;

namespace {

// Expected 2D table, one value char per context code 0..31, brute-forced
// with the window oracle and pinned.
constexpr const char* kExpected2DTable = "111R00RR1111R000111R0000R01RR000";

char value_char(const TableEntry& e) {
    switch (e.value) {
    case TableValue::path: return '0';
    case TableValue::wall: return '1';
    case TableValue::random_choice: return 'R';
    }
    return '?';
}

struct ScriptedRng {
    std::vector<Cell> bits;
    std::size_t pos = 0;
    Cell next_bit() {
        REQUIRE(pos < bits.size());
        return bits[pos++];
    }
};

} // namespace

TEST_CASE("builtin 2D rule set contents") {
    const RuleSet rs = builtin_rules_2d();
    REQUIRE(rs.dimension() == 2);
    REQUIRE(rs.rules().size() == 8);
    REQUIRE(rs.overrides().size() == 1);

    CHECK(rs.rules()[0].pattern == "*000*");
    CHECK(rs.rules()[0].output == 1);
    CHECK(rs.rules()[1].pattern == "*111*");
    CHECK(rs.rules()[1].output == 0);
    CHECK(rs.rules()[6].pattern == "*1001");
    CHECK(rs.rules()[6].group == RuleGroup::invariant3);
    CHECK(rs.rules()[7].pattern == "*0100");
    CHECK(rs.rules()[7].output == 0);
    CHECK(rs.rules()[7].group == RuleGroup::prevention);

    CHECK(rs.overrides()[0].code == 0b01001);
    CHECK(rs.overrides()[0].value == 1);
}

TEST_CASE("builtin 3D rule set contents") {
    const RuleSet rs = builtin_rules_3d();
    REQUIRE(rs.dimension() == 3);
    REQUIRE(rs.rules().size() == 18);
    CHECK(rs.overrides().empty());

    int invariant = 0, prevention = 0;
    for (const Rule& r : rs.rules())
        (r.group == RuleGroup::prevention ? prevention : invariant) += 1;
    CHECK(invariant == 13);
    CHECK(prevention == 5);

    CHECK(rs.rules()[0].pattern == "00*******0");
    CHECK(rs.rules()[0].output == 1);
    CHECK(rs.rules()[13].pattern == "*11***01**");
    CHECK(rs.rules()[13].output == 0);
}

TEST_CASE("rule sets validate their invariants") {
    std::vector<Rule> bad{{"*00", 1, RuleGroup::invariant1, "x"}};
    CHECK_THROWS_AS(RuleSet(2, bad, {}), std::invalid_argument);

    std::vector<Rule> rules{{"*000*", 1, RuleGroup::invariant1, "x"}};
    std::vector<Override> ov{{0b00000, 0, "bad override"}}; // only one rule matches
    CHECK_THROWS_AS(RuleSet(2, rules, ov), std::invalid_argument);
}

TEST_CASE("rule matching honours wildcards") {
    const Rule r{"*0100", 0, RuleGroup::prevention, "x"};
    CHECK(r.matches(0b00100));
    CHECK(r.matches(0b10100));
    CHECK_FALSE(r.matches(0b01100));
}

TEST_CASE("compiled 2D table matches the pinned expectation") {
    const LookupTable t = compile(builtin_rules_2d());
    REQUIRE(t.size() == 32);
    std::string got;
    for (std::uint16_t code = 0; code < 32; ++code) got.push_back(value_char(t.entry(code)));
    CHECK(got == kExpected2DTable);

    // the landmark entries
    CHECK(value_char(t.entry(0b00100)) == '0');
    CHECK(value_char(t.entry(0b01001)) == '1');
    CHECK(value_char(t.entry(0b00000)) == '1');
    CHECK(value_char(t.entry(0b11110)) == '0');

    // exactly these eight contexts are free choices
    const std::vector<std::string> random_contexts{"00011", "00110", "00111", "01100",
                                                   "10011", "11000", "11011", "11100"};
    std::vector<std::string> got_random;
    for (std::uint16_t code = 0; code < 32; ++code)
        if (t.entry(code).value == TableValue::random_choice)
            got_random.push_back(context_string(code, 5));
    CHECK(got_random == random_contexts);

    // the override resolves the only contradiction: nothing stays conflicted
    for (const TableEntry& e : t.entries()) CHECK_FALSE(e.conflicted);
}

TEST_CASE("compiled 2D table agrees with the window oracle everywhere") {
    const LookupTable t = compile(builtin_rules_2d());
    for (std::uint16_t code = 0; code < 32; ++code) {
        CAPTURE(code, context_string(code, 5));
        CHECK(value_char(t.entry(code)) == oracle::expected_entry(code));
    }
}

TEST_CASE("compile is deterministic") {
    const LookupTable a = compile(builtin_rules_2d());
    const LookupTable b = compile(builtin_rules_2d());
    REQUIRE(a.size() == b.size());
    for (std::size_t code = 0; code < a.size(); ++code) {
        const TableEntry& x = a.entries()[code];
        const TableEntry& y = b.entries()[code];
        CHECK(x.value == y.value);
        CHECK(x.conflicted == y.conflicted);
        CHECK(x.rules == y.rules);
    }
}

TEST_CASE("entry provenance is empty exactly for random entries") {
    for (const LookupTable& t : {compile(builtin_rules_2d()), compile(builtin_rules_3d())}) {
        for (std::size_t code = 0; code < t.size(); ++code) {
            const TableEntry& e = t.entries()[code];
            CHECK(e.rules.empty() == (e.value == TableValue::random_choice));
        }
    }
}

TEST_CASE("3D table shape and landmark entries") {
    const LookupTable t = compile(builtin_rules_3d());
    REQUIRE(t.size() == 1024);

    std::size_t random = 0, conflicted = 0;
    for (const TableEntry& e : t.entries()) {
        random += e.value == TableValue::random_choice ? 1 : 0;
        conflicted += e.conflicted ? 1 : 0;
    }
    CHECK(random == 194);
    CHECK(conflicted == 92);

    // a=b=k=1 with nothing else constrained: a 2x2 of walls would close
    CHECK(t.entry(0b1110000001).value == TableValue::path);
    CHECK(t.entry(0b1111111111).value == TableValue::path);
    // first invariant-1 rule: a=b=k=0 forces a wall
    CHECK(t.entry(0b0000000000).value == TableValue::wall);
}

TEST_CASE("table_entry resolves wall, path and random") {
    const LookupTable t = compile(builtin_rules_2d());
    ScriptedRng rng{{1, 0}};
    CHECK(table_entry(t, 0b00000, rng) == 1); // forced wall, no draw
    CHECK(table_entry(t, 0b11110, rng) == 0); // forced path, no draw
    CHECK(rng.pos == 0);
    CHECK(table_entry(t, 0b11011, rng) == 1); // random entry takes the scripted 1
    CHECK(table_entry(t, 0b11011, rng) == 0); // and then the scripted 0
    CHECK(rng.pos == 2);
}
