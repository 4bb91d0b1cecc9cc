#include <catch2/catch_amalgamated.hpp>

#include <algorithm>
#include <set>
#include <string>
#include <vector>

#include "entombed/conflicts.hpp"

using namespace entombed;

namespace {

std::vector<std::string> context_strings(const std::vector<ConflictContext>& cs, int n) {
    std::vector<std::string> out;
    for (const ConflictContext& c : cs) out.push_back(context_string(c.code, n));
    return out;
}

} // namespace

TEST_CASE("2D invariant rules collide in exactly one context") {
    const ConflictReport rep = enumerate_conflicts(builtin_rules_2d(), false);
    REQUIRE(rep.context_count() == 1);
    CHECK(context_string(rep.conflicts[0].code, 5) == "01001");
    REQUIRE(rep.conflicts[0].matching.size() == 2);
    CHECK(rep.conflicts[0].matching[0].first == "inv2 010**->1");
    CHECK(rep.conflicts[0].matching[0].second == 1);
    CHECK(rep.conflicts[0].matching[1].first == "inv3 *1001->0");
    CHECK(rep.conflicts[0].matching[1].second == 0);
    CHECK(rep.rule_pairs.size() == 1);
    CHECK(rep.pair_instances == 1);
}

TEST_CASE("the 2D prevention rule adds no conflicts of its own") {
    const ConflictReport rep = enumerate_conflicts(builtin_rules_2d(), true);
    CHECK(rep.context_count() == 1);
}

TEST_CASE("the 2D contradiction is overridden, not prevented") {
    const ConflictReport rep = enumerate_conflicts(builtin_rules_2d(), false);
    CHECK(rep.prevented.empty());
    REQUIRE(rep.overridden.size() == 1);
    CHECK(context_string(rep.overridden[0], 5) == "01001");
    CHECK(rep.residual.empty());
    CHECK(rep.residual_context_fraction == 0.0);
}

TEST_CASE("3D invariant-rule conflict enumeration") {
    const ConflictReport rep = enumerate_conflicts(builtin_rules_3d(), false);
    CHECK(rep.context_count() == 19);
    CHECK(rep.rule_pairs.size() == 6);
    CHECK(rep.pair_instances == 19);

    const std::vector<std::string> contexts = context_strings(rep.conflicts, 10);
    // the whole 11**001001 family conflicts (2x2 of walls vs thin wall start)
    for (const std::string& ctx :
         {"1100001001", "1101001001", "1110001001", "1111001001"}) {
        CAPTURE(ctx);
        CHECK(std::count(contexts.begin(), contexts.end(), ctx) == 1);
    }

    // every conflict pairs exactly two disagreeing rules
    for (const ConflictContext& c : rep.conflicts) {
        std::set<Cell> outs;
        for (const auto& [label, out] : c.matching) outs.insert(out);
        CHECK(outs.size() == 2);
        CHECK(c.matching.size() == 2);
    }
}

TEST_CASE("3D full-set enumeration includes the prevention rules' own conflicts") {
    const ConflictReport rep = enumerate_conflicts(builtin_rules_3d(), true);
    CHECK(rep.context_count() == 92);
    bool has_prevention_pair = false;
    for (const auto& [a, b] : rep.rule_pairs)
        if (a.rfind("prevent", 0) == 0 || b.rfind("prevent", 0) == 0)
            has_prevention_pair = true;
    CHECK(has_prevention_pair);
}

TEST_CASE("3D prevention analysis: 16 of 19 conflicts are unreachable") {
    const ConflictReport rep = enumerate_conflicts(builtin_rules_3d(), false);
    CHECK(rep.prevented.size() == 16);
    CHECK(rep.overridden.empty());
    REQUIRE(rep.residual.size() == 3);

    std::vector<std::string> residual;
    for (std::uint16_t code : rep.residual) residual.push_back(context_string(code, 10));
    std::sort(residual.begin(), residual.end());
    CHECK(residual == std::vector<std::string>{"0011001001", "1011001000", "1011001001"});

    CHECK(rep.prevented_fraction == Catch::Approx(16.0 / 19.0));
    CHECK(rep.residual_context_fraction == Catch::Approx(3.0 / 1024.0));

    // the four prevention rules that can fire act at the immediately
    // preceding cell of the scan (variable k)
    for (const PreventedContext& p : rep.prevented) CHECK(p.predecessor_var == 'k');
}

TEST_CASE("prevention analysis is reported for both enumeration modes") {
    const ConflictReport base = enumerate_conflicts(builtin_rules_3d(), false);
    const ConflictReport full = enumerate_conflicts(builtin_rules_3d(), true);
    CHECK(base.prevented.size() == full.prevented.size());
    CHECK(base.residual == full.residual);
    CHECK(!full.prevention_method.empty());
}
