#include <catch2/catch_amalgamated.hpp>

#include <set>

#include "besselsub/suites.hpp"

using namespace besselsub;

TEST_CASE("fast suites run clean and carry anchors")
{
    for (const char* name : {"normalization", "oracles"}) {
        const auto rep = vfy::run_suite(name);
        INFO(name);
        CHECK(rep.failures() == 0);
        for (const auto& c : rep.checks) CHECK(!c.paper_anchor.empty());
        const auto j = rep.to_json();
        CHECK(j["summary"]["failed"] == 0);
        CHECK(j["schema_version"] == 1);
    }
    CHECK_THROWS_AS(vfy::run_suite("bogus"), std::invalid_argument);
}

TEST_CASE("coverage table maps onto real checks")
{
    // every identity in the coverage table must correspond to a check id
    // produced by the suites it points at
    const auto idents = vfy::run_identities();
    const auto moments = vfy::run_moments();
    const auto oracles = vfy::run_oracles();
    std::set<std::string> ids;
    for (const auto* r : {&idents, &moments, &oracles})
        for (const auto& c : r->checks) ids.insert(c.id);
    for (const auto& [check, anchor] : vfy::coverage_table()) {
        bool found = false;
        for (const auto& id : ids)
            if (id.rfind(check, 0) == 0) { found = true; break; }
        INFO(check << " -> " << anchor);
        CHECK(found);
    }
    CHECK(idents.failures() == 0);
    CHECK(moments.failures() == 0);
}
