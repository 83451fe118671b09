#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "dtour/collapse.hpp"
#include "dtour/cycles.hpp"
#include "dtour/error.hpp"
#include "dtour/fixtures.hpp"
#include "oracles.hpp"

using namespace dtour;

TEST_CASE("free faces of the examples")
{
    CHECK(free_faces(fixtures::example_1()).empty());
    const auto f2 = free_faces(fixtures::example_2());
    CHECK(std::find(f2.begin(), f2.end(), Face{1, 2}) != f2.end());
    CHECK(std::find(f2.begin(), f2.end(), Face{1, 3}) == f2.end());
    CHECK(free_faces(fixtures::chamber_fixture_10()).empty());
    CHECK(free_faces(Tournament(4, 2)).empty());
}

TEST_CASE("collapsing in Example 2")
{
    const auto t = fixtures::example_2();
    const auto c = collapse_at(t, {1, 2});
    CHECK(c == Tournament(4, 2, {0, 0, 1, 1}));
    CHECK(is_free(c, {1, 3}));
    CHECK(!is_free(t, {1, 3}));
    CHECK_THROWS_AS(collapse_at(t, {1, 3}), std::invalid_argument);
    // spent rows are never free
    CHECK(!is_free(c, {1, 2}));
}

TEST_CASE("collapse at a face with one coface")
{
    Tournament t(5, 2);
    t.set_sign(Face{1, 2, 3}, -1);
    t.set_sign(Face{3, 4, 5}, 1);
    const auto c = collapse_at(t, {1, 2});
    CHECK(c.sign(Face{1, 2, 3}) == 0);
    CHECK(c.sign(Face{3, 4, 5}) == 1);
}

TEST_CASE("greedy collapse")
{
    for (auto s : {CollapseStrategy::lexicographic, CollapseStrategy::reverse_lexicographic,
                   CollapseStrategy::most_cofaces_first}) {
        const auto r = greedy_collapse(fixtures::example_2(), s);
        CHECK(r.success);
        CHECK(r.witness.steps.size() <= 4);
        CHECK(replay_witness(fixtures::example_2(), r.witness));
        const auto bad = greedy_collapse(fixtures::example_1(), s);
        CHECK(!bad.success);
        CHECK(bad.residue == fixtures::example_1());
        CHECK(bad.witness.steps.empty());
    }
    CHECK(parse_strategy("reverse-lexicographic") == CollapseStrategy::reverse_lexicographic);
    CHECK_THROWS(parse_strategy("random"));
}

TEST_CASE("exact collapsibility on fixtures")
{
    const auto e2 = is_collapsible_exact(fixtures::example_2());
    CHECK(e2.collapsible);
    CHECK(replay_witness(fixtures::example_2(), e2.witness));
    CHECK(!is_collapsible_exact(fixtures::example_1()).collapsible);
    CHECK(is_collapsible_exact(fixtures::cone_5()).collapsible);
    CHECK(!is_collapsible_exact(fixtures::chamber_fixture_9()).collapsible);
    CHECK(!is_collapsible_exact(fixtures::chamber_fixture_9(), 128, CollapseSearch::exhaustive).collapsible);
    CHECK(!is_collapsible_exact(fixtures::chamber_fixture_10()).collapsible);
    CHECK(is_collapsible_exact(Tournament(5, 2)).collapsible);
    CHECK_THROWS_AS(is_collapsible_exact(random_tournament(10, 2, 1), 100), InstanceTooLarge);
}

TEST_CASE("exact search agrees with the naive oracle")
{
    for (std::uint64_t seed = 0; seed < 200; ++seed) {
        const int d = 1 + static_cast<int>(seed % 2);
        const int n = d + 3;
        auto t = random_tournament(n, d, seed);
        if (seed % 4 == 0)
            t.set_sign(seed % t.face_count(), 0);
        const auto r = is_collapsible_exact(t, 128, CollapseSearch::exhaustive);
        CHECK(r.collapsible == oracle::collapsible(t));
        CHECK(is_collapsible_exact(t).collapsible == r.collapsible);
        if (r.collapsible) {
            CHECK(replay_witness(t, r.witness));
            CHECK(is_acyclic(t).acyclic);
        }
    }
}

TEST_CASE("greedy, confluent and exhaustive search agree")
{
    int disagreements = 0;
    for (std::uint64_t seed = 0; seed < 300; ++seed) {
        const int d = 1 + static_cast<int>(seed % 3);
        const int n = d + 2 + static_cast<int>(seed % 3);
        const auto t = random_tournament(n, d, seed);
        const auto full = is_collapsible_exact(t, 128, CollapseSearch::exhaustive);
        const bool exact = full.collapsible;
        CHECK(is_collapsible_exact(t).collapsible == exact);
        for (auto s : {CollapseStrategy::lexicographic, CollapseStrategy::reverse_lexicographic,
                       CollapseStrategy::most_cofaces_first}) {
            const auto g = greedy_collapse(t, s);
            if (g.success)
                CHECK(exact);
            disagreements += g.success != exact ? 1 : 0;
        }
    }
    CHECK(disagreements == 0);
}

TEST_CASE("replay rejects forged witnesses")
{
    const auto t = fixtures::example_2();
    auto w = is_collapsible_exact(t).witness;
    REQUIRE(!w.steps.empty());
    auto truncated = w;
    truncated.steps.pop_back();
    CHECK(!replay_witness(t, truncated));
    auto wrong_removed = w;
    wrong_removed.steps.front().removed.pop_back();
    CHECK(!replay_witness(t, wrong_removed));
    CollapseWitness illegal{{{Face{1, 3}, {Face{1, 2, 3}, Face{1, 3, 4}}}}};
    CHECK(!replay_witness(t, illegal));
}

TEST_CASE("collapsing never un-frees a face")
{
    for (std::uint64_t seed = 0; seed < 100; ++seed) {
        const auto t = random_tournament(6, 2, seed);
        const auto before = free_faces(t);
        for (const auto& tau : before) {
            const auto after = collapse_at(t, tau);
            for (const auto& other : before) {
                if (other == tau)
                    continue;
                bool spent = true;
                for (int v = 1; v <= 6; ++v)
                    if (!other.contains(v) && after.sign(other.with_vertex(v)) != 0)
                        spent = false;
                CHECK((is_free(after, other) || spent));
            }
        }
    }
}
