#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <set>

#include "dtour/collapse.hpp"
#include "dtour/cycles.hpp"
#include "dtour/error.hpp"
#include "dtour/extraction.hpp"
#include "dtour/fixtures.hpp"
#include "oracles.hpp"

using namespace dtour;

namespace {

bool size_bound_holds(int n, std::size_t k, int d)
{
    const double faces = static_cast<double>(binomial(static_cast<int>(k), d));
    return static_cast<double>(n) <= static_cast<double>(k) * std::pow(2.0, faces);
}

// Independent replay of the extraction: decreasing lexicographic order of
// the d-subsets of [n], skipping any face that lost a vertex.
std::vector<int> replay(const Tournament& t)
{
    const int n = t.n();
    const int d = t.d();
    std::vector<bool> alive(static_cast<std::size_t>(n + 1), true);
    auto faces = oracle::subsets(n, d);
    std::reverse(faces.begin(), faces.end());
    for (const auto& tau : faces) {
        bool ok = true;
        for (int v : tau)
            ok = ok && alive[static_cast<std::size_t>(v)];
        if (!ok)
            continue;
        std::vector<int> plus;
        std::vector<int> minus;
        for (int x = 1; x < tau.front(); ++x) {
            if (!alive[static_cast<std::size_t>(x)])
                continue;
            std::vector<int> sigma = tau;
            sigma.insert(sigma.begin(), x);
            // x is vertex 0 of sigma, so (tau; sigma) = (-1)^d.
            const int induced = t.sign(Face(sigma)) * (d % 2 == 0 ? 1 : -1);
            (induced > 0 ? plus : minus).push_back(x);
        }
        const auto& smaller = plus.size() < minus.size() ? plus : minus;
        for (int x : smaller)
            alive[static_cast<std::size_t>(x)] = false;
    }
    std::vector<int> out;
    for (int v = 1; v <= n; ++v)
        if (alive[static_cast<std::size_t>(v)])
            out.push_back(v);
    return out;
}

}  // namespace

TEST_CASE("extraction on d+1 vertices keeps everything")
{
    for (int d = 1; d <= 4; ++d) {
        const auto t = random_tournament(d + 1, d, 9);
        const auto r = extract_acyclic_sub(t);
        CHECK(r.survivors.size() == static_cast<std::size_t>(d + 1));
        for (const auto& step : r.trace)
            CHECK(step.eliminated.empty());
    }
}

TEST_CASE("extraction guarantees")
{
    for (std::uint64_t seed = 0; seed < 20; ++seed) {
        const int d = 1 + static_cast<int>(seed % 3);
        const int n = d == 3 ? 24 : 48;
        const auto t = random_tournament(n, d, seed);
        for (auto order : {ExtractionOrder::reverse_lexicographic, ExtractionOrder::reverse_colexicographic}) {
            const auto r = extract_acyclic_sub(t, order);
            const auto sub = restrict_to(t, r.survivors).tournament;
            CHECK(is_acyclic(sub).acyclic);
            CHECK(greedy_collapse(sub, CollapseStrategy::reverse_lexicographic).success);
            if (order == ExtractionOrder::reverse_lexicographic) {
                CHECK(size_bound_holds(n, r.survivors.size(), d));
                CHECK(r.trace.size() == binomial(static_cast<int>(r.survivors.size()), d));
                CHECK(r.survivors == replay(t));
            }
        }
    }
}

TEST_CASE("extraction traces are consistent")
{
    const auto t = random_tournament(40, 2, 5);
    const auto r = extract_acyclic_sub(t);
    std::set<int> eliminated;
    for (const auto& step : r.trace) {
        CHECK(step.positive + step.negative == step.below);
        CHECK(step.eliminated.size() == std::min(step.positive, step.negative));
        for (int v : step.tau)
            CHECK(!eliminated.contains(v));
        for (int v : step.eliminated) {
            CHECK(v < step.tau.min());
            eliminated.insert(v);
        }
    }
    for (int v : r.survivors)
        CHECK(!eliminated.contains(v));
    CHECK(r.survivors.size() + eliminated.size() == 40);
    const auto again = extract_acyclic_sub(t);
    CHECK(again.survivors == r.survivors);
}

TEST_CASE("maximum acyclic subtournament")
{
    CHECK(max_acyclic_subtournament(fixtures::example_2()) == std::vector<int>{1, 2, 3, 4});
    CHECK(max_acyclic_subtournament(fixtures::example_1()) == std::vector<int>{1, 2, 3});
    CHECK_THROWS_AS(max_acyclic_subtournament(random_tournament(13, 2, 0)), InstanceTooLarge);
    for (std::uint64_t seed = 0; seed < 15; ++seed) {
        const auto t = random_tournament(9, 2, seed);
        const auto best = max_acyclic_subtournament(t);
        CHECK(best.size() >= extract_acyclic_sub(t).survivors.size());
        CHECK(is_acyclic(restrict_to(t, best).tournament).acyclic);
    }
}

TEST_CASE("Ramsey coloring")
{
    const auto oct = ramsey_coloring(fixtures::octahedron());
    CHECK(oct.blue_count() == 0);

    // Example 1 placed on vertices {2,4,5,7} of a random 8-vertex tournament.
    auto t = random_tournament(8, 2, 3);
    const std::vector<int> u{2, 4, 5, 7};
    const auto e1 = fixtures::example_1();
    for (const auto& f : all_faces(4, 3)) {
        std::vector<int> mapped;
        for (int v : f)
            mapped.push_back(u[static_cast<std::size_t>(v - 1)]);
        t.set_sign(Face(mapped), e1.sign(f));
    }
    const auto c = ramsey_coloring(t);
    CHECK(c.blue[face_rank(Face(u), 8)]);
    for (const auto& s : all_faces(8, 4))
        CHECK(c.blue[face_rank(s, 8)] == is_d_plus_2_cycle(t, std::vector<int>(s.begin(), s.end())));

    for (std::uint64_t seed = 0; seed < 30; ++seed) {
        const int d = 1 + static_cast<int>(seed % 3);
        const auto r = ramsey_coloring(random_tournament(d + 5, d, seed));
        CHECK(!has_blue_clique(r, d + 3));
    }
    Tournament cyc(3, 1, {1, -1, 1});
    const auto rc = ramsey_coloring(cyc);
    const auto clique = has_blue_clique(rc, 3);
    REQUIRE(clique);
    CHECK(*clique == Face{1, 2, 3});
}
