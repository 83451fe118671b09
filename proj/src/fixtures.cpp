#include "dtour/fixtures.hpp"

#include <array>
#include <map>
#include <set>
#include <stdexcept>

#include "dtour/collapse.hpp"
#include "dtour/cycles.hpp"
#include "dtour/geometry.hpp"
#include "dtour/linear.hpp"

namespace dtour::fixtures {

Tournament example_1()
{
    return Tournament(4, 2, {1, -1, 1, -1});
}

Tournament example_2()
{
    return Tournament(4, 2, {1, 1, 1, 1});
}

namespace {

std::array<int, 3> octahedron_vertex(int label)
{
    std::array<int, 3> v{0, 0, 0};
    if (label <= 3)
        v[static_cast<std::size_t>(label - 1)] = 1;
    else
        v[static_cast<std::size_t>(label - 4)] = -1;
    return v;
}

int det3(const std::array<int, 3>& a, const std::array<int, 3>& b, const std::array<int, 3>& c)
{
    return a[0] * (b[1] * c[2] - b[2] * c[1]) - a[1] * (b[0] * c[2] - b[2] * c[0]) + a[2] * (b[0] * c[1] - b[1] * c[0]);
}

}  // namespace

std::vector<Face> octahedron_facets()
{
    std::vector<Face> out;
    for (int a : {1, 4})
        for (int b : {2, 5})
            for (int c : {3, 6})
                out.push_back(Face::from_unsorted({a, b, c}));
    std::sort(out.begin(), out.end());
    return out;
}

Tournament octahedron()
{
    Tournament t(6, 2);
    for (const Face& sigma : all_faces(6, 3)) {
        std::optional<Face> antipodal;
        for (int i = 1; i <= 3; ++i)
            if (sigma.contains(i) && sigma.contains(i + 3))
                antipodal = Face{i, i + 3};
        if (antipodal) {
            // induced orientation -1 on {i, i+3} is the arrow i+3 -> i
            t.set_sign(sigma, -boundary_coefficient(*antipodal, sigma));
        } else {
            const int det = det3(octahedron_vertex(sigma[0]), octahedron_vertex(sigma[1]), octahedron_vertex(sigma[2]));
            t.set_sign(sigma, det > 0 ? 1 : -1);
        }
    }
    return t;
}

std::vector<Face> rp2_faces()
{
    return {{1, 2, 5}, {1, 2, 6}, {1, 3, 4}, {1, 3, 6}, {1, 4, 5},
            {2, 3, 4}, {2, 3, 5}, {2, 4, 6}, {3, 5, 6}, {4, 5, 6}};
}

Face rp2_sigma()
{
    return {1, 2, 3};
}

Face rp2_rho()
{
    return {3, 4, 5};
}

namespace {

// Closed surface check: every edge lies in exactly two triangles and every
// vertex link is a single cycle.
void check_triangulation(const std::vector<Face>& faces, int n)
{
    std::map<Face, int> edge_count;
    for (const auto& f : faces)
        for (int j = 0; j < 3; ++j)
            ++edge_count[f.without_position(j)];
    if (edge_count.size() != binomial(n, 2))
        throw std::logic_error("triangulation does not use every edge");
    for (const auto& [edge, count] : edge_count)
        if (count != 2)
            throw std::logic_error("edge " + edge.key() + " is not in exactly two triangles");
    for (int v = 1; v <= n; ++v) {
        std::map<int, std::vector<int>> adj;
        for (const auto& f : faces) {
            if (!f.contains(v))
                continue;
            std::vector<int> rest;
            for (int u : f)
                if (u != v)
                    rest.push_back(u);
            adj[rest[0]].push_back(rest[1]);
            adj[rest[1]].push_back(rest[0]);
        }
        for (const auto& [u, nb] : adj)
            if (nb.size() != 2)
                throw std::logic_error("link of vertex " + std::to_string(v) + " is not a cycle");
        // walk the cycle
        std::set<int> seen;
        int prev = -1;
        int cur = adj.begin()->first;
        while (seen.insert(cur).second) {
            const int next = adj[cur][0] != prev ? adj[cur][0] : adj[cur][1];
            prev = cur;
            cur = next;
        }
        if (seen.size() != adj.size())
            throw std::logic_error("link of vertex " + std::to_string(v) + " is disconnected");
    }
}

}  // namespace

std::vector<int> rp2_orientation()
{
    const auto faces = rp2_faces();
    check_triangulation(faces, 6);
    const auto edges = all_faces(6, 2);
    RationalMatrix m(edges.size(), faces.size());
    std::vector<Rational> b(edges.size());
    for (std::size_t r = 0; r < edges.size(); ++r) {
        for (std::size_t c = 0; c < faces.size(); ++c)
            if (edges[r].is_subset_of(faces[c]))
                m(r, c) = boundary_coefficient(edges[r], faces[c]);
        if (edges[r].is_subset_of(rp2_sigma()))
            b[r] = -2 * boundary_coefficient(edges[r], rp2_sigma());
    }
    auto result = solve_linear(m, b);
    const auto* sol = std::get_if<LinearSolution>(&result);
    if (sol == nullptr)
        throw std::logic_error("cancellation system for the projective plane is inconsistent");
    if (!sol->unique)
        throw std::logic_error("cancellation system for the projective plane is not uniquely solvable");
    std::vector<int> signs;
    for (const auto& x : sol->x) {
        if (x != 1 && x != -1)
            throw std::logic_error("cancellation system yields a non-sign value " + to_string(x));
        signs.push_back(sgn(x));
    }
    return signs;
}

Tournament rp2_plus_sigma()
{
    const auto faces = rp2_faces();
    const auto signs = rp2_orientation();
    Tournament t(6, 2);
    for (std::size_t i = 0; i < faces.size(); ++i)
        t.set_sign(faces[i], signs[i]);
    t.set_sign(rp2_sigma(), 1);
    return t;
}

namespace {

ChamberPoint pair_point(int n, const std::vector<int>& values)
{
    ChamberPoint x{n, 2, {}};
    if (values.size() != binomial(n, 2))
        throw std::logic_error("chamber coordinate list has the wrong length");
    for (int v : values)
        x.x.emplace_back(v);
    return x;
}

}  // namespace

ChamberPoint chamber_point_9()
{
    return pair_point(9, {42, 0,  3,  88, 91, 87, 66, 28, 64, 60, 87, 11, 39, 81, 37,  51, 0,  23,
                          77, 33, 23, 58, 11, 7,  70, 64, 73, 57, 86, 52, 98, 49, 57, 100, 43, 60});
}

ChamberPoint chamber_point_10()
{
    return pair_point(10, {76, 61, 70, 6,  95, 97, 45, 11, 26, 12, 33, 93, 5,  97, 92,
                           9,  48, 26, 58, 82, 4,  96, 14, 83, 87, 92, 93, 92, 92, 18,
                           64, 11, 76, 4,  39, 82, 24, 94, 25, 36, 30, 40, 64, 21, 7});
}

Tournament chamber_fixture_9()
{
    return chamber_to_tournament(chamber_point_9());
}

Tournament chamber_fixture_10()
{
    return chamber_to_tournament(chamber_point_10());
}

PointConfiguration cone_5_points()
{
    const Rational half(1, 2);
    return {2, {{0, 0}, {0, 2}, {2, 0}, {half, half}, {half, half}}};
}

Tournament cone_5()
{
    const auto p = cone_5_points();
    Tournament t(5, 2);
    for (const Face& sigma : all_faces(5, 3)) {
        if (sigma.contains(4) && sigma.contains(5))
            t.set_sign(sigma, 1);
        else
            t.set_sign(sigma, sgn(orientation_determinant(p, sigma)));
    }
    return t;
}

namespace {

Json faces_json(const std::vector<Face>& faces)
{
    Json a = Json::array();
    for (const auto& f : faces)
        a.push_back(face_json(f));
    return a;
}

}  // namespace

std::vector<Fixture> gallery()
{
    std::vector<Fixture> g;
    g.push_back({"example-1",
                 "4-vertex 2-tournament (1,-1,1,-1): boundary of a tetrahedron",
                 example_1(),
                 {{"acyclic", false, "the four faces sum to zero with unit weights"},
                  {"zero-one-acyclic", false, "the four faces sum to zero"},
                  {"free-faces", Json::array(), "every edge sees opposite orientations"},
                  {"collapsible", false, "no free faces"},
                  {"degree-sequence", Json::array({0, 0, 0, 0, 0, 0}), "row sums of the incidence matrix"},
                  {"d2-cycle-count", 1, "the only 4-subset is a 4-cycle"}},
                 std::nullopt});
    g.push_back({"example-2",
                 "4-vertex 2-tournament (1,1,1,1)",
                 example_2(),
                 {{"acyclic", true, "collapsible tournaments are acyclic"},
                  {"collapsible", true, "collapse 12, then 13 becomes free"},
                  {"degree-sequence", Json::array({2, 0, -2, 2, 0, 2}), "row sums of the incidence matrix"},
                  {"d2-cycle-count", 0, "columns do not sum to zero"}},
                 std::nullopt});
    g.push_back({"octahedron",
                 "6-vertex 2-tournament from the octahedron: 0/1-cyclic without 4-cycles",
                 octahedron(),
                 {{"d2-cycle-count", 0, "every 4-set contains an antipodal pair whose edge is free"},
                  {"zero-one-acyclic", false, "the eight outer-normal facets sum to zero"},
                  {"acyclic", false, "a 0/1-cycle is a cycle"}},
                 std::nullopt});
    g.push_back({"rp2-plus-sigma",
                 "projective plane (6 vertices, 10 faces) plus sigma = 123; partial, 11 faces",
                 rp2_plus_sigma(),
                 {{"oriented-count", 11, "ten triangles plus sigma"},
                  {"acyclic", false, "the ten faces plus twice sigma sum to zero"},
                  {"zero-one-acyclic", true, "the only cycle needs weight 2 on sigma"}},
                 std::nullopt});
    g.push_back({"chamber-9",
                 "9-vertex 2-tournament from an explicit chamber point",
                 chamber_fixture_9(),
                 {{"hyperplanes-nonzero", true, "the point avoids all 84 hyperplanes"},
                  {"acyclic", true, "tournaments of chamber points are acyclic"},
                  {"collapsible", false, "exhaustive collapse search fails"}},
                 chamber_point_9()});
    g.push_back({"chamber-10",
                 "10-vertex 2-tournament from an explicit chamber point",
                 chamber_fixture_10(),
                 {{"hyperplanes-nonzero", true, "the point avoids all 120 hyperplanes"},
                  {"acyclic", true, "tournaments of chamber points are acyclic"},
                  {"free-faces", Json::array(), "no edge is free"},
                  {"collapsible", false, "no free faces"}},
                 chamber_point_10()});
    g.push_back({"cone-5",
                 "5-vertex 2-tournament: triangle with two coincident interior points",
                 cone_5(),
                 {{"free-faces", faces_json({{1, 2}, {1, 3}, {2, 3}, {4, 5}}), "hull edges and the doubled edge 45"},
                  {"collapsible", true, "every face contains a free edge"},
                  {"acyclic", true, "collapsible tournaments are acyclic"},
                  {"free-edge-components", 2, "free edges split into the triangle and 45"}},
                 std::nullopt});
    return g;
}

Fixture fixture(const std::string& name)
{
    for (auto& f : gallery())
        if (f.name == name)
            return f;
    throw std::invalid_argument("unknown fixture '" + name + "'");
}

Json evaluate_property(const Fixture& f, const std::string& property)
{
    const Tournament& t = f.tournament;
    if (property == "acyclic")
        return is_acyclic(t).acyclic;
    if (property == "collapsible")
        return is_collapsible_exact(t).collapsible;
    if (property == "zero-one-acyclic")
        return !has_zero_one_cycle(t).has_value();
    if (property == "d2-cycle-count")
        return count_d_plus_2_cycles(t);
    if (property == "free-faces")
        return faces_json(free_faces(t));
    if (property == "degree-sequence")
        return degree_sequence(t);
    if (property == "free-edge-components")
        return free_edge_graph(t).components.size();
    if (property == "oriented-count")
        return t.oriented_count();
    if (property == "hyperplanes-nonzero") {
        if (!f.chamber)
            throw std::invalid_argument("fixture " + f.name + " has no chamber point");
        bool ok = true;
        for (const Face& sigma : all_faces(f.chamber->n, f.chamber->d + 1))
            ok = ok && sgn(hyperplane_eval(sigma, *f.chamber)) != 0;
        return ok;
    }
    throw std::invalid_argument("unknown property '" + property + "'");
}

}  // namespace dtour::fixtures
