#include "dtour/geometry.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <random>
#include <stdexcept>

#include "dtour/collapse.hpp"
#include "dtour/error.hpp"

namespace dtour {

namespace {

Rational determinant(std::vector<std::vector<Rational>> m)
{
    const std::size_t n = m.size();
    Rational det = 1;
    for (std::size_t col = 0; col < n; ++col) {
        std::size_t p = col;
        while (p < n && sgn(m[p][col]) == 0)
            ++p;
        if (p == n)
            return 0;
        if (p != col) {
            std::swap(m[p], m[col]);
            det = -det;
        }
        det *= m[col][col];
        for (std::size_t r = col + 1; r < n; ++r) {
            if (sgn(m[r][col]) == 0)
                continue;
            const Rational f = m[r][col] / m[col][col];
            for (std::size_t c = col; c < n; ++c)
                m[r][c] -= f * m[col][c];
        }
    }
    return det;
}

void check_configuration(const PointConfiguration& p)
{
    if (p.d < 1)
        throw std::invalid_argument("point configuration needs d >= 1");
    if (p.n() < p.d + 1)
        throw std::invalid_argument("point configuration needs at least d + 1 points");
    for (const auto& pt : p.points)
        if (static_cast<int>(pt.size()) != p.d)
            throw std::invalid_argument("point has the wrong number of coordinates");
}

}  // namespace

Rational orientation_determinant(const PointConfiguration& p, const Face& sigma)
{
    if (sigma.size() != p.d + 1)
        throw std::invalid_argument("orientation_determinant: face must have d + 1 vertices");
    const auto& base = p.points.at(static_cast<std::size_t>(sigma[0] - 1));
    std::vector<std::vector<Rational>> m(static_cast<std::size_t>(p.d), std::vector<Rational>(static_cast<std::size_t>(p.d)));
    // columns are p_{i_k} - p_{i_0}
    for (int k = 1; k <= p.d; ++k) {
        const auto& q = p.points.at(static_cast<std::size_t>(sigma[k] - 1));
        for (int r = 0; r < p.d; ++r)
            m[static_cast<std::size_t>(r)][static_cast<std::size_t>(k - 1)] =
                q[static_cast<std::size_t>(r)] - base[static_cast<std::size_t>(r)];
    }
    return determinant(std::move(m));
}

Tournament orient_from_points(const PointConfiguration& p)
{
    check_configuration(p);
    Tournament t(p.n(), p.d);
    std::size_t rank = 0;
    for_each_subset(p.n(), p.d + 1, [&](std::span<const int> s) {
        const Face sigma(std::vector<int>(s.begin(), s.end()));
        const int sg = sgn(orientation_determinant(p, sigma));
        if (sg == 0)
            throw DegenerateInput("points are not in general position: face " + sigma.key() + " is degenerate");
        t.set_sign(rank++, sg);
    });
    return t;
}

PointConfiguration random_configuration(int n, int d, std::uint64_t seed)
{
    if (d < 1 || n < d + 1)
        throw std::invalid_argument("random_configuration needs d >= 1 and n >= d + 1");
    std::mt19937_64 engine(seed);
    auto coordinate = [&] {
        const auto num = static_cast<long>(engine() % 2001) - 1000;
        const auto den = static_cast<long>(engine() % 16) + 1;
        Rational q(num, den);
        q.canonicalize();
        return q;
    };
    PointConfiguration p{d, {}};
    while (p.n() < n) {
        std::vector<Rational> pt(static_cast<std::size_t>(d));
        for (auto& c : pt)
            c = coordinate();
        p.points.push_back(std::move(pt));
        // every (d+1)-subset through the new point must be nondegenerate
        const int m = p.n();
        bool ok = true;
        if (m >= d + 1) {
            for_each_subset(m - 1, d, [&](std::span<const int> s) {
                if (!ok)
                    return;
                std::vector<int> v(s.begin(), s.end());
                v.push_back(m);
                ok = sgn(orientation_determinant(p, Face(std::move(v)))) != 0;
            });
        }
        if (!ok)
            p.points.pop_back();
    }
    return p;
}

Rational hyperplane_eval(const Face& sigma, const ChamberPoint& x)
{
    if (sigma.size() != x.d + 1)
        throw std::invalid_argument("hyperplane_eval: face must have d + 1 vertices");
    if (x.x.size() != binomial(x.n, x.d))
        throw std::invalid_argument("hyperplane_eval: chamber point has the wrong length");
    Rational s = 0;
    for (int k = 0; k <= x.d; ++k) {
        const Rational& xk = x.x[static_cast<std::size_t>(face_rank(sigma.without_position(k), x.n))];
        if ((x.d - k) % 2 == 0)
            s += xk;
        else
            s -= xk;
    }
    return s;
}

Tournament chamber_to_tournament(const ChamberPoint& x)
{
    if (x.x.size() != binomial(x.n, x.d))
        throw std::invalid_argument("chamber point has the wrong length");
    Tournament t(x.n, x.d);
    std::size_t rank = 0;
    for_each_subset(x.n, x.d + 1, [&](std::span<const int> s) {
        const Face sigma(std::vector<int>(s.begin(), s.end()));
        Rational sum = 0;
        for (int k = 0; k <= x.d; ++k) {
            const Rational& xk = x.x[static_cast<std::size_t>(face_rank(sigma.without_position(k), x.n))];
            if (k % 2 == 0)
                sum += xk;
            else
                sum -= xk;
        }
        if (sgn(sum) == 0)
            throw DegenerateInput("chamber point lies on the hyperplane of face " + sigma.key());
        t.set_sign(rank++, sgn(sum));
    });
    return t;
}

std::variant<ChamberPoint, CycleCertificate> tournament_to_chamber_point(const Tournament& t)
{
    if (!t.is_complete())
        throw std::invalid_argument("tournament_to_chamber_point needs a complete tournament");
    auto verdict = is_acyclic(t);
    if (!verdict.acyclic)
        return verdict.cycle();
    ChamberPoint x{t.n(), t.d(), verdict.certificate().y};
    if (t.d() % 2 != 0)
        for (auto& xi : x.x)
            xi = -xi;
    if (chamber_to_tournament(x) != t)
        throw std::logic_error("chamber point does not reproduce the tournament");
    return x;
}

FreeEdgeGraph free_edge_graph(const Tournament& t)
{
    if (t.d() != 2)
        throw std::invalid_argument("free_edge_graph is defined for 2-tournaments");
    FreeEdgeGraph g;
    g.edges = free_faces(t);
    std::vector<int> parent(static_cast<std::size_t>(t.n()) + 1);
    std::iota(parent.begin(), parent.end(), 0);
    auto find = [&](int v) {
        while (parent[static_cast<std::size_t>(v)] != v)
            v = parent[static_cast<std::size_t>(v)] = parent[static_cast<std::size_t>(parent[static_cast<std::size_t>(v)])];
        return v;
    };
    std::vector<bool> touched(static_cast<std::size_t>(t.n()) + 1, false);
    for (const auto& e : g.edges) {
        touched[static_cast<std::size_t>(e[0])] = touched[static_cast<std::size_t>(e[1])] = true;
        parent[static_cast<std::size_t>(find(e[0]))] = find(e[1]);
    }
    std::map<int, std::vector<int>> groups;
    for (int v = 1; v <= t.n(); ++v)
        if (touched[static_cast<std::size_t>(v)])
            groups[find(v)].push_back(v);
    for (auto& [root, members] : groups)
        g.components.push_back(std::move(members));
    std::sort(g.components.begin(), g.components.end());
    return g;
}

}  // namespace dtour
