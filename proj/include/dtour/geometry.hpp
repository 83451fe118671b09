#pragma once

#include <cstdint>
#include <variant>
#include <vector>

#include "dtour/cycles.hpp"
#include "dtour/rational.hpp"
#include "dtour/tournament.hpp"

namespace dtour {

/// n points in R^d with exact rational coordinates; point i has label i+1.
struct PointConfiguration {
    int d = 0;
    std::vector<std::vector<Rational>> points;

    int n() const { return static_cast<int>(points.size()); }
};

/// det[p_{i1} - p_{i0}, ..., p_{id} - p_{i0}] for sigma = {i0 < ... < id}.
Rational orientation_determinant(const PointConfiguration& p, const Face& sigma);

/// Order type of a configuration in general position. Throws DegenerateInput
/// naming the first face whose determinant vanishes.
Tournament orient_from_points(const PointConfiguration& p);

/// Seeded configuration in general position: coordinates are a / b with a
/// uniform in [-1000, 1000] and b in [1, 16], drawn from std::mt19937_64
/// by reduction modulo the range. Degenerate draws are rejected point by
/// point.
PointConfiguration random_configuration(int n, int d, std::uint64_t seed);

/// A point of R^{C(n,d)}, coordinates indexed by d-subset rank.
struct ChamberPoint {
    int n = 0;
    int d = 0;
    std::vector<Rational> x;
};

/// sum_k (-1)^(d-k) x_{sigma minus i_k}: the left side of H_sigma.
Rational hyperplane_eval(const Face& sigma, const ChamberPoint& x);

/// eps_sigma = sgn(sum_k (-1)^k x_{sigma minus i_k}). Throws DegenerateInput if
/// x lies on some hyperplane.
Tournament chamber_to_tournament(const ChamberPoint& x);

/// For an acyclic complete T, a point of its chamber (built from the LP
/// certificate y as x = (-1)^d y); otherwise the cycle found by the LP.
std::variant<ChamberPoint, CycleCertificate> tournament_to_chamber_point(const Tournament& t);

/// Free edges of a 2-tournament and the connected components of the graph
/// they span (only vertices touching a free edge count).
struct FreeEdgeGraph {
    std::vector<Face> edges;
    std::vector<std::vector<int>> components;
};

FreeEdgeGraph free_edge_graph(const Tournament& t);

}  // namespace dtour
