#pragma once

#include <optional>
#include <string>
#include <vector>

#include "dtour/json_io.hpp"
#include "dtour/tournament.hpp"

namespace dtour::fixtures {

/// ([4], (1, -1, 1, -1)): the boundary of a tetrahedron, a 4-face cycle.
Tournament example_1();
/// ([4], (1, 1, 1, 1)): collapsible.
Tournament example_2();

/// Octahedron on labels 1..3 -> e_i, 4..6 -> -e_i. The eight facets are
/// oriented by the outer normal (sign of det of their vertices in label
/// order); the other twelve faces contain one antipodal edge {i, i+3} and
/// induce the orientation i+3 -> i on it. 0/1-cyclic, no 4-cycle.
Tournament octahedron();
std::vector<Face> octahedron_facets();

/// Faces of the 6-vertex triangulation of the projective plane used below.
std::vector<Face> rp2_faces();
/// The added face {1, 2, 3}.
Face rp2_sigma();
/// The face {3, 4, 5} that cannot be oriented without a 0/1-cycle.
Face rp2_rho();
/// Signs of rp2_faces() solving sum(col_F) + 2 col_sigma = 0 with
/// eps_sigma = +1, in rp2_faces() order. Throws std::logic_error if the
/// system is inconsistent, not uniquely solvable, or not +-1 valued.
std::vector<int> rp2_orientation();
/// Partial 2-tournament on [6]: the ten triangles plus sigma (11 faces).
Tournament rp2_plus_sigma();

/// Coordinates of the two chamber points, pairs in lexicographic order.
ChamberPoint chamber_point_9();
ChamberPoint chamber_point_10();
/// Acyclic 9-vertex 2-tournament that is not collapsible.
Tournament chamber_fixture_9();
/// Acyclic 10-vertex 2-tournament without free faces.
Tournament chamber_fixture_10();

/// Triangle p1=(0,0), p2=(0,2), p3=(2,0) with 4 and 5 both at (1/2, 1/2):
/// faces meeting {4,5} in at most one vertex take the determinant sign,
/// the faces {x,4,5} take +1. Collapsible but not realizable.
Tournament cone_5();
PointConfiguration cone_5_points();

struct ExpectedProperty {
    std::string property;
    Json expected;
    std::string reason;
};

struct Fixture {
    std::string name;
    std::string description;
    Tournament tournament;
    std::vector<ExpectedProperty> properties;
    std::optional<ChamberPoint> chamber;
};

/// All fixtures with their expected-property tables.
std::vector<Fixture> gallery();
/// Throws std::invalid_argument for an unknown name.
Fixture fixture(const std::string& name);

/// Evaluates one property: acyclic, collapsible, zero-one-acyclic,
/// d2-cycle-count, free-faces, degree-sequence, free-edge-components,
/// oriented-count, hyperplanes-nonzero.
Json evaluate_property(const Fixture& f, const std::string& property);

}  // namespace dtour::fixtures
