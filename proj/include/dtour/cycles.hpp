#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <variant>
#include <vector>

#include "dtour/linear.hpp"
#include "dtour/tournament.hpp"

namespace dtour {

/// Positive rational weights on a face set whose weighted incidence columns
/// sum to zero. Weights sum to 1; `support[i]` carries `weights[i]`.
struct CycleCertificate {
    std::vector<Face> support;
    std::vector<Rational> weights;
};

/// Either a cycle or a chamber certificate y (indexed by d-face rank) with
/// y^T col_sigma >= 1 for every oriented face.
struct AcyclicityVerdict {
    bool acyclic = false;
    std::variant<CycleCertificate, PositiveCertificate> witness;

    const CycleCertificate& cycle() const { return std::get<CycleCertificate>(witness); }
    const PositiveCertificate& certificate() const { return std::get<PositiveCertificate>(witness); }
};

/// Nonzero incidence columns of the oriented faces, with their ranks.
std::vector<SparseColumn> oriented_columns(const Tournament& t, std::vector<std::size_t>& ranks);

/// Exact LP decision; faces with sign 0 are ignored.
AcyclicityVerdict is_acyclic(const Tournament& t);

bool verify_cycle(const Tournament& t, const CycleCertificate& c);
bool verify_chamber_certificate(const Tournament& t, const PositiveCertificate& c);

/// Ranks of the oriented faces that carry positive weight in some
/// nonnegative kernel vector, i.e. the faces lying on at least one cycle.
std::vector<std::size_t> cycle_span(const Tournament& t);

/// A nonempty face set whose incidence columns sum to zero.
struct ZeroOneCycle {
    std::vector<Face> faces;
};

bool verify_zero_one_cycle(const Tournament& t, const ZeroOneCycle& c);

/// Exhaustive search for a 0/1-cycle. Only faces in cycle_span(t) can take
/// part, so the search runs over those; depth-first include/exclude with
/// per-row reachability pruning and memoized failures. Worst case is
/// exponential in the number of candidate faces; throws InstanceTooLarge
/// when that number exceeds `face_cap`.
std::optional<ZeroOneCycle> has_zero_one_cycle(const Tournament& t, std::size_t face_cap = 64);

/// True iff restricted to U (|U| = d+2, all faces oriented) every d-subset of
/// U receives opposite orientations from its two cofaces in U.
bool is_d_plus_2_cycle(const Tournament& t, std::span<const int> u);

/// Number of (d+2)-subsets forming a (d+2)-cycle. `threads` = 0 uses all cores.
std::uint64_t count_d_plus_2_cycles(const Tournament& t, int threads = 1);

/// Whether every k-subset of vertices contains a (d+2)-cycle.
bool all_k_subsets_contain_d2_cycle(const Tournament& t, int k);

/// Reported when neither orientation of `face` keeps the tournament free of
/// 0/1-cycles.
struct ExtensionFailure {
    Face face;
    ZeroOneCycle with_positive;
    ZeroOneCycle with_negative;
    Tournament partial;  // state just before `face`
};

/// Orients the faces of `order` one at a time, trying +1 then -1, and
/// rejecting a sign whenever it creates a 0/1-cycle.
std::variant<Tournament, ExtensionFailure> extend_avoiding_01_cycles(const Tournament& t,
                                                                     std::span<const Face> order,
                                                                     std::size_t face_cap = 64);

}  // namespace dtour
