#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "dtour/tournament.hpp"

namespace dtour {

/// Order in which the (d-1)-faces are visited by extract_acyclic_sub.
enum class ExtractionOrder {
    /// Decreasing lexicographic (smallest elements compared first).
    reverse_lexicographic,
    /// Decreasing colexicographic (largest elements compared first).
    reverse_colexicographic,
};

struct ExtractionStep {
    Face tau;
    std::size_t below = 0;     // |S|: survivors preceding every vertex of tau
    std::size_t positive = 0;  // members of S inducing +1 on tau
    std::size_t negative = 0;
    std::vector<int> eliminated;
};

struct ExtractionResult {
    std::vector<int> survivors;
    /// One record per processed face; faces touching an eliminated vertex
    /// are skipped and not recorded.
    std::vector<ExtractionStep> trace;
};

/// Greedy extraction of a collapsible subtournament. For each (d-1)-face tau
/// of surviving vertices, in the given order, the survivors x below min(tau)
/// are split by the orientation tau + {x} induces on tau and the smaller
/// part is eliminated (the -1 part on a tie).
ExtractionResult extract_acyclic_sub(const Tournament& t,
                                     ExtractionOrder order = ExtractionOrder::reverse_lexicographic);

/// Largest vertex set whose restriction is acyclic; among sets of that size
/// the lexicographically first. Throws InstanceTooLarge when n > cap.
std::vector<int> max_acyclic_subtournament(const Tournament& t, int cap = 12);

/// Blue marks the (d+2)-subsets that form a (d+2)-cycle; indexed by the
/// lexicographic rank of the subset.
struct RamseyColoring {
    int n = 0;
    int d = 0;
    std::vector<bool> blue;

    std::size_t blue_count() const;
};

RamseyColoring ramsey_coloring(const Tournament& t);

/// First m-subset (lexicographic) all of whose (d+2)-subsets are blue.
std::optional<Face> has_blue_clique(const RamseyColoring& coloring, int m);

}  // namespace dtour
