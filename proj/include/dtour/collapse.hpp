#pragma once

#include <cstddef>
#include <string_view>
#include <vector>

#include "dtour/tournament.hpp"

namespace dtour {

struct CollapseStep {
    Face free_face;
    std::vector<Face> removed;
};

/// Ordered elementary collapses; replaying them from the start tournament
/// ends with every sign zero.
struct CollapseWitness {
    std::vector<CollapseStep> steps;
};

/// (d-1)-faces whose row over the oriented faces is nonzero and one-signed.
/// All-zero rows are spent, never free.
std::vector<Face> free_faces(const Tournament& t);

bool is_free(const Tournament& t, const Face& tau);

/// Zeroes every oriented coface of the free face tau. Throws
/// std::invalid_argument if tau is not free.
Tournament collapse_at(const Tournament& t, const Face& tau);

enum class CollapseStrategy { lexicographic, reverse_lexicographic, most_cofaces_first };

CollapseStrategy parse_strategy(std::string_view name);

struct GreedyCollapseResult {
    bool success = false;
    CollapseWitness witness;
    Tournament residue;
};

/// Collapses the first free face in the strategy's order until none is left.
GreedyCollapseResult greedy_collapse(const Tournament& t, CollapseStrategy strategy);

struct ExactCollapseResult {
    bool collapsible = false;
    CollapseWitness witness;
    std::size_t states_explored = 0;
};

/// How the exact search branches.
enum class CollapseSearch {
    /// One child per state. Complete because a free face stays free or
    /// spent under any other collapse, so every maximal collapse sequence
    /// removes the same faces.
    confluent,
    /// Every free face at every state, with failed states memoized.
    /// Exponential in the number of free faces; used to check the above.
    exhaustive,
};

/// Complete decision by depth-first search over collapse sequences,
/// memoizing failed states (the set of remaining faces). Throws
/// InstanceTooLarge when more than `face_cap` faces are oriented.
ExactCollapseResult is_collapsible_exact(const Tournament& t, std::size_t face_cap = 128,
                                         CollapseSearch search = CollapseSearch::confluent);

/// Applies the steps through collapse_at; false if a step is illegal, its
/// removed set is wrong, or the result is not all-zero.
bool replay_witness(const Tournament& t, const CollapseWitness& w);

}  // namespace dtour
