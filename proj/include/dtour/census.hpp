#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "dtour/tournament.hpp"

namespace dtour {

/// Predicates evaluated by a census.
struct CensusPredicates {
    bool acyclic = true;
    bool collapsible = true;
    bool zero_one_acyclic = true;
    bool d2_cycle_free = true;
    bool realizable = true;

    /// Comma-separated subset of acyclic, collapsible, zero-one-acyclic,
    /// k2cycle-free, realizable; "all" selects everything.
    static CensusPredicates parse(std::string_view list);
};

struct CensusOptions {
    int threads = 1;  // 0 = all hardware threads
    std::uint64_t budget = std::uint64_t{1} << 22;
    /// Random configurations drawn for realizable hits; each is also
    /// relabeled by every permutation of its points.
    std::uint64_t realizable_samples = 2000;
    std::uint64_t seed = 1;
};

/// The complete tournament whose face r has sign +1 iff bit r of `index` is set.
Tournament tournament_from_index(int n, int d, std::uint64_t index);
std::uint64_t tournament_index(const Tournament& t);

struct CensusReport {
    int n = 0;
    int d = 0;
    std::uint64_t total = 0;
    std::optional<std::uint64_t> acyclic;
    std::optional<std::uint64_t> collapsible;
    std::optional<std::uint64_t> zero_one_acyclic;
    std::optional<std::uint64_t> d2_cycle_free;
    std::optional<std::uint64_t> realizable_hits;
    /// Tournaments violating realizable => collapsible => acyclic =>
    /// 0/1-acyclic => (d+2)-cycle-free among the evaluated predicates.
    std::uint64_t chain_violations = 0;
    std::uint64_t distinct_degree_sequences = 0;
    /// Largest number of acyclic tournaments sharing a degree sequence
    /// (present only when acyclicity was evaluated).
    std::optional<std::uint64_t> max_acyclic_degree_multiplicity;
};

/// Exhaustive census over all 2^C(n,d+1) complete tournaments. Throws
/// InstanceTooLarge if that exceeds options.budget. Totals do not depend on
/// the thread count.
CensusReport enumerate(int n, int d, const CensusPredicates& predicates, const CensusOptions& options = {});

/// Indices of tournaments produced by random point configurations (and all
/// relabelings of each).
std::set<std::uint64_t> realizable_hits(int n, int d, std::uint64_t samples, std::uint64_t seed);

enum class IsomorphismConvention { relabel_only, relabel_or_reversal };

std::string_view to_string(IsomorphismConvention c);
IsomorphismConvention parse_convention(std::string_view name);

enum class OrbitPredicate { all, acyclic, collapsible };

OrbitPredicate parse_orbit_predicate(std::string_view name);

/// Canonical form: the lexicographically smallest sign array over the orbit
/// (sign order -1 < 0 < +1).
Tournament canonical_form(const Tournament& t, IsomorphismConvention convention);

struct OrbitCensus {
    std::uint64_t members = 0;
    /// Canonical representatives, sorted by sign array.
    std::vector<Tournament> representatives;
};

OrbitCensus orbit_census(int n, int d, OrbitPredicate predicate, IsomorphismConvention convention,
                         const CensusOptions& options = {});

struct DegreeSequenceCensus {
    std::uint64_t distinct = 0;
    /// Pairs of distinct acyclic tournaments with equal degree sequences
    /// (tournament indices).
    std::vector<std::pair<std::uint64_t, std::uint64_t>> acyclic_collisions;
    /// Number of degree sequences shared by two or more tournaments.
    std::uint64_t shared_sequences = 0;
    /// Up to 16 sample colliding pairs among cyclic tournaments.
    std::vector<std::pair<std::uint64_t, std::uint64_t>> cyclic_collision_examples;
    bool injective_on_acyclic() const { return acyclic_collisions.empty(); }
};

DegreeSequenceCensus degree_sequence_census(int n, int d, const CensusOptions& options = {});

/// Builds T from links[i-1], the (d-1)-tournament on [i+1, n] (relabeled to
/// [1, n-i]) that becomes the restricted link of vertex i, for i = 1..n-d:
/// eps_sigma = (-1)^d * links[min(sigma)-1](sigma minus min, shifted).
/// Throws std::invalid_argument for malformed or non-acyclic links.
Tournament assemble_from_links(int d, const std::vector<Tournament>& links);

/// The restricted links of T, inverse of assemble_from_links.
std::vector<Tournament> restricted_links(const Tournament& t);

/// Acyclic tournament drawn uniformly from the link-assembly family
/// (uniform random permutations at d = 1).
Tournament sample_acyclic(int n, int d, std::uint64_t seed);

/// Number of tournaments the link-assembly family produces, prod_{k=d-1}^{n-1} a_{d-1}(k).
mpz_class assembly_family_size(int n, int d, const std::map<std::pair<int, int>, std::uint64_t>& counts);

struct BoundVerdicts {
    mpz_class count;
    mpz_class link_product;  // prod_{k=d-1}^{n-1} a_{d-1}(k)
    mpz_class chamber_bound;  // sum_{k=0}^{C(n,d)} C(C(n,d+1), k)
    mpz_class degree_bound;  // n^{C(n,d)}
    bool link_product_ok = false;
    bool chamber_ok = false;
    bool degree_ok = false;
    bool all_ok() const { return link_product_ok && chamber_ok && degree_ok; }
};

/// Checks a_d(n) against its lower and upper bounds. `counts` maps (k, d') to
/// a_{d'}(k) and must hold (n, d) and (k, d-1) for every k in [d, n-1]; for
/// k < d' + 1 the count is 1 (the empty tournament), and a missing a_0(k)
/// is taken as 2 (all signs equal). Throws
/// std::invalid_argument on a missing entry.
BoundVerdicts verify_bounds(int n, int d, const std::map<std::pair<int, int>, std::uint64_t>& counts);

/// Acyclic count a_d(n) by enumeration.
std::uint64_t count_acyclic(int n, int d, const CensusOptions& options = {});

}  // namespace dtour
