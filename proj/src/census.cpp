#include "dtour/census.hpp"

#include <algorithm>
#include <numeric>
#include <random>
#include <sstream>
#include <stdexcept>

#include "dtour/collapse.hpp"
#include "dtour/cycles.hpp"
#include "dtour/error.hpp"
#include "dtour/geometry.hpp"
#include "dtour/parallel.hpp"

namespace dtour {

CensusPredicates CensusPredicates::parse(std::string_view list)
{
    if (list == "all")
        return {};
    CensusPredicates p{false, false, false, false, false};
    std::stringstream ss{std::string(list)};
    std::string item;
    while (std::getline(ss, item, ',')) {
        if (item == "acyclic")
            p.acyclic = true;
        else if (item == "collapsible")
            p.collapsible = true;
        else if (item == "zero-one-acyclic")
            p.zero_one_acyclic = true;
        else if (item == "k2cycle-free")
            p.d2_cycle_free = true;
        else if (item == "realizable")
            p.realizable = true;
        else
            throw std::invalid_argument("unknown census predicate '" + item + "'");
    }
    return p;
}

namespace {

std::uint64_t checked_total(int n, int d, std::uint64_t budget)
{
    const std::uint64_t faces = binomial(n, d + 1);
    if (faces >= 63 || (std::uint64_t{1} << faces) > budget)
        throw InstanceTooLarge("census of 2^" + std::to_string(faces) + " tournaments exceeds the budget of " +
                               std::to_string(budget));
    return std::uint64_t{1} << faces;
}

// Image of every face under every permutation of [1, n], with the parity
// of the induced reordering.
struct PermutationAction {
    struct Image {
        std::uint32_t face;
        std::int8_t parity;
    };
    std::size_t faces = 0;
    std::vector<std::vector<Image>> images;

    PermutationAction(int n, int d)
    {
        faces = static_cast<std::size_t>(binomial(n, d + 1));
        std::vector<int> perm(static_cast<std::size_t>(n));
        std::iota(perm.begin(), perm.end(), 1);
        std::vector<int> image(static_cast<std::size_t>(d + 1));
        do {
            std::vector<Image> map(faces);
            std::size_t rank = 0;
            for_each_subset(n, d + 1, [&](std::span<const int> sigma) {
                for (std::size_t i = 0; i < sigma.size(); ++i)
                    image[i] = perm[static_cast<std::size_t>(sigma[i] - 1)];
                const auto parity = static_cast<std::int8_t>(sort_parity(image));
                map[rank++] = {static_cast<std::uint32_t>(face_rank(Face::from_unsorted(image), n)), parity};
            });
            images.push_back(std::move(map));
        } while (std::next_permutation(perm.begin(), perm.end()));
    }

    std::vector<std::int8_t> apply(std::size_t g, std::span<const std::int8_t> signs, int global) const
    {
        std::vector<std::int8_t> out(faces);
        for (std::size_t r = 0; r < faces; ++r)
            out[images[g][r].face] = static_cast<std::int8_t>(global * images[g][r].parity * signs[r]);
        return out;
    }
};

std::vector<std::int8_t> canonical_signs(const PermutationAction& action, std::span<const std::int8_t> signs,
                                         IsomorphismConvention convention)
{
    std::vector<std::int8_t> best(signs.begin(), signs.end());
    const int passes = convention == IsomorphismConvention::relabel_or_reversal ? 2 : 1;
    for (int pass = 0; pass < passes; ++pass) {
        const int global = pass == 0 ? 1 : -1;
        for (std::size_t g = 0; g < action.images.size(); ++g) {
            auto candidate = action.apply(g, signs, global);
            if (candidate < best)
                best = std::move(candidate);
        }
    }
    return best;
}

struct PartialCensus {
    std::uint64_t acyclic = 0;
    std::uint64_t collapsible = 0;
    std::uint64_t zero_one_acyclic = 0;
    std::uint64_t d2_cycle_free = 0;
    std::uint64_t realizable = 0;
    std::uint64_t violations = 0;
    // degree sequence -> (tournaments, acyclic tournaments)
    std::map<std::vector<int>, std::pair<std::uint64_t, std::uint64_t>> degrees;
};

}  // namespace

Tournament tournament_from_index(int n, int d, std::uint64_t index)
{
    Tournament t(n, d);
    for (std::size_t r = 0; r < t.face_count(); ++r)
        t.set_sign(r, ((index >> r) & 1U) ? 1 : -1);
    return t;
}

std::uint64_t tournament_index(const Tournament& t)
{
    if (!t.is_complete() || t.face_count() >= 64)
        throw std::invalid_argument("tournament_index needs a complete tournament with fewer than 64 faces");
    std::uint64_t index = 0;
    for (std::size_t r = 0; r < t.face_count(); ++r)
        if (t.sign(r) > 0)
            index |= std::uint64_t{1} << r;
    return index;
}

std::set<std::uint64_t> realizable_hits(int n, int d, std::uint64_t samples, std::uint64_t seed)
{
    std::set<std::uint64_t> hits;
    std::vector<int> perm(static_cast<std::size_t>(n));
    std::mt19937_64 seeds(seed);
    for (std::uint64_t s = 0; s < samples; ++s) {
        const Tournament base = orient_from_points(random_configuration(n, d, seeds()));
        std::iota(perm.begin(), perm.end(), 1);
        do {
            hits.insert(tournament_index(relabel(base, perm)));
        } while (std::next_permutation(perm.begin(), perm.end()));
    }
    return hits;
}

CensusReport enumerate(int n, int d, const CensusPredicates& predicates, const CensusOptions& options)
{
    const std::uint64_t total = checked_total(n, d, options.budget);
    std::set<std::uint64_t> hits;
    if (predicates.realizable && d >= 1)
        hits = realizable_hits(n, d, options.realizable_samples, options.seed);

    auto parts = parallel_chunks<PartialCensus>(total, options.threads, [&](std::uint64_t begin, std::uint64_t end) {
        PartialCensus p;
        for (std::uint64_t index = begin; index < end; ++index) {
            const Tournament t = tournament_from_index(n, d, index);
            // chain: realizable => collapsible => acyclic => 0/1-acyclic => d2-free
            std::vector<int> chain;
            bool acyclic = false;
            if (predicates.realizable && d >= 1) {
                const bool hit = hits.contains(index);
                p.realizable += hit;
                chain.push_back(hit);
            }
            if (predicates.collapsible) {
                const bool c = is_collapsible_exact(t).collapsible;
                p.collapsible += c;
                chain.push_back(c);
            }
            if (predicates.acyclic) {
                acyclic = is_acyclic(t).acyclic;
                p.acyclic += acyclic;
                chain.push_back(acyclic);
            }
            if (predicates.zero_one_acyclic) {
                const bool z = !has_zero_one_cycle(t).has_value();
                p.zero_one_acyclic += z;
                chain.push_back(z);
            }
            if (predicates.d2_cycle_free) {
                const bool f = count_d_plus_2_cycles(t) == 0;
                p.d2_cycle_free += f;
                chain.push_back(f);
            }
            for (std::size_t i = 0; i + 1 < chain.size(); ++i)
                if (chain[i] && !chain[i + 1]) {
                    ++p.violations;
                    break;
                }
            auto& slot = p.degrees[degree_sequence(t)];
            ++slot.first;
            slot.second += acyclic ? 1 : 0;
        }
        return p;
    });

    PartialCensus sum;
    for (auto& p : parts) {
        sum.acyclic += p.acyclic;
        sum.collapsible += p.collapsible;
        sum.zero_one_acyclic += p.zero_one_acyclic;
        sum.d2_cycle_free += p.d2_cycle_free;
        sum.realizable += p.realizable;
        sum.violations += p.violations;
        for (auto& [seq, counts] : p.degrees) {
            auto& slot = sum.degrees[seq];
            slot.first += counts.first;
            slot.second += counts.second;
        }
    }

    CensusReport r;
    r.n = n;
    r.d = d;
    r.total = total;
    if (predicates.acyclic)
        r.acyclic = sum.acyclic;
    if (predicates.collapsible)
        r.collapsible = sum.collapsible;
    if (predicates.zero_one_acyclic)
        r.zero_one_acyclic = sum.zero_one_acyclic;
    if (predicates.d2_cycle_free)
        r.d2_cycle_free = sum.d2_cycle_free;
    if (predicates.realizable && d >= 1)
        r.realizable_hits = sum.realizable;
    r.chain_violations = sum.violations;
    r.distinct_degree_sequences = sum.degrees.size();
    if (predicates.acyclic) {
        std::uint64_t m = 0;
        for (const auto& [seq, counts] : sum.degrees)
            m = std::max(m, counts.second);
        r.max_acyclic_degree_multiplicity = m;
    }
    return r;
}

std::string_view to_string(IsomorphismConvention c)
{
    return c == IsomorphismConvention::relabel_only ? "relabel-only" : "relabel-or-global-reversal";
}

IsomorphismConvention parse_convention(std::string_view name)
{
    if (name == "relabel-only")
        return IsomorphismConvention::relabel_only;
    if (name == "relabel-or-global-reversal")
        return IsomorphismConvention::relabel_or_reversal;
    throw std::invalid_argument("unknown isomorphism convention '" + std::string(name) + "'");
}

OrbitPredicate parse_orbit_predicate(std::string_view name)
{
    if (name == "all")
        return OrbitPredicate::all;
    if (name == "acyclic")
        return OrbitPredicate::acyclic;
    if (name == "collapsible")
        return OrbitPredicate::collapsible;
    throw std::invalid_argument("unknown orbit predicate '" + std::string(name) + "'");
}

Tournament canonical_form(const Tournament& t, IsomorphismConvention convention)
{
    const PermutationAction action(t.n(), t.d());
    return Tournament(t.n(), t.d(), canonical_signs(action, t.signs(), convention));
}

OrbitCensus orbit_census(int n, int d, OrbitPredicate predicate, IsomorphismConvention convention,
                         const CensusOptions& options)
{
    const std::uint64_t total = checked_total(n, d, options.budget);
    const PermutationAction action(n, d);
    using Partial = std::pair<std::uint64_t, std::set<std::vector<std::int8_t>>>;
    auto parts = parallel_chunks<Partial>(total, options.threads, [&](std::uint64_t begin, std::uint64_t end) {
        Partial p;
        for (std::uint64_t index = begin; index < end; ++index) {
            const Tournament t = tournament_from_index(n, d, index);
            bool keep = true;
            if (predicate == OrbitPredicate::acyclic)
                keep = is_acyclic(t).acyclic;
            else if (predicate == OrbitPredicate::collapsible)
                keep = is_collapsible_exact(t).collapsible;
            if (!keep)
                continue;
            ++p.first;
            p.second.insert(canonical_signs(action, t.signs(), convention));
        }
        return p;
    });
    OrbitCensus out;
    std::set<std::vector<std::int8_t>> reps;
    for (auto& [members, set] : parts) {
        out.members += members;
        reps.insert(set.begin(), set.end());
    }
    for (const auto& s : reps)
        out.representatives.emplace_back(n, d, s);
    return out;
}

DegreeSequenceCensus degree_sequence_census(int n, int d, const CensusOptions& options)
{
    const std::uint64_t total = checked_total(n, d, options.budget);
    // degree sequence -> (acyclic indices, cyclic indices)
    using Groups = std::map<std::vector<int>, std::pair<std::vector<std::uint64_t>, std::vector<std::uint64_t>>>;
    auto parts = parallel_chunks<Groups>(total, options.threads, [&](std::uint64_t begin, std::uint64_t end) {
        Groups g;
        for (std::uint64_t index = begin; index < end; ++index) {
            const Tournament t = tournament_from_index(n, d, index);
            auto& slot = g[degree_sequence(t)];
            (is_acyclic(t).acyclic ? slot.first : slot.second).push_back(index);
        }
        return g;
    });
    Groups all;
    for (auto& g : parts)
        for (auto& [seq, lists] : g) {
            auto& slot = all[seq];
            slot.first.insert(slot.first.end(), lists.first.begin(), lists.first.end());
            slot.second.insert(slot.second.end(), lists.second.begin(), lists.second.end());
        }

    DegreeSequenceCensus out;
    out.distinct = all.size();
    for (const auto& [seq, lists] : all) {
        const auto& [acyclic, cyclic] = lists;
        if (acyclic.size() + cyclic.size() > 1)
            ++out.shared_sequences;
        for (std::size_t i = 0; i < acyclic.size(); ++i)
            for (std::size_t j = i + 1; j < acyclic.size(); ++j)
                out.acyclic_collisions.emplace_back(acyclic[i], acyclic[j]);
        for (std::size_t i = 0; i + 1 < cyclic.size() && out.cyclic_collision_examples.size() < 16; ++i)
            out.cyclic_collision_examples.emplace_back(cyclic[i], cyclic[i + 1]);
    }
    return out;
}

Tournament assemble_from_links(int d, const std::vector<Tournament>& links)
{
    if (d < 1)
        throw std::invalid_argument("assemble_from_links needs d >= 1");
    if (links.empty())
        throw std::invalid_argument("assemble_from_links needs at least one link");
    const int n = links.front().n() + 1;
    if (static_cast<int>(links.size()) != n - d)
        throw std::invalid_argument("assemble_from_links expects n - d links");
    for (std::size_t i = 0; i < links.size(); ++i) {
        const auto& l = links[i];
        if (l.d() != d - 1 || l.n() != n - static_cast<int>(i) - 1)
            throw std::invalid_argument("link " + std::to_string(i + 1) + " has the wrong shape");
        if (!l.is_complete() || !is_acyclic(l).acyclic)
            throw std::invalid_argument("link " + std::to_string(i + 1) + " is not an acyclic complete tournament");
    }
    const int coefficient = d % 2 == 0 ? 1 : -1;
    Tournament t(n, d);
    std::size_t rank = 0;
    std::vector<int> tau(static_cast<std::size_t>(d));
    for_each_subset(n, d + 1, [&](std::span<const int> sigma) {
        const int i = sigma[0];
        for (int k = 1; k <= d; ++k)
            tau[static_cast<std::size_t>(k - 1)] = sigma[static_cast<std::size_t>(k)] - i;
        t.set_sign(rank++, coefficient * links[static_cast<std::size_t>(i - 1)].sign(Face(tau)));
    });
    return t;
}

std::vector<Tournament> restricted_links(const Tournament& t)
{
    std::vector<Tournament> out;
    for (int i = 1; i <= t.n() - t.d(); ++i) {
        const auto lk = link(t, i);
        // vertices i+1..n carry labels i..n-1 in the link
        std::vector<int> later;
        for (int v = i; v <= t.n() - 1; ++v)
            later.push_back(v);
        out.push_back(restrict_to(lk.tournament, later).tournament);
    }
    return out;
}

Tournament sample_acyclic(int n, int d, std::uint64_t seed)
{
    if (d < 1 || n < d + 1)
        throw std::invalid_argument("sample_acyclic needs d >= 1 and n >= d + 1");
    std::mt19937_64 engine(seed);
    if (d == 1) {
        std::vector<int> order(static_cast<std::size_t>(n));
        std::iota(order.begin(), order.end(), 1);
        for (std::size_t i = order.size() - 1; i > 0; --i)
            std::swap(order[i], order[static_cast<std::size_t>(engine() % (i + 1))]);
        return transitive_tournament(order);
    }
    std::vector<Tournament> links;
    for (int i = 1; i <= n - d; ++i)
        links.push_back(sample_acyclic(n - i, d - 1, engine()));
    return assemble_from_links(d, links);
}

namespace {

mpz_class count_at(const std::map<std::pair<int, int>, std::uint64_t>& counts, int k, int d)
{
    if (k < d + 1)
        return 1;
    auto it = counts.find({k, d});
    if (it == counts.end() && d == 0)
        return 2;  // a 0-tournament is acyclic iff all its signs agree
    if (it == counts.end())
        throw std::invalid_argument("verify_bounds: a_" + std::to_string(d) + "(" + std::to_string(k) +
                                    ") was not computed");
    return mpz_class(static_cast<unsigned long>(it->second));
}

}  // namespace

mpz_class assembly_family_size(int n, int d, const std::map<std::pair<int, int>, std::uint64_t>& counts)
{
    mpz_class product = 1;
    for (int k = d - 1; k <= n - 1; ++k)
        product *= count_at(counts, k, d - 1);
    return product;
}

BoundVerdicts verify_bounds(int n, int d, const std::map<std::pair<int, int>, std::uint64_t>& counts)
{
    BoundVerdicts v;
    v.count = count_at(counts, n, d);
    v.link_product = assembly_family_size(n, d, counts);

    const auto rows = static_cast<unsigned long>(binomial(n, d));
    const auto hyperplanes = static_cast<unsigned long>(binomial(n, d + 1));
    v.chamber_bound = 0;
    for (unsigned long k = 0; k <= rows; ++k) {
        mpz_class c;
        mpz_bin_uiui(c.get_mpz_t(), hyperplanes, k);
        v.chamber_bound += c;
    }
    mpz_pow_ui(v.degree_bound.get_mpz_t(), mpz_class(n).get_mpz_t(), rows);

    v.link_product_ok = v.count >= v.link_product;
    v.chamber_ok = v.count <= v.chamber_bound;
    v.degree_ok = v.count <= v.degree_bound;
    return v;
}

std::uint64_t count_acyclic(int n, int d, const CensusOptions& options)
{
    CensusPredicates only{true, false, false, false, false};
    return *enumerate(n, d, only, options).acyclic;
}

}  // namespace dtour
