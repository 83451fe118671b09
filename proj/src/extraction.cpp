#include "dtour/extraction.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

#include "dtour/cycles.hpp"
#include "dtour/error.hpp"

namespace dtour {

namespace {

std::vector<Face> visiting_order(int n, int k, ExtractionOrder order)
{
    std::vector<Face> faces = all_faces(n, k);  // increasing lexicographic
    if (order == ExtractionOrder::reverse_lexicographic) {
        std::reverse(faces.begin(), faces.end());
    } else {
        std::sort(faces.begin(), faces.end(), [](const Face& a, const Face& b) {
            return std::lexicographical_compare(a.vertices().rbegin(), a.vertices().rend(),
                                                b.vertices().rbegin(), b.vertices().rend());
        });
        std::reverse(faces.begin(), faces.end());
    }
    return faces;
}

}  // namespace

ExtractionResult extract_acyclic_sub(const Tournament& t, ExtractionOrder order)
{
    if (!t.is_complete())
        throw std::invalid_argument("extract_acyclic_sub needs a complete tournament");
    const int n = t.n();
    const int d = t.d();
    // x = min(tau + {x}) sits at position 0, so (tau; tau + {x}) = (-1)^d.
    const int coefficient = d % 2 == 0 ? 1 : -1;

    std::vector<bool> alive(static_cast<std::size_t>(n) + 1, true);
    ExtractionResult result;
    for (const Face& tau : visiting_order(n, d, order)) {
        if (std::any_of(tau.begin(), tau.end(), [&](int v) { return !alive[static_cast<std::size_t>(v)]; }))
            continue;
        ExtractionStep step{tau, 0, 0, 0, {}};
        std::vector<int> plus;
        std::vector<int> minus;
        const int lowest = d == 0 ? n + 1 : tau.min();
        for (int x = 1; x < lowest; ++x) {
            if (!alive[static_cast<std::size_t>(x)])
                continue;
            const int induced = t.sign(tau.with_vertex(x)) * coefficient;
            (induced > 0 ? plus : minus).push_back(x);
        }
        step.below = plus.size() + minus.size();
        step.positive = plus.size();
        step.negative = minus.size();
        step.eliminated = plus.size() < minus.size() ? plus : minus;
        for (int x : step.eliminated)
            alive[static_cast<std::size_t>(x)] = false;
        result.trace.push_back(std::move(step));
    }
    for (int v = 1; v <= n; ++v)
        if (alive[static_cast<std::size_t>(v)])
            result.survivors.push_back(v);
    return result;
}

std::vector<int> max_acyclic_subtournament(const Tournament& t, int cap)
{
    if (t.n() > cap)
        throw InstanceTooLarge("max_acyclic_subtournament refused: n = " + std::to_string(t.n()) +
                               " exceeds the cap of " + std::to_string(cap));
    for (int k = t.n(); k >= t.d() + 1; --k) {
        std::vector<int> found;
        for_each_subset(t.n(), k, [&](std::span<const int> u) {
            if (!found.empty())
                return;
            if (k < t.d() + 2 || is_acyclic(restrict_to(t, u).tournament).acyclic)
                found.assign(u.begin(), u.end());
        });
        if (!found.empty())
            return found;
    }
    // n = d + 1 is handled above; a single face is always acyclic
    throw std::logic_error("max_acyclic_subtournament found no acyclic subset");
}

std::size_t RamseyColoring::blue_count() const
{
    return static_cast<std::size_t>(std::count(blue.begin(), blue.end(), true));
}

RamseyColoring ramsey_coloring(const Tournament& t)
{
    if (!t.is_complete())
        throw std::invalid_argument("ramsey_coloring needs a complete tournament");
    RamseyColoring c{t.n(), t.d(), {}};
    const int m = t.d() + 2;
    if (t.n() < m)
        return c;
    for_each_subset(t.n(), m, [&](std::span<const int> u) { c.blue.push_back(is_d_plus_2_cycle(t, u)); });
    return c;
}

std::optional<Face> has_blue_clique(const RamseyColoring& coloring, int m)
{
    const int k = coloring.d + 2;
    if (m < k || m > coloring.n)
        return std::nullopt;
    std::optional<Face> witness;
    std::vector<int> sub(static_cast<std::size_t>(k));
    for_each_subset(coloring.n, m, [&](std::span<const int> big) {
        if (witness)
            return;
        bool all_blue = true;
        for_each_subset(m, k, [&](std::span<const int> local) {
            if (!all_blue)
                return;
            for (std::size_t i = 0; i < sub.size(); ++i)
                sub[i] = big[static_cast<std::size_t>(local[i] - 1)];
            all_blue = coloring.blue[static_cast<std::size_t>(face_rank(Face(sub), coloring.n))];
        });
        if (all_blue)
            witness = Face(std::vector<int>(big.begin(), big.end()));
    });
    return witness;
}

}  // namespace dtour
