#include "dtour/cycles.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>
#include <string>
#include <unordered_set>

#include "dtour/error.hpp"
#include "dtour/parallel.hpp"

namespace dtour {

std::vector<SparseColumn> oriented_columns(const Tournament& t, std::vector<std::size_t>& ranks)
{
    const auto sk = skeleton(t.n(), t.d());
    ranks = t.oriented_faces();
    std::vector<SparseColumn> cols;
    cols.reserve(ranks.size());
    for (std::size_t c : ranks) {
        SparseColumn col;
        for (const auto& e : sk->column(c))
            col.emplace_back(e.index, t.sign(c) * e.coefficient);
        cols.push_back(std::move(col));
    }
    return cols;
}

AcyclicityVerdict is_acyclic(const Tournament& t)
{
    const auto sk = skeleton(t.n(), t.d());
    std::vector<std::size_t> ranks;
    const auto cols = oriented_columns(t, ranks);
    auto alt = nonneg_kernel_or_certificate(sk->row_count, cols);
    if (auto* cert = std::get_if<PositiveCertificate>(&alt))
        return {true, std::move(*cert)};
    const auto& kernel = std::get<NonNegKernelVector>(alt);
    CycleCertificate cycle;
    for (std::size_t i = 0; i < ranks.size(); ++i)
        if (sgn(kernel.weights[i]) > 0) {
            cycle.support.push_back(face_unrank(ranks[i], t.d() + 1, t.n()));
            cycle.weights.push_back(kernel.weights[i]);
        }
    return {false, std::move(cycle)};
}

bool verify_cycle(const Tournament& t, const CycleCertificate& c)
{
    if (c.support.empty() || c.support.size() != c.weights.size())
        return false;
    const auto sk = skeleton(t.n(), t.d());
    std::vector<Rational> sum(sk->row_count);
    Rational total = 0;
    for (std::size_t i = 0; i < c.support.size(); ++i) {
        if (sgn(c.weights[i]) <= 0 || c.support[i].size() != t.d() + 1)
            return false;
        const auto rank = static_cast<std::size_t>(face_rank(c.support[i], t.n()));
        if (t.sign(rank) == 0)
            return false;
        total += c.weights[i];
        for (const auto& e : sk->column(rank))
            sum[e.index] += c.weights[i] * (t.sign(rank) * e.coefficient);
    }
    return total == 1 && std::all_of(sum.begin(), sum.end(), [](const Rational& s) { return sgn(s) == 0; });
}

bool verify_chamber_certificate(const Tournament& t, const PositiveCertificate& c)
{
    const auto sk = skeleton(t.n(), t.d());
    if (c.y.size() != sk->row_count)
        return false;
    std::vector<std::size_t> ranks;
    return verify_certificate(oriented_columns(t, ranks), c);
}

std::vector<std::size_t> cycle_span(const Tournament& t)
{
    const auto sk = skeleton(t.n(), t.d());
    std::vector<std::size_t> ranks;
    const auto cols = oriented_columns(t, ranks);
    if (cols.empty())
        return {};
    std::vector<bool> known(cols.size(), false);

    auto first = nonneg_kernel_or_certificate(sk->row_count, cols);
    if (std::holds_alternative<PositiveCertificate>(first))
        return {};
    const auto& w0 = std::get<NonNegKernelVector>(first).weights;
    for (std::size_t i = 0; i < cols.size(); ++i)
        known[i] = sgn(w0[i]) > 0;

    // For each face not yet covered: is { A v = 0, v >= 0, v_F = 1 } feasible?
    RationalMatrix m(sk->row_count + 1, cols.size());
    for (std::size_t c = 0; c < cols.size(); ++c)
        for (const auto& [r, value] : cols[c])
            m(r, c) = value;
    std::vector<Rational> b(sk->row_count + 1);
    b[sk->row_count] = 1;
    for (std::size_t f = 0; f < cols.size(); ++f) {
        if (known[f])
            continue;
        for (std::size_t c = 0; c < cols.size(); ++c)
            m(sk->row_count, c) = c == f ? 1 : 0;
        auto result = find_nonnegative_solution(m, b);
        if (auto* v = std::get_if<std::vector<Rational>>(&result))
            for (std::size_t i = 0; i < cols.size(); ++i)
                if (sgn((*v)[i]) > 0)
                    known[i] = true;
    }
    std::vector<std::size_t> out;
    for (std::size_t i = 0; i < cols.size(); ++i)
        if (known[i])
            out.push_back(ranks[i]);
    return out;
}

bool verify_zero_one_cycle(const Tournament& t, const ZeroOneCycle& c)
{
    if (c.faces.empty())
        return false;
    const auto sk = skeleton(t.n(), t.d());
    std::vector<int> sum(sk->row_count, 0);
    std::set<Face> distinct;
    for (const auto& f : c.faces) {
        if (f.size() != t.d() + 1 || !distinct.insert(f).second)
            return false;
        const auto rank = static_cast<std::size_t>(face_rank(f, t.n()));
        if (t.sign(rank) == 0)
            return false;
        for (const auto& e : sk->column(rank))
            sum[e.index] += t.sign(rank) * e.coefficient;
    }
    return std::all_of(sum.begin(), sum.end(), [](int s) { return s == 0; });
}

namespace {

class ZeroOneSearch {
public:
    ZeroOneSearch(const Skeleton& sk, const Tournament& t, std::vector<std::size_t> candidates)
        : partial_(sk.row_count, 0), pos_rem_(sk.row_count, 0), neg_rem_(sk.row_count, 0)
    {
        // Static order: next face is the one with most rows already touched by
        // earlier faces; ties go to the lower rank.
        std::sort(candidates.begin(), candidates.end());
        std::vector<bool> touched(sk.row_count, false);
        std::vector<bool> used(candidates.size(), false);
        for (std::size_t step = 0; step < candidates.size(); ++step) {
            std::size_t best = candidates.size();
            int best_score = -1;
            for (std::size_t i = 0; i < candidates.size(); ++i) {
                if (used[i])
                    continue;
                int score = 0;
                for (const auto& e : sk.column(candidates[i]))
                    score += touched[e.index] ? 1 : 0;
                if (score > best_score) {
                    best_score = score;
                    best = i;
                }
            }
            used[best] = true;
            order_.push_back(candidates[best]);
            SparseColumn col;
            for (const auto& e : sk.column(candidates[best])) {
                touched[e.index] = true;
                const int v = t.sign(candidates[best]) * e.coefficient;
                col.emplace_back(e.index, v);
                (v > 0 ? pos_rem_ : neg_rem_)[e.index] += v;
            }
            cols_.push_back(std::move(col));
        }
        chosen_.assign(order_.size(), false);
    }

    std::optional<std::vector<std::size_t>> run()
    {
        if (!dfs(0))
            return std::nullopt;
        std::vector<std::size_t> out;
        for (std::size_t i = 0; i < order_.size(); ++i)
            if (chosen_[i])
                out.push_back(order_[i]);
        std::sort(out.begin(), out.end());
        return out;
    }

private:
    static constexpr std::size_t kMemoLimit = 1u << 22;

    bool rows_ok(const SparseColumn& col) const
    {
        for (const auto& [r, v] : col) {
            if (partial_[r] + neg_rem_[r] > 0 || partial_[r] + pos_rem_[r] < 0)
                return false;
        }
        return true;
    }

    void add(const SparseColumn& col, int direction)
    {
        for (const auto& [r, v] : col) {
            const bool was_zero = partial_[r] == 0;
            partial_[r] += direction * v;
            const bool is_zero = partial_[r] == 0;
            nonzero_ += (was_zero && !is_zero) ? 1 : 0;
            nonzero_ -= (!was_zero && is_zero) ? 1 : 0;
        }
    }

    std::string key(std::size_t i) const
    {
        std::string k(reinterpret_cast<const char*>(&i), sizeof(i));
        for (int p : partial_)
            k.push_back(static_cast<char>(p));
        return k;
    }

    bool dfs(std::size_t i)
    {
        if (included_ > 0 && nonzero_ == 0)
            return true;
        if (i == order_.size())
            return false;
        const std::string k = key(i);
        if (failed_.contains(k))
            return false;

        const auto& col = cols_[i];
        for (const auto& [r, v] : col)
            (v > 0 ? pos_rem_ : neg_rem_)[r] -= v;

        add(col, +1);
        ++included_;
        chosen_[i] = true;
        if (rows_ok(col) && dfs(i + 1))
            return true;
        chosen_[i] = false;
        --included_;
        add(col, -1);

        if (rows_ok(col) && dfs(i + 1))
            return true;

        for (const auto& [r, v] : col)
            (v > 0 ? pos_rem_ : neg_rem_)[r] += v;
        if (failed_.size() < kMemoLimit)
            failed_.insert(k);
        return false;
    }

    std::vector<std::size_t> order_;
    std::vector<SparseColumn> cols_;
    std::vector<int> partial_;
    std::vector<int> pos_rem_;
    std::vector<int> neg_rem_;
    std::vector<bool> chosen_;
    int nonzero_ = 0;
    int included_ = 0;
    std::unordered_set<std::string> failed_;
};

}  // namespace

std::optional<ZeroOneCycle> has_zero_one_cycle(const Tournament& t, std::size_t face_cap)
{
    auto candidates = cycle_span(t);
    if (candidates.empty())
        return std::nullopt;
    if (candidates.size() > face_cap)
        throw InstanceTooLarge("0/1-cycle search refused: " + std::to_string(candidates.size()) +
                               " candidate faces exceed the cap of " + std::to_string(face_cap));
    const auto sk = skeleton(t.n(), t.d());
    ZeroOneSearch search(*sk, t, std::move(candidates));
    auto found = search.run();
    if (!found)
        return std::nullopt;
    ZeroOneCycle cycle;
    for (std::size_t r : *found)
        cycle.faces.push_back(face_unrank(r, t.d() + 1, t.n()));
    if (!verify_zero_one_cycle(t, cycle))
        throw std::logic_error("0/1-cycle witness failed verification");
    return cycle;
}

namespace {

// Opposite induced orientations on every common subface.
bool subface_criterion(const Tournament& t, const Face& u)
{
    const int m = u.size();
    for (int a = 0; a < m; ++a)
        for (int b = a + 1; b < m; ++b) {
            const Face sa = u.without_position(a);
            const Face sb = u.without_position(b);
            // common subface: u minus both vertices
            const Face tau = sa.without_position(b - 1);
            const int ia = t.sign(sa) * boundary_coefficient(tau, sa);
            const int ib = t.sign(sb) * boundary_coefficient(tau, sb);
            if (ia != -ib)
                return false;
        }
    return true;
}

// eps_{U minus u_k} = c * (-1)^(d+1-k) for a fixed c.
bool alternating_criterion(const Tournament& t, const Face& u)
{
    const int d = t.d();
    int c = 0;
    for (int k = 0; k < u.size(); ++k) {
        const int pattern = ((d + 1 - k) % 2 == 0) ? 1 : -1;
        const int ck = t.sign(u.without_position(k)) * pattern;
        if (c == 0)
            c = ck;
        else if (c != ck)
            return false;
    }
    return true;
}

bool d2_cycle_unchecked(const Tournament& t, const Face& u)
{
    const bool a = subface_criterion(t, u);
    if (a != alternating_criterion(t, u))
        throw std::logic_error("(d+2)-cycle criteria disagree");
    return a;
}

}  // namespace

bool is_d_plus_2_cycle(const Tournament& t, std::span<const int> u)
{
    const Face face = Face::from_unsorted(std::vector<int>(u.begin(), u.end()));
    if (face.size() != t.d() + 2)
        throw std::invalid_argument("is_d_plus_2_cycle: U must have d + 2 vertices");
    if (face.min() < 1 || face.max() > t.n())
        throw std::out_of_range("is_d_plus_2_cycle: vertex outside [1, n]");
    for (int k = 0; k < face.size(); ++k)
        if (t.sign(face.without_position(k)) == 0)
            throw std::invalid_argument("is_d_plus_2_cycle: a face inside U is unoriented");
    return d2_cycle_unchecked(t, face);
}

std::uint64_t count_d_plus_2_cycles(const Tournament& t, int threads)
{
    if (!t.is_complete())
        throw std::invalid_argument("count_d_plus_2_cycles needs a complete tournament");
    const int k = t.d() + 2;
    const std::uint64_t total = binomial(t.n(), k);
    auto parts = parallel_chunks<std::uint64_t>(total, threads, [&](std::uint64_t begin, std::uint64_t end) {
        std::uint64_t count = 0;
        for (std::uint64_t r = begin; r < end; ++r)
            if (d2_cycle_unchecked(t, face_unrank(r, k, t.n())))
                ++count;
        return count;
    });
    std::uint64_t sum = 0;
    for (auto p : parts)
        sum += p;
    return sum;
}

bool all_k_subsets_contain_d2_cycle(const Tournament& t, int k)
{
    if (!t.is_complete())
        throw std::invalid_argument("all_k_subsets_contain_d2_cycle needs a complete tournament");
    const int m = t.d() + 2;
    if (k < m)
        return false;
    if (k > t.n())
        return true;  // vacuous
    std::vector<bool> cyclic(static_cast<std::size_t>(binomial(t.n(), m)));
    for (std::size_t r = 0; r < cyclic.size(); ++r)
        cyclic[r] = d2_cycle_unchecked(t, face_unrank(r, m, t.n()));
    bool all = true;
    std::vector<int> sub(static_cast<std::size_t>(m));
    for_each_subset(t.n(), k, [&](std::span<const int> big) {
        if (!all)
            return;
        bool found = false;
        for_each_subset(k, m, [&](std::span<const int> local) {
            if (found)
                return;
            for (std::size_t i = 0; i < sub.size(); ++i)
                sub[i] = big[static_cast<std::size_t>(local[i] - 1)];
            found = cyclic[static_cast<std::size_t>(face_rank(Face(sub), t.n()))];
        });
        all = found;
    });
    return all;
}

std::variant<Tournament, ExtensionFailure> extend_avoiding_01_cycles(const Tournament& t,
                                                                     std::span<const Face> order,
                                                                     std::size_t face_cap)
{
    Tournament current = t;
    for (const Face& face : order) {
        if (current.sign(face) != 0)
            throw std::invalid_argument("extend_avoiding_01_cycles: face " + face.key() + " is already oriented");
        const Tournament plus = current.with_sign(face, 1);
        auto witness_plus = has_zero_one_cycle(plus, face_cap);
        if (!witness_plus) {
            current = plus;
            continue;
        }
        const Tournament minus = current.with_sign(face, -1);
        auto witness_minus = has_zero_one_cycle(minus, face_cap);
        if (!witness_minus) {
            current = minus;
            continue;
        }
        return ExtensionFailure{face, std::move(*witness_plus), std::move(*witness_minus), current};
    }
    return current;
}

}  // namespace dtour
