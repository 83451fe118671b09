#include "dtour/collapse.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>
#include <unordered_set>

#include "dtour/error.hpp"

namespace dtour {

namespace {

// Per-row counts of positive and negative entries over the remaining faces.
class CollapseState {
public:
    explicit CollapseState(const Tournament& t)
        : sk_(skeleton(t.n(), t.d())), t_(t), alive_(t.face_count(), false), pos_(sk_->row_count, 0),
          neg_(sk_->row_count, 0)
    {
        for (std::size_t c = 0; c < t.face_count(); ++c)
            if (t.sign(c) != 0)
                add(c);
    }

    bool row_free(std::size_t r) const { return (pos_[r] > 0) != (neg_[r] > 0); }
    int row_weight(std::size_t r) const { return pos_[r] + neg_[r]; }
    std::size_t rows() const { return sk_->row_count; }
    std::size_t alive_count() const { return alive_count_; }
    const std::vector<bool>& alive() const { return alive_; }

    std::vector<std::size_t> collapse(std::size_t r)
    {
        std::vector<std::size_t> removed;
        for (const auto& e : sk_->row(r))
            if (alive_[e.index]) {
                removed.push_back(e.index);
                remove(e.index);
            }
        return removed;
    }

    void restore(const std::vector<std::size_t>& removed)
    {
        for (std::size_t c : removed)
            add(c);
    }

private:
    void add(std::size_t c)
    {
        alive_[c] = true;
        ++alive_count_;
        for (const auto& e : sk_->column(c))
            (t_.sign(c) * e.coefficient > 0 ? pos_ : neg_)[e.index] += 1;
    }

    void remove(std::size_t c)
    {
        alive_[c] = false;
        --alive_count_;
        for (const auto& e : sk_->column(c))
            (t_.sign(c) * e.coefficient > 0 ? pos_ : neg_)[e.index] -= 1;
    }

    std::shared_ptr<const Skeleton> sk_;
    const Tournament& t_;
    std::vector<bool> alive_;
    std::vector<int> pos_;
    std::vector<int> neg_;
    std::size_t alive_count_ = 0;
};

CollapseStep make_step(const Tournament& t, std::size_t row, const std::vector<std::size_t>& removed)
{
    CollapseStep step{face_unrank(row, t.d(), t.n()), {}};
    for (std::size_t c : removed)
        step.removed.push_back(face_unrank(c, t.d() + 1, t.n()));
    return step;
}

}  // namespace

std::vector<Face> free_faces(const Tournament& t)
{
    CollapseState state(t);
    std::vector<Face> out;
    for (std::size_t r = 0; r < state.rows(); ++r)
        if (state.row_free(r))
            out.push_back(face_unrank(r, t.d(), t.n()));
    return out;
}

bool is_free(const Tournament& t, const Face& tau)
{
    if (tau.size() != t.d())
        throw std::invalid_argument("is_free: face must have dimension d - 1");
    CollapseState state(t);
    return state.row_free(static_cast<std::size_t>(face_rank(tau, t.n())));
}

Tournament collapse_at(const Tournament& t, const Face& tau)
{
    if (!is_free(t, tau))
        throw std::invalid_argument("collapse_at: face " + tau.key() + " is not free");
    const auto sk = skeleton(t.n(), t.d());
    Tournament out = t;
    for (const auto& e : sk->row(static_cast<std::size_t>(face_rank(tau, t.n()))))
        out.set_sign(e.index, 0);
    return out;
}

CollapseStrategy parse_strategy(std::string_view name)
{
    if (name == "lexicographic")
        return CollapseStrategy::lexicographic;
    if (name == "reverse-lexicographic")
        return CollapseStrategy::reverse_lexicographic;
    if (name == "most-cofaces-first")
        return CollapseStrategy::most_cofaces_first;
    throw std::invalid_argument("unknown collapse strategy '" + std::string(name) + "'");
}

GreedyCollapseResult greedy_collapse(const Tournament& t, CollapseStrategy strategy)
{
    CollapseState state(t);
    GreedyCollapseResult result;
    while (true) {
        std::size_t pick = state.rows();
        for (std::size_t i = 0; i < state.rows(); ++i) {
            const std::size_t r = strategy == CollapseStrategy::reverse_lexicographic ? state.rows() - 1 - i : i;
            if (!state.row_free(r))
                continue;
            if (strategy != CollapseStrategy::most_cofaces_first) {
                pick = r;
                break;
            }
            if (pick == state.rows() || state.row_weight(r) > state.row_weight(pick))
                pick = r;
        }
        if (pick == state.rows())
            break;
        const auto removed = state.collapse(pick);
        result.witness.steps.push_back(make_step(t, pick, removed));
    }
    result.residue = Tournament(t.n(), t.d());
    for (std::size_t c = 0; c < t.face_count(); ++c)
        if (state.alive()[c])
            result.residue.set_sign(c, t.sign(c));
    result.success = state.alive_count() == 0;
    return result;
}

namespace {

class ExactCollapseSearch {
public:
    ExactCollapseSearch(const Tournament& t, bool branch_all) : t_(t), state_(t), branch_all_(branch_all) {}

    bool dfs()
    {
        ++explored_;
        if (state_.alive_count() == 0)
            return true;
        std::string k = key();
        if (failed_.contains(k))
            return false;
        for (std::size_t r = 0; r < state_.rows(); ++r) {
            if (!state_.row_free(r))
                continue;
            auto removed = state_.collapse(r);
            path_.push_back(make_step(t_, r, removed));
            if (dfs())
                return true;
            path_.pop_back();
            state_.restore(removed);
            if (!branch_all_)
                break;
        }
        failed_.insert(std::move(k));
        return false;
    }

    std::vector<CollapseStep> take_path() { return std::move(path_); }
    std::size_t explored() const { return explored_; }

private:
    std::string key() const
    {
        const auto& alive = state_.alive();
        std::string k((alive.size() + 7) / 8, '\0');
        for (std::size_t c = 0; c < alive.size(); ++c)
            if (alive[c])
                k[c / 8] = static_cast<char>(k[c / 8] | (1 << (c % 8)));
        return k;
    }

    const Tournament& t_;
    CollapseState state_;
    bool branch_all_;
    std::unordered_set<std::string> failed_;
    std::vector<CollapseStep> path_;
    std::size_t explored_ = 0;
};

}  // namespace

ExactCollapseResult is_collapsible_exact(const Tournament& t, std::size_t face_cap, CollapseSearch mode)
{
    if (t.oriented_count() > face_cap)
        throw InstanceTooLarge("exact collapsibility refused: " + std::to_string(t.oriented_count()) +
                               " oriented faces exceed the cap of " + std::to_string(face_cap));
    ExactCollapseSearch search(t, mode == CollapseSearch::exhaustive);
    ExactCollapseResult result;
    result.collapsible = search.dfs();
    result.states_explored = search.explored();
    if (result.collapsible)
        result.witness.steps = search.take_path();
    return result;
}

bool replay_witness(const Tournament& t, const CollapseWitness& w)
{
    Tournament current = t;
    for (const auto& step : w.steps) {
        if (step.free_face.size() != t.d() || !is_free(current, step.free_face))
            return false;
        const Tournament next = collapse_at(current, step.free_face);
        std::vector<Face> removed;
        for (std::size_t c = 0; c < t.face_count(); ++c)
            if (current.sign(c) != 0 && next.sign(c) == 0)
                removed.push_back(face_unrank(c, t.d() + 1, t.n()));
        std::vector<Face> claimed = step.removed;
        std::sort(claimed.begin(), claimed.end());
        if (removed != claimed)
            return false;
        current = next;
    }
    return current.oriented_count() == 0;
}

}  // namespace dtour
