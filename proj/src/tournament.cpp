#include "dtour/tournament.hpp"

#include <algorithm>
#include <map>
#include <mutex>
#include <random>
#include <stdexcept>
#include <utility>

namespace dtour {

namespace {

void check_shape(int n, int d)
{
    if (d < 0)
        throw std::invalid_argument("tournament dimension must be nonnegative");
    if (n < d + 1)
        throw std::invalid_argument("tournament needs n >= d + 1");
}

std::shared_ptr<const Skeleton> build_skeleton(int n, int d)
{
    auto s = std::make_shared<Skeleton>();
    s->n = n;
    s->d = d;
    s->row_count = static_cast<std::size_t>(binomial(n, d));
    s->col_count = static_cast<std::size_t>(binomial(n, d + 1));
    s->col_entries.reserve(s->col_count * static_cast<std::size_t>(d + 1));

    std::vector<std::vector<Skeleton::Entry>> rows(s->row_count);
    std::uint32_t col = 0;
    std::vector<int> sub(static_cast<std::size_t>(d));
    for_each_subset(n, d + 1, [&](std::span<const int> sigma) {
        for (int j = 0; j <= d; ++j) {
            std::size_t w = 0;
            for (int i = 0; i <= d; ++i)
                if (i != j)
                    sub[w++] = sigma[static_cast<std::size_t>(i)];
            const auto row = static_cast<std::uint32_t>(face_rank(Face(sub), n));
            const auto coef = static_cast<std::int8_t>((d - j) % 2 == 0 ? 1 : -1);
            s->col_entries.push_back({row, coef});
            rows[row].push_back({col, coef});
        }
        ++col;
    });
    s->row_entries.reserve(s->row_count * static_cast<std::size_t>(n - d));
    for (const auto& r : rows)
        s->row_entries.insert(s->row_entries.end(), r.begin(), r.end());
    return s;
}

}  // namespace

std::span<const Skeleton::Entry> Skeleton::column(std::size_t c) const
{
    const auto w = static_cast<std::size_t>(d + 1);
    return {col_entries.data() + c * w, w};
}

std::span<const Skeleton::Entry> Skeleton::row(std::size_t r) const
{
    const auto w = static_cast<std::size_t>(n - d);
    return {row_entries.data() + r * w, w};
}

std::shared_ptr<const Skeleton> skeleton(int n, int d)
{
    check_shape(n, d);
    static std::mutex mutex;
    static std::map<std::pair<int, int>, std::shared_ptr<const Skeleton>> cache;
    std::lock_guard lock(mutex);
    auto& slot = cache[{n, d}];
    if (!slot)
        slot = build_skeleton(n, d);
    return slot;
}

Tournament::Tournament(int n, int d) : n_(n), d_(d)
{
    check_shape(n, d);
    signs_.assign(static_cast<std::size_t>(binomial(n, d + 1)), 0);
}

Tournament::Tournament(int n, int d, std::vector<std::int8_t> signs)
    : n_(n), d_(d), signs_(std::move(signs))
{
    check_shape(n, d);
    if (signs_.size() != binomial(n, d + 1))
        throw std::invalid_argument("sign array length must be C(n, d+1)");
    for (auto s : signs_)
        if (s < -1 || s > 1)
            throw std::invalid_argument("signs must lie in {-1, 0, 1}");
}

Tournament Tournament::from_signs(int n, int d, std::span<const int> signs)
{
    std::vector<std::int8_t> v;
    v.reserve(signs.size());
    for (int s : signs) {
        if (s < -1 || s > 1)
            throw std::invalid_argument("signs must lie in {-1, 0, 1}");
        v.push_back(static_cast<std::int8_t>(s));
    }
    return Tournament(n, d, std::move(v));
}

int Tournament::sign(const Face& face) const
{
    if (face.size() != d_ + 1)
        throw std::invalid_argument("face has the wrong dimension for this tournament");
    return signs_[static_cast<std::size_t>(face_rank(face, n_))];
}

void Tournament::set_sign(std::size_t rank, int sign)
{
    if (sign < -1 || sign > 1)
        throw std::invalid_argument("signs must lie in {-1, 0, 1}");
    signs_.at(rank) = static_cast<std::int8_t>(sign);
}

void Tournament::set_sign(const Face& face, int sign)
{
    if (face.size() != d_ + 1)
        throw std::invalid_argument("face has the wrong dimension for this tournament");
    set_sign(static_cast<std::size_t>(face_rank(face, n_)), sign);
}

Tournament Tournament::with_sign(const Face& face, int sign) const
{
    Tournament t = *this;
    t.set_sign(face, sign);
    return t;
}

bool Tournament::is_complete() const
{
    return std::none_of(signs_.begin(), signs_.end(), [](auto s) { return s == 0; });
}

std::size_t Tournament::oriented_count() const
{
    return static_cast<std::size_t>(
        std::count_if(signs_.begin(), signs_.end(), [](auto s) { return s != 0; }));
}

Tournament Tournament::reversed() const
{
    Tournament t = *this;
    for (auto& s : t.signs_)
        s = static_cast<std::int8_t>(-s);
    return t;
}

std::vector<std::size_t> Tournament::oriented_faces() const
{
    std::vector<std::size_t> out;
    for (std::size_t i = 0; i < signs_.size(); ++i)
        if (signs_[i] != 0)
            out.push_back(i);
    return out;
}

IncidenceMatrix::IncidenceMatrix(const Tournament& t)
    : skeleton_(skeleton(t.n(), t.d())), signs_(t.signs().begin(), t.signs().end())
{
}

int IncidenceMatrix::entry(std::size_t row, std::size_t col) const
{
    if (row >= rows() || col >= cols())
        throw std::out_of_range("incidence entry out of range");
    for (const auto& e : skeleton_->column(col))
        if (e.index == row)
            return signs_[col] * e.coefficient;
    return 0;
}

std::vector<Skeleton::Entry> IncidenceMatrix::column(std::size_t col) const
{
    std::vector<Skeleton::Entry> out;
    if (signs_.at(col) == 0)
        return out;
    for (const auto& e : skeleton_->column(col))
        out.push_back({e.index, static_cast<std::int8_t>(signs_[col] * e.coefficient)});
    return out;
}

std::vector<std::vector<int>> IncidenceMatrix::dense() const
{
    std::vector<std::vector<int>> m(rows(), std::vector<int>(cols(), 0));
    for (std::size_t c = 0; c < cols(); ++c)
        for (const auto& e : skeleton_->column(c))
            m[e.index][c] = signs_[c] * e.coefficient;
    return m;
}

IncidenceMatrix incidence_matrix(const Tournament& t)
{
    return IncidenceMatrix(t);
}

Relabeled link(const Tournament& t, int x)
{
    const int n = t.n();
    const int d = t.d();
    if (x < 1 || x > n)
        throw std::out_of_range("link vertex outside [1, n]");
    if (d < 1)
        throw std::invalid_argument("link needs d >= 1");

    std::vector<int> labels;
    for (int v = 1; v <= n; ++v)
        if (v != x)
            labels.push_back(v);

    Tournament out(n - 1, d - 1);
    std::size_t rank = 0;
    std::vector<int> tau(static_cast<std::size_t>(d));
    for_each_subset(n - 1, d, [&](std::span<const int> local) {
        for (std::size_t i = 0; i < local.size(); ++i)
            tau[i] = labels[static_cast<std::size_t>(local[i] - 1)];
        const Face tau_face(tau);
        const Face sigma = tau_face.with_vertex(x);
        out.set_sign(rank++, t.sign(sigma) * boundary_coefficient(tau_face, sigma));
    });
    return {std::move(out), std::move(labels)};
}

Relabeled restrict_to(const Tournament& t, std::span<const int> vertices)
{
    std::vector<int> labels(vertices.begin(), vertices.end());
    std::sort(labels.begin(), labels.end());
    if (std::adjacent_find(labels.begin(), labels.end()) != labels.end())
        throw std::invalid_argument("restrict: duplicate vertex");
    if (!labels.empty() && (labels.front() < 1 || labels.back() > t.n()))
        throw std::out_of_range("restrict: vertex outside [1, n]");
    const int m = static_cast<int>(labels.size());
    if (m < t.d() + 1)
        throw std::invalid_argument("restrict: need at least d + 1 vertices");

    Tournament out(m, t.d());
    std::size_t rank = 0;
    std::vector<int> sigma(static_cast<std::size_t>(t.d() + 1));
    for_each_subset(m, t.d() + 1, [&](std::span<const int> local) {
        for (std::size_t i = 0; i < local.size(); ++i)
            sigma[i] = labels[static_cast<std::size_t>(local[i] - 1)];
        out.set_sign(rank++, t.signs()[static_cast<std::size_t>(face_rank(Face(sigma), t.n()))]);
    });
    return {std::move(out), std::move(labels)};
}

std::vector<int> degree_sequence(const Tournament& t)
{
    const auto sk = skeleton(t.n(), t.d());
    std::vector<int> deg(sk->row_count, 0);
    for (std::size_t c = 0; c < sk->col_count; ++c)
        for (const auto& e : sk->column(c))
            deg[e.index] += t.sign(c) * e.coefficient;
    return deg;
}

Tournament relabel(const Tournament& t, std::span<const int> perm)
{
    const int n = t.n();
    if (static_cast<int>(perm.size()) != n)
        throw std::invalid_argument("relabel: permutation has the wrong length");
    std::vector<bool> seen(static_cast<std::size_t>(n) + 1, false);
    for (int p : perm) {
        if (p < 1 || p > n || seen[static_cast<std::size_t>(p)])
            throw std::invalid_argument("relabel: not a permutation of [1, n]");
        seen[static_cast<std::size_t>(p)] = true;
    }

    Tournament out(n, t.d());
    std::size_t rank = 0;
    std::vector<int> image(static_cast<std::size_t>(t.d() + 1));
    for_each_subset(n, t.d() + 1, [&](std::span<const int> sigma) {
        for (std::size_t i = 0; i < sigma.size(); ++i)
            image[i] = perm[static_cast<std::size_t>(sigma[i] - 1)];
        const int parity = sort_parity(image);
        out.set_sign(Face::from_unsorted(image), parity * t.sign(rank++));
    });
    return out;
}

Tournament random_tournament(int n, int d, std::uint64_t seed)
{
    check_shape(n, d);
    const auto count = static_cast<std::size_t>(binomial(n, d + 1));
    std::mt19937_64 engine(seed);
    std::vector<std::int8_t> signs(count);
    std::uint64_t word = 0;
    for (std::size_t r = 0; r < count; ++r) {
        if (r % 64 == 0)
            word = engine();
        signs[r] = ((word >> (r % 64)) & 1U) ? 1 : -1;
    }
    return Tournament(n, d, std::move(signs));
}

Tournament transitive_tournament(std::span<const int> order)
{
    const int n = static_cast<int>(order.size());
    std::vector<int> position(static_cast<std::size_t>(n) + 1, -1);
    for (int i = 0; i < n; ++i) {
        const int v = order[static_cast<std::size_t>(i)];
        if (v < 1 || v > n || position[static_cast<std::size_t>(v)] >= 0)
            throw std::invalid_argument("transitive_tournament: not a permutation");
        position[static_cast<std::size_t>(v)] = i;
    }
    Tournament t(n, 1);
    std::size_t rank = 0;
    for_each_subset(n, 2, [&](std::span<const int> e) {
        t.set_sign(rank++, position[static_cast<std::size_t>(e[0])] <
                                   position[static_cast<std::size_t>(e[1])]
                               ? 1
                               : -1);
    });
    return t;
}

}  // namespace dtour
