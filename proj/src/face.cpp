#include "dtour/face.hpp"

#include <algorithm>
#include <limits>
#include <stdexcept>

namespace dtour {

std::uint64_t binomial(int n, int k)
{
    if (k < 0 || n < 0 || k > n)
        return 0;
    k = std::min(k, n - k);
    std::uint64_t result = 1;
    for (int i = 1; i <= k; ++i) {
        // result * (n - k + i) / i stays integral at every step
        const auto factor = static_cast<std::uint64_t>(n - k + i);
        if (result > std::numeric_limits<std::uint64_t>::max() / factor)
            throw std::overflow_error("binomial coefficient overflows 64 bits");
        result = result * factor / static_cast<std::uint64_t>(i);
    }
    return result;
}

Face::Face(std::initializer_list<int> vertices) : Face(std::vector<int>(vertices)) {}

Face::Face(std::vector<int> vertices) : vertices_(std::move(vertices))
{
    for (std::size_t i = 0; i < vertices_.size(); ++i) {
        if (vertices_[i] < 1)
            throw std::invalid_argument("face vertices must be positive");
        if (i > 0 && vertices_[i - 1] >= vertices_[i])
            throw std::invalid_argument("face vertices must be strictly ascending");
    }
}

Face Face::from_unsorted(std::vector<int> vertices)
{
    std::sort(vertices.begin(), vertices.end());
    return Face(std::move(vertices));
}

bool Face::contains(int v) const
{
    return std::binary_search(vertices_.begin(), vertices_.end(), v);
}

bool Face::is_subset_of(const Face& other) const
{
    return std::includes(other.vertices_.begin(), other.vertices_.end(),
                         vertices_.begin(), vertices_.end());
}

Face Face::without_position(int j) const
{
    if (j < 0 || j >= size())
        throw std::out_of_range("face position out of range");
    std::vector<int> out;
    out.reserve(vertices_.size() - 1);
    for (int i = 0; i < size(); ++i)
        if (i != j)
            out.push_back(vertices_[static_cast<std::size_t>(i)]);
    Face f;
    f.vertices_ = std::move(out);
    return f;
}

Face Face::with_vertex(int v) const
{
    if (contains(v))
        throw std::invalid_argument("vertex already in face");
    std::vector<int> out = vertices_;
    out.insert(std::upper_bound(out.begin(), out.end(), v), v);
    return Face(std::move(out));
}

std::string Face::key() const
{
    std::string s;
    for (std::size_t i = 0; i < vertices_.size(); ++i) {
        if (i)
            s += ',';
        s += std::to_string(vertices_[i]);
    }
    return s;
}

std::string Face::label() const
{
    const bool short_form = std::all_of(vertices_.begin(), vertices_.end(),
                                        [](int v) { return v < 10; });
    if (!short_form)
        return key();
    std::string s;
    for (int v : vertices_)
        s += static_cast<char>('0' + v);
    return s;
}

// Lexicographic rank via the colex rank of the reflected complement:
// c'_i = n - c_{k+1-i} is a 0-based ascending k-subset and
// lex_rank(c) = C(n, k) - 1 - sum_i C(c'_i, i).
std::uint64_t face_rank(const Face& face, int n)
{
    const int k = face.size();
    if (k > 0 && (face.min() < 1 || face.max() > n))
        throw std::out_of_range("face vertex outside [1, n]");
    std::uint64_t colex = 0;
    for (int i = 1; i <= k; ++i)
        colex += binomial(n - face[k - i], i);
    return binomial(n, k) - 1 - colex;
}

Face face_unrank(std::uint64_t rank, int k, int n)
{
    const std::uint64_t total = binomial(n, k);
    if (k < 0 || rank >= total)
        throw std::out_of_range("face rank out of range");
    std::uint64_t colex = total - 1 - rank;
    std::vector<int> reflected(static_cast<std::size_t>(k));
    int upper = n;
    for (int i = k; i >= 1; --i) {
        int c = upper - 1;
        while (binomial(c, i) > colex)
            --c;
        reflected[static_cast<std::size_t>(i - 1)] = c;
        colex -= binomial(c, i);
        upper = c;
    }
    std::vector<int> vertices(static_cast<std::size_t>(k));
    for (int i = 1; i <= k; ++i)
        vertices[static_cast<std::size_t>(k - i)] = n - reflected[static_cast<std::size_t>(i - 1)];
    return Face(std::move(vertices));
}

std::vector<Face> all_faces(int n, int k)
{
    std::vector<Face> out;
    out.reserve(static_cast<std::size_t>(binomial(n, k)));
    for_each_subset(n, k, [&](std::span<const int> c) {
        out.emplace_back(std::vector<int>(c.begin(), c.end()));
    });
    return out;
}

int boundary_coefficient(const Face& tau, const Face& sigma)
{
    if (sigma.size() != tau.size() + 1)
        throw std::invalid_argument("boundary_coefficient: dim sigma must be dim tau + 1");
    const int d = sigma.dimension();
    int j = 0;
    int skipped = -1;
    for (int i = 0; i < sigma.size(); ++i) {
        if (j < tau.size() && tau[j] == sigma[i]) {
            ++j;
        } else if (skipped < 0) {
            skipped = i;
        } else {
            return 0;
        }
    }
    if (j != tau.size())
        return 0;
    return ((d - skipped) % 2 == 0) ? 1 : -1;
}

int sort_parity(std::span<const int> values)
{
    int inversions = 0;
    for (std::size_t i = 0; i < values.size(); ++i)
        for (std::size_t j = i + 1; j < values.size(); ++j) {
            if (values[i] == values[j])
                throw std::invalid_argument("sort_parity: values must be distinct");
            if (values[i] > values[j])
                ++inversions;
        }
    return inversions % 2 == 0 ? 1 : -1;
}

}  // namespace dtour
