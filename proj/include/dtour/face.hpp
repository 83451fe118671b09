#pragma once

#include <cstdint>
#include <initializer_list>
#include <span>
#include <string>
#include <vector>

namespace dtour {

/// Binomial coefficient C(n, k); zero when k < 0 or k > n. Throws
/// std::overflow_error if the value does not fit in 64 bits.
std::uint64_t binomial(int n, int k);

/// A face: a strictly ascending set of 1-based vertex labels.
class Face {
public:
    Face() = default;
    Face(std::initializer_list<int> vertices);
    explicit Face(std::vector<int> vertices);

    /// Accepts any order; sorts and rejects duplicates.
    static Face from_unsorted(std::vector<int> vertices);

    int size() const { return static_cast<int>(vertices_.size()); }
    int dimension() const { return size() - 1; }
    int operator[](int i) const { return vertices_[static_cast<std::size_t>(i)]; }
    int min() const { return vertices_.front(); }
    int max() const { return vertices_.back(); }
    bool empty() const { return vertices_.empty(); }
    bool contains(int v) const;
    bool is_subset_of(const Face& other) const;

    std::span<const int> vertices() const { return vertices_; }
    auto begin() const { return vertices_.begin(); }
    auto end() const { return vertices_.end(); }

    /// Face without the vertex at position j (0-based).
    Face without_position(int j) const;
    /// Face with vertex v inserted; v must not be present.
    Face with_vertex(int v) const;

    /// "1,2,3"
    std::string key() const;
    /// "123" when all labels are single digits, "1,2,3" otherwise.
    std::string label() const;

    friend bool operator==(const Face&, const Face&) = default;
    friend auto operator<=>(const Face&, const Face&) = default;

private:
    std::vector<int> vertices_;
};

/// Lexicographic rank of a k-subset of [1, n], in [0, C(n, k)).
std::uint64_t face_rank(const Face& face, int n);
/// Inverse of face_rank.
Face face_unrank(std::uint64_t rank, int k, int n);

/// Visits every k-subset of [1, n] in lexicographic order.
template <typename Fn>
void for_each_subset(int n, int k, Fn&& fn)
{
    if (k < 0 || k > n)
        return;
    std::vector<int> c(static_cast<std::size_t>(k));
    for (int i = 0; i < k; ++i)
        c[static_cast<std::size_t>(i)] = i + 1;
    while (true) {
        fn(std::span<const int>(c));
        int i = k - 1;
        while (i >= 0 && c[static_cast<std::size_t>(i)] == n - k + i + 1)
            --i;
        if (i < 0)
            return;
        ++c[static_cast<std::size_t>(i)];
        for (int j = i + 1; j < k; ++j)
            c[static_cast<std::size_t>(j)] = c[static_cast<std::size_t>(j - 1)] + 1;
    }
}

/// All k-subsets of [1, n] in lexicographic order.
std::vector<Face> all_faces(int n, int k);

/// Orientation induced on tau by the positive orientation of sigma:
/// (-1)^(d-j) if tau = sigma minus its j-th vertex (d = dim sigma), else 0.
/// Throws std::invalid_argument unless dim sigma = dim tau + 1.
int boundary_coefficient(const Face& tau, const Face& sigma);

/// Sign of the permutation that sorts `values` ascending (values distinct).
int sort_parity(std::span<const int> values);

}  // namespace dtour
