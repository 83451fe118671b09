#pragma once

#include <cstdint>
#include <memory>
#include <span>
#include <string>
#include <vector>

#include "dtour/face.hpp"

namespace dtour {

/// Precomputed incidence structure of the complete d-skeleton on [1, n].
/// Rows are the d-subsets and columns the (d+1)-subsets, both ranked
/// lexicographically. Shared by every tournament with the same (n, d).
struct Skeleton {
    struct Entry {
        std::uint32_t index;
        std::int8_t coefficient;
    };

    int n = 0;
    int d = 0;
    std::size_t row_count = 0;
    std::size_t col_count = 0;
    /// d+1 entries per column; entry j is the row of sigma minus its j-th vertex.
    std::vector<Entry> col_entries;
    /// n-d entries per row (its cofaces), ascending by column.
    std::vector<Entry> row_entries;

    std::span<const Entry> column(std::size_t c) const;
    std::span<const Entry> row(std::size_t r) const;
};

/// Cached, thread-safe.
std::shared_ptr<const Skeleton> skeleton(int n, int d);

/// A (possibly partial) d-tournament on [1, n]: one sign in {-1, 0, +1} per
/// (d+1)-subset, indexed by lexicographic rank. Sign 0 marks an absent face.
class Tournament {
public:
    Tournament() = default;
    /// All-zero partial tournament.
    Tournament(int n, int d);
    Tournament(int n, int d, std::vector<std::int8_t> signs);
    static Tournament from_signs(int n, int d, std::span<const int> signs);

    int n() const { return n_; }
    int d() const { return d_; }
    std::size_t face_count() const { return signs_.size(); }

    int sign(std::size_t rank) const { return signs_[rank]; }
    int sign(const Face& face) const;
    std::span<const std::int8_t> signs() const { return signs_; }

    void set_sign(std::size_t rank, int sign);
    void set_sign(const Face& face, int sign);
    Tournament with_sign(const Face& face, int sign) const;

    bool is_complete() const;
    std::size_t oriented_count() const;
    /// Global sign reversal.
    Tournament reversed() const;
    /// Ranks of the faces with nonzero sign.
    std::vector<std::size_t> oriented_faces() const;

    friend bool operator==(const Tournament&, const Tournament&) = default;

private:
    int n_ = 0;
    int d_ = 0;
    std::vector<std::int8_t> signs_;
};

/// Sparse {-1, 0, +1} incidence matrix of a tournament: entry (tau, sigma) is
/// eps_sigma * (tau; sigma).
class IncidenceMatrix {
public:
    explicit IncidenceMatrix(const Tournament& t);

    std::size_t rows() const { return skeleton_->row_count; }
    std::size_t cols() const { return skeleton_->col_count; }
    int entry(std::size_t row, std::size_t col) const;
    /// Nonzero entries of a column (empty for an unoriented face).
    std::vector<Skeleton::Entry> column(std::size_t col) const;
    std::vector<std::vector<int>> dense() const;
    const Skeleton& structure() const { return *skeleton_; }
    int sign(std::size_t col) const { return signs_[col]; }

private:
    std::shared_ptr<const Skeleton> skeleton_;
    std::vector<std::int8_t> signs_;
};

IncidenceMatrix incidence_matrix(const Tournament& t);

/// Tournament together with new-label -> old-label map (labels[i] is the
/// original label of vertex i+1).
struct Relabeled {
    Tournament tournament;
    std::vector<int> labels;
};

/// The (d-1)-tournament induced on the other vertices by faces through x,
/// relabeled order-preservingly to [1, n-1].
Relabeled link(const Tournament& t, int x);

/// Restriction to the vertex set `vertices` (any order, no duplicates),
/// relabeled order-preservingly to [1, |U|].
Relabeled restrict_to(const Tournament& t, std::span<const int> vertices);

/// Row sums of the incidence matrix.
std::vector<int> degree_sequence(const Tournament& t);

/// Pushes t forward along the permutation `perm` (perm[i-1] is the image of
/// vertex i): the face sort(perm(sigma)) gets parity * eps_sigma.
Tournament relabel(const Tournament& t, std::span<const int> perm);

/// Uniform random complete tournament. Signs come from std::mt19937_64 seeded
/// with `seed`; face r takes bit (r mod 64) of the (r / 64)-th output, 1 -> +1.
/// The engine and bit extraction are fully specified by the standard, so the
/// result is identical across platforms.
Tournament random_tournament(int n, int d, std::uint64_t seed);

/// The transitive tournament of a vertex order: `order` lists the vertices
/// from first to last, and every edge points forward. Only for d = 1.
Tournament transitive_tournament(std::span<const int> order);

}  // namespace dtour
