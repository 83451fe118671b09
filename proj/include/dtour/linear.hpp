#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <utility>
#include <variant>
#include <vector>

#include "dtour/rational.hpp"

namespace dtour {

/// Dense row-major rational matrix.
class RationalMatrix {
public:
    RationalMatrix() = default;
    RationalMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    Rational& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
    const Rational& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<Rational> data_;
};

std::vector<Rational> multiply(const RationalMatrix& a, std::span<const Rational> x);

struct LinearSolution {
    /// A particular solution; free variables are set to zero.
    std::vector<Rational> x;
    std::size_t rank = 0;
    bool unique = false;
};

/// Row-combination witness of an inconsistent system: y^T A = 0 and y^T b = 1.
struct Inconsistent {
    std::vector<Rational> row_combination;
};

/// Exact Gauss-Jordan elimination. Throws std::invalid_argument on a
/// dimension mismatch.
std::variant<LinearSolution, Inconsistent> solve_linear(const RationalMatrix& a, std::span<const Rational> b);

/// Farkas witness for { x >= 0 : M x = b } being empty: w^T M >= 0 and w^T b < 0.
struct Infeasible {
    std::vector<Rational> farkas;
};

/// Phase-1 simplex with Bland's rule on { x >= 0 : M x = b }. Returns a basic
/// feasible solution or a Farkas witness; either is checked exactly before
/// it is returned.
std::variant<std::vector<Rational>, Infeasible> find_nonnegative_solution(const RationalMatrix& m,
                                                                          std::span<const Rational> b);

/// A column with small integer entries, stored as (row, value) pairs.
using SparseColumn = std::vector<std::pair<std::uint32_t, int>>;

/// v >= 0 with A v = 0 and sum v = 1. Weights are parallel to the candidate
/// columns passed in; zero weights are kept.
struct NonNegKernelVector {
    std::vector<Rational> weights;
};

/// y with y^T col >= 1 for every candidate column.
struct PositiveCertificate {
    std::vector<Rational> y;
};

using KernelAlternative = std::variant<NonNegKernelVector, PositiveCertificate>;

/// Decides which Farkas alternative holds for the given columns (of a matrix
/// with `row_count` rows) by phase-1 simplex on { A v = 0, 1^T v = 1, v >= 0 }.
/// Columns must be nonzero.
KernelAlternative nonneg_kernel_or_certificate(std::size_t row_count, std::span<const SparseColumn> columns);

/// Exact checks of the defining properties of each alternative.
bool verify_kernel(std::size_t row_count, std::span<const SparseColumn> columns, const NonNegKernelVector& v);
bool verify_certificate(std::span<const SparseColumn> columns, const PositiveCertificate& c);

}  // namespace dtour
