#include "dtour/linear.hpp"

#include <stdexcept>

namespace dtour {

std::vector<Rational> multiply(const RationalMatrix& a, std::span<const Rational> x)
{
    if (x.size() != a.cols())
        throw std::invalid_argument("multiply: dimension mismatch");
    std::vector<Rational> out(a.rows());
    for (std::size_t r = 0; r < a.rows(); ++r)
        for (std::size_t c = 0; c < a.cols(); ++c)
            if (sgn(a(r, c)) != 0)
                out[r] += a(r, c) * x[c];
    return out;
}

std::variant<LinearSolution, Inconsistent> solve_linear(const RationalMatrix& a, std::span<const Rational> b)
{
    const std::size_t m = a.rows();
    const std::size_t n = a.cols();
    if (b.size() != m)
        throw std::invalid_argument("solve_linear: right-hand side has the wrong length");

    // Augmented [A | b | I]; the identity block records row combinations so
    // that an inconsistent row comes with its witness.
    const std::size_t width = n + 1 + m;
    RationalMatrix aug(m, width);
    for (std::size_t r = 0; r < m; ++r) {
        for (std::size_t c = 0; c < n; ++c)
            aug(r, c) = a(r, c);
        aug(r, n) = b[r];
        aug(r, n + 1 + r) = 1;
    }

    std::vector<std::size_t> pivot_cols;
    std::size_t row = 0;
    for (std::size_t col = 0; col < n && row < m; ++col) {
        std::size_t p = row;
        while (p < m && sgn(aug(p, col)) == 0)
            ++p;
        if (p == m)
            continue;
        if (p != row)
            for (std::size_t c = 0; c < width; ++c)
                std::swap(aug(p, c), aug(row, c));
        const Rational inv = 1 / aug(row, col);
        for (std::size_t c = 0; c < width; ++c)
            aug(row, c) *= inv;
        for (std::size_t r = 0; r < m; ++r) {
            if (r == row || sgn(aug(r, col)) == 0)
                continue;
            const Rational f = aug(r, col);
            for (std::size_t c = 0; c < width; ++c)
                if (sgn(aug(row, c)) != 0)
                    aug(r, c) -= f * aug(row, c);
        }
        pivot_cols.push_back(col);
        ++row;
    }

    for (std::size_t r = row; r < m; ++r) {
        if (sgn(aug(r, n)) != 0) {
            Inconsistent w;
            w.row_combination.resize(m);
            for (std::size_t i = 0; i < m; ++i)
                w.row_combination[i] = aug(r, n + 1 + i) / aug(r, n);
            return w;
        }
    }

    LinearSolution sol;
    sol.x.assign(n, Rational(0));
    for (std::size_t i = 0; i < pivot_cols.size(); ++i)
        sol.x[pivot_cols[i]] = aug(i, n);
    sol.rank = pivot_cols.size();
    sol.unique = sol.rank == n;
    return sol;
}

namespace {

// Dense phase-1 tableau. Columns 0..n-1 are the structural variables,
// n..n+m-1 the artificials, and the last column the right-hand side.
class Phase1Tableau {
public:
    Phase1Tableau(const RationalMatrix& mat, std::span<const Rational> b)
        : m_(mat.rows()), n_(mat.cols()), width_(n_ + m_ + 1), t_(m_ + 1, width_), basis_(m_), flipped_(m_, false)
    {
        for (std::size_t r = 0; r < m_; ++r) {
            flipped_[r] = sgn(b[r]) < 0;
            for (std::size_t c = 0; c < n_; ++c)
                t_(r, c) = flipped_[r] ? -mat(r, c) : mat(r, c);
            t_(r, n_ + r) = 1;
            t_(r, width_ - 1) = flipped_[r] ? -b[r] : b[r];
            basis_[r] = n_ + r;
        }
        // Objective row holds reduced costs of min sum(artificials); its rhs
        // entry is minus the current objective value.
        for (std::size_t c = 0; c < width_; ++c) {
            if (c >= n_ && c < n_ + m_)
                continue;
            Rational s = 0;
            for (std::size_t r = 0; r < m_; ++r)
                s += t_(r, c);
            t_(m_, c) = -s;
        }
    }

    void run()
    {
        while (true) {
            // Bland: lowest-index improving column, lowest basic index on ties.
            std::size_t enter = width_;
            for (std::size_t c = 0; c + 1 < width_; ++c)
                if (sgn(t_(m_, c)) < 0) {
                    enter = c;
                    break;
                }
            if (enter == width_)
                return;
            std::size_t leave = m_;
            Rational best;
            for (std::size_t r = 0; r < m_; ++r) {
                if (sgn(t_(r, enter)) <= 0)
                    continue;
                Rational ratio = t_(r, width_ - 1) / t_(r, enter);
                if (leave == m_ || ratio < best || (ratio == best && basis_[r] < basis_[leave])) {
                    leave = r;
                    best = ratio;
                }
            }
            if (leave == m_)
                throw std::logic_error("phase-1 simplex is unbounded, which cannot happen");
            pivot(leave, enter);
        }
    }

    bool feasible() const { return sgn(t_(m_, width_ - 1)) == 0; }

    std::vector<Rational> solution() const
    {
        std::vector<Rational> x(n_);
        for (std::size_t r = 0; r < m_; ++r)
            if (basis_[r] < n_)
                x[basis_[r]] = t_(r, width_ - 1);
        return x;
    }

    // Dual multipliers pi_i = 1 - (reduced cost of artificial i); the Farkas
    // witness is -pi, mapped back through any row flips.
    std::vector<Rational> farkas() const
    {
        std::vector<Rational> w(m_);
        for (std::size_t r = 0; r < m_; ++r) {
            Rational pi = 1 - t_(m_, n_ + r);
            w[r] = flipped_[r] ? pi : -pi;
        }
        return w;
    }

private:
    void pivot(std::size_t row, std::size_t col)
    {
        const Rational inv = 1 / t_(row, col);
        for (std::size_t c = 0; c < width_; ++c)
            if (sgn(t_(row, c)) != 0)
                t_(row, c) *= inv;
        std::vector<std::size_t> nz;
        for (std::size_t c = 0; c < width_; ++c)
            if (sgn(t_(row, c)) != 0)
                nz.push_back(c);
        for (std::size_t r = 0; r <= m_; ++r) {
            if (r == row || sgn(t_(r, col)) == 0)
                continue;
            const Rational f = t_(r, col);
            for (std::size_t c : nz)
                t_(r, c) -= f * t_(row, c);
        }
        basis_[row] = col;
    }

    std::size_t m_;
    std::size_t n_;
    std::size_t width_;
    RationalMatrix t_;
    std::vector<std::size_t> basis_;
    std::vector<bool> flipped_;
};

}  // namespace

std::variant<std::vector<Rational>, Infeasible> find_nonnegative_solution(const RationalMatrix& m,
                                                                          std::span<const Rational> b)
{
    if (b.size() != m.rows())
        throw std::invalid_argument("find_nonnegative_solution: right-hand side has the wrong length");
    Phase1Tableau tableau(m, b);
    tableau.run();
    if (tableau.feasible()) {
        auto x = tableau.solution();
        const auto mx = multiply(m, x);
        for (std::size_t r = 0; r < m.rows(); ++r)
            if (mx[r] != b[r])
                throw std::logic_error("phase-1 solution fails M x = b");
        for (const auto& xi : x)
            if (sgn(xi) < 0)
                throw std::logic_error("phase-1 solution has a negative entry");
        return x;
    }
    Infeasible w{tableau.farkas()};
    Rational wb = 0;
    for (std::size_t r = 0; r < m.rows(); ++r)
        wb += w.farkas[r] * b[r];
    if (sgn(wb) >= 0)
        throw std::logic_error("Farkas witness fails w^T b < 0");
    for (std::size_t c = 0; c < m.cols(); ++c) {
        Rational s = 0;
        for (std::size_t r = 0; r < m.rows(); ++r)
            s += w.farkas[r] * m(r, c);
        if (sgn(s) < 0)
            throw std::logic_error("Farkas witness fails w^T M >= 0");
    }
    return w;
}

KernelAlternative nonneg_kernel_or_certificate(std::size_t row_count, std::span<const SparseColumn> columns)
{
    if (columns.empty())
        return PositiveCertificate{std::vector<Rational>(row_count)};

    // [A; 1^T] v = (0, ..., 0, 1), v >= 0
    RationalMatrix m(row_count + 1, columns.size());
    for (std::size_t c = 0; c < columns.size(); ++c) {
        if (columns[c].empty())
            throw std::invalid_argument("nonneg_kernel_or_certificate: zero column");
        for (const auto& [r, value] : columns[c])
            m(r, c) = value;
        m(row_count, c) = 1;
    }
    std::vector<Rational> b(row_count + 1);
    b[row_count] = 1;

    auto result = find_nonnegative_solution(m, b);
    if (auto* v = std::get_if<std::vector<Rational>>(&result)) {
        NonNegKernelVector kernel{std::move(*v)};
        if (!verify_kernel(row_count, columns, kernel))
            throw std::logic_error("kernel vector failed exact verification");
        return kernel;
    }
    // w_A^T A_j + w_last >= 0 with w_last < 0, so y = w_A / (-w_last) has y^T A_j >= 1.
    const auto& w = std::get<Infeasible>(result).farkas;
    const Rational scale = -w[row_count];
    PositiveCertificate cert{std::vector<Rational>(w.begin(), w.begin() + static_cast<std::ptrdiff_t>(row_count))};
    for (auto& y : cert.y)
        y /= scale;
    if (!verify_certificate(columns, cert))
        throw std::logic_error("positive certificate failed exact verification");
    return cert;
}

bool verify_kernel(std::size_t row_count, std::span<const SparseColumn> columns, const NonNegKernelVector& v)
{
    if (v.weights.size() != columns.size())
        return false;
    std::vector<Rational> sum(row_count);
    Rational total = 0;
    for (std::size_t c = 0; c < columns.size(); ++c) {
        if (sgn(v.weights[c]) < 0)
            return false;
        total += v.weights[c];
        if (sgn(v.weights[c]) == 0)
            continue;
        for (const auto& [r, value] : columns[c]) {
            if (r >= row_count)
                return false;
            sum[r] += v.weights[c] * value;
        }
    }
    if (total != 1)
        return false;
    for (const auto& s : sum)
        if (sgn(s) != 0)
            return false;
    return true;
}

bool verify_certificate(std::span<const SparseColumn> columns, const PositiveCertificate& c)
{
    for (const auto& col : columns) {
        Rational s = 0;
        for (const auto& [r, value] : col) {
            if (r >= c.y.size())
                return false;
            s += c.y[r] * value;
        }
        if (s < 1)
            return false;
    }
    return true;
}

}  // namespace dtour
