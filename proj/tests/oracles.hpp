#pragma once

// Brute-force reference implementations used to cross-check the library on
// small instances. They rebuild everything from the definitions and share
// no code with the algorithms they check beyond Face and Tournament storage.

#include <algorithm>
#include <cstdint>
#include <functional>
#include <map>
#include <numeric>
#include <random>
#include <vector>

#include "dtour/rational.hpp"
#include "dtour/tournament.hpp"

namespace oracle {

using dtour::Face;
using dtour::Rational;
using dtour::Tournament;

inline std::vector<std::vector<int>> subsets(int n, int k)
{
    std::vector<std::vector<int>> out;
    std::vector<int> cur;
    std::function<void(int)> rec = [&](int next) {
        if (static_cast<int>(cur.size()) == k) {
            out.push_back(cur);
            return;
        }
        for (int v = next; v <= n; ++v) {
            cur.push_back(v);
            rec(v + 1);
            cur.pop_back();
        }
    };
    rec(1);
    return out;
}

// Dense incidence matrix straight from the definition.
inline std::vector<std::vector<int>> incidence(const Tournament& t)
{
    const int n = t.n();
    const int d = t.d();
    const auto rows = subsets(n, d);
    const auto cols = subsets(n, d + 1);
    std::map<std::vector<int>, std::size_t> row_index;
    for (std::size_t r = 0; r < rows.size(); ++r)
        row_index[rows[r]] = r;
    std::vector<std::vector<int>> m(rows.size(), std::vector<int>(cols.size(), 0));
    for (std::size_t c = 0; c < cols.size(); ++c) {
        for (int j = 0; j <= d; ++j) {
            auto tau = cols[c];
            tau.erase(tau.begin() + j);
            const int coefficient = (d - j) % 2 == 0 ? 1 : -1;
            m[row_index[tau]][c] = t.sign(c) * coefficient;
        }
    }
    return m;
}

inline std::vector<std::size_t> oriented(const Tournament& t)
{
    std::vector<std::size_t> out;
    for (std::size_t c = 0; c < t.face_count(); ++c)
        if (t.sign(c) != 0)
            out.push_back(c);
    return out;
}

// Kernel of the rows x |cols| submatrix, as a basis of rational vectors.
inline std::vector<std::vector<Rational>> kernel(const std::vector<std::vector<int>>& m,
                                                 const std::vector<std::size_t>& cols)
{
    const std::size_t rows = m.size();
    const std::size_t k = cols.size();
    std::vector<std::vector<Rational>> a(rows, std::vector<Rational>(k));
    for (std::size_t r = 0; r < rows; ++r)
        for (std::size_t j = 0; j < k; ++j)
            a[r][j] = m[r][cols[j]];
    std::vector<int> pivot_col;
    std::size_t row = 0;
    for (std::size_t col = 0; col < k && row < rows; ++col) {
        std::size_t p = row;
        while (p < rows && a[p][col] == 0)
            ++p;
        if (p == rows)
            continue;
        std::swap(a[p], a[row]);
        const Rational inv = 1 / a[row][col];
        for (auto& v : a[row])
            v *= inv;
        for (std::size_t r = 0; r < rows; ++r) {
            if (r == row || a[r][col] == 0)
                continue;
            const Rational f = a[r][col];
            for (std::size_t j = 0; j < k; ++j)
                a[r][j] -= f * a[row][j];
        }
        pivot_col.push_back(static_cast<int>(col));
        ++row;
    }
    std::vector<std::vector<Rational>> basis;
    for (std::size_t free = 0; free < k; ++free) {
        if (std::find(pivot_col.begin(), pivot_col.end(), static_cast<int>(free)) != pivot_col.end())
            continue;
        std::vector<Rational> v(k);
        v[free] = 1;
        for (std::size_t i = 0; i < pivot_col.size(); ++i)
            v[static_cast<std::size_t>(pivot_col[i])] = -a[i][free];
        basis.push_back(v);
    }
    return basis;
}

// Cyclic iff some circuit (a column set with a one-dimensional kernel and
// full support) has a one-signed kernel vector.
inline bool cyclic_by_circuits(const Tournament& t)
{
    const auto m = incidence(t);
    const auto cols = oriented(t);
    const std::size_t k = cols.size();
    for (std::uint64_t mask = 1; mask < (std::uint64_t{1} << k); ++mask) {
        std::vector<std::size_t> chosen;
        for (std::size_t i = 0; i < k; ++i)
            if (mask >> i & 1)
                chosen.push_back(cols[i]);
        const auto basis = kernel(m, chosen);
        if (basis.size() != 1)
            continue;
        const auto& v = basis[0];
        bool all_pos = true;
        bool all_neg = true;
        for (const auto& x : v) {
            all_pos = all_pos && x > 0;
            all_neg = all_neg && x < 0;
        }
        if (all_pos || all_neg)
            return true;
    }
    return false;
}

inline bool has_zero_one_cycle(const Tournament& t)
{
    const auto m = incidence(t);
    const auto cols = oriented(t);
    const std::size_t k = cols.size();
    for (std::uint64_t mask = 1; mask < (std::uint64_t{1} << k); ++mask) {
        bool zero = true;
        for (std::size_t r = 0; r < m.size() && zero; ++r) {
            int s = 0;
            for (std::size_t i = 0; i < k; ++i)
                if (mask >> i & 1)
                    s += m[r][cols[i]];
            zero = s == 0;
        }
        if (zero)
            return true;
    }
    return false;
}

inline std::vector<std::size_t> free_rows(const std::vector<std::vector<int>>& m, const std::vector<bool>& alive)
{
    std::vector<std::size_t> out;
    for (std::size_t r = 0; r < m.size(); ++r) {
        bool pos = false;
        bool neg = false;
        for (std::size_t c = 0; c < alive.size(); ++c) {
            if (!alive[c])
                continue;
            pos = pos || m[r][c] > 0;
            neg = neg || m[r][c] < 0;
        }
        if (pos != neg)
            out.push_back(r);
    }
    return out;
}

// Tries every collapse sequence, no memoization.
inline bool collapsible(const Tournament& t)
{
    const auto m = incidence(t);
    std::vector<bool> alive(t.face_count());
    for (std::size_t c = 0; c < alive.size(); ++c)
        alive[c] = t.sign(c) != 0;
    std::function<bool(std::vector<bool>&)> rec = [&](std::vector<bool>& state) {
        if (std::none_of(state.begin(), state.end(), [](bool b) { return b; }))
            return true;
        for (std::size_t r : free_rows(m, state)) {
            std::vector<bool> next = state;
            for (std::size_t c = 0; c < next.size(); ++c)
                if (m[r][c] != 0)
                    next[c] = false;
            if (rec(next))
                return true;
        }
        return false;
    };
    return rec(alive);
}

// (d+2)-cycle via the alternating-sign pattern on the faces of U.
inline bool alternating_pattern(const Tournament& t, const std::vector<int>& u)
{
    const int d = t.d();
    int c = 0;
    for (int k = 0; k < d + 2; ++k) {
        std::vector<int> face = u;
        face.erase(face.begin() + k);
        const int expected_sign = (d + 1 - k) % 2 == 0 ? 1 : -1;
        const int value = t.sign(Face(face)) * expected_sign;
        if (k == 0)
            c = value;
        else if (value != c)
            return false;
    }
    return true;
}

inline std::vector<int> permutation_of(std::uint64_t seed, int n)
{
    std::vector<int> p(static_cast<std::size_t>(n));
    std::iota(p.begin(), p.end(), 1);
    std::mt19937_64 engine(seed);
    std::shuffle(p.begin(), p.end(), engine);
    return p;
}

}  // namespace oracle
