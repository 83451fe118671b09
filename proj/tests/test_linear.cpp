#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "dtour/cycles.hpp"
#include "dtour/error.hpp"
#include "dtour/fixtures.hpp"
#include "dtour/linear.hpp"
#include "dtour/rational.hpp"

using namespace dtour;

namespace {

std::vector<SparseColumn> columns_of(const Tournament& t)
{
    std::vector<std::size_t> ranks;
    return oriented_columns(t, ranks);
}

// The kernel side, asked directly: {A v = 0, 1^T v = 1, v >= 0}.
bool kernel_side_feasible(std::size_t rows, const std::vector<SparseColumn>& cols)
{
    RationalMatrix m(rows + 1, cols.size());
    for (std::size_t c = 0; c < cols.size(); ++c) {
        for (auto [r, v] : cols[c])
            m(r, c) = v;
        m(rows, c) = 1;
    }
    std::vector<Rational> b(rows + 1);
    b[rows] = 1;
    return std::holds_alternative<std::vector<Rational>>(find_nonnegative_solution(m, b));
}

// The certificate side, asked directly: y = p - q, s >= 0,
// (p - q)^T col - s = 1 for every column.
bool certificate_side_feasible(std::size_t rows, const std::vector<SparseColumn>& cols)
{
    const std::size_t k = cols.size();
    RationalMatrix m(k, 2 * rows + k);
    for (std::size_t c = 0; c < k; ++c) {
        for (auto [r, v] : cols[c]) {
            m(c, r) = v;
            m(c, rows + r) = -v;
        }
        m(c, 2 * rows + c) = -1;
    }
    std::vector<Rational> b(k, Rational(1));
    return std::holds_alternative<std::vector<Rational>>(find_nonnegative_solution(m, b));
}

}  // namespace

TEST_CASE("rationals")
{
    CHECK(to_string(Rational(3) / 6) == "1/2");
    CHECK(to_string(Rational(-4) / 2) == "-2");
    CHECK(parse_rational("6/4") == Rational(3, 2));
    CHECK(parse_rational("-7") == Rational(-7));
    CHECK(parse_rational("+7/1") == Rational(7));
    CHECK_THROWS_AS(parse_rational("1/0"), ParseError);
    CHECK_THROWS_AS(parse_rational("x"), ParseError);
    CHECK_THROWS_AS(parse_rational(""), ParseError);
    CHECK_THROWS_AS(parse_rational("1.5"), ParseError);
    CHECK(sign(Rational(-1, 3)) == -1);
}

TEST_CASE("solve_linear basics")
{
    RationalMatrix id(3, 3);
    for (std::size_t i = 0; i < 3; ++i)
        id(i, i) = 1;
    const std::vector<Rational> b{1, Rational(2, 3), -5};
    auto r = solve_linear(id, b);
    REQUIRE(std::holds_alternative<LinearSolution>(r));
    CHECK(std::get<LinearSolution>(r).x == b);
    CHECK(std::get<LinearSolution>(r).unique);

    RationalMatrix zero(1, 1);
    const std::vector<Rational> one{1};
    auto bad = solve_linear(zero, one);
    REQUIRE(std::holds_alternative<Inconsistent>(bad));
    const auto& y = std::get<Inconsistent>(bad).row_combination;
    CHECK(y[0] * one[0] == 1);

    RationalMatrix under(1, 2);
    under(0, 0) = 1;
    under(0, 1) = 1;
    auto u = solve_linear(under, one);
    REQUIRE(std::holds_alternative<LinearSolution>(u));
    CHECK(!std::get<LinearSolution>(u).unique);
    CHECK(std::get<LinearSolution>(u).rank == 1);

    const std::vector<Rational> wrong{1, 2};
    CHECK_THROWS_AS(solve_linear(zero, wrong), std::invalid_argument);
}

TEST_CASE("inconsistency witnesses are exact")
{
    RationalMatrix a(3, 2);
    a(0, 0) = 1;
    a(1, 1) = 1;
    a(2, 0) = 1;
    a(2, 1) = 1;
    const std::vector<Rational> b{1, 1, 3};
    auto r = solve_linear(a, b);
    REQUIRE(std::holds_alternative<Inconsistent>(r));
    const auto& y = std::get<Inconsistent>(r).row_combination;
    for (std::size_t c = 0; c < 2; ++c) {
        Rational s = 0;
        for (std::size_t i = 0; i < 3; ++i)
            s += y[i] * a(i, c);
        CHECK(s == 0);
    }
    CHECK(y[0] * b[0] + y[1] * b[1] + y[2] * b[2] == 1);
}

TEST_CASE("projective plane cancellation system")
{
    const auto signs = fixtures::rp2_orientation();
    CHECK(signs.size() == 10);
    for (int s : signs)
        CHECK((s == 1 || s == -1));
}

TEST_CASE("Example 1 gives the uniform kernel vector")
{
    const auto t = fixtures::example_1();
    const auto cols = columns_of(t);
    const auto alt = nonneg_kernel_or_certificate(6, cols);
    REQUIRE(std::holds_alternative<NonNegKernelVector>(alt));
    const auto& v = std::get<NonNegKernelVector>(alt);
    CHECK(v.weights == std::vector<Rational>(4, Rational(1, 4)));
    CHECK(verify_kernel(6, cols, v));
}

TEST_CASE("Example 2 gives a positive certificate")
{
    const auto cols = columns_of(fixtures::example_2());
    const auto alt = nonneg_kernel_or_certificate(6, cols);
    REQUIRE(std::holds_alternative<PositiveCertificate>(alt));
    CHECK(verify_certificate(cols, std::get<PositiveCertificate>(alt)));
}

TEST_CASE("empty column set")
{
    const std::vector<SparseColumn> none;
    const auto alt = nonneg_kernel_or_certificate(3, none);
    REQUIRE(std::holds_alternative<PositiveCertificate>(alt));
    CHECK(std::get<PositiveCertificate>(alt).y == std::vector<Rational>(3, Rational(0)));
    const std::vector<SparseColumn> zero_col{SparseColumn{}};
    CHECK_THROWS(nonneg_kernel_or_certificate(3, zero_col));
}

TEST_CASE("verifiers reject wrong witnesses")
{
    const auto cols = columns_of(fixtures::example_1());
    CHECK(!verify_kernel(6, cols, NonNegKernelVector{{Rational(1, 2), Rational(1, 2), 0, 0}}));
    CHECK(!verify_kernel(6, cols, NonNegKernelVector{{Rational(1, 2), Rational(1, 2), Rational(1, 2), Rational(-1, 2)}}));
    CHECK(!verify_certificate(cols, PositiveCertificate{std::vector<Rational>(6)}));
}

TEST_CASE("Farkas exclusivity on 500 random tournaments")
{
    int cyclic = 0;
    for (std::uint64_t seed = 0; seed < 500; ++seed) {
        const int n = 4 + static_cast<int>(seed % 3);
        const int d = 1 + static_cast<int>(seed % 2);
        const auto t = random_tournament(n, d, seed);
        const auto cols = columns_of(t);
        const std::size_t rows = binomial(n, d);
        const auto alt = nonneg_kernel_or_certificate(rows, cols);
        const bool kernel = std::holds_alternative<NonNegKernelVector>(alt);
        if (kernel) {
            ++cyclic;
            CHECK(verify_kernel(rows, cols, std::get<NonNegKernelVector>(alt)));
        } else {
            CHECK(verify_certificate(cols, std::get<PositiveCertificate>(alt)));
        }
        CHECK(kernel_side_feasible(rows, cols) == kernel);
        CHECK(certificate_side_feasible(rows, cols) == !kernel);
    }
    CHECK(cyclic > 0);
    CHECK(cyclic < 500);
}

TEST_CASE("find_nonnegative_solution")
{
    RationalMatrix m(1, 2);
    m(0, 0) = 1;
    m(0, 1) = 1;
    const std::vector<Rational> neg{-1};
    auto r = find_nonnegative_solution(m, neg);
    REQUIRE(std::holds_alternative<Infeasible>(r));
    const auto& w = std::get<Infeasible>(r).farkas;
    CHECK(w[0] * m(0, 0) >= 0);
    CHECK(w[0] * neg[0] < 0);
    const std::vector<Rational> pos{Rational(3, 2)};
    auto s = find_nonnegative_solution(m, pos);
    REQUIRE(std::holds_alternative<std::vector<Rational>>(s));
    const auto& x = std::get<std::vector<Rational>>(s);
    CHECK(x[0] + x[1] == Rational(3, 2));
    CHECK(x[0] >= 0);
    CHECK(x[1] >= 0);
}
