#include <doctest.h>

#include <random>

#include "johnson/combinatorics.hpp"
#include "johnson/eigenfunctions.hpp"
#include "johnson/linalg.hpp"

using namespace johnson;

namespace {

RationalMatrix from_rows(const std::vector<std::vector<long>>& rows) {
    RationalMatrix m(rows.size(), rows.empty() ? 0 : rows[0].size());
    for (std::size_t i = 0; i < rows.size(); ++i)
        for (std::size_t j = 0; j < rows[i].size(); ++j) m(i, j) = Rat(rows[i][j]);
    return m;
}

}  // namespace

TEST_CASE("rref fixed points and rank") {
    auto id = RationalMatrix::identity(3);
    auto rr = rref(id);
    CHECK(rr.matrix == id);
    CHECK(rr.pivots == std::vector<std::size_t>{0, 1, 2});

    RationalMatrix zero(2, 3);
    auto rz = rref(zero);
    CHECK(rz.matrix == zero);
    CHECK(rz.pivots.empty());

    CHECK(rank(from_rows({{1, 2}, {2, 4}})) == 1);
}

TEST_CASE("rref normalizes rows exactly") {
    auto m = from_rows({{2, 4, 6}, {1, 2, 4}});
    auto rr = rref(m);
    CHECK(rr.pivots == std::vector<std::size_t>{0, 2});
    CHECK(rr.matrix(0, 0) == 1);
    CHECK(rr.matrix(0, 1) == 2);
    CHECK(rr.matrix(0, 2) == 0);
    CHECK(rr.matrix(1, 2) == 1);
}

TEST_CASE("nullspace basics") {
    CHECK(nullspace(RationalMatrix::identity(4)).empty());

    auto m = from_rows({{1, -1}});
    auto ns = nullspace(m);
    REQUIRE(ns.size() == 1);
    CHECK(ns[0][0] == 1);
    CHECK(ns[0][1] == 1);
}

TEST_CASE("nullspace vectors are exact kernel members and count to cols - rank") {
    std::mt19937 rng(1234);
    std::uniform_int_distribution<long> entry(-4, 4);
    for (int trial = 0; trial < 40; ++trial) {
        const std::size_t rows = 1 + rng() % 6, cols = 1 + rng() % 6;
        RationalMatrix m(rows, cols);
        for (std::size_t i = 0; i < rows; ++i)
            for (std::size_t j = 0; j < cols; ++j) m(i, j) = Rat(entry(rng));
        const auto ns = nullspace(m);
        CHECK(rank(m) + ns.size() == cols);
        for (const auto& v : ns)
            for (const Rat& x : matvec(m, v)) CHECK(x == 0);
    }
}

TEST_CASE("eigenspace nullity example: A - lambda_1 I on J(6,3)") {
    const auto m = adjacency_minus_lambda(JohnsonParams(6, 3), 1);
    CHECK(nullspace(m).size() == 5);  // multiplicity(1, 6)
}

TEST_CASE("solve classification") {
    auto id = RationalMatrix::identity(2);
    std::vector<Rat> b{Rat(3), Rat(-7)};
    auto res = solve(id, b);
    auto* u = std::get_if<SolveUnique>(&res);
    REQUIRE(u != nullptr);
    CHECK(u->x == b);

    auto m1 = from_rows({{1, -1}});
    auto res2 = solve(m1, {Rat(0)});
    CHECK(std::holds_alternative<SolveUnderdetermined>(res2));

    auto m2 = from_rows({{1}, {1}});
    auto res3 = solve(m2, {Rat(0), Rat(1)});
    CHECK(std::holds_alternative<SolveInconsistent>(res3));

    CHECK_THROWS_AS(solve(m2, {Rat(0)}), std::invalid_argument);
}

TEST_CASE("solve residuals are exactly zero") {
    std::mt19937 rng(99);
    std::uniform_int_distribution<long> entry(-5, 5);
    for (int trial = 0; trial < 40; ++trial) {
        const std::size_t rows = 1 + rng() % 5, cols = 1 + rng() % 5;
        RationalMatrix m(rows, cols);
        for (std::size_t i = 0; i < rows; ++i)
            for (std::size_t j = 0; j < cols; ++j) m(i, j) = Rat(entry(rng));
        std::vector<Rat> x0(cols);
        for (Rat& v : x0) v = make_rat(entry(rng), 1 + (rng() % 3));
        const std::vector<Rat> b = matvec(m, x0);  // consistent by construction
        auto res = solve(m, b);
        if (auto* u = std::get_if<SolveUnique>(&res)) {
            CHECK(matvec(m, u->x) == b);
            CHECK(u->x == x0);
        } else if (auto* und = std::get_if<SolveUnderdetermined>(&res)) {
            CHECK(matvec(m, und->particular) == b);
            for (const auto& k : und->kernel)
                for (const Rat& v : matvec(m, k)) CHECK(v == 0);
        } else {
            FAIL("consistent system classified inconsistent");
        }
    }
}
