#include <doctest.h>

#include "johnson/combinatorics.hpp"
#include "johnson/eigenfunctions.hpp"

using namespace johnson;

namespace {

VertexFunction constant(const JohnsonParams& p, long value) {
    VertexFunction f(p);
    for (std::size_t a = 0; a < f.size(); ++a) f[a] = Rat(value);
    return f;
}

}  // namespace

TEST_CASE("is_eigenfunction basics") {
    const JohnsonParams p(6, 3);
    VertexFunction zero(p);
    for (int i = 0; i <= 3; ++i) CHECK(is_eigenfunction(zero, i));  // all-zero passes every index

    const VertexFunction one = constant(p, 1);
    CHECK(is_eigenfunction(one, 0));
    CHECK_FALSE(is_eigenfunction(one, 1));
}

TEST_CASE("eigenspace dimensions") {
    auto b0 = eigenspace_basis(JohnsonParams(6, 3), 0);
    REQUIRE(b0.basis.size() == 1);
    // the lambda_0 eigenspace of a connected regular graph is the constants
    const Rat& head = b0.basis[0][0];
    CHECK(head != 0);
    for (std::size_t a = 0; a < b0.basis[0].size(); ++a) CHECK(b0.basis[0][a] == head);

    CHECK(eigenspace_basis(JohnsonParams(6, 3), 1).basis.size() == 5);
    CHECK(eigenspace_basis(JohnsonParams(9, 3), 3).basis.size() == 48);
}

TEST_CASE("eigenspace basis elements satisfy the eigen-equation") {
    for (auto [n, w] : {std::pair{6, 3}, {7, 3}}) {
        const JohnsonParams p(n, w);
        for (int i = 0; i <= w; ++i) {
            const auto basis = eigenspace_basis(p, i);
            for (const VertexFunction& f : basis.basis) {
                CHECK_FALSE(f.is_zero());
                CHECK(is_eigenfunction(f, i));
            }
        }
    }
}

TEST_CASE("radial functions") {
    const JohnsonParams p63(6, 3);
    const Vertex c63 = canonical_center(p63);
    const VertexFunction r0 = radial(c63, 0);
    for (std::size_t a = 0; a < r0.size(); ++a) CHECK(r0[a] == 1);  // i = 0 is the constant 1

    // center value is 1 for every index
    for (int i = 0; i <= 3; ++i) CHECK(radial(c63, i).at(c63) == 1);

    // E_2(1,3,9) = 0 makes the radial function vanish on S_2
    const JohnsonParams p93(9, 3);
    const Vertex c93 = canonical_center(p93);
    const VertexFunction r1 = radial(c93, 1);
    for (const Vertex& y : sphere(SphereSpec{c93, 2})) CHECK(r1.at(y) == 0);
    CHECK_FALSE(r1.is_zero());

    // eigen-equation, all indices, two centers, J(8,3)
    const JohnsonParams p83(8, 3);
    for (const Vertex& c : {canonical_center(p83), unrank(p83, 41)})
        for (int i = 0; i <= 3; ++i) CHECK(is_eigenfunction(radial(c, i), i));

    CHECK_THROWS_AS(radial(c63, 4), std::domain_error);
}

TEST_CASE("f0 values on J(4,2)") {
    const JohnsonParams p(4, 2);
    const VertexFunction f = f0(2, p);
    CHECK(f.at(Vertex::parse("1100")) == 1);
    CHECK(f.at(Vertex::parse("0011")) == 1);
    CHECK(f.at(Vertex::parse("1001")) == -1);
    CHECK(f.at(Vertex::parse("0110")) == -1);
    CHECK(f.at(Vertex::parse("1010")) == 0);
    CHECK(f.at(Vertex::parse("0101")) == 0);
    CHECK(is_eigenfunction(f, 2));  // lambda_2(4,2) = -2
}

TEST_CASE("f0 eigen-equation and support size, J(8,3) and J(8,4)") {
    for (auto [n, w] : {std::pair{8, 3}, {8, 4}}) {
        const JohnsonParams p(n, w);
        for (int i = 0; i <= w; ++i) {
            const VertexFunction f = f0(i, p);
            CHECK(is_eigenfunction(f, i));
            std::size_t nonzero = 0;
            for (std::size_t a = 0; a < f.size(); ++a)
                if (f[a] != 0) ++nonzero;
            // one choice per pair, remainder anywhere outside the pair block
            const Int want = Int(1) << i;
            CHECK(Int(static_cast<unsigned long>(nonzero)) == want * binom(n - 2 * i, w - i));
        }
    }
    CHECK(f0(0, JohnsonParams(6, 3)) == constant(JohnsonParams(6, 3), 1));
}

TEST_CASE("difference operator") {
    const JohnsonParams p63(6, 3);
    // constants die
    CHECK(difference(constant(p63, 5), 1, 2).is_zero());
    // f0(1): the two fixed restrictions differ by -2 everywhere
    const VertexFunction d = difference(f0(1, p63), 1, 2);
    CHECK(d.params() == JohnsonParams(4, 2));
    for (std::size_t a = 0; a < d.size(); ++a) CHECK(d[a] == -2);

    CHECK_THROWS_AS(difference(constant(p63, 1), 2, 2), std::domain_error);
    CHECK_THROWS_AS(difference(constant(p63, 1), 0, 3), std::domain_error);
    CHECK_THROWS_AS(difference(constant(p63, 1), 1, 7), std::domain_error);
    CHECK_THROWS_AS(difference(constant(JohnsonParams(4, 0), 1), 1, 2), std::domain_error);
}

TEST_CASE("lift operator") {
    const JohnsonParams p42(4, 2);
    const VertexFunction g = lift(constant(p42, 1));
    CHECK(g.params() == JohnsonParams(6, 3));
    CHECK(is_eigenfunction(g, 1));  // lambda_1(6,3) = 3
    bool saw_plus = false, saw_minus = false, saw_zero = false;
    for (std::size_t a = 0; a < g.size(); ++a) {
        if (g[a] == 1) saw_plus = true;
        else if (g[a] == -1) saw_minus = true;
        else if (g[a] == 0) saw_zero = true;
        else FAIL("unexpected lift value");
    }
    CHECK(saw_plus);
    CHECK(saw_minus);
    CHECK(saw_zero);

    CHECK(lift(VertexFunction(p42)).is_zero());
}

TEST_CASE("difference of a lift recovers twice the function") {
    const JohnsonParams p(6, 3);
    for (int i = 0; i <= 3; ++i) {
        for (const VertexFunction& f : eigenspace_basis(p, i).basis) {
            const VertexFunction back = difference(lift(f), 7, 8);
            REQUIRE(back.params() == p);
            for (std::size_t a = 0; a < f.size(); ++a) CHECK(back[a] == Rat(2) * f[a]);
        }
    }
}

TEST_CASE("induce basics") {
    // every weight-3 word holds three singletons
    const VertexFunction ind = induce(constant(JohnsonParams(6, 1), 1), 3);
    for (std::size_t a = 0; a < ind.size(); ++a) CHECK(ind[a] == 3);

    // top-eigenspace function dies one step down
    CHECK(induce(f0(2, JohnsonParams(4, 2)), 1).is_zero());
}

TEST_CASE("proportionality scalar") {
    const JohnsonParams p(6, 3);
    const Vertex c = canonical_center(p);
    CHECK(proportionality_alpha(radial(c, 1), 1, 3) == 1);  // identity round trip
    CHECK(proportionality_alpha(f0(1, p), 1, 2) == 6);

    CHECK_THROWS_AS(proportionality_alpha(VertexFunction(p), 1, 2), ZeroInputError);
    CHECK_THROWS_AS(proportionality_alpha(radial(c, 2), 2, 1), std::domain_error);   // i > w'
    CHECK_THROWS_AS(proportionality_alpha(constant(p, 1), 1, 2), std::domain_error); // not an eigenfunction
}

TEST_CASE("sphere sums reproduce Eberlein multipliers") {
    const JohnsonParams p(7, 3);
    const Vertex c = canonical_center(p);
    for (int i = 0; i <= 3; ++i) {
        const VertexFunction f = radial(c, i);
        for (const Vertex& x : {c, unrank(p, 17)})
            for (int k = 0; k <= 3; ++k) CHECK(sphere_sum_check(f, i, x, k));
    }
    // k = 1 restates the eigen-equation: a non-eigenfunction fails somewhere
    const VertexFunction bad = constant(p, 1);
    bool all_k1 = true;
    for (const Vertex& x : all_vertices(p)) all_k1 = all_k1 && sphere_sum_check(bad, 1, x, 1);
    CHECK_FALSE(all_k1);
}

TEST_CASE("combine is the exact linear combination") {
    const auto basis = eigenspace_basis(JohnsonParams(6, 3), 1);
    std::vector<Rat> coeffs(basis.basis.size());
    coeffs[0] = make_rat(1, 2);
    coeffs[3] = Rat(-2);
    const VertexFunction f = combine(basis, coeffs);
    for (std::size_t a = 0; a < f.size(); ++a)
        CHECK(f[a] == make_rat(1, 2) * basis.basis[0][a] - Rat(2) * basis.basis[3][a]);
    CHECK(is_eigenfunction(f, 1));
    CHECK_THROWS_AS(combine(basis, std::vector<Rat>(2)), std::invalid_argument);
}
