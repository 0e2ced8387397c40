#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "xlbp/linsolve.hpp"
#include "xlbp/poly.hpp"
#include "xlbp/rational.hpp"

#include <random>

using namespace xlbp;

namespace {

Rational rand_q(std::mt19937& g) {
    std::uniform_int_distribution<long> num(-20, 20), den(1, 9);
    return Rational(num(g), den(g));
}

Poly rand_poly(std::mt19937& g, int deg) {
    std::vector<Rational> c;
    for (int i = 0; i <= deg; ++i) c.push_back(rand_q(g));
    if (c.back().is_zero()) c.back() = 1;
    return Poly(c);
}

}  // namespace

TEST_CASE("rational parse and print") {
    CHECK(Rational::parse("3/6").str() == "1/2");
    CHECK(Rational::parse("-4").str() == "-4");
    CHECK(Rational::parse("−7/3") == Rational(-7, 3));
    CHECK(Rational::parse("0/5").is_zero());
    CHECK_THROWS_AS(Rational::parse("1/0"), std::invalid_argument);
    CHECK_THROWS_AS(Rational::parse("x"), std::invalid_argument);
    CHECK_THROWS_AS(checked_div(1, 0, "alpha+1"), ParamPole);
    try {
        (void)checked_div(1, 0, "alpha+1");
    } catch (const ParamPole& e) {
        CHECK(std::string(e.what()).find("alpha+1") != std::string::npos);
    }
}

TEST_CASE("poly arithmetic examples") {
    Poly a{0, 3, 1};
    CHECK(a.derivative() == Poly{3, 2});
    CHECK(Poly{-1, 1} * Poly{1, 1} == Poly{-1, 0, 1});
    CHECK(Poly{-1, 0, 1}.eval(Rational(2, 3)) == Rational(-5, 9));
    CHECK(Poly{}.degree() == Poly::kZeroDegree);
    CHECK((a - a).is_zero());
    CHECK(Poly{1, 2, 3}.reversed(2) == Poly{3, 2, 1});
    CHECK(Poly{1, 2}.antiderivative() == Poly{0, 1, 1});
}

TEST_CASE("exact division examples") {
    auto d = divmod(Poly{-1, 0, 1}, Poly{-1, 1});
    CHECK(d.divisible());
    CHECK(d.quotient == Poly{1, 1});

    auto nd = divmod(Poly{1, 0, 1}, Poly{-1, 1});
    CHECK_FALSE(nd.divisible());
    CHECK(nd.remainder == Poly{2});

    LaurentPoly p(-1, {1, 0, -1});  // z^-1 - z
    LaurentPoly q(-1, {1, -1});     // z^-1 (1 - z)
    auto l = exact_div(p, q);
    CHECK(l.divisible());
    CHECK(l.quotient == LaurentPoly(Poly{1, 1}));
    CHECK_THROWS_AS(exact_div(p, LaurentPoly{}), std::domain_error);
}

TEST_CASE("random products divide back exactly") {
    std::mt19937 g(7);
    for (int t = 0; t < 40; ++t) {
        Poly a = rand_poly(g, 1 + t % 5), b = rand_poly(g, t % 4);
        int s = static_cast<int>(t % 3) - 1;
        LaurentPoly pa = LaurentPoly(a).shifted(s), pb = LaurentPoly(b).shifted(-s);
        auto r = exact_div(pa * pb, pb);
        REQUIRE(r.divisible());
        CHECK(r.quotient == pa);
    }
}

TEST_CASE("laurent inversion is an involution") {
    std::mt19937 g(11);
    for (int t = 0; t < 20; ++t) {
        LaurentPoly p = LaurentPoly(rand_poly(g, t % 6)).shifted(t % 5 - 2);
        CHECK(p.inverted().inverted() == p);
        CHECK(p.inverted().eval(Rational(2)) == p.eval(Rational(1, 2)));
    }
}

TEST_CASE("solve_exact examples") {
    LinearSystem id{{{1, 0}, {0, 1}}, {1, 2}};
    auto u = solve_exact(id);
    CHECK(u.kind == SolveKind::unique);
    CHECK(u.solution == std::vector<Rational>{1, 2});

    LinearSystem fam{{{1, 1}}, {0}};
    auto f = solve_exact(fam);
    CHECK(f.kind == SolveKind::family);
    REQUIRE(f.nullspace.size() == 1);
    CHECK(f.nullspace[0] == std::vector<Rational>{1, -1});

    LinearSystem bad{{{1, 1}, {1, 1}}, {1, 2}};
    CHECK(solve_exact(bad).kind == SolveKind::inconsistent);
}

TEST_CASE("random systems reproduce their right-hand side") {
    std::mt19937 g(3);
    for (int t = 0; t < 25; ++t) {
        std::size_t r = 2 + t % 4, c = 2 + (t / 2) % 4;
        LinearSystem s = LinearSystem::zeros(r, c);
        std::vector<Rational> x(c);
        for (auto& v : x) v = rand_q(g);
        for (auto& row : s.matrix)
            for (auto& v : row) v = rand_q(g);
        s.rhs = mat_vec(s.matrix, x);
        auto sol = solve_exact(s);
        REQUIRE(sol.kind != SolveKind::inconsistent);
        CHECK(mat_vec(s.matrix, sol.solution) == s.rhs);
        for (const auto& v : sol.nullspace) {
            auto z = mat_vec(s.matrix, v);
            for (const auto& e : z) CHECK(e.is_zero());
        }
    }
}
