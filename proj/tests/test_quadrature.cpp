#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "xlbp/quadrature.hpp"

#include <cmath>

using namespace xlbp;

namespace {
const Params kP{1, Rational(3, 2)};

double rel(const QuadValue& v, const Rational& exact) {
    double e = exact.to_double();
    return std::hypot(v.re - e, v.im) / std::abs(e);
}

void check_history(const QuadValue& v) {
    for (std::size_t i = 1; i < v.history.size(); ++i) CHECK(v.history[i] <= 4 * v.history[i - 1] + 1e-30);
}
}  // namespace

TEST_CASE("configuration") {
    QuadConfig c;
    CHECK_NOTHROW(c.validate());
    c.precision_bits = 64;
    CHECK_THROWS_AS(c.validate(), std::invalid_argument);
    CHECK_THROWS_AS(classical_quad(0, 0, Params{-2, 0}, QuadConfig{}), std::invalid_argument);
    CHECK(effective_exponent(0, kP) == Rational(5, 2));
    CHECK(effective_exponent(1, kP) == Rational(7, 2));
    CHECK(effective_exponent(4, kP) == Rational(3, 2));
}

TEST_CASE("classical values") {
    auto v00 = classical_quad(0, 0, kP, QuadConfig{});
    CHECK(std::abs(v00.re - 1) < 1e-12);
    CHECK(std::abs(v00.im) < 1e-12);
    auto v21 = classical_quad(2, 1, kP, QuadConfig{});
    CHECK(std::hypot(v21.re, v21.im) < 1e-8);
    auto v33 = classical_quad(3, 3, kP, QuadConfig{});
    CHECK(rel(v33, norm_ratio(3, kP)) < 1e-8);
    check_history(v33);
    CHECK_FALSE(v33.re_str.empty());
}

TEST_CASE("classical table matches the exact route") {
    auto t = classical_quad_table(5, kP, QuadConfig{});
    for (int n = 0; n <= 5; ++n)
        for (int m = 0; m <= 5; ++m) {
            const auto& v = t[static_cast<std::size_t>(n)][static_cast<std::size_t>(m)];
            if (n == m)
                CHECK(rel(v, norm_ratio(n, kP)) < 1e-8);
            else
                CHECK(std::hypot(v.re, v.im) < 1e-8);
            check_history(v);
        }
}

TEST_CASE("double precision path") {
    QuadConfig c;
    c.precision_bits = 53;
    c.tolerance = 1e-10;
    auto v = classical_quad(2, 2, kP, c);
    CHECK(rel(v, norm_ratio(2, kP)) < 1e-8);
    auto g = classical_quad(2, 2, Params{Rational(3, 5), Rational(1, 2)}, c);
    CHECK(rel(g, norm_ratio(2, Params{Rational(3, 5), Rational(1, 2)})) < 1e-8);
}

TEST_CASE("exceptional values") {
    QuadConfig c;
    c.tolerance = 1e-9;
    for (int n = 0; n <= 3; ++n)
        for (int m = 0; m <= 3; ++m) {
            auto v = exceptional_quad(XIndex{2, 1, n}, XIndex{2, 1, m}, kP, c);
            if (n == m)
                CHECK(rel(v, x_norm_ratio(XIndex{2, 1, n}, kP)) < 1e-6);
            else
                CHECK(std::hypot(v.re, v.im) < 1e-6);
        }
    auto v3 = exceptional_quad(XIndex{3, 1, 0}, XIndex{3, 1, 0}, kP, c);
    CHECK(rel(v3, x_norm_ratio(XIndex{3, 1, 0}, kP)) < 1e-6);
    check_history(v3);
    CHECK_THROWS_AS(exceptional_quad(XIndex{1, 1, 1}, XIndex{1, 1, 0}, kP, c), InadmissibleIndex);
}

TEST_CASE("denominator guard") {
    // P_1(z; 1/2, 3/2) = z + 1 vanishes at z = -1.
    Params p{Rational(1, 2), Rational(3, 2)};
    CHECK(min_modulus_ratio(Poly{1, 1}) < 1e-3);
    CHECK_THROWS_AS(exceptional_quad(XIndex{1, 1, 0}, XIndex{1, 1, 0}, p, QuadConfig{}), DenominatorNearContour);
}

TEST_CASE("nonconvergence is reported") {
    QuadConfig c;
    c.num_points = 16;
    c.refinement_levels = 1;
    c.tolerance = 1e-30;
    CHECK_THROWS_AS(classical_quad(3, 3, Params{Rational(3, 5), Rational(1, 2)}, c), NonConvergence);
}
