#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "xlbp/darboux.hpp"
#include "xlbp/param_sets.hpp"
#include "xlbp/recurrence.hpp"

using namespace xlbp;

namespace {
const Params kA{Rational(3, 5), Rational(1, 2)};
const Params kB{1, 1};

std::vector<Params> sets_for(int j0, int l0, int max_n) {
    return generic_params([&](const Params& p) {
        if (!regular_moments(p, 2 * max_n + 4)) throw ParamPole("degenerate moments at " + p.str());
        (void)q_poly(j0, l0, p);
        for (int n = 0; n <= max_n; ++n)
            if (XIndex{j0, l0, n}.admissible()) (void)c_expansion(XIndex{j0, l0, n}, p);
    });
}

// Coordinates of f in the basis P_j(z; alpha+1, beta-1), re-multiplied.
Poly rebuild(const std::vector<Rational>& c, const Params& p) {
    Poly r;
    for (std::size_t j = 0; j < c.size(); ++j) r = r + hr_poly(static_cast<int>(j), p.shifted(1, -1)).scaled(c[j]);
    return r;
}
}  // namespace

TEST_CASE("q polynomials") {
    CHECK(q_poly(1, 1, kA) == Poly{0, kA.beta / (1 + kA.alpha), Rational(1, 2)});
    CHECK(q_poly(4, 1, kA) == Poly{0, 1, kA.alpha / (2 * (kA.beta - 1))});
    for (int j0 = 1; j0 <= 4; ++j0)
        for (int l0 = 1; l0 <= 3; ++l0) {
            Poly q = q_poly(j0, l0, kA);
            CHECK(q.coeff(0) == 0);
            CHECK(q.degree() == l0 + 1);
            CHECK(q.derivative() == make_seed(j0, l0, kA).p_poly);
            CHECK(q_poly_closed_form(j0, l0, kA) == q);
        }
    // The closed form needs a pole-free shifted constructor; the antiderivative does not.
    CHECK_NOTHROW(q_poly(3, 2, Params{kA.alpha, 1}));
}

TEST_CASE("pi factors") {
    CHECK(pi_factor(2) == Poly{0, 1});
    CHECK(pi_factor(4) == Poly{-1});
    CHECK(pi_factor(1) == Poly{0, 1, -1});
    for (int j0 = 1; j0 <= 4; ++j0) CHECK(pi_factor(j0) * make_seed(j0, 1, kA).Q_factor == pi_factor(1));
}

TEST_CASE("c expansion") {
    for (int j0 = 1; j0 <= 4; ++j0)
        for (int n = 0; n <= 6; ++n) {
            XIndex idx{j0, 1, n};
            if (!idx.admissible()) continue;
            auto c = c_expansion(idx, kA);
            REQUIRE(c.coefficients.size() == static_cast<std::size_t>(n + 3));
            CHECK_FALSE(c.coefficients.back().is_zero());
            CHECK(rebuild(c.coefficients, kA) == c.image);
        }
    auto c = c_expansion(XIndex{1, 1, 3}, kB);
    CHECK(rebuild(c.coefficients, kB) == c.image);
    Poly direct = q_poly(1, 1, kB) * hr_poly(3, kB.shifted(1, -1)).scaled(xi(1, 1, 3, kB)) +
                  pi_factor(1) * x_poly(XIndex{1, 1, 3}, kB).poly;
    CHECK(c.image == direct);
    CHECK_THROWS_AS(c_expansion(XIndex{1, 1, 1}, kA), InadmissibleIndex);
}

TEST_CASE("a coefficients by formula") {
    for (int n = 3; n <= 8; ++n) {
        Rational N(n);
        const Rational a = kA.alpha, b = kA.beta;
        auto f = a_coeffs_formula(XIndex{1, 1, n}, kA);
        REQUIRE(f.size() == 3);
        CHECK(f[0] == 1);
        CHECK(f[1] == -2 * N * (N + a + b) / ((N + a) * (N + 2 + a)));
        CHECK(f[2] == N * (N - 1) * (N - 1 + a + b) * (N + a + b) / ((N - 1 + a) * (N + a) * (N + 1 + a) * (N + 2 + a)));
    }
}

TEST_CASE("solver route agrees with the formula route") {
    auto s1 = a_coeffs_solver(XIndex{1, 1, 5}, kA);
    CHECK(s1.unique);
    CHECK(s1.a == a_coeffs_formula(XIndex{1, 1, 5}, kA));
    auto s2 = a_coeffs_solver(XIndex{2, 1, 5}, kA);
    CHECK(s2.a == a_coeffs_formula(XIndex{2, 1, 5}, kA));
    for (int j0 = 1; j0 <= 4; ++j0)
        for (int l0 = 1; l0 <= 2; ++l0)
            for (const auto& p : sets_for(j0, l0, 10))
                for (int n = 2 * l0 + 1; n <= 10; ++n) {
                    XIndex idx{j0, l0, n};
                    auto s = a_coeffs_solver(idx, p);
                    INFO(idx.str(), " ", p.str());
                    REQUIRE(s.found);
                    CHECK(s.unique);
                    CHECK(s.a == a_coeffs_formula(idx, p));
                    if (j0 >= 3) CHECK(s.a != a_coeffs_formula_short_xi(idx, p));
                }
}

TEST_CASE("degenerate moments at beta = 1") {
    CHECK_FALSE(regular_moments(kB, 4));
    CHECK(regular_moments(kA, 24));
    for (int j0 : {1, 3}) {
        XIndex idx{j0, 1, 5};
        auto s = a_coeffs_solver(idx, kB);
        CHECK(s.found);
        CHECK_FALSE(s.unique);
        auto c = certify(idx, kB);
        CHECK_FALSE(c.a_unique);
        CHECK(c.a == a_coeffs_formula(idx, kB));
        CHECK(c.ok());
        CHECK(c.residual_zero);
    }
}

TEST_CASE("excluded slot for j0=1 at n=2l0+1") {
    for (int l0 = 1; l0 <= 2; ++l0) {
        auto s = a_coeffs_solver(XIndex{1, l0, 2 * l0 + 1}, kA);
        CHECK(s.excluded_slots == std::vector<int>{l0 + 1});
        auto c = certify(XIndex{1, l0, 2 * l0 + 1}, kA);
        CHECK(c.ok());
        CHECK(c.term_count() == 3 * l0 + 3);
    }
}

TEST_CASE("banded certificates") {
    for (int j0 = 1; j0 <= 4; ++j0)
        for (int l0 = 1; l0 <= 2; ++l0)
            for (const auto& p : sets_for(j0, l0, 10))
                for (int n = 2 * l0 + 1; n <= 10; ++n) {
                    XIndex idx{j0, l0, n};
                    auto c = certify(idx, p);
                    INFO(idx.str(), " ", p.str(), " ", c.failure);
                    CHECK(c.ok());
                    CHECK(c.a_unique);
                    CHECK(c.residual_zero);
                    CHECK(c.b_unique);
                    CHECK(c.c_tilde_low_zero);
                    CHECK(c.dual_route_agrees);
                    CHECK(recheck_residual(c).is_zero());
                    CHECK(c.term_count() == 3 * l0 + 4 - static_cast<int>(c.excluded_slots.size()));
                    CHECK(c.q.degree() == l0 + 1);
                    Poly top = *family_member(j0, l0, n + l0 + 1, p);
                    CHECK(c.q.degree() + x_poly(idx, p).poly.degree() == top.degree());
                }
}

TEST_CASE("worked cases") {
    CHECK(certify(XIndex{1, 1, 5}, Params{1, Rational(1, 2)}).b.at(7) == Rational(1, 3));
    auto c4 = certify(XIndex{4, 1, 5}, Params{1, Rational(1, 2)});
    CHECK(c4.residual_zero);
    CHECK(c4.term_count() == 7);

    for (int id = 1; id <= 4; ++id) {
        auto sets = generic_params([&](const Params& p) {
            if (!regular_moments(p, 16)) throw ParamPole("degenerate moments");
            (void)example_oracles(id, p);
            (void)certify(XIndex{id, 1, 5}, p);
        });
        REQUIRE(sets.size() >= 3);
        for (const auto& p : sets) {
            auto o = example_oracles(id, p);
            auto c = certify(XIndex{id, 1, 5}, p);
            INFO("case ", id, " ", p.str());
            CHECK(c.q == o.q);
            CHECK(c.a == o.a);
            for (int j = 4; j <= 7; ++j) {
                INFO("j=", j);
                if (id == 3 && j == 5)
                    // The reference closed form for this coefficient has the opposite sign.
                    CHECK(c.b.at(j) == -o.b.at(j));
                else
                    CHECK(c.b.at(j) == o.b.at(j));
            }
        }
    }
}

TEST_CASE("general mode") {
    for (int j0 = 1; j0 <= 4; ++j0)
        for (int n = 0; n <= 6; ++n) {
            XIndex idx{j0, 1, n};
            if (!idx.admissible()) continue;
            for (int k = 0; k <= n; ++k) {
                CertifyOptions opt{CertifyMode::general, k, {}};
                auto c = certify(idx, kA, opt);
                INFO(idx.str(), " k=", k, " ", c.failure);
                CHECK(c.residual_zero);
                CHECK(recheck_residual(c).is_zero());
                CHECK(c.extra_columns.size() == (j0 == 4 ? 1u : 0u));
            }
        }
    CertifyOptions given{CertifyMode::general, 1, {Rational(2), Rational(-3, 7)}};
    CHECK(certify(XIndex{2, 1, 4}, kA, given).residual_zero);
}

TEST_CASE("certify preconditions") {
    CHECK_THROWS_AS(certify(XIndex{1, 1, 2}, kA), std::invalid_argument);
    CHECK_THROWS_AS(certify(XIndex{1, 1, 2}, kA, CertifyOptions{CertifyMode::general, 3, {}}), std::invalid_argument);
    CHECK_THROWS_AS(certify(XIndex{1, 1, 4}, kA, CertifyOptions{CertifyMode::general, 1, {Rational(1)}}),
                    std::invalid_argument);
    CHECK_THROWS_AS(certify(XIndex{5, 1, 5}, kA), std::invalid_argument);
    CHECK_THROWS_AS(certify(XIndex{2, 1, 5}, kB), ParamPole);
}
