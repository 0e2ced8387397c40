#include "xlbp/identities.hpp"

#include <random>
#include <stdexcept>

namespace xlbp {

namespace {

using T = IdentityTag;

const std::vector<IdentityInfo> kCatalog = {
    {T::reversal, "reversal", 0, "1"},
    {T::lowering, "lowering", 0, "1"},
    {T::logderiv_reversed, "logderiv_reversed", 1, "z P_n(z;beta-1,alpha+1)"},
    {T::logderiv_negated, "logderiv_negated", 1, "z^2 P_n(z;-alpha-1,-beta+1) P_n(1/z;-beta,-alpha)"},
    {T::z_times_p, "z_times_p", 0, "1"},
    {T::derivative_shift, "derivative_shift", 1, "1"},
    {T::lowered_shift, "lowered_shift", 1, "1"},
    {T::antiderivative, "antiderivative", 0, "1"},
    {T::raising, "raising", 0, "1"},
    {T::z_expansion, "z_expansion", 0, "1"},
    {T::twisted_one, "twisted_one", 0, "1"},
    {T::twisted_one_z, "twisted_one_z", 0, "1"},
    {T::partner_twisted_one, "partner_twisted_one", 0, "1"},
    {T::iterated_lower, "iterated_lower", 0, "1"},
    {T::twisted_p_j, "twisted_p_j", 1, "1"},
    {T::twisted_q_j, "twisted_q_j", 1, "1"},
    {T::span_explicit, "span_explicit", 2, "1"},
    {T::span_moments, "span_moments", 2, "1"},
    {T::q_span, "q_span", 2, "1"},
    {T::monic_ck, "monic_ck", 0, "1"},
    {T::dk_bk, "dk_bk", 0, "1"},
    {T::pearson, "pearson", 0, "1/w"},
    {T::ode, "ode", 0, "1"},
    {T::l1_shift, "l1_shift", 0, "1"},
    {T::l2_shift, "l2_shift", 0, "1"},
    {T::ttrr, "ttrr", 0, "1"},
};

Poly P(int n, const Params& p) { return hr_poly(n, p); }
Poly P(int n, const Rational& a, const Rational& b) { return hr_poly(n, Params{a, b}); }

// Accumulates sub-case comparisons, keeping the first failure.
struct Checker {
    IdentityResult res;
    void eq(const LaurentPoly& lhs, const LaurentPoly& rhs, const std::string& where) {
        if (!res.pass) return;
        LaurentPoly d = lhs - rhs;
        if (!d.is_zero()) {
            res.pass = false;
            res.witness = d;
            res.detail = where;
        }
    }
    void truth(bool ok, const std::string& where) {
        if (!res.pass || ok) return;
        res.pass = false;
        res.detail = where;
    }
};

Poly A1() { return Poly{0, 1, -1}; }
Poly B1(const Params& p) { return Poly{Rational(1) - p.beta, -(Rational(2) + p.alpha)}; }

// sum_{l=0}^{l0+1} C^{(l)}_{n,l0+1} P_{n-l}
Poly span_combination(int n, int l0, const Params& p) {
    Poly s;
    for (int l = 0; l <= l0 + 1; ++l) s += P(n - l, p).scaled(twisted_C(n, l0 + 1, l, p));
    return s;
}

// A deterministic polynomial of degree deg with z | q.
Poly sample_q(int deg, std::uint32_t seed) {
    std::mt19937 rng(seed);
    std::uniform_int_distribution<int> num(-5, 5), den(1, 4);
    std::vector<Rational> c(static_cast<std::size_t>(deg) + 1);
    for (int i = 1; i <= deg; ++i) c[static_cast<std::size_t>(i)] = Rational(num(rng), den(rng));
    if (c.back().is_zero()) c.back() = 1;
    return Poly(std::move(c));
}

// Product coefficient (-1)^{n-j} prod_{l=0}^{n-j-1} b_{n-l}(q)
Rational alt_product(int n, int j, const Params& q) {
    Rational r = ((n - j) % 2 == 0) ? 1 : -1;
    for (int l = 0; l <= n - j - 1; ++l) r *= ttrr_b(n - l, q);
    return r;
}

}  // namespace

const std::vector<IdentityInfo>& identity_catalog() { return kCatalog; }

const IdentityInfo& identity_info(IdentityTag tag) {
    for (const auto& i : kCatalog)
        if (i.tag == tag) return i;
    throw std::invalid_argument("unknown identity tag");
}

IdentityTag identity_from_name(std::string_view name) {
    for (const auto& i : kCatalog)
        if (i.name == name) return i.tag;
    throw std::invalid_argument("unknown identity '" + std::string(name) + "'");
}

IdentityResult verify_identity(IdentityTag tag, int n, const Params& p) {
    const auto& info = identity_info(tag);
    if (n < info.min_n)
        throw std::invalid_argument(std::string(info.name) + " needs n >= " + std::to_string(info.min_n));
    const Rational a = p.alpha, b = p.beta, N(n);
    Checker ck;
    switch (tag) {
        case T::reversal: {
            Rational f = checked_div(pochhammer(b, n), pochhammer(a + 1, n), "(alpha+1)_n");
            ck.eq(P(n, p).reversed(n), P(n, b - 1, a + 1).scaled(f), "");
            break;
        }
        case T::lowering:
            ck.eq(P(n, p).derivative(), P(n - 1, a + 1, b).scaled(N), "");
            break;
        case T::logderiv_reversed: {
            Poly A = P(n, b - 1, a + 1);
            Poly D = P(n - 1, b - 1, a + 2);
            Rational f = checked_div(N * (a + 1), N - 1 + b, "n-1+beta");
            ck.eq(A.derivative().shifted(1), A.scaled(N) - D.scaled(f), "");
            break;
        }
        case T::logderiv_negated: {
            Poly A = P(n, -a - 1, -b + 1);
            LaurentPoly B = LaurentPoly(P(n - 1, -b + 1, -a)).inverted();
            LaurentPoly C = LaurentPoly(P(n, -b, -a)).inverted();
            LaurentPoly lhs = LaurentPoly(A.derivative().shifted(2)) * C;
            LaurentPoly rhs = LaurentPoly(A.scaled(N)) * (C.shifted(1) - B);
            ck.eq(lhs, rhs, "");
            break;
        }
        case T::z_times_p: {
            auto c = ttrr_coeffs(n, p);
            ck.eq(P(n, p).shifted(1), P(n + 1, p) + P(n, a - 1, b + 1).scaled(c.d - c.b), "");
            break;
        }
        case T::derivative_shift: {
            Rational f = checked_div(N + a + b, N + a, "n+alpha");
            ck.eq(Poly{-1, 1} * P(n, p).derivative(), (P(n, p) - P(n - 1, p).scaled(f)).scaled(N), "");
            break;
        }
        case T::lowered_shift: {
            Rational f = checked_div(N + a + b, N + a, "n+alpha");
            ck.eq(Poly{-1, 1} * P(n - 1, a + 1, b), P(n, p) - P(n - 1, p).scaled(f), "");
            break;
        }
        case T::antiderivative:
            ck.eq(P(n + 1, a - 1, b).scaled(Rational(1) / Rational(n + 1)).derivative(), P(n, p), "");
            break;
        case T::raising: {
            Poly q = P(n, a + 1, b);
            ck.eq(A1() * q.derivative() + B1(p) * q, P(n + 1, a + 1, b - 1).scaled(-(N + a + 2)), "");
            break;
        }
        case T::z_expansion: {
            Poly rhs = P(n + 1, p);
            for (int j = 0; j <= n; ++j) {
                auto c = ttrr_coeffs(j, p);
                rhs += P(j, p).scaled(alt_product(n, j, p) * (c.d - c.b));
            }
            ck.eq(P(n, p).shifted(1), rhs, "");
            break;
        }
        case T::twisted_one:
            ck.eq(P(n, a + 1, b - 1), P(n, p) + P(n - 1, p).scaled(ttrr_b(n, p)), "");
            break;
        case T::twisted_one_z:
            ck.eq(P(n, a + 1, b - 1).shifted(1), P(n + 1, p) + P(n, p).scaled(ttrr_d(n, p)), "");
            break;
        case T::partner_twisted_one: {
            Params tw{a + 1, b - 1};
            Rational f = ttrr_b(n, Params{b - 1, a + 1});
            ck.eq(hr_partner(n, p), hr_partner(n, tw) + hr_partner(n - 1, tw).scaled(f), "");
            break;
        }
        case T::iterated_lower: {
            Params lo{a - 1, b + 1};
            Poly rhs;
            for (int j = 0; j <= n; ++j) rhs += P(j, p).scaled(alt_product(n, j, lo));
            ck.eq(P(n, lo), rhs, "");
            break;
        }
        case T::twisted_p_j:
            for (int j = 1; j <= n; ++j) {
                Poly rhs = P(n, p);
                auto cs = twisted_coeffs(n, j, p, Side::P);
                for (int l = 1; l <= j; ++l) rhs += P(n - l, p).scaled(cs[static_cast<std::size_t>(l - 1)]);
                ck.eq(P(n, a + j, b - j), rhs, "j=" + std::to_string(j));
            }
            break;
        case T::twisted_q_j:
            for (int j = 1; j <= n; ++j) {
                Params tw{a + j, b - j};
                Poly rhs = hr_partner(n, tw);
                auto es = twisted_coeffs(n, j, p, Side::Q);
                for (int l = 1; l <= j; ++l) rhs += hr_partner(n - l, tw).scaled(es[static_cast<std::size_t>(l - 1)]);
                ck.eq(hr_partner(n, p), rhs, "j=" + std::to_string(j));
            }
            break;
        case T::span_explicit:
            for (int l0 = 1; l0 <= n - 1; ++l0)
                ck.eq(span_combination(n, l0, p), P(n, a + l0 + 1, b - l0 - 1), "l0=" + std::to_string(l0));
            break;
        case T::span_moments: {
            auto table = moments(p, -2 * n - 2, 2 * n + 2);
            for (int l0 = 1; l0 <= n - 1; ++l0) {
                Poly s = span_combination(n, l0, p);
                for (int j = 1; j <= l0 + 1; ++j) {
                    LaurentPoly f = s.shifted(j);
                    for (int m = 0; m <= n + j - l0 - 2; ++m) {
                        Rational v = inner_product(f, hr_partner(m, p), table);
                        ck.truth(v.is_zero(), "l0=" + std::to_string(l0) + " j=" + std::to_string(j) +
                                                  " m=" + std::to_string(m) + " <w f,Q_m> = " + v.str());
                    }
                }
            }
            break;
        }
        case T::q_span: {
            auto table = moments(p, -2 * n - 2, 2 * n + 2);
            for (int l0 = 1; l0 <= n - 1; ++l0) {
                Poly q = sample_q(l0 + 1, static_cast<std::uint32_t>(1000 * n + l0));
                LaurentPoly f = q * span_combination(n, l0, p);
                for (int m = 0; m < n - l0; ++m) {
                    Rational v = inner_product(f, hr_partner(m, p), table);
                    ck.truth(v.is_zero(), "l0=" + std::to_string(l0) + " m=" + std::to_string(m) +
                                              " <w q s,Q_m> = " + v.str());
                }
                ck.truth(f.max_exp() <= n + l0 + 1, "degree above n+l0+1");
            }
            break;
        }
        case T::monic_ck: {
            Rational b1 = ttrr_b(n + 1, p);
            if (b1.is_zero()) throw ParamPole("b_{n+1} (monic normalization) with n = " + std::to_string(n));
            auto c0 = ttrr_coeffs(n, p);
            Poly lowered = P(n, a - 1, b + 1);
            for (int k = 0; k <= 3; ++k) {
                std::vector<Rational> cc(static_cast<std::size_t>(k) + 1);
                for (int i = 0; i < k; ++i) cc[static_cast<std::size_t>(i)] = Rational(i + 1, k + 1);
                cc.back() = 1;
                Poly Ck(cc);
                // b_{n+1} z C_k = B_{k+1} + c_1 B_k + ... + c_k B_1
                std::vector<DkBk> db;
                for (int i = 0; i <= k + 1; ++i) db.push_back(dk_bk_polys(i, n, p));
                Poly rest = Ck.shifted(1).scaled(b1);
                std::vector<Rational> c(static_cast<std::size_t>(k) + 2);
                for (int i = 0; i <= k; ++i) {
                    int deg = k + 1 - i;
                    c[static_cast<std::size_t>(i)] = rest.coeff(deg) / db[static_cast<std::size_t>(deg)].B.leading();
                    rest -= db[static_cast<std::size_t>(deg)].B.scaled(c[static_cast<std::size_t>(i)]);
                }
                ck.truth(rest.is_zero(), "k=" + std::to_string(k) + " B-expansion remainder");
                Poly Q = Ck.scaled(b1);
                for (int i = 0; i <= k; ++i) Q += db[static_cast<std::size_t>(k + 1 - i)].D.scaled(c[static_cast<std::size_t>(i)]);
                ck.truth(Q.degree() == k + 1, "k=" + std::to_string(k) + " deg Q_{k+1}");
                Poly F = Q * P(n + 1, p) + (Ck * lowered).scaled(b1 * (c0.d - c0.b));
                auto coords = hr_basis_coords(F, p);
                ck.truth(F.degree() <= n + k + 2, "k=" + std::to_string(k) + " degree");
                for (int j = 0; j < n + 2 && j < static_cast<int>(coords.size()); ++j)
                    ck.truth(coords[static_cast<std::size_t>(j)].is_zero(),
                             "k=" + std::to_string(k) + " component P_" + std::to_string(j));
            }
            break;
        }
        case T::dk_bk:
            for (int k = 0; k <= 4; ++k) {
                auto db = dk_bk_polys(k, n, p);
                ck.eq(P(n + k + 1, p), db.D * P(n + 1, p) + db.B * P(n, p), "k=" + std::to_string(k));
                if (k >= 1) {
                    Rational b1 = ttrr_b(n + 1, p);
                    if (b1.is_zero()) continue;
                    auto qr = divmod(db.B, Poly::monomial(b1, 1));
                    ck.truth(qr.divisible() && qr.quotient.is_monic() && qr.quotient.degree() == k - 1,
                             "k=" + std::to_string(k) + " monic B_k/(b_{n+1} z)");
                }
            }
            break;
        case T::pearson: {
            // (A1 w)'/w = A1' + A1 w'/w with A1 w'/w = -beta(1-z) - (alpha+beta) z
            Poly lhs = A1().derivative() + Poly{-b, b - (a + b)};
            ck.eq(lhs, B1(p), "");
            break;
        }
        case T::ode: {
            Poly q = P(n, p);
            Poly c1{Rational(1) - b - N, -(Rational(2) + a - N)};
            ck.eq(A1() * q.derivative().derivative() + c1 * q.derivative(), q.scaled(-N * (a + 1)), "");
            break;
        }
        case T::l1_shift: {
            Poly q = P(n, p);
            ck.eq(A1() * q.derivative().derivative() + B1(p) * q.derivative(),
                  P(n, a + 1, b - 1).scaled(-N * (N + a + 1)), "");
            break;
        }
        case T::l2_shift: {
            Poly q = P(n, p);
            ck.eq(Poly{1, -1} * q.derivative() - q.scaled(a + 1), P(n, a + 1, b - 1).scaled(-(N + a + 1)), "");
            break;
        }
        case T::ttrr:
            ck.eq(build_via_ttrr(n, p), P(n, p), "");
            break;
    }
    return ck.res;
}

}  // namespace xlbp
