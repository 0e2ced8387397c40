#include "xlbp/hr.hpp"

#include <map>
#include <stdexcept>
#include <tuple>

namespace xlbp {

bool Params::valid_up_to(int N) const {
    for (int k = 0; k < N; ++k)
        if ((alpha + Rational(1 + k)).is_zero()) return false;
    return true;
}

bool Params::positive() const {
    return alpha > Rational(-1) && beta > Rational(-1) && alpha + beta > Rational(-1);
}

Rational pochhammer(const Rational& x, int n) {
    if (n < 0) throw std::invalid_argument("pochhammer: negative length");
    Rational r = 1;
    for (int i = 0; i < n; ++i) r *= x + Rational(i);
    return r;
}

Poly hr_poly_unnormalized(int n, const Params& p) {
    if (n < 0) return {};
    std::vector<Rational> c(static_cast<std::size_t>(n) + 1);
    // binomial(n,k) (alpha+1)_k (beta)_{n-k}
    std::vector<Rational> up(static_cast<std::size_t>(n) + 1), down(static_cast<std::size_t>(n) + 1);
    up[0] = 1;
    down[0] = 1;
    for (int k = 1; k <= n; ++k) {
        up[static_cast<std::size_t>(k)] = up[static_cast<std::size_t>(k - 1)] * (p.alpha + Rational(k));
        down[static_cast<std::size_t>(k)] = down[static_cast<std::size_t>(k - 1)] * (p.beta + Rational(k - 1));
    }
    Rational binom = 1;
    for (int k = 0; k <= n; ++k) {
        c[static_cast<std::size_t>(k)] = binom * up[static_cast<std::size_t>(k)] * down[static_cast<std::size_t>(n - k)];
        binom = binom * Rational(n - k) / Rational(k + 1);
    }
    return Poly(std::move(c));
}

Poly hr_poly(int n, const Params& p) {
    if (n < 0) return {};
    Rational norm = pochhammer(p.alpha + Rational(1), n);
    if (norm.is_zero())
        throw ParamPole("(alpha+1)_" + std::to_string(n) + " with alpha = " + p.alpha.str());
    return hr_poly_unnormalized(n, p).scaled(Rational(1) / norm);
}

Poly hr_partner(int n, const Params& p) { return hr_poly(n, p.swapped()); }

TtrrCoeffs ttrr_coeffs(int n, const Params& p) {
    if (n < 0) throw std::invalid_argument("ttrr_coeffs: negative index");
    Rational nn(n);
    TtrrCoeffs c;
    c.d = -checked_div(nn + p.beta, nn + p.alpha + Rational(1), "n+alpha+1 (n=" + std::to_string(n) + ")");
    if (n == 0) {
        c.b = 0;
    } else {
        Rational den = (nn + p.alpha) * (nn + p.alpha + Rational(1));
        c.b = -checked_div(nn * (nn + p.alpha + p.beta), den,
                           "(n+alpha)(n+alpha+1) (n=" + std::to_string(n) + ", alpha=" + p.alpha.str() + ")");
    }
    return c;
}

Poly build_via_ttrr(int n, const Params& p) {
    if (n < 0) return {};
    Poly prev;  // P_{-1}
    Poly cur = Poly::constant(1);
    for (int k = 0; k < n; ++k) {
        auto c = ttrr_coeffs(k, p);
        Poly next = (cur + prev.scaled(c.b)).shifted(1) - cur.scaled(c.d);
        prev = std::move(cur);
        cur = std::move(next);
    }
    return cur;
}

MomentTable::MomentTable(Params params, int k_min, int k_max, std::vector<Rational> values)
    : params_(std::move(params)), k_min_(k_min), k_max_(k_max), values_(std::move(values)) {}

const Rational& MomentTable::value(int k) const {
    if (k < k_min_ || k > k_max_)
        throw std::out_of_range("moment index " + std::to_string(k) + " outside table [" + std::to_string(k_min_) +
                                ", " + std::to_string(k_max_) + "]");
    return values_[static_cast<std::size_t>(k - k_min_)];
}

MomentTable moments(const Params& p, int k_min, int k_max) {
    if (k_min > 0 || k_max < 0) throw std::invalid_argument("moments: range must contain 0");
    std::vector<Rational> v(static_cast<std::size_t>(k_max - k_min + 1));
    auto at = [&](int k) -> Rational& { return v[static_cast<std::size_t>(k - k_min)]; };
    at(0) = 1;
    for (int k = 0; k < k_max; ++k)
        at(k + 1) = at(k) * checked_div(Rational(k) - p.beta, Rational(k + 1) + p.alpha,
                                        "k+1+alpha (k=" + std::to_string(k) + ")");
    for (int k = -1; k >= k_min; --k)
        at(k) = at(k + 1) * checked_div(Rational(k + 1) + p.alpha, Rational(k) - p.beta,
                                        "k-beta (k=" + std::to_string(k) + ")");
    return MomentTable(p, k_min, k_max, std::move(v));
}

Rational inner_product(const LaurentPoly& f, const LaurentPoly& g, const MomentTable& table) {
    LaurentPoly h = f * g.inverted();
    Rational s;
    if (h.is_zero()) return s;
    for (int k = h.min_exp(); k <= h.max_exp(); ++k) {
        Rational c = h.coeff(k);
        if (c.is_zero()) continue;
        s += c * table.value(k);
    }
    return s;
}

Rational norm_ratio(int n, const Params& p) {
    Rational r = 1;
    for (int k = 0; k < n; ++k) {
        Rational num = Rational(k + 1) * (p.alpha + p.beta + Rational(1 + k));
        Rational den = (p.alpha + Rational(1 + k)) * (p.beta + Rational(1 + k));
        r *= checked_div(num, den, "(alpha+1+k)(beta+1+k) (k=" + std::to_string(k) + ")");
    }
    return r;
}

DkBk dk_bk_polys(int k, int n, const Params& p) {
    if (k < 0) throw std::invalid_argument("dk_bk_polys: negative k");
    // (D_{k-2}, D_{k-1}) and (B_{k-2}, B_{k-1}) rolling windows
    Poly d2, d1 = Poly::constant(1);   // D_{-1} = 0, D_0 = 1
    Poly b2 = Poly::constant(1), b1;   // B_{-1} = 1, B_0 = 0
    for (int i = 1; i <= k; ++i) {
        auto c = ttrr_coeffs(n + i, p);
        Poly lin = Poly{-c.d, Rational(1)};
        Poly bz = Poly::monomial(c.b, 1);
        Poly dn = lin * d1 + bz * d2;
        Poly bn = lin * b1 + bz * b2;
        d2 = std::move(d1);
        d1 = std::move(dn);
        b2 = std::move(b1);
        b1 = std::move(bn);
    }
    return {d1, b1};
}

Rational twisted_C(int n, int j, int l, const Params& p) {
    // C^{(l)}_{n,j} = C^{(l)}_{n,j-1} + b_n^{a+j-1,b-j+1} C^{(l-1)}_{n-1,j-1}
    std::map<std::tuple<int, int, int>, Rational> memo;
    auto rec = [&](auto&& self, int nn, int jj, int ll) -> Rational {
        if (ll == 0) return 1;
        if (ll > jj || jj <= 0) return 0;
        auto key = std::make_tuple(nn, jj, ll);
        if (auto it = memo.find(key); it != memo.end()) return it->second;
        Rational v = self(self, nn, jj - 1, ll);
        Rational b = ttrr_b(nn, p.shifted(jj - 1, 1 - jj));
        if (!b.is_zero()) v += b * self(self, nn - 1, jj - 1, ll - 1);
        memo.emplace(key, v);
        return v;
    };
    return rec(rec, n, j, l);
}

Rational twisted_E(int n, int j, int l, const Params& p) {
    // E^{(l)}_{n,j} = E^{(l)}_{n,j-1} + b_{n-l+1}^{b-j,a+j} E^{(l-1)}_{n,j-1}
    std::map<std::pair<int, int>, Rational> memo;
    auto rec = [&](auto&& self, int jj, int ll) -> Rational {
        if (ll == 0) return 1;
        if (ll > jj || jj <= 0) return 0;
        auto key = std::make_pair(jj, ll);
        if (auto it = memo.find(key); it != memo.end()) return it->second;
        Rational v = self(self, jj - 1, ll);
        Rational prev = self(self, jj - 1, ll - 1);
        if (!prev.is_zero()) v += ttrr_b(n - ll + 1, Params{p.beta - Rational(jj), p.alpha + Rational(jj)}) * prev;
        memo.emplace(key, v);
        return v;
    };
    return rec(rec, j, l);
}

std::vector<Rational> twisted_coeffs(int n, int j, const Params& p, Side side) {
    if (j < 1 || j > n) throw std::invalid_argument("twisted_coeffs: need 1 <= j <= n");
    std::vector<Rational> out;
    for (int l = 1; l <= j; ++l) out.push_back(side == Side::P ? twisted_C(n, j, l, p) : twisted_E(n, j, l, p));
    return out;
}

std::vector<Rational> hr_basis_coords(const Poly& f, const Params& p) {
    if (f.is_zero()) return {};
    std::vector<Rational> c(static_cast<std::size_t>(f.degree()) + 1);
    Poly rest = f;
    for (int d = f.degree(); d >= 0; --d) {
        Rational top = rest.coeff(d);
        c[static_cast<std::size_t>(d)] = top;
        if (!top.is_zero()) rest -= hr_poly(d, p).scaled(top);
    }
    return c;
}

}  // namespace xlbp
