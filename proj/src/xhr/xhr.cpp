#include "xlbp/xhr.hpp"

#include "xlbp/darboux.hpp"

namespace xlbp {

bool XIndex::admissible() const {
    if (j0 < 1 || j0 > 4 || l0 < 1) return false;
    if (j0 == 1) return n >= 0 && n != l0;
    if (j0 == 4) return n >= 0 || n == -l0 - 1;
    return n >= 0;
}

std::string XIndex::str() const {
    return "(" + std::to_string(j0) + "," + std::to_string(l0) + "," + std::to_string(n) + ")";
}

int x_degree(int j0, int l0, int n) { return n + l0 - (j0 == 1 ? 1 : 0) + (j0 == 4 ? 1 : 0); }

Params x_partner_params(const Params& p) { return {p.beta - 1, p.alpha + 1}; }

XPoly x_poly(const XIndex& idx, const Params& p) {
    if (!idx.admissible()) throw InadmissibleIndex(idx.str());
    if (idx.n < 0) throw InadmissibleIndex(idx.str() + " is the Laurent member z^{-l0}");
    const Rational a = p.alpha, b = p.beta, N(idx.n), L(idx.l0);
    const int l = idx.l0, n = idx.n;
    Poly Pn = hr_poly(n, p);
    Poly Pm = hr_poly(n - 1, Params{a + 1, b});
    Poly x;
    switch (idx.j0) {
        case 1:
            x = (hr_poly(l, p) * Pm).scaled(N) - (hr_poly(l - 1, Params{a + 1, b}) * Pn).scaled(L);
            break;
        case 2:
            x = (Poly{1, -1} * hr_poly(l, Params{-b, -a}) * Pm).scaled(N) +
                (hr_poly(l, Params{-b, -a - 1}) * Pn).scaled(L - a - b);
            break;
        case 3: {
            Rational c = checked_div(pochhammer(b, l), pochhammer(a + 1, l), "(alpha+1)_l0");
            x = ((hr_poly(l, Params{b - 1, a + 1}) * Pm).shifted(1).scaled(N) +
                 (hr_poly(l, Params{b - 1, a + 2}) * Pn).scaled(a + 1))
                    .scaled(c);
            break;
        }
        default: {
            Rational c = checked_div(pochhammer(-a, l), pochhammer(1 - b, l), "(1-beta)_l0");
            x = ((Poly{0, -1, 1} * hr_poly(l, Params{-a - 1, 1 - b}) * Pm).scaled(N) +
                 (hr_poly(l + 1, Params{-a - 2, 1 - b}) * Pn).scaled(a + 1))
                    .scaled(c);
            break;
        }
    }
    return {idx, x, x_degree(idx.j0, idx.l0, idx.n)};
}

XPoly x_partner(const XIndex& idx, const Params& p) { return x_poly(idx, x_partner_params(p)); }

Rational x_norm_ratio(const XIndex& idx, const Params& p) {
    if (!idx.admissible() || idx.n < 0) throw InadmissibleIndex(idx.str());
    Rational N(idx.n);
    return (theta(idx.j0, idx.l0, p) - N) * (N + p.beta) * norm_ratio(idx.n, p);
}

DerivativeFactorCheck xp4_derivative_factor(int l0, int n, const Params& p) {
    DerivativeFactorCheck c;
    c.lhs = x_poly(XIndex{4, l0, n}, p).poly.derivative();
    Seed s = make_seed(4, l0, p);
    Rational f = Rational(n + l0 + 1) * (Rational(n) + p.alpha + 1);
    c.rhs = (s.p_poly * hr_poly(n, Params{p.alpha + 1, p.beta - 1})).scaled(f);
    c.pass = c.lhs == c.rhs;
    return c;
}

Rational WeightFactor::eval_ratio(const Rational& z) const {
    Rational zp = 1;
    for (int i = 0; i < monomial_power; ++i) zp *= z;
    Rational d = denominator.eval(z);
    Rational num = constant_ratio * zp;
    Rational den = d * d;
    if (linear == Linear::z_minus_one)
        num *= z - 1;
    else
        den *= 1 - z;
    return checked_div(num, den, "weight denominator at z = " + z.str());
}

WeightFactor x_weight_factor(int j0, int l0, const Params& p) {
    SeedType t(j0);
    const Rational a = p.alpha, b = p.beta;
    WeightFactor w;
    w.j0 = t.value();
    w.l0 = l0;
    switch (w.j0) {
        case 1:
            w.constant_ratio = checked_div(pochhammer(b, l0), pochhammer(1 + a, l0), "(1+alpha)_l0");
            w.monomial_power = l0;
            w.linear = WeightFactor::Linear::z_minus_one;
            w.denominator = hr_poly(l0, p);
            break;
        case 2:
            w.constant_ratio = checked_div(pochhammer(-a, l0), pochhammer(1 - b, l0), "(1-beta)_l0");
            w.monomial_power = l0 + 1;
            w.linear = WeightFactor::Linear::inv_one_minus_z;
            w.denominator = hr_poly(l0, Params{-b, -a});
            break;
        case 3:
            w.constant_ratio = checked_div(pochhammer(1 + a, l0), pochhammer(b, l0), "(beta)_l0");
            w.monomial_power = l0;
            w.linear = WeightFactor::Linear::z_minus_one;
            w.denominator = hr_poly(l0, Params{b - 1, a + 1});
            break;
        default:
            w.constant_ratio = checked_div(pochhammer(1 - b, l0), pochhammer(-a, l0), "(-alpha)_l0");
            w.monomial_power = l0 + 1;
            w.linear = WeightFactor::Linear::inv_one_minus_z;
            w.denominator = hr_poly(l0, Params{-a - 1, 1 - b});
            break;
    }
    return w;
}

}  // namespace xlbp
