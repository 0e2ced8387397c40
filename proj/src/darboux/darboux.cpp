#include "xlbp/darboux.hpp"

#include <stdexcept>
#include <tuple>

namespace xlbp {

SeedType::SeedType(int j0) : j0_(j0) {
    if (j0 < 1 || j0 > 4) throw std::invalid_argument("j0 must be in {1,2,3,4}, got " + std::to_string(j0));
}

LaurentPoly Seed::laurent_part() const {
    LaurentPoly r(p_poly);
    return j0 >= 3 ? r.shifted(-l0) : r;
}

Rational theta(int j0, int l0, const Params& p) {
    SeedType t(j0);
    Rational l(l0);
    switch (t.value()) {
        case 1: return l;
        case 2: return l - p.alpha - p.beta;
        case 3: return -l - 1 - p.alpha - p.beta;
        default: return -l - 1;
    }
}

Seed make_seed(int j0, int l0, const Params& p) {
    SeedType t(j0);
    if (l0 < 1) throw std::invalid_argument("l0 must be positive");
    const Rational a = p.alpha, b = p.beta;
    Seed s;
    s.j0 = t.value();
    s.l0 = l0;
    s.theta = theta(j0, l0, p);
    std::tie(s.kernel_e0, s.kernel_e1) = kernel_exponents(j0, l0, p);
    switch (s.j0) {
        case 1:
            s.p_poly = hr_poly(l0, p);
            s.Q_factor = Poly{1};
            s.P_factor = Poly{};
            s.gauge_tag = "1";
            break;
        case 2:
            s.p_poly = hr_poly(l0, Params{-b, -a});
            s.Q_factor = Poly{1, -1};
            s.P_factor = Poly{a + b};
            s.gauge_tag = "(-z)^(beta-alpha)";
            break;
        case 3:
            s.p_poly = hr_poly(l0, p).reversed(l0);
            s.Q_factor = Poly{0, 1};
            s.P_factor = Poly{-(a + 1)};
            s.gauge_tag = "(1-z)^(-alpha-beta)";
            break;
        default:
            s.p_poly = hr_poly(l0, Params{-b, -a}).reversed(l0);
            s.Q_factor = Poly{0, -1, 1};
            s.P_factor = Poly{1 - b, -(a + 1)};
            s.gauge_tag = "(-z)^(beta-1) (1-z)^(-alpha-beta)";
            break;
    }
    return s;
}

LaurentPoly psi_hat(int j0, int l0, int n, const Params& p) {
    if (n < 0) throw std::invalid_argument("psi_hat: n must be nonnegative");
    Seed s = make_seed(j0, l0, p);
    LaurentPoly ps = s.laurent_part();
    LaurentPoly Pn(hr_poly(n, p));
    LaurentPoly wr = ps * Pn.derivative() - ps.derivative() * Pn;
    return LaurentPoly(s.Q_factor) * wr - LaurentPoly(s.P_factor) * ps * Pn;
}

Poly backward_linear_term(int j0, int l0, const Params& p) {
    SeedType t(j0);
    const Rational a = p.alpha, b = p.beta, l(l0);
    switch (t.value()) {
        case 1: return Poly{1 - b - l, l - a - 2};
        case 2: return Poly{1 + a - l, l - a - 1};
        case 3: return Poly{l, -(l + a + b + 1)};
        default: return Poly{l, -l};
    }
}

BackwardResult backward_apply(int j0, int l0, const LaurentPoly& f, const Params& p) {
    Seed s = make_seed(j0, l0, p);
    LaurentPoly num = LaurentPoly(Poly{0, 1, -1}) * f.derivative() + LaurentPoly(backward_linear_term(j0, l0, p)) * f;
    LaurentPoly den = LaurentPoly(s.Q_factor) * s.laurent_part();
    BackwardResult out;
    auto qr = exact_div(num, den);
    out.image = qr.quotient.nonnegative_part();
    out.remainder = num - den * LaurentPoly(out.image);
    out.divisible = out.remainder.is_zero();
    return out;
}

Rational xi(int j0, int l0, int n, const Params& p) {
    Rational N(n);
    return -(N - theta(j0, l0, p)) * (N + p.alpha + 1);
}

std::pair<Rational, Rational> kernel_exponents(int j0, int l0, const Params& p) {
    SeedType t(j0);
    const Rational a = p.alpha, b = p.beta, l(l0);
    switch (t.value()) {
        case 1: return {-1 + b + l, -1 - a - b};
        case 2: return {-1 - a + l, 0};
        case 3: return {-l, -1 - a - b};
        default: return {-l, 0};
    }
}

KernelCheck kernel_check(int j0, int l0, const Params& p) {
    KernelCheck k;
    std::tie(k.e0, k.e1) = kernel_exponents(j0, l0, p);
    k.residual = Poly{k.e0, -k.e0 - k.e1} + backward_linear_term(j0, l0, p);
    k.pass = k.residual.is_zero();
    return k;
}

}  // namespace xlbp
