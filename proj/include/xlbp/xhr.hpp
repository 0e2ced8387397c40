#pragma once

#include "xlbp/hr.hpp"
#include "xlbp/poly.hpp"

#include <stdexcept>
#include <string>

namespace xlbp {

class InadmissibleIndex : public std::invalid_argument {
public:
    explicit InadmissibleIndex(const std::string& what) : std::invalid_argument("inadmissible index: " + what) {}
};

struct XIndex {
    int j0 = 1;
    int l0 = 1;
    int n = 0;

    // j0=1: n >= 0, n != l0. j0=2,3: n >= 0. j0=4: n >= 0 or n = -l0-1.
    bool admissible() const;
    std::string str() const;
    friend bool operator==(const XIndex&, const XIndex&) = default;
};

// n + l0 - [j0 == 1] + [j0 == 4]
int x_degree(int j0, int l0, int n);

struct XPoly {
    XIndex index;
    Poly poly;
    int declared_degree = 0;
};

// Compact closed forms; P_{-1} = 0. Refuses inadmissible indices and the
// extra j0=4 index n = -l0-1 (that member is z^{-l0}, not a polynomial).
XPoly x_poly(const XIndex& idx, const Params& p);
// x_poly at (beta-1, alpha+1).
XPoly x_partner(const XIndex& idx, const Params& p);
Params x_partner_params(const Params& p);

// h_n^{(j0,l0)}/h_0 = (theta - n)(n + beta) norm_ratio(n).
Rational x_norm_ratio(const XIndex& idx, const Params& p);

struct DerivativeFactorCheck {
    bool pass = false;
    Poly lhs;  // derivative of P^{(4,l0,n)}
    Poly rhs;  // (n+l0+1)(n+alpha+1) z^{l0} p^{(4)} P_n(z; alpha+1, beta-1)
};
DerivativeFactorCheck xp4_derivative_factor(int l0, int n, const Params& p);

// w^{(j0,l0)}(z)/w(z) = constant_ratio * z^{monomial_power} * (z-1)^{+1} or (1-z)^{-1}
//                       / denominator(z)^2
struct WeightFactor {
    enum class Linear { z_minus_one, inv_one_minus_z };

    int j0 = 1;
    int l0 = 1;
    Rational constant_ratio;
    int monomial_power = 0;
    Linear linear = Linear::z_minus_one;
    Poly denominator;  // squared in the weight
    std::string base = "w(z) = (-z)^(-beta) (1-z)^(alpha+beta)";

    // Exact value of the ratio at a rational point (throws on a pole).
    Rational eval_ratio(const Rational& z) const;
    // Net power of (1-z) contributed on top of w: +1 or -1.
    int linear_exponent() const { return linear == Linear::z_minus_one ? 1 : -1; }
};

WeightFactor x_weight_factor(int j0, int l0, const Params& p);

}  // namespace xlbp
