#pragma once

#include "xlbp/poly.hpp"
#include "xlbp/rational.hpp"

#include <string>
#include <vector>

namespace xlbp {

struct Params {
    Rational alpha;
    Rational beta;

    // alpha+1+k != 0 for 0 <= k < N, i.e. (alpha+1)_N != 0.
    bool valid_up_to(int N) const;
    // alpha > -1, beta > -1, alpha+beta > -1 (needed by the quadrature module only).
    bool positive() const;

    Params swapped() const { return {beta, alpha}; }
    Params shifted(const Rational& da, const Rational& db) const { return {alpha + da, beta + db}; }
    std::string str() const { return "(" + alpha.str() + ", " + beta.str() + ")"; }

    friend bool operator==(const Params&, const Params&) = default;
};

// Rising factorial x(x+1)...(x+n-1).
Rational pochhammer(const Rational& x, int n);

// P_n(z; alpha, beta), monic of degree n. Built as
//   sum_k C(n,k) (alpha+1)_k (beta)_{n-k} / (alpha+1)_n z^k
// which only has the pole (alpha+1)_n = 0. Negative n gives the zero polynomial.
Poly hr_poly(int n, const Params& p);
// Same sum without the 1/(alpha+1)_n normalization; never has a pole.
Poly hr_poly_unnormalized(int n, const Params& p);
// Q_n(z; alpha, beta) = P_n(z; beta, alpha).
Poly hr_partner(int n, const Params& p);

struct TtrrCoeffs {
    Rational d;
    Rational b;
};
// d_n = -(n+beta)/(n+alpha+1), b_n = -n(n+alpha+beta)/((n+alpha)(n+alpha+1)).
// b_0 is taken as 0 (it only ever multiplies P_{-1} = 0).
TtrrCoeffs ttrr_coeffs(int n, const Params& p);
inline Rational ttrr_d(int n, const Params& p) { return ttrr_coeffs(n, p).d; }
inline Rational ttrr_b(int n, const Params& p) { return ttrr_coeffs(n, p).b; }

// P_{k+1} = z(P_k + b_k P_{k-1}) - d_k P_k from P_0 = 1.
Poly build_via_ttrr(int n, const Params& p);

// Moments divided by c_0, so value(0) = 1.
class MomentTable {
public:
    MomentTable(Params params, int k_min, int k_max, std::vector<Rational> values);
    const Params& params() const { return params_; }
    int k_min() const { return k_min_; }
    int k_max() const { return k_max_; }
    // Throws std::out_of_range outside [k_min, k_max].
    const Rational& value(int k) const;

private:
    Params params_;
    int k_min_;
    int k_max_;
    std::vector<Rational> values_;
};

// Uses value(k+1)(k+1+alpha) = value(k)(k-beta) forward and backward from k = 0.
MomentTable moments(const Params& p, int k_min, int k_max);

// <w f, g>/c_0 = sum_k [f(z) g(1/z)]_k value(k).
Rational inner_product(const LaurentPoly& f, const LaurentPoly& g, const MomentTable& table);

// h_n/h_0 = n! (alpha+beta+1)_n / ((alpha+1)_n (beta+1)_n).
Rational norm_ratio(int n, const Params& p);

struct DkBk {
    Poly D;
    Poly B;
};
// D_k, B_k with P_{n+k+1} = D_k P_{n+1} + B_k P_n.
DkBk dk_bk_polys(int k, int n, const Params& p);

enum class Side { P, Q };

// C^{(l)}_{n,j} (side P) or E^{(l)}_{n,j} (side Q) for l = 1..j. C^{(0)} = E^{(0)} = 1.
//   P_n(z; a+j, b-j) = P_n(z) + sum_l C^{(l)}_{n,j} P_{n-l}(z)
//   Q_n(z) = Q_n(z; a+j, b-j) + sum_l E^{(l)}_{n,j} Q_{n-l}(z; a+j, b-j)
std::vector<Rational> twisted_coeffs(int n, int j, const Params& p, Side side);
// Single entry, l in 0..j (zero for l > j).
Rational twisted_C(int n, int j, int l, const Params& p);
Rational twisted_E(int n, int j, int l, const Params& p);

// Coordinates of f in the monic basis {P_j(z; p)}: f = sum_j c[j] P_j.
std::vector<Rational> hr_basis_coords(const Poly& f, const Params& p);

}  // namespace xlbp
