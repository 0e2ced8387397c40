#pragma once

#include "xlbp/hr.hpp"
#include "xlbp/poly.hpp"

#include <string>
#include <utility>

namespace xlbp {

// One of the four gauge classes j0 in {1,2,3,4}.
class SeedType {
public:
    explicit SeedType(int j0);
    int value() const { return j0_; }
    friend bool operator==(SeedType, SeedType) = default;

private:
    int j0_;
};

struct Seed {
    int j0 = 1;
    int l0 = 1;
    // Polynomial part of the seed. For j0 = 3,4 this is z^{l0} times the
    // polynomial in 1/z, i.e. the reversal of P_{l0}(z; alpha, beta) resp. P_{l0}(z; -beta, -alpha).
    Poly p_poly;
    Rational theta;
    Poly P_factor;
    Poly Q_factor;
    // Gauge function written out, never evaluated.
    std::string gauge_tag;
    // Exponents (e0, e1) of the gauge z^{e0} (1-z)^{e1} annihilated by the backward operator.
    Rational kernel_e0;
    Rational kernel_e1;

    // The seed polynomial as a Laurent object: p_poly, or z^{-l0} p_poly for j0 = 3,4.
    LaurentPoly laurent_part() const;
};

Seed make_seed(int j0, int l0, const Params& p);

// Transformed eigenfunction Q (p P_n' - p' P_n) - P p P_n with p the Laurent seed part.
// For j0 = 1,2 it is a polynomial; for j0 = 3,4 it is z^{-l0} times one.
LaurentPoly psi_hat(int j0, int l0, int n, const Params& p);

struct BackwardResult {
    Poly image;
    bool divisible = false;
    // numerator - divisor * image; zero exactly when divisible.
    LaurentPoly remainder;
};

// Solves Q p_seed r = z(1-z) f' + lin f for r, where lin is the type's linear
// coefficient. Division is exact Laurent long division.
BackwardResult backward_apply(int j0, int l0, const LaurentPoly& f, const Params& p);

// Linear coefficient of the first-order backward relation.
Poly backward_linear_term(int j0, int l0, const Params& p);

// -(n - theta)(n + alpha + 1)
Rational xi(int j0, int l0, int n, const Params& p);
Rational theta(int j0, int l0, const Params& p);

struct KernelCheck {
    bool pass = false;
    Rational e0;
    Rational e1;
    // e0 (1-z) - e1 z + lin, the gauge's log-derivative cleared by z(1-z).
    Poly residual;
};

// Needs no seed polynomial, so it has no parameter poles.
std::pair<Rational, Rational> kernel_exponents(int j0, int l0, const Params& p);
KernelCheck kernel_check(int j0, int l0, const Params& p);

}  // namespace xlbp
