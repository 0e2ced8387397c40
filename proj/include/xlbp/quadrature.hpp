#pragma once

#include "xlbp/hr.hpp"
#include "xlbp/xhr.hpp"

#include <stdexcept>
#include <string>
#include <vector>

namespace xlbp {

struct QuadConfig {
    int num_points = 512;         // first grid, doubled on each refinement
    int refinement_levels = 9;
    double tolerance = 1e-11;     // on the normalized values
    int precision_bits = 113;     // 53 (double) or 113 (binary128)

    void validate() const;
};

// Branch choices on |z| = 1, z = e^{ix}, 0 < x < 2pi:
//   (-z)^{-beta} = e^{-i beta (x - pi)}, (1-z)^{alpha+beta} = (2 sin(x/2))^{alpha+beta} e^{i(alpha+beta)(x-pi)/2}
struct BranchConvention {
    static constexpr const char* minus_z = "arg(-z) in (-pi, pi), (-z)^(-beta) real positive at z = -1";
    static constexpr const char* one_minus_z = "arg(1-z) in (-pi, pi), (1-z)^(alpha+beta) real positive for 1-z > 0";
};

struct QuadValue {
    double re = 0;
    double im = 0;
    double error_estimate = 0;
    int points = 0;
    std::string re_str;  // full working precision
    std::string im_str;
    // Refinement-difference estimates, one per level after the first.
    std::vector<double> history;
};

class NonConvergence : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

class DenominatorNearContour : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// (1/2pi) int P_n(e^{ix}) Q_m(e^{-ix}) w(e^{ix}) dx divided by the same integral at n = m = 0.
QuadValue classical_quad(int n, int m, const Params& p, const QuadConfig& cfg);

// The same with P^{(j0,l0,n)}, Q^{(j0,l0,m)} and the exceptional weight, divided by c_0.
QuadValue exceptional_quad(const XIndex& idx_n, const XIndex& idx_m, const Params& p, const QuadConfig& cfg);

// All pairs 0..max_n at once; table[n][m]. Node values are shared between pairs.
std::vector<std::vector<QuadValue>> classical_quad_table(int max_n, const Params& p, const QuadConfig& cfg);

// All pairs among the given admissible indices of one (j0, l0) family; table[i][k].
std::vector<std::vector<QuadValue>> exceptional_quad_table(int j0, int l0, const std::vector<int>& ns,
                                                           const Params& p, const QuadConfig& cfg);

// Exponent of |1 - z| in the integrand weight near z = 1; the endpoint
// substitution is used when it is <= 2. j0 = 0 means the classical weight.
Rational effective_exponent(int j0, const Params& p);

// min |d(e^{ix})| / max |d(e^{ix})| over a uniform sample of the circle.
double min_modulus_ratio(const Poly& d, int samples = 4096);

}  // namespace xlbp
