#pragma once

#include "xlbp/hr.hpp"
#include "xlbp/poly.hpp"

#include <string>
#include <string_view>
#include <vector>

namespace xlbp {

enum class IdentityTag {
    reversal,              // z^n P_n(1/z) = (beta)_n/(alpha+1)_n P_n(z; beta-1, alpha+1)
    lowering,              // P_n' = n P_{n-1}(z; alpha+1, beta)
    logderiv_reversed,     // log-derivative of P_n(z; beta-1, alpha+1)
    logderiv_negated,      // log-derivative of P_n(z; -alpha-1, -beta+1)
    z_times_p,             // z P_n = P_{n+1} + (d_n - b_n) P_n(z; alpha-1, beta+1)
    derivative_shift,      // (z-1) P_n' = n (P_n - (n+alpha+beta)/(n+alpha) P_{n-1})
    lowered_shift,         // (z-1) P_{n-1}(z; alpha+1, beta) = P_n - (n+alpha+beta)/(n+alpha) P_{n-1}
    antiderivative,        // d/dz P_{n+1}(z; alpha-1, beta)/(n+1) = P_n
    raising,               // (A1 d + B1) P_n(z; alpha+1, beta) = -(n+alpha+2) P_{n+1}(z; alpha+1, beta-1)
    z_expansion,           // z P_n in the P_j basis with product coefficients
    twisted_one,           // P_n(z; alpha+1, beta-1) = P_n + b_n P_{n-1}
    twisted_one_z,         // z P_n(z; alpha+1, beta-1) = P_{n+1} + d_n P_n
    partner_twisted_one,   // Q_n = Q_n(z; alpha+1, beta-1) + b_n^{beta-1,alpha+1} Q_{n-1}(z; alpha+1, beta-1)
    iterated_lower,        // P_n(z; alpha-1, beta+1) in the P_j basis
    twisted_p_j,           // C^{(l)}_{n,j} expansion, 1 <= j <= n
    twisted_q_j,           // E^{(l)}_{n,j} expansion, 1 <= j <= n
    span_explicit,         // sum_l C^{(l)}_{n,l0+1} P_{n-l} = P_n(z; alpha+l0+1, beta-l0-1)
    span_moments,          // z^j sum_l a_l P_{n-l} lies in span{P_{n+j-l0-1..n+j}} (inner products)
    q_span,                // q sum_l a_l P_{n-l} lies in span{P_{n-l0..n+l0+1}}, z | q, deg q = l0+1
    monic_ck,              // constructive Q_{k+1} for a monic C_k
    dk_bk,                 // P_{n+k+1} = D_k P_{n+1} + B_k P_n, (b_{n+1} z)^{-1} B_k monic
    pearson,               // (A1 w)' = B1 w
    ode,                   // second-order differential equation
    l1_shift,              // L1 P_n = -n(n+alpha+1) P_n(z; alpha+1, beta-1)
    l2_shift,              // L2 P_n = -(n+alpha+1) P_n(z; alpha+1, beta-1)
    ttrr,                  // three-term recurrence reproduces the explicit sum
};

struct IdentityInfo {
    IdentityTag tag;
    std::string_view name;
    int min_n;
    // Factor both sides were multiplied by before comparing ("1" if none).
    std::string_view clearing_factor;
};

const std::vector<IdentityInfo>& identity_catalog();
const IdentityInfo& identity_info(IdentityTag tag);
// Throws std::invalid_argument for unknown names.
IdentityTag identity_from_name(std::string_view name);

struct IdentityResult {
    bool pass = true;
    // Difference of the two sides for the first failing sub-case (zero on pass).
    LaurentPoly witness;
    std::string detail;
};

// Both sides are built independently and compared coefficientwise. Identities
// with an internal parameter (j, l0, k) are checked for every admissible value.
// Throws ParamPole when a needed constructor or coefficient has a pole, and
// std::invalid_argument when n is below the identity's range.
IdentityResult verify_identity(IdentityTag tag, int n, const Params& p);

}  // namespace xlbp
