#pragma once

#include "xlbp/hr.hpp"
#include "xlbp/poly.hpp"
#include "xlbp/xhr.hpp"

#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace xlbp {

// Antiderivative of the seed polynomial with q(0) = 0; degree l0+1, z | q.
Poly q_poly(int j0, int l0, const Params& p);
// The closed forms through P_{l0+1} at shifted parameters, minus their value at 0.
// Equal to q_poly wherever the shifted constructors are defined.
Poly q_poly_closed_form(int j0, int l0, const Params& p);

// A1/Q^{(j0)}: z(1-z), z, 1-z, -1.
Poly pi_factor(int j0);

// Polynomial form of family member i: x_poly for i >= 0, the constant 1 for
// the extra j0=4 member i = -l0-1, nothing for indices outside the family.
std::optional<Poly> family_member(int j0, int l0, int i, const Params& p);

struct CExpansion {
    XIndex index;
    // c_{n,j} for j = 0..n+l0+1
    std::vector<Rational> coefficients;
    // Xi_n q P_n(z; alpha+1, beta-1) + pi X, the expanded polynomial
    Poly image;
};

CExpansion c_expansion(const XIndex& idx, const Params& p);

// a_0 = 1; j0=1,2: a_l = C^{(l)}_{n,l0+1}; j0=3,4: C^{(l)}_{n,l0+1}(alpha+1, beta-1) Xi_n/Xi_{n-l}.
std::vector<Rational> a_coeffs_formula(const XIndex& idx, const Params& p);
// Alternative reading for j0=3,4 with Xi replaced by -(n - theta), no (n+alpha+1) factor.
std::vector<Rational> a_coeffs_formula_short_xi(const XIndex& idx, const Params& p);

struct ASolveResult {
    bool found = false;
    bool unique = false;
    std::vector<Rational> a;  // length l0+2, a[0] = 1
    std::size_t rank = 0;
    // Slots l whose index n-l is not a family member. Their a_l multiplies
    // nothing; the entry is filled with the formula value.
    std::vector<int> excluded_slots;
};

// Finds a with a_0 = 1 and sum_l a_l c_{n-l,m} = 0 for 0 <= m <= n-l0-1.
ASolveResult a_coeffs_solver(const XIndex& idx, const Params& p);

// banded: l0+2 left terms, right window n-l0..n+l0+1, needs n >= 2l0+1 (CLI "thm12").
// general: k+1 left terms with given a, right side over 0..n+l0+1 (CLI "thm11").
enum class CertifyMode { banded, general };

struct CertifyOptions {
    CertifyMode mode = CertifyMode::banded;
    int k = 0;                  // general only
    std::vector<Rational> a;    // general only; empty means a_l = 1/(l+1)
};

struct RecurrenceCertificate {
    XIndex index;
    Params params;
    CertifyMode mode = CertifyMode::banded;
    int k = 0;
    Poly q;
    std::vector<Rational> a;
    // False when the a-system has a solution family (degenerate parameters);
    // the formula vector is then used.
    bool a_unique = false;
    std::map<int, Rational> b;
    std::pair<int, int> window{0, 0};
    bool residual_zero = false;
    bool b_unique = false;
    std::vector<std::string> method_tags;

    std::vector<int> excluded_slots;    // left slots l with n-l outside the family
    std::vector<int> skipped_columns;   // window indices outside the family
    std::vector<int> extra_columns;     // window additions (the j0=4 member -l0-1)
    std::map<int, Rational> c_tilde;    // sum_l a_l c_{n-l,j}
    bool c_tilde_low_zero = false;      // c_tilde_j = 0 for j <= n-l0-1 (banded) or at excluded indices
    bool dual_route_agrees = false;     // b_j = c_tilde_j / Xi_j wherever Xi_j != 0
    Poly residual;
    std::string failure;

    bool ok() const { return failure.empty(); }
    // Left slots that are members plus window columns that are members.
    int term_count() const;
    int nonzero_term_count() const;
};

// Throws std::invalid_argument on a violated precondition (n >= 2l0+1 for
// banded, 0 <= k <= n for general, a length k+1) and ParamPole on poles.
// A failed certification is reported through `failure`, never thrown.
RecurrenceCertificate certify(const XIndex& idx, const Params& p, const CertifyOptions& opt = {});

// Recomputes q sum a_l P^{(n-l)} - sum b_j P^{(j)} from scratch.
Poly recheck_residual(const RecurrenceCertificate& cert);

// Reference closed forms of four worked cases (j0 = example id, l0 = 1, n = 5),
// evaluated at (alpha, beta). b is keyed by the right-hand index j = 4..7.
struct ExampleOracle {
    Poly q;
    std::vector<Rational> a;  // a_0, a_1, a_2
    std::map<int, Rational> b;
};
ExampleOracle example_oracles(int example_id, const Params& p);

}  // namespace xlbp
