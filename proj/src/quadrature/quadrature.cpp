#include "xlbp/quadrature.hpp"

#include <boost/math/constants/constants.hpp>
#include <boost/multiprecision/float128.hpp>

#include <cmath>
#include <algorithm>
#include <functional>
#include <memory>
#include <type_traits>
#include <sstream>

namespace xlbp {

namespace {

using boost::multiprecision::float128;

template <class R>
struct Cx {
    R re{0};
    R im{0};
    Cx operator+(const Cx& o) const { return {re + o.re, im + o.im}; }
    Cx operator-(const Cx& o) const { return {re - o.re, im - o.im}; }
    Cx operator*(const Cx& o) const { return {re * o.re - im * o.im, re * o.im + im * o.re}; }
    Cx operator*(const R& s) const { return {re * s, im * s}; }
    Cx operator/(const Cx& o) const {
        R d = o.re * o.re + o.im * o.im;
        return {(re * o.re + im * o.im) / d, (im * o.re - re * o.im) / d};
    }
    Cx conj() const { return {re, -im}; }
    R abs2() const { return re * re + im * im; }
};

template <class R>
R to_real(const Rational& q) {
    if constexpr (std::is_same_v<R, double>) {
        return q.to_double();
    } else {
        // exact enough: numerator and denominator converted separately
        R n = R(q.num().get_str());
        R d = R(q.den().get_str());
        return n / d;
    }
}

template <class R>
std::string to_str(const R& v) {
    std::ostringstream os;
    os.precision(std::is_same_v<R, double> ? 17 : 34);
    os << std::scientific << v;
    return os.str();
}

template <class R>
double to_d(const R& v) {
    return static_cast<double>(v);
}

template <class R>
struct CPoly {
    std::vector<Cx<R>> c;  // real coefficients stored as complex for reuse
    explicit CPoly(const Poly& p) {
        for (const auto& x : p.coeffs()) c.push_back({to_real<R>(x), R(0)});
    }
    Cx<R> operator()(const Cx<R>& z) const {
        Cx<R> acc;
        for (auto it = c.rbegin(); it != c.rend(); ++it) acc = acc * z + *it;
        return acc;
    }
};

// Pairwise summation over a contiguous range.
template <class R>
Cx<R> pairwise(const std::vector<Cx<R>>& v, std::size_t lo, std::size_t hi) {
    if (hi - lo <= 16) {
        Cx<R> s;
        for (std::size_t i = lo; i < hi; ++i) s = s + v[i];
        return s;
    }
    std::size_t mid = lo + (hi - lo) / 2;
    return pairwise(v, lo, mid) + pairwise(v, mid, hi);
}

// Node data on the circle.
template <class R>
struct Node {
    Cx<R> z;          // e^{ix}
    Cx<R> one_minus;  // 1 - z, computed without cancellation
    Cx<R> w;          // classical weight
    R dx;             // quadrature weight including 1/(2pi) and the Jacobian
};

template <class R>
std::vector<Node<R>> make_nodes(int N, bool subst, const Params& p) {
    using std::cos;
    using std::exp;
    using std::pow;
    using std::sin;
    const R pi = boost::math::constants::pi<R>();
    const R ab = to_real<R>(p.alpha + p.beta);
    const R amb = to_real<R>(p.alpha - p.beta);
    std::vector<Node<R>> nodes(static_cast<std::size_t>(N));
    for (int i = 0; i < N; ++i) {
        R x, xc, dx;  // x, 2pi - x
        if (subst) {
            R t = (R(i) + R(0.5)) * pi / R(N);
            R s = sin(t / 2), c = cos(t / 2);
            x = 2 * pi * s * s;   // pi (1 - cos t)
            xc = 2 * pi * c * c;  // pi (1 + cos t)
            dx = pi * sin(t) * (pi / R(N)) / (2 * pi);
        } else {
            x = (R(i) + R(0.5)) * 2 * pi / R(N);
            xc = (R(N - i) - R(0.5)) * 2 * pi / R(N);
            dx = R(1) / R(N);
        }
        R half = x <= pi ? sin(x / 2) : sin(xc / 2);  // sin(x/2) > 0
        R ph = (x - pi) / 2;
        Node<R> nd;
        nd.z = {cos(x), sin(x)};
        nd.one_minus = Cx<R>{cos(ph), sin(ph)} * (2 * half);
        R mag = pow(2 * half, ab);
        R wp = amb * ph;
        nd.w = Cx<R>{cos(wp), sin(wp)} * mag;
        nd.dx = dx;
        nodes[static_cast<std::size_t>(i)] = nd;
    }
    return nodes;
}

struct Family {
    std::vector<Poly> left;   // evaluated at z
    std::vector<Poly> right;  // evaluated at 1/z
    int j0 = 0;               // 0: classical weight only
    WeightFactor wf;
};

template <class R>
std::vector<std::vector<QuadValue>> integrate(const Family& fam, const Params& p, const QuadConfig& cfg) {
    const bool subst = effective_exponent(fam.j0, p) <= Rational(2);
    std::vector<CPoly<R>> L, Rt;
    for (const auto& x : fam.left) L.emplace_back(x);
    for (const auto& x : fam.right) Rt.emplace_back(x);
    const std::size_t nl = L.size(), nr = Rt.size();
    std::vector<std::vector<Cx<R>>> prev(nl, std::vector<Cx<R>>(nr));
    std::vector<std::vector<QuadValue>> out(nl, std::vector<QuadValue>(nr));
    std::vector<double> history;

    std::unique_ptr<CPoly<R>> den;
    R cr(0);
    if (fam.j0 != 0) {
        den = std::make_unique<CPoly<R>>(fam.wf.denominator);
        cr = to_real<R>(fam.wf.constant_ratio);
    }

    int N = cfg.num_points;
    for (int level = 0; level <= cfg.refinement_levels; ++level, N *= 2) {
        auto nodes = make_nodes<R>(N, subst, p);
        std::vector<Cx<R>> base(nodes.size());
        std::vector<Cx<R>> c0v(nodes.size());
        for (std::size_t i = 0; i < nodes.size(); ++i) {
            const auto& nd = nodes[i];
            Cx<R> w = nd.w * nd.dx;
            c0v[i] = w;
            if (fam.j0 != 0) {
                Cx<R> zp{R(1), R(0)};
                for (int k = 0; k < fam.wf.monomial_power; ++k) zp = zp * nd.z;
                Cx<R> d = (*den)(nd.z);
                Cx<R> ratio = zp * cr / (d * d);
                if (fam.wf.linear == WeightFactor::Linear::z_minus_one)
                    ratio = ratio * (Cx<R>{} - nd.one_minus);
                else
                    ratio = ratio / nd.one_minus;
                w = w * ratio;
            }
            base[i] = w;
        }
        Cx<R> c0 = pairwise(c0v, 0, c0v.size());
        std::vector<std::vector<Cx<R>>> lv(nl, std::vector<Cx<R>>(nodes.size()));
        std::vector<std::vector<Cx<R>>> rv(nr, std::vector<Cx<R>>(nodes.size()));
        for (std::size_t i = 0; i < nodes.size(); ++i) {
            for (std::size_t a = 0; a < nl; ++a) lv[a][i] = L[a](nodes[i].z);
            for (std::size_t b = 0; b < nr; ++b) rv[b][i] = Rt[b](nodes[i].z.conj());
        }
        std::vector<Cx<R>> prod(nodes.size());
        R worst(0);
        std::vector<std::vector<Cx<R>>> cur(nl, std::vector<Cx<R>>(nr));
        for (std::size_t a = 0; a < nl; ++a) {
            for (std::size_t b = 0; b < nr; ++b) {
                for (std::size_t i = 0; i < nodes.size(); ++i) prod[i] = base[i] * lv[a][i] * rv[b][i];
                cur[a][b] = pairwise(prod, 0, prod.size()) / c0;
                if (level > 0) {
                    R e = (cur[a][b] - prev[a][b]).abs2();
                    if (e > worst) worst = e;
                }
            }
        }
        using std::sqrt;
        double est = to_d(sqrt(worst));
        if (level > 0) history.push_back(est);
        prev = cur;
        if (level > 0 && est <= cfg.tolerance) {
            for (std::size_t a = 0; a < nl; ++a)
                for (std::size_t b = 0; b < nr; ++b) {
                    auto& q = out[a][b];
                    q.re = to_d(cur[a][b].re);
                    q.im = to_d(cur[a][b].im);
                    q.re_str = to_str(cur[a][b].re);
                    q.im_str = to_str(cur[a][b].im);
                    q.error_estimate = est;
                    q.points = N;
                    q.history = history;
                }
            return out;
        }
    }
    std::ostringstream os;
    os << "quadrature did not reach tolerance " << cfg.tolerance << " after " << cfg.refinement_levels
       << " refinements (last estimate " << (history.empty() ? -1.0 : history.back()) << ") at " << p.str();
    throw NonConvergence(os.str());
}

std::vector<std::vector<QuadValue>> dispatch(const Family& fam, const Params& p, const QuadConfig& cfg) {
    cfg.validate();
    if (!p.positive())
        throw std::invalid_argument("quadrature needs alpha > -1, beta > -1, alpha+beta > -1, got " + p.str());
    if (effective_exponent(fam.j0, p) <= Rational(-1))
        throw std::invalid_argument("weight is not integrable at z = 1 for j0=" + std::to_string(fam.j0) + " at " +
                                    p.str());
    if (cfg.precision_bits == 53) return integrate<double>(fam, p, cfg);
    return integrate<float128>(fam, p, cfg);
}

}  // namespace

void QuadConfig::validate() const {
    if (num_points < 16) throw std::invalid_argument("num_points must be >= 16");
    if (!(tolerance > 0)) throw std::invalid_argument("tolerance must be positive");
    if (refinement_levels < 1) throw std::invalid_argument("refinement_levels must be >= 1");
    if (precision_bits != 53 && precision_bits != 113)
        throw std::invalid_argument("precision_bits must be 53 or 113");
}

Rational effective_exponent(int j0, const Params& p) {
    Rational e = p.alpha + p.beta;
    if (j0 == 1 || j0 == 3) e += 1;
    if (j0 == 2 || j0 == 4) e -= 1;
    return e;
}

double min_modulus_ratio(const Poly& d, int samples) {
    CPoly<double> f(d);
    const double pi = boost::math::constants::pi<double>();
    double lo = HUGE_VAL, hi = 0;
    for (int i = 0; i < samples; ++i) {
        double x = 2 * pi * (i + 0.5) / samples;
        double m = std::sqrt(f(Cx<double>{std::cos(x), std::sin(x)}).abs2());
        lo = std::min(lo, m);
        hi = std::max(hi, m);
    }
    return hi > 0 ? lo / hi : 0;
}

std::vector<std::vector<QuadValue>> classical_quad_table(int max_n, const Params& p, const QuadConfig& cfg) {
    Family fam;
    for (int n = 0; n <= max_n; ++n) {
        fam.left.push_back(hr_poly(n, p));
        fam.right.push_back(hr_partner(n, p));
    }
    return dispatch(fam, p, cfg);
}

QuadValue classical_quad(int n, int m, const Params& p, const QuadConfig& cfg) {
    Family fam;
    fam.left.push_back(hr_poly(n, p));
    fam.right.push_back(hr_partner(m, p));
    return dispatch(fam, p, cfg)[0][0];
}

std::vector<std::vector<QuadValue>> exceptional_quad_table(int j0, int l0, const std::vector<int>& ns,
                                                           const Params& p, const QuadConfig& cfg) {
    Family fam;
    fam.j0 = j0;
    fam.wf = x_weight_factor(j0, l0, p);
    double ratio = min_modulus_ratio(fam.wf.denominator);
    if (ratio < 1e-3) {
        std::ostringstream os;
        os << "weight denominator nearly vanishes on the unit circle (min/max = " << ratio << ") for j0=" << j0
           << " l0=" << l0 << " at " << p.str();
        throw DenominatorNearContour(os.str());
    }
    for (int n : ns) {
        XIndex idx{j0, l0, n};
        fam.left.push_back(x_poly(idx, p).poly);
        fam.right.push_back(x_partner(idx, p).poly);
    }
    return dispatch(fam, p, cfg);
}

QuadValue exceptional_quad(const XIndex& idx_n, const XIndex& idx_m, const Params& p, const QuadConfig& cfg) {
    if (idx_n.j0 != idx_m.j0 || idx_n.l0 != idx_m.l0)
        throw std::invalid_argument("exceptional_quad: indices from different families");
    if (!idx_n.admissible() || !idx_m.admissible() || idx_n.n < 0 || idx_m.n < 0)
        throw InadmissibleIndex(idx_n.str() + " / " + idx_m.str());
    Family fam;
    fam.j0 = idx_n.j0;
    fam.wf = x_weight_factor(idx_n.j0, idx_n.l0, p);
    double ratio = min_modulus_ratio(fam.wf.denominator);
    if (ratio < 1e-3) {
        std::ostringstream os;
        os << "weight denominator nearly vanishes on the unit circle (min/max = " << ratio << ") at " << p.str();
        throw DenominatorNearContour(os.str());
    }
    fam.left.push_back(x_poly(idx_n, p).poly);
    fam.right.push_back(x_partner(idx_m, p).poly);
    return dispatch(fam, p, cfg)[0][0];
}

}  // namespace xlbp
