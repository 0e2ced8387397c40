#include "xlbp/poly.hpp"

#include <algorithm>
#include <cstdlib>
#include <sstream>
#include <stdexcept>

namespace xlbp {

Poly::Poly(std::vector<Rational> coeffs) : c_(std::move(coeffs)) { trim(); }

void Poly::trim() {
    while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
}

Poly Poly::monomial(const Rational& c, int k) {
    if (k < 0) throw std::invalid_argument("Poly::monomial: negative exponent");
    std::vector<Rational> v(static_cast<std::size_t>(k) + 1);
    v.back() = c;
    return Poly(std::move(v));
}

Rational Poly::coeff(int k) const {
    if (k < 0 || k > degree()) return 0;
    return c_[static_cast<std::size_t>(k)];
}

Rational Poly::eval(const Rational& x) const {
    Rational acc;
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) {
        acc *= x;
        acc += *it;
    }
    return acc;
}

Poly Poly::derivative() const {
    if (c_.size() <= 1) return {};
    std::vector<Rational> v(c_.size() - 1);
    for (std::size_t k = 1; k < c_.size(); ++k) v[k - 1] = c_[k] * Rational(static_cast<long>(k));
    return Poly(std::move(v));
}

Poly Poly::antiderivative() const {
    if (is_zero()) return {};
    std::vector<Rational> v(c_.size() + 1);
    for (std::size_t k = 0; k < c_.size(); ++k) v[k + 1] = c_[k] / Rational(static_cast<long>(k + 1));
    return Poly(std::move(v));
}

Poly Poly::scaled(const Rational& s) const {
    if (s.is_zero()) return {};
    std::vector<Rational> v(c_);
    for (auto& x : v) x *= s;
    return Poly(std::move(v));
}

Poly Poly::shifted(int k) const {
    if (k < 0) throw std::invalid_argument("Poly::shifted: negative shift");
    if (is_zero()) return {};
    std::vector<Rational> v(static_cast<std::size_t>(k));
    v.insert(v.end(), c_.begin(), c_.end());
    return Poly(std::move(v));
}

Poly Poly::reversed(int n) const {
    if (n < degree()) throw std::invalid_argument("Poly::reversed: n below degree");
    std::vector<Rational> v(static_cast<std::size_t>(n) + 1);
    for (int k = 0; k <= degree(); ++k) v[static_cast<std::size_t>(n - k)] = c_[static_cast<std::size_t>(k)];
    return Poly(std::move(v));
}

Poly& Poly::operator+=(const Poly& o) {
    if (o.c_.size() > c_.size()) c_.resize(o.c_.size());
    for (std::size_t k = 0; k < o.c_.size(); ++k) c_[k] += o.c_[k];
    trim();
    return *this;
}

Poly& Poly::operator-=(const Poly& o) {
    if (o.c_.size() > c_.size()) c_.resize(o.c_.size());
    for (std::size_t k = 0; k < o.c_.size(); ++k) c_[k] -= o.c_[k];
    trim();
    return *this;
}

Poly operator*(const Poly& a, const Poly& b) {
    if (a.is_zero() || b.is_zero()) return {};
    std::vector<mpq_class> acc(a.c_.size() + b.c_.size() - 1);
    for (std::size_t i = 0; i < a.c_.size(); ++i) {
        if (a.c_[i].is_zero()) continue;
        for (std::size_t j = 0; j < b.c_.size(); ++j) acc[i + j] += a.c_[i].raw() * b.c_[j].raw();
    }
    std::vector<Rational> v;
    v.reserve(acc.size());
    for (auto& x : acc) v.emplace_back(x);
    return Poly(std::move(v));
}

std::vector<std::string> Poly::coeff_strings() const {
    std::vector<std::string> out;
    out.reserve(c_.size());
    for (const auto& x : c_) out.push_back(x.str());
    return out;
}

std::string Poly::str() const {
    if (is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (int k = degree(); k >= 0; --k) {
        const auto& c = c_[static_cast<std::size_t>(k)];
        if (c.is_zero()) continue;
        if (!first) os << " + ";
        first = false;
        os << "(" << c << ")";
        if (k == 1) os << "*z";
        if (k > 1) os << "*z^" << k;
    }
    return os.str();
}

PolyDivision divmod(const Poly& p, const Poly& d) {
    if (d.is_zero()) throw std::domain_error("polynomial division by zero");
    int dd = d.degree();
    if (p.degree() < dd) return {Poly{}, p};
    std::vector<Rational> r(p.coeffs());
    std::vector<Rational> q(static_cast<std::size_t>(p.degree() - dd + 1));
    const Rational lead = d.leading();
    const auto& dc = d.coeffs();
    for (int i = p.degree() - dd; i >= 0; --i) {
        Rational c = r[static_cast<std::size_t>(i + dd)] / lead;
        q[static_cast<std::size_t>(i)] = c;
        if (c.is_zero()) continue;
        for (int k = 0; k <= dd; ++k) r[static_cast<std::size_t>(i + k)] -= c * dc[static_cast<std::size_t>(k)];
    }
    return {Poly(std::move(q)), Poly(std::move(r))};
}

// ---- LaurentPoly ----

LaurentPoly::LaurentPoly(const Poly& p) : c_(p.coeffs()) { normalize(); }

LaurentPoly::LaurentPoly(int min_exp, std::vector<Rational> coeffs) : min_exp_(min_exp), c_(std::move(coeffs)) {
    normalize();
}

LaurentPoly LaurentPoly::monomial(const Rational& c, int k) { return LaurentPoly(k, {c}); }

void LaurentPoly::normalize() {
    while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
    std::size_t lead = 0;
    while (lead < c_.size() && c_[lead].is_zero()) ++lead;
    if (lead > 0) {
        c_.erase(c_.begin(), c_.begin() + static_cast<long>(lead));
        min_exp_ += static_cast<int>(lead);
    }
    if (c_.empty()) min_exp_ = 0;
}

Rational LaurentPoly::coeff(int k) const {
    if (is_zero() || k < min_exp_ || k > max_exp()) return 0;
    return c_[static_cast<std::size_t>(k - min_exp_)];
}

Poly LaurentPoly::to_poly() const {
    if (!is_polynomial()) throw std::domain_error("LaurentPoly::to_poly: negative powers present");
    return nonnegative_part();
}

Poly LaurentPoly::nonnegative_part() const {
    if (is_zero() || max_exp() < 0) return {};
    std::vector<Rational> v(static_cast<std::size_t>(max_exp()) + 1);
    for (int k = std::max(0, min_exp_); k <= max_exp(); ++k) v[static_cast<std::size_t>(k)] = coeff(k);
    return Poly(std::move(v));
}

LaurentPoly LaurentPoly::derivative() const {
    std::vector<Rational> v(c_.size());
    for (std::size_t i = 0; i < c_.size(); ++i) v[i] = c_[i] * Rational(min_exp_ + static_cast<long>(i));
    return LaurentPoly(min_exp_ - 1, std::move(v));
}

LaurentPoly LaurentPoly::inverted() const {
    if (is_zero()) return {};
    std::vector<Rational> v(c_.rbegin(), c_.rend());
    return LaurentPoly(-max_exp(), std::move(v));
}

LaurentPoly LaurentPoly::shifted(int k) const {
    if (is_zero()) return {};
    return LaurentPoly(min_exp_ + k, c_);
}

LaurentPoly LaurentPoly::scaled(const Rational& s) const {
    std::vector<Rational> v(c_);
    for (auto& x : v) x *= s;
    return LaurentPoly(min_exp_, std::move(v));
}

Rational LaurentPoly::eval(const Rational& x) const {
    if (is_zero()) return 0;
    if (x.is_zero() && min_exp_ < 0) throw std::domain_error("LaurentPoly::eval: pole at z = 0");
    Rational acc;
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) {
        acc *= x;
        acc += *it;
    }
    Rational p = 1;
    Rational base = min_exp_ < 0 ? Rational(1) / x : x;
    for (int i = 0; i < std::abs(min_exp_); ++i) p *= base;
    return acc * p;
}

LaurentPoly& LaurentPoly::operator+=(const LaurentPoly& o) {
    if (o.is_zero()) return *this;
    if (is_zero()) return *this = o;
    int lo = std::min(min_exp_, o.min_exp_);
    int hi = std::max(max_exp(), o.max_exp());
    std::vector<Rational> v(static_cast<std::size_t>(hi - lo + 1));
    for (std::size_t i = 0; i < c_.size(); ++i) v[static_cast<std::size_t>(min_exp_ - lo) + i] += c_[i];
    for (std::size_t i = 0; i < o.c_.size(); ++i) v[static_cast<std::size_t>(o.min_exp_ - lo) + i] += o.c_[i];
    min_exp_ = lo;
    c_ = std::move(v);
    normalize();
    return *this;
}

LaurentPoly& LaurentPoly::operator-=(const LaurentPoly& o) { return *this += -o; }

LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b) {
    if (a.is_zero() || b.is_zero()) return {};
    Poly pa(a.c_), pb(b.c_);
    return LaurentPoly(a.min_exp_ + b.min_exp_, (pa * pb).coeffs());
}

std::string LaurentPoly::str() const {
    if (is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (int k = max_exp(); k >= min_exp_; --k) {
        Rational c = coeff(k);
        if (c.is_zero()) continue;
        if (!first) os << " + ";
        first = false;
        os << "(" << c << ")";
        if (k != 0) os << "*z^" << k;
    }
    return os.str();
}

LaurentDivision exact_div(const LaurentPoly& p, const LaurentPoly& d) {
    if (d.is_zero()) throw std::domain_error("Laurent division by zero");
    if (p.is_zero()) return {};
    Poly pn(p.coeffs()), dn(d.coeffs());
    auto qr = divmod(pn, dn);
    LaurentPoly quotient = LaurentPoly(qr.quotient).shifted(p.min_exp() - d.min_exp());
    LaurentPoly remainder = LaurentPoly(qr.remainder).shifted(p.min_exp());
    return {quotient, remainder};
}

}  // namespace xlbp
