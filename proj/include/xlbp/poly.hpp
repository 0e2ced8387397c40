#pragma once

#include "xlbp/rational.hpp"

#include <initializer_list>
#include <string>
#include <vector>

namespace xlbp {

// Dense univariate polynomial with rational coefficients, lowest degree first.
// The zero polynomial has no stored coefficients and degree kZeroDegree.
class Poly {
public:
    static constexpr int kZeroDegree = -1;

    Poly() = default;
    explicit Poly(std::vector<Rational> coeffs);
    Poly(std::initializer_list<Rational> coeffs) : Poly(std::vector<Rational>(coeffs)) {}

    static Poly constant(const Rational& c) { return Poly({c}); }
    static Poly monomial(const Rational& c, int k);
    static Poly z() { return monomial(1, 1); }

    int degree() const { return static_cast<int>(c_.size()) - 1; }
    bool is_zero() const { return c_.empty(); }
    // Coefficient of z^k; zero outside the stored range.
    Rational coeff(int k) const;
    const std::vector<Rational>& coeffs() const { return c_; }
    Rational leading() const { return is_zero() ? Rational(0) : c_.back(); }
    bool is_monic() const { return !is_zero() && c_.back() == Rational(1); }

    Rational eval(const Rational& x) const;
    Poly derivative() const;
    // Antiderivative with zero constant term.
    Poly antiderivative() const;
    Poly scaled(const Rational& s) const;
    // Multiplication by z^k, k >= 0.
    Poly shifted(int k) const;
    // z^n p(1/z); requires n >= degree().
    Poly reversed(int n) const;

    Poly& operator+=(const Poly& o);
    Poly& operator-=(const Poly& o);
    Poly operator-() const { return scaled(-1); }
    friend Poly operator+(Poly a, const Poly& b) { return a += b; }
    friend Poly operator-(Poly a, const Poly& b) { return a -= b; }
    friend Poly operator*(const Poly& a, const Poly& b);
    friend Poly operator*(const Rational& s, const Poly& p) { return p.scaled(s); }
    friend bool operator==(const Poly& a, const Poly& b) { return a.c_ == b.c_; }

    std::vector<std::string> coeff_strings() const;
    std::string str() const;

private:
    void trim();
    std::vector<Rational> c_;
};

struct PolyDivision {
    Poly quotient;
    Poly remainder;
    bool divisible() const { return remainder.is_zero(); }
};

// Euclidean division p = d*quotient + remainder with deg remainder < deg d.
// Throws std::domain_error when d is zero.
PolyDivision divmod(const Poly& p, const Poly& d);

// Laurent polynomial sum_{k=min_exp}^{max_exp} c_k z^k. Normalized so that the
// extreme stored coefficients are nonzero; zero has min_exp 0 and no coefficients.
class LaurentPoly {
public:
    LaurentPoly() = default;
    LaurentPoly(const Poly& p);  // NOLINT(google-explicit-constructor)
    LaurentPoly(int min_exp, std::vector<Rational> coeffs);

    static LaurentPoly monomial(const Rational& c, int k);

    bool is_zero() const { return c_.empty(); }
    int min_exp() const { return min_exp_; }
    int max_exp() const { return min_exp_ + static_cast<int>(c_.size()) - 1; }
    Rational coeff(int k) const;
    const std::vector<Rational>& coeffs() const { return c_; }

    bool is_polynomial() const { return is_zero() || min_exp_ >= 0; }
    // Throws std::domain_error if negative powers are present.
    Poly to_poly() const;
    // Drops negative powers.
    Poly nonnegative_part() const;

    LaurentPoly derivative() const;
    // z -> 1/z
    LaurentPoly inverted() const;
    // Multiplication by z^k for any integer k.
    LaurentPoly shifted(int k) const;
    LaurentPoly scaled(const Rational& s) const;
    Rational eval(const Rational& x) const;

    LaurentPoly& operator+=(const LaurentPoly& o);
    LaurentPoly& operator-=(const LaurentPoly& o);
    LaurentPoly operator-() const { return scaled(-1); }
    friend LaurentPoly operator+(LaurentPoly a, const LaurentPoly& b) { return a += b; }
    friend LaurentPoly operator-(LaurentPoly a, const LaurentPoly& b) { return a -= b; }
    friend LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b);
    friend bool operator==(const LaurentPoly& a, const LaurentPoly& b) {
        return a.min_exp_ == b.min_exp_ && a.c_ == b.c_;
    }

    std::string str() const;

private:
    void normalize();
    int min_exp_ = 0;
    std::vector<Rational> c_;
};

struct LaurentDivision {
    LaurentPoly quotient;
    LaurentPoly remainder;  // p - d*quotient
    bool divisible() const { return remainder.is_zero(); }
};

// Strips the z-power of both operands, long-divides the remaining polynomials
// and shifts back. Throws std::domain_error when d is zero.
LaurentDivision exact_div(const LaurentPoly& p, const LaurentPoly& d);

}  // namespace xlbp
