#include "xlbp/rational.hpp"

#include <algorithm>

namespace xlbp {

Rational::Rational(long num, long den) {
    if (den == 0) throw std::domain_error("rational with zero denominator");
    v_ = mpq_class(num, den);
    v_.canonicalize();
}

Rational Rational::parse(std::string_view text) {
    std::string s;
    std::size_t i = 0;
    // U+2212 MINUS SIGN in UTF-8
    if (text.substr(0, 3) == "\xE2\x88\x92") {
        s.push_back('-');
        i = 3;
    }
    for (; i < text.size(); ++i) {
        char c = text[i];
        if (c == ' ') continue;
        s.push_back(c);
    }
    auto bad = [&] { return std::invalid_argument("not a rational: '" + std::string(text) + "'"); };
    if (s.empty()) throw bad();
    auto slash = s.find('/');
    std::string ns = s.substr(0, slash);
    std::string ds = slash == std::string::npos ? "1" : s.substr(slash + 1);
    auto is_int = [](const std::string& t, bool allow_sign) {
        std::size_t k = 0;
        if (allow_sign && !t.empty() && (t[0] == '-' || t[0] == '+')) k = 1;
        if (k >= t.size()) return false;
        return std::all_of(t.begin() + static_cast<long>(k), t.end(), [](char c) { return c >= '0' && c <= '9'; });
    };
    if (!is_int(ns, true) || !is_int(ds, false)) throw bad();
    if (ns[0] == '+') ns.erase(0, 1);
    mpz_class n(ns, 10), d(ds, 10);
    if (d == 0) throw std::invalid_argument("zero denominator in '" + std::string(text) + "'");
    return Rational(mpq_class(n, d));
}

std::string Rational::str() const { return v_.get_str(10); }

std::size_t Rational::bit_size() const {
    return mpz_sizeinbase(v_.get_num_mpz_t(), 2) + mpz_sizeinbase(v_.get_den_mpz_t(), 2);
}

Rational& Rational::operator/=(const Rational& o) {
    if (o.is_zero()) throw std::domain_error("rational division by zero");
    v_ /= o.v_;
    return *this;
}

Rational checked_div(const Rational& num, const Rational& den, std::string_view what) {
    if (den.is_zero()) throw ParamPole(std::string(what) + " = 0");
    return num / den;
}

}  // namespace xlbp
