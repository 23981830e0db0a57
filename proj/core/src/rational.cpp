#include "klines/rational.hpp"

#include <ostream>
#include <stdexcept>

namespace klines {

Rational::Rational(const Integer& num, const Integer& den) {
    if (den == 0) throw std::domain_error("Rational: zero denominator");
    q_.get_num() = num;
    q_.get_den() = den;
    q_.canonicalize();
}

Rational& Rational::operator/=(const Rational& o) {
    if (o.is_zero()) throw std::domain_error("Rational: division by zero");
    q_ /= o.q_;
    return *this;
}

Rational Rational::parse(std::string_view s) {
    auto slash = s.find('/');
    auto parse_int = [&](std::string_view part, bool allow_sign) {
        std::string t(part);
        if (t.empty()) throw std::invalid_argument("Rational: empty component in '" + std::string(s) + "'");
        // mpz's parser tolerates whitespace and a leading '+'; we do not.
        std::size_t i = (allow_sign && t[0] == '-') ? 1 : 0;
        if (i == t.size()) throw std::invalid_argument("Rational: malformed '" + std::string(s) + "'");
        for (; i < t.size(); ++i)
            if (t[i] < '0' || t[i] > '9')
                throw std::invalid_argument("Rational: malformed '" + std::string(s) + "'");
        return Integer(t, 10);
    };
    if (slash == std::string_view::npos) return Rational(parse_int(s, true));
    Integer den = parse_int(s.substr(slash + 1), false);
    if (den == 0) throw std::invalid_argument("Rational: zero denominator in '" + std::string(s) + "'");
    return Rational(parse_int(s.substr(0, slash), true), den);
}

std::string Rational::str() const {
    if (is_integer()) return q_.get_num().get_str();
    return q_.get_num().get_str() + "/" + q_.get_den().get_str();
}

Rational pow(const Rational& base, unsigned long exponent) {
    Integer n, d;
    mpz_pow_ui(n.get_mpz_t(), base.raw().get_num_mpz_t(), exponent);
    mpz_pow_ui(d.get_mpz_t(), base.raw().get_den_mpz_t(), exponent);
    return Rational(n, d);
}

std::ostream& operator<<(std::ostream& os, const Rational& r) { return os << r.str(); }

}  // namespace klines
