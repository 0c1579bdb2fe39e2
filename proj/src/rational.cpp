#include "braidties/rational.hpp"

#include <ostream>

namespace braidties {

Rational::Rational(long num, long den) {
    if (den == 0) throw MathError("Rational: zero denominator");
    v_ = mpq_class(num, den);
    v_.canonicalize();
}

Rational Rational::parse(std::string_view text) {
    std::string s(text);
    auto slash = s.find('/');
    try {
        if (slash == std::string::npos) return Rational(mpq_class(mpz_class(s)));
        mpz_class num(s.substr(0, slash));
        mpz_class den(s.substr(slash + 1));
        if (den == 0) throw MathError("Rational: zero denominator in '" + s + "'");
        return Rational(mpq_class(num, den));
    } catch (const std::invalid_argument&) {
        throw std::invalid_argument("Rational: cannot parse '" + s + "'");
    }
}

Rational& Rational::operator/=(const Rational& o) {
    if (o.is_zero()) throw MathError("Rational: division by zero");
    v_ /= o.v_;
    return *this;
}

Rational Rational::inverse() const {
    if (is_zero()) throw MathError("Rational: inverse of zero");
    return Rational(mpq_class(1 / v_));
}

std::string Rational::to_fraction_string() const {
    return v_.get_num().get_str() + "/" + v_.get_den().get_str();
}

std::string Rational::to_string() const {
    if (is_integer()) return v_.get_num().get_str();
    return to_fraction_string();
}

std::ostream& operator<<(std::ostream& os, const Rational& r) { return os << r.to_string(); }

}  // namespace braidties
