#include "maxcert/rational.hpp"

#include <cctype>
#include <ostream>
#include <stdexcept>

#include "maxcert/errors.hpp"

namespace maxcert {

Rational::Rational(long num, long den) : Rational(mpz_class(num), mpz_class(den)) {}

Rational::Rational(const mpz_class& num, const mpz_class& den) {
    if (den == 0) {
        throw std::invalid_argument("rational denominator must be nonzero");
    }
    value_ = mpq_class(num, den);
    value_.canonicalize();
}

Rational::Rational(mpq_class q) : value_(std::move(q)) {
    value_.canonicalize();
}

Rational& Rational::operator/=(const Rational& o) {
    if (o.is_zero()) {
        throw std::invalid_argument("division by zero rational");
    }
    value_ /= o.value_;
    return *this;
}

Rational Rational::from_string(std::string_view text) {
    auto fail = [&](const char* why) -> Rational {
        throw ParseError("malformed rational \"" + std::string(text) + "\": " + why);
    };

    size_t i = 0;
    if (i < text.size() && text[i] == '-') ++i;
    size_t num_begin = i;
    while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) ++i;
    if (i == num_begin) return fail("expected digits");
    std::string num(text.substr(0, i));

    std::string den = "1";
    if (i < text.size()) {
        if (text[i] != '/') return fail("unexpected character");
        ++i;
        size_t den_begin = i;
        while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) ++i;
        if (i == den_begin || i != text.size()) return fail("invalid denominator");
        den.assign(text.substr(den_begin));
    }

    mpz_class d(den, 10);
    if (d == 0) return fail("zero denominator");
    return Rational(mpz_class(num, 10), d);
}

std::string Rational::str() const {
    if (value_.get_den() == 1) {
        return value_.get_num().get_str();
    }
    return value_.get_num().get_str() + "/" + value_.get_den().get_str();
}

Rational Rational::pow(const Rational& base, unsigned long exp) {
    mpz_class num, den;
    mpz_pow_ui(num.get_mpz_t(), base.numerator().get_mpz_t(), exp);
    mpz_pow_ui(den.get_mpz_t(), base.denominator().get_mpz_t(), exp);
    return Rational(num, den);   // coprime parts stay coprime under powers
}

std::ostream& operator<<(std::ostream& os, const Rational& r) {
    return os << r.str();
}

} // namespace maxcert
