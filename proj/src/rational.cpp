#include "weitz/rational.hpp"

#include <stdexcept>

namespace weitz {

Rational::Rational(const mpz_class& num, const mpz_class& den) {
    if (den == 0) {
        throw std::domain_error("rational with zero denominator");
    }
    value_ = mpq_class(num, den);
    value_.canonicalize();
}

Rational Rational::from_string(const std::string& text) {
    mpq_class q;
    if (q.set_str(text, 10) != 0 || q.get_den() == 0) {
        throw std::invalid_argument("not a rational number: '" + text + "'");
    }
    return Rational(q);
}

Rational& Rational::operator/=(const Rational& o) {
    if (o.is_zero()) {
        throw std::domain_error("division by zero");
    }
    value_ /= o.value_;
    return *this;
}

std::string Rational::to_string() const {
    return value_.get_str(10);
}

} // namespace weitz
