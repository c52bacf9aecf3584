#include "zagreb/rational.hpp"

#include "zagreb/errors.hpp"

#include <ostream>

namespace zagreb {

Rational::Rational(mpq_class value) : value_(std::move(value)) {
    value_.canonicalize();
}

Rational::Rational(long long num, long long den)
    : value_(static_cast<long>(num), static_cast<long>(den)) {
    if (den == 0) {
        throw InvalidParameterError("rational with zero denominator");
    }
    value_.canonicalize();
}

Rational Rational::operator/(const Rational &o) const {
    if (o.value_ == 0) {
        throw InvalidParameterError("rational division by zero");
    }
    return Rational(value_ / o.value_);
}

bool Rational::is_integer() const {
    return value_.get_den() == 1;
}

std::int64_t Rational::to_int64() const {
    if (!is_integer()) {
        throw OverflowError("rational " + str() + " is not an integer");
    }
    const mpz_class &num = value_.get_num();
    if (!num.fits_slong_p()) {
        throw OverflowError("integer " + str() + " exceeds int64 range");
    }
    return static_cast<std::int64_t>(num.get_si());
}

std::string Rational::str() const {
    return value_.get_str();
}

std::ostream &operator<<(std::ostream &os, const Rational &r) {
    return os << r.str();
}

} // namespace zagreb
