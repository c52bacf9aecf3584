#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>

#include <gmpxx.h>

namespace zagreb {

// Arbitrary-precision rational, always kept in canonical reduced form.
// Thin value wrapper over GMP's mpq_class; equality is exact.
class Rational {
public:
    Rational() : value_(0) {}
    Rational(long long value) : value_(static_cast<long>(value)) {} // NOLINT(google-explicit-constructor)
    Rational(long long num, long long den);

    Rational operator+(const Rational &o) const { return Rational(value_ + o.value_); }
    Rational operator-(const Rational &o) const { return Rational(value_ - o.value_); }
    Rational operator*(const Rational &o) const { return Rational(value_ * o.value_); }
    Rational operator/(const Rational &o) const; // throws InvalidParameterError on /0
    Rational operator-() const { return Rational(-value_); }

    bool operator==(const Rational &o) const { return value_ == o.value_; }
    bool operator!=(const Rational &o) const { return value_ != o.value_; }
    bool operator<(const Rational &o) const { return value_ < o.value_; }

    bool is_integer() const;
    bool is_zero() const { return value_ == 0; }

    // Integer value; only valid when is_integer() and within int64 range
    // (throws OverflowError otherwise).
    std::int64_t to_int64() const;

    // Exact decimal: "p" when integral, "p/q" otherwise.
    std::string str() const;

private:
    explicit Rational(mpq_class value);

    mpq_class value_;
};

std::ostream &operator<<(std::ostream &os, const Rational &r);

} // namespace zagreb
