#ifndef MALT_SCALAR_HPP
#define MALT_SCALAR_HPP

#include <boost/multiprecision/cpp_int.hpp>

#include <compare>
#include <string>
#include <string_view>

#include "malt/errors.hpp"

namespace malt {

using Int = boost::multiprecision::cpp_int;

/// Exact rational number. Always stored in lowest terms with a positive
/// denominator; all arithmetic is exact (no rounding anywhere).
class Scalar {
public:
    Scalar() : v_(0) {}
    Scalar(long long n) : v_(n) {} // NOLINT(google-explicit-constructor)
    Scalar(const Int& n) : v_(n) {} // NOLINT(google-explicit-constructor)

    Scalar(long long num, long long den) : Scalar(Int(num), Int(den)) {}

    Scalar(Int num, Int den) {
        if (den == 0) {
            throw Error("Scalar: zero denominator");
        }
        if (den < 0) {
            num = -num;
            den = -den;
        }
        v_ = Rational(num, den); // canonicalizes
    }

    /// Parses "p", "-p" or "p/q" (optional surrounding whitespace).
    static Scalar parse(std::string_view text);

    Int numerator() const { return boost::multiprecision::numerator(v_); }
    Int denominator() const { return boost::multiprecision::denominator(v_); }

    bool is_zero() const { return v_ == 0; }
    bool is_integer() const { return denominator() == 1; }

    /// Canonical rendering: "p" when integral, "p/q" otherwise, lowest terms.
    std::string str() const;

    friend Scalar operator+(const Scalar& a, const Scalar& b) { return Scalar(Rational(a.v_ + b.v_)); }
    friend Scalar operator-(const Scalar& a, const Scalar& b) { return Scalar(Rational(a.v_ - b.v_)); }
    friend Scalar operator*(const Scalar& a, const Scalar& b) { return Scalar(Rational(a.v_ * b.v_)); }
    friend Scalar operator/(const Scalar& a, const Scalar& b) {
        if (b.is_zero()) {
            throw Error("Scalar: division by zero");
        }
        return Scalar(Rational(a.v_ / b.v_));
    }
    Scalar operator-() const { return Scalar(Rational(-v_)); }

    Scalar& operator+=(const Scalar& o) { v_ += o.v_; return *this; }
    Scalar& operator-=(const Scalar& o) { v_ -= o.v_; return *this; }
    Scalar& operator*=(const Scalar& o) { v_ *= o.v_; return *this; }
    Scalar& operator/=(const Scalar& o) { *this = *this / o; return *this; }

    friend bool operator==(const Scalar& a, const Scalar& b) { return a.v_ == b.v_; }
    friend std::strong_ordering operator<=>(const Scalar& a, const Scalar& b) {
        if (a.v_ < b.v_) return std::strong_ordering::less;
        if (a.v_ > b.v_) return std::strong_ordering::greater;
        return std::strong_ordering::equal;
    }

private:
    using Rational = boost::multiprecision::cpp_rational;
    explicit Scalar(Rational v) : v_(std::move(v)) {}
    Rational v_;
};

} // namespace malt

#endif
