#include "cell24/exact.hpp"

#include <boost/multiprecision/cpp_bin_float.hpp>

namespace cell24 {

namespace {

using Float50 = boost::multiprecision::cpp_bin_float_50;

// Exact rational square root, or nullopt.
std::optional<Rational> sqrt_rational(const Rational& q) {
    if (q < 0) return std::nullopt;
    if (q == 0) return Rational(0);
    const BigInt num = boost::multiprecision::numerator(q);
    const BigInt den = boost::multiprecision::denominator(q);
    const BigInt rn = boost::multiprecision::sqrt(num);
    const BigInt rd = boost::multiprecision::sqrt(den);
    if (rn * rn != num || rd * rd != den) return std::nullopt;
    return Rational(rn, rd);
}

std::string rational_to_string(const Rational& q) {
    return q.str();
}

}  // namespace

QSqrt2 QSqrt2::invert() const {
    if (is_zero()) throw DivisionByZero();
    // 1/(a+b*sqrt2) = (a-b*sqrt2)/(a^2-2b^2); the norm is nonzero since
    // sqrt(2) is irrational.
    const Rational n = field_norm();
    return {a_ / n, -b_ / n};
}

int QSqrt2::sign() const {
    const int sa = a_.sign();
    const int sb = b_.sign();
    if (sb == 0) return sa;
    if (sa == 0) return sb;
    if (sa == sb) return sa;
    // Opposite signs: compare a^2 with 2 b^2.
    const Rational d = a_ * a_ - 2 * b_ * b_;
    if (d == 0) return 0;  // cannot happen for rational a, b not both zero
    return d > 0 ? sa : sb;
}

double QSqrt2::to_double() const {
    static const Float50 root2 = boost::multiprecision::sqrt(Float50(2));
    const Float50 v = Float50(a_) + Float50(b_) * root2;
    return v.convert_to<double>();
}

std::string QSqrt2::to_string() const {
    if (b_ == 0) return rational_to_string(a_);
    std::string s2;
    if (b_ == 1) {
        s2 = "sqrt(2)";
    } else if (b_ == -1) {
        s2 = "-sqrt(2)";
    } else if (boost::multiprecision::denominator(b_) == 1) {
        s2 = rational_to_string(b_) + "*sqrt(2)";
    } else {
        s2 = "(" + rational_to_string(b_) + ")*sqrt(2)";
    }
    if (a_ == 0) return s2;
    if (b_ > 0) return rational_to_string(a_) + "+" + s2;
    return rational_to_string(a_) + s2;
}

std::optional<QSqrt2> sqrt_exact(const QSqrt2& q) {
    if (q.sign() < 0) return std::nullopt;
    if (q.is_zero()) return QSqrt2();
    const Rational& a = q.rational_part();
    const Rational& b = q.sqrt2_part();
    if (b == 0) {
        // sqrt(a) is either rational or of the form d*sqrt(2).
        if (auto r = sqrt_rational(a)) return QSqrt2(*r);
        if (auto r = sqrt_rational(a / 2)) return QSqrt2(Rational(0), *r);
        return std::nullopt;
    }
    // (c + d*sqrt2)^2 = q needs c^2 + 2d^2 = a and 2cd = b, so c^2 solves
    // x^2 - a x + b^2/2 = 0; the discriminant a^2 - 2b^2 must be a rational
    // square.
    const auto disc = sqrt_rational(q.field_norm());
    if (!disc) return std::nullopt;
    const std::array<Rational, 2> candidates = {Rational((a + *disc) / 2),
                                                Rational((a - *disc) / 2)};
    for (const Rational& c2 : candidates) {
        if (c2 <= 0) continue;
        if (auto c = sqrt_rational(c2)) {
            const Rational d = b / (2 * *c);
            QSqrt2 root(*c, d);
            if (root * root == q) return root.sign() >= 0 ? root : -root;
        }
    }
    return std::nullopt;
}

}  // namespace cell24
