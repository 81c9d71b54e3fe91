#ifndef CELL24_EXACT_HPP
#define CELL24_EXACT_HPP

#include <array>
#include <optional>
#include <string>

#include <boost/multiprecision/cpp_int.hpp>

#include "cell24/errors.hpp"

namespace cell24 {

using Rational = boost::multiprecision::cpp_rational;
using BigInt = boost::multiprecision::cpp_int;

/// An element a + b*sqrt(2) of the field Q(sqrt 2), with arbitrary-precision
/// rational a and b. Every coordinate appearing in a diagram lives here, so
/// equality of table values is decidable (structural equality of (a, b)).
///
/// Operations are pure and values immutable once built; QSqrt2 is safe to
/// share across threads.
class QSqrt2 {
public:
    QSqrt2() : a_(0), b_(0) {}
    QSqrt2(int n) : a_(n), b_(0) {}                       // NOLINT: implicit by design
    QSqrt2(Rational a) : a_(std::move(a)), b_(0) {}       // NOLINT
    QSqrt2(Rational a, Rational b) : a_(std::move(a)), b_(std::move(b)) {}

    static QSqrt2 sqrt2() { return {Rational(0), Rational(1)}; }
    /// 1/sqrt(2) in rationalised form, 0 + (1/2)*sqrt(2).
    static QSqrt2 inv_sqrt2() { return {Rational(0), Rational(1, 2)}; }

    const Rational& rational_part() const { return a_; }
    const Rational& sqrt2_part() const { return b_; }

    bool is_zero() const { return a_ == 0 && b_ == 0; }
    bool is_rational() const { return b_ == 0; }

    QSqrt2 operator-() const { return {-a_, -b_}; }
    QSqrt2 operator+(const QSqrt2& o) const { return {a_ + o.a_, b_ + o.b_}; }
    QSqrt2 operator-(const QSqrt2& o) const { return {a_ - o.a_, b_ - o.b_}; }
    QSqrt2 operator*(const QSqrt2& o) const {
        return {a_ * o.a_ + 2 * b_ * o.b_, a_ * o.b_ + b_ * o.a_};
    }
    QSqrt2& operator+=(const QSqrt2& o) { return *this = *this + o; }
    QSqrt2& operator-=(const QSqrt2& o) { return *this = *this - o; }
    QSqrt2& operator*=(const QSqrt2& o) { return *this = *this * o; }

    /// Galois conjugate a - b*sqrt(2).
    QSqrt2 conjugate() const { return {a_, -b_}; }
    /// Field norm a^2 - 2 b^2 (a rational).
    Rational field_norm() const { return a_ * a_ - 2 * b_ * b_; }

    /// Multiplicative inverse. Throws DivisionByZero on zero.
    QSqrt2 invert() const;
    QSqrt2 operator/(const QSqrt2& o) const { return *this * o.invert(); }

    /// Sign under the real embedding sqrt(2) = 1.41421..., in {-1, 0, +1}.
    int sign() const;

    bool operator==(const QSqrt2& o) const { return a_ == o.a_ && b_ == o.b_; }
    bool operator!=(const QSqrt2& o) const { return !(*this == o); }
    bool operator<(const QSqrt2& o) const { return (*this - o).sign() < 0; }
    bool operator>(const QSqrt2& o) const { return o < *this; }
    bool operator<=(const QSqrt2& o) const { return !(o < *this); }
    bool operator>=(const QSqrt2& o) const { return !(*this < o); }

    /// Floating approximation, relative error well under 2^-50.
    double to_double() const;

    /// Exact human-readable form, e.g. "1+sqrt(2)", "-1/2", "(3/2)*sqrt(2)".
    std::string to_string() const;

private:
    Rational a_, b_;
};

inline QSqrt2 operator*(int n, const QSqrt2& q) { return QSqrt2(n) * q; }

/// Exact square root within Q(sqrt 2), when one exists. Returns the
/// non-negative root; nullopt when the root is irrational over the field.
std::optional<QSqrt2> sqrt_exact(const QSqrt2& q);

template <std::size_t N>
struct VecE {
    std::array<QSqrt2, N> c{};

    QSqrt2& operator[](std::size_t i) { return c[i]; }
    const QSqrt2& operator[](std::size_t i) const { return c[i]; }

    VecE operator+(const VecE& o) const {
        VecE r;
        for (std::size_t i = 0; i < N; ++i) r.c[i] = c[i] + o.c[i];
        return r;
    }
    VecE operator-(const VecE& o) const {
        VecE r;
        for (std::size_t i = 0; i < N; ++i) r.c[i] = c[i] - o.c[i];
        return r;
    }
    VecE operator-() const {
        VecE r;
        for (std::size_t i = 0; i < N; ++i) r.c[i] = -c[i];
        return r;
    }
    VecE operator*(const QSqrt2& s) const {
        VecE r;
        for (std::size_t i = 0; i < N; ++i) r.c[i] = c[i] * s;
        return r;
    }
    QSqrt2 dot(const VecE& o) const {
        QSqrt2 r;
        for (std::size_t i = 0; i < N; ++i) r += c[i] * o.c[i];
        return r;
    }
    QSqrt2 norm2() const { return dot(*this); }

    bool operator==(const VecE& o) const { return c == o.c; }
    bool operator!=(const VecE& o) const { return !(*this == o); }
};

using Vec3E = VecE<3>;
using Vec4E = VecE<4>;

}  // namespace cell24

#endif
