#pragma once

#include <stdexcept>
#include <string>

#include "horolat/rational.hpp"

namespace horolat {

/// Element of Q(i): re + im*i with exact rational parts.
struct GaussianRational {
    Rational re, im;

    GaussianRational() : re(0), im(0) {}
    GaussianRational(Rational r) : re(std::move(r)), im(0) {}
    GaussianRational(Rational r, Rational i) : re(std::move(r)), im(std::move(i)) {}
    GaussianRational(long r) : re(r), im(0) {}
    GaussianRational(long r, long i) : re(r), im(i) {}

    static GaussianRational unit_i() { return {Rational(0), Rational(1)}; }

    bool is_zero() const { return sgn(re) == 0 && sgn(im) == 0; }
    bool is_real() const { return sgn(im) == 0; }

    GaussianRational conj() const { return {re, -im}; }

    /// |z|^2 = z * conj(z), a nonnegative rational.
    Rational abs2() const { return re * re + im * im; }

    GaussianRational operator-() const { return {-re, -im}; }

    friend GaussianRational operator+(const GaussianRational& a, const GaussianRational& b) {
        return {a.re + b.re, a.im + b.im};
    }
    friend GaussianRational operator-(const GaussianRational& a, const GaussianRational& b) {
        return {a.re - b.re, a.im - b.im};
    }
    friend GaussianRational operator*(const GaussianRational& a, const GaussianRational& b) {
        return {a.re * b.re - a.im * b.im, a.re * b.im + a.im * b.re};
    }
    friend GaussianRational operator/(const GaussianRational& a, const GaussianRational& b) {
        Rational n = b.abs2();
        if (sgn(n) == 0) throw std::invalid_argument("gaussian rational: division by zero");
        return {(a.re * b.re + a.im * b.im) / n, (a.im * b.re - a.re * b.im) / n};
    }

    GaussianRational& operator+=(const GaussianRational& b) { return *this = *this + b; }
    GaussianRational& operator-=(const GaussianRational& b) { return *this = *this - b; }
    GaussianRational& operator*=(const GaussianRational& b) { return *this = *this * b; }

    friend bool operator==(const GaussianRational& a, const GaussianRational& b) {
        return a.re == b.re && a.im == b.im;
    }
    friend bool operator!=(const GaussianRational& a, const GaussianRational& b) { return !(a == b); }
};

inline std::string gaussian_str(const GaussianRational& z) {
    return rational_str(z.re) + (sgn(z.im) >= 0 ? "+" : "") + rational_str(z.im) + "i";
}

// Scalar shims shared by Matrix<T> for both scalar types.
inline bool scalar_is_zero(const Rational& x) { return sgn(x) == 0; }
inline bool scalar_is_zero(const GaussianRational& z) { return z.is_zero(); }
inline Rational scalar_abs2(const Rational& x) { return x * x; }
inline Rational scalar_abs2(const GaussianRational& z) { return z.abs2(); }
inline std::string scalar_str(const Rational& x) { return rational_str(x); }
inline std::string scalar_str(const GaussianRational& z) {
    return rational_str(z.re) + "," + rational_str(z.im);
}
inline std::size_t scalar_height(const Rational& x) { return digit_height(x); }
inline std::size_t scalar_height(const GaussianRational& z) {
    std::size_t a = digit_height(z.re), b = digit_height(z.im);
    return a > b ? a : b;
}

}  // namespace horolat
