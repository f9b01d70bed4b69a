#pragma once
// High precision complex numbers, used for embeddings and sign decisions only.

#include <boost/math/constants/constants.hpp>
#include <boost/multiprecision/mpfr.hpp>

#include <map>
#include <mutex>
#include <string>
#include <utility>
#include <vector>

namespace hurwitz {

using Real = boost::multiprecision::mpfr_float;

inline constexpr unsigned default_digits = 60;

// The mpfr default precision is process wide; set it once before any threads start.
inline void set_working_precision(unsigned digits) {
    Real::default_precision(digits + 10);
}

struct Complex {
    Real re{0};
    Real im{0};

    Complex() = default;
    Complex(Real r, Real i = Real(0)) : re(std::move(r)), im(std::move(i)) {}

    Complex& operator+=(const Complex& o) {
        re += o.re;
        im += o.im;
        return *this;
    }
    Complex& operator-=(const Complex& o) {
        re -= o.re;
        im -= o.im;
        return *this;
    }
    friend Complex operator+(Complex a, const Complex& b) { return a += b; }
    friend Complex operator-(Complex a, const Complex& b) { return a -= b; }
    friend Complex operator-(const Complex& a) { return Complex(-a.re, -a.im); }
    friend Complex operator*(const Complex& a, const Complex& b) {
        return Complex(a.re * b.re - a.im * b.im, a.re * b.im + a.im * b.re);
    }
    friend Complex operator/(const Complex& a, const Complex& b) {
        Real d = b.re * b.re + b.im * b.im;
        return Complex((a.re * b.re + a.im * b.im) / d, (a.im * b.re - a.re * b.im) / d);
    }
    Real norm() const { return re * re + im * im; }
    Real abs() const { return boost::multiprecision::sqrt(norm()); }

    std::string str(int digits = 20) const {
        std::string s = re.str(digits);
        s += im < 0 ? " - " : " + ";
        s += Real(boost::multiprecision::abs(im)).str(digits);
        s += "i";
        return s;
    }
};

inline Real pi() { return boost::math::constants::pi<Real>(); }

// exp(2 pi i k / n) for k = 0..n-1, cached per (n, precision)
inline const std::vector<Complex>& roots_of_unity(int n) {
    static std::mutex mu;
    static std::map<std::pair<int, unsigned>, std::vector<Complex>> cache;
    const unsigned prec = Real::default_precision();
    std::lock_guard lock(mu);
    auto key = std::make_pair(n, prec);
    auto it = cache.find(key);
    if (it != cache.end()) return it->second;
    std::vector<Complex> r(n);
    const Real two_pi = 2 * pi();
    for (int k = 0; k < n; ++k) {
        Real a = two_pi * k / n;
        r[k] = Complex(boost::multiprecision::cos(a), boost::multiprecision::sin(a));
    }
    return cache.emplace(key, std::move(r)).first->second;
}

// |a - b| <= tol * max(1, |a|, |b|)
inline bool approx_equal(const Complex& a, const Complex& b, const Real& tol) {
    Real scale = 1;
    Real na = a.abs(), nb = b.abs();
    if (na > scale) scale = na;
    if (nb > scale) scale = nb;
    return (a - b).abs() <= tol * scale;
}

}  // namespace hurwitz
