#pragma once

#include <cmath>
#include <complex>
#include <ostream>

namespace twocrit {

// Point on the Riemann sphere: a finite complex number or the explicit point
// at infinity. When at_infinity is set the components are ignored; otherwise
// both are finite. Arithmetic that would overflow or hit a pole routes to the
// infinity representative instead of leaking NaN/Inf components.
struct ExtComplex {
    double re = 0.0;
    double im = 0.0;
    bool at_infinity = false;

    constexpr ExtComplex() = default;
    constexpr ExtComplex(double r, double i) : re(r), im(i) {}
    explicit ExtComplex(std::complex<double> v) : re(v.real()), im(v.imag()) {}

    static constexpr ExtComplex infinity() {
        ExtComplex p;
        p.at_infinity = true;
        return p;
    }

    // Folds non-finite components into the infinity representative.
    static ExtComplex from(std::complex<double> v) {
        if (!std::isfinite(v.real()) || !std::isfinite(v.imag()))
            return infinity();
        return ExtComplex(v);
    }

    bool finite() const { return !at_infinity; }
    std::complex<double> value() const { return {re, im}; }
    double abs() const {
        return at_infinity ? std::numeric_limits<double>::infinity()
                           : std::hypot(re, im);
    }
};

inline bool operator==(const ExtComplex& a, const ExtComplex& b) {
    if (a.at_infinity || b.at_infinity) return a.at_infinity == b.at_infinity;
    return a.re == b.re && a.im == b.im;
}

inline std::ostream& operator<<(std::ostream& os, const ExtComplex& z) {
    if (z.at_infinity) return os << "inf";
    return os << "(" << z.re << "," << z.im << ")";
}

}  // namespace twocrit
