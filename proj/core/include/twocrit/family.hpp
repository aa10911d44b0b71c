#pragma once

#include <complex>

#include "twocrit/ext_complex.hpp"

namespace twocrit {

// One member of the rational family
//
//     f_t(z) = t z^m ((1 - z) / (1 + z))^n,   m >= 2, n >= 1, t != 0,
//
// with superattracting fixed points 0 and infinity and the two free critical
// points alpha, beta (roots of m z^2 + 2n z - m).
struct FamilyParams {
    int m;
    int n;
    ExtComplex t;  // finite, nonzero

    FamilyParams(int m_, int n_, ExtComplex t_);
    FamilyParams(int m_, int n_, std::complex<double> t_);

    int degree() const { return m + n; }
    std::complex<double> tv() const { return t.value(); }
};

// Free critical points and their |t|=1 critical values.
// Invariants: alpha * beta = -1, alpha + beta = -2n/m, 0 < alpha < 1 < |beta|,
// |v_alpha_1 * v_beta_1| = 1.
struct CriticalData {
    double alpha;
    double beta;
    double v_alpha_1;  // f_1(alpha), the maximum of f_1 on [0,1]
    double v_beta_1;   // f_1(beta) = (-1)^d / v_alpha_1
};

// Radius r (for |t| = 1) with g(r) = r^{m-1} ((1+r)/(1-r))^n <= safety < 1 and
// v_alpha_1 < r. For 0 < |t| <= 1 the disc |z| < r|t| is forward invariant
// and absorbs [0,1].
struct TrapDisc {
    double radius_unit;
    double safety;
};

// f_t(z); total on the sphere. z = -1 (to within 1e-13) and z = infinity map
// to infinity, z in {0, 1} maps to 0.
ExtComplex eval_map(const FamilyParams& p, const ExtComplex& z);

// f_t'(z) = t z^{m-1} ((1-z)/(1+z))^{n-1} (m(1-z^2) - 2nz) / (1+z)^2.
// Throws std::domain_error at the pole and at infinity.
ExtComplex eval_derivative(const FamilyParams& p, const ExtComplex& z);

CriticalData critical_data(int m, int n);

// Parameter of the conjugate map obtained from z -> -1/z: 1/t for odd degree
// d = m + n, -1/t for even d. Involution.
ExtComplex conjugate_param(const ExtComplex& t, int d);

// g(r) = r^{m-1} ((1+r)/(1-r))^n, strictly increasing on (0,1).
double trap_growth(int m, int n, double r);

// Finds r with g(r) <= safety and v_alpha_1 < r by bisection on
// [v_alpha_1 + eps, 1 - eps]. Throws std::domain_error when infeasible.
TrapDisc trap_disc(int m, int n, double safety = 0.9);

// R = max(2, (2 * 3^n / |t|)^{1/(m-1)}); |z| >= R implies |f_t(z)| >= 2|z|.
double escape_radius(const FamilyParams& p);

// Radius of a certified attraction disc of 0 for arbitrary t: the forward
// orbit of any |z| below it contracts toward 0 by at least the trap safety
// factor per step. Equals radius_unit * |t| for |t| <= 1 (the Lemma-style
// disc) and shrinks like |t|^{-1/(m-1)} for |t| > 1.
double zero_trap_radius(const FamilyParams& p, const TrapDisc& trap);

// P_c(z) = c z^m (z + 1)^n, the polynomial model family. Critical points
// 0, -1 and the free one at -m/(m+n).
ExtComplex pc_eval(const ExtComplex& c, int m, int n, const ExtComplex& z);

// P_c'(z) = c z^{m-1} (z+1)^{n-1} ((m+n) z + m). Throws at infinity.
ExtComplex pc_derivative(const ExtComplex& c, int m, int n, const ExtComplex& z);

// Parameter correspondence c_t = -(t + 2 + 1/t)/2 between f_t and P_c.
// Defined for (m,n) = (2,1) only; rejects other exponent pairs.
ExtComplex c_of_t(const ExtComplex& t, int m = 2, int n = 1);

// z^e for integer e >= 0 by repeated squaring; deterministic evaluation
// order shared by the map, derivative and polynomial model.
std::complex<double> ipow(std::complex<double> z, int e);

}  // namespace twocrit
