#include "twocrit/family.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

namespace twocrit {

namespace {

constexpr double kPoleEps = 1e-13;  // distance to -1 treated as an exact pole hit

void validate_exponents(int m, int n) {
    if (m < 2) throw std::invalid_argument("family exponent m must be >= 2");
    if (n < 1) throw std::invalid_argument("family exponent n must be >= 1");
}

bool near_pole(const std::complex<double>& z) {
    return std::abs(z + 1.0) <= kPoleEps;
}

}  // namespace

std::complex<double> ipow(std::complex<double> z, int e) {
    std::complex<double> acc(1.0, 0.0);
    while (e > 0) {
        if (e & 1) acc *= z;
        z *= z;
        e >>= 1;
    }
    return acc;
}

FamilyParams::FamilyParams(int m_, int n_, ExtComplex t_) : m(m_), n(n_), t(t_) {
    validate_exponents(m, n);
    if (t.at_infinity) throw std::invalid_argument("parameter t must be finite");
    if (t.re == 0.0 && t.im == 0.0)
        throw std::invalid_argument("parameter t must be nonzero");
}

FamilyParams::FamilyParams(int m_, int n_, std::complex<double> t_)
    : FamilyParams(m_, n_, ExtComplex(t_)) {}

ExtComplex eval_map(const FamilyParams& p, const ExtComplex& z) {
    if (z.at_infinity) return ExtComplex::infinity();
    const std::complex<double> zv = z.value();
    if (near_pole(zv)) return ExtComplex::infinity();
    // f_t = t * f_1 exactly: the |t|=1 part is evaluated first and t scales it.
    const std::complex<double> base =
        ipow(zv, p.m) * ipow((1.0 - zv) / (1.0 + zv), p.n);
    return ExtComplex::from(p.tv() * base);
}

ExtComplex eval_derivative(const FamilyParams& p, const ExtComplex& z) {
    if (z.at_infinity)
        throw std::domain_error("derivative undefined at infinity in the finite chart");
    const std::complex<double> zv = z.value();
    if (near_pole(zv))
        throw std::domain_error("derivative undefined at the pole z = -1");
    const std::complex<double> one(1.0, 0.0);
    const std::complex<double> bracket =
        double(p.m) * (one - zv * zv) - 2.0 * double(p.n) * zv;
    const std::complex<double> d = p.tv() * ipow(zv, p.m - 1) *
                                   ipow((one - zv) / (one + zv), p.n - 1) *
                                   bracket / ((one + zv) * (one + zv));
    return ExtComplex::from(d);
}

CriticalData critical_data(int m, int n) {
    validate_exponents(m, n);
    const double q = double(n) / double(m);
    const double s = std::hypot(1.0, q);  // sqrt(1 + (n/m)^2)
    const double beta = -q - s;           // no cancellation
    const double alpha = -1.0 / beta;     // alpha * beta = -1 by construction
    const FamilyParams f1(m, n, ExtComplex(1.0, 0.0));
    CriticalData cd;
    cd.alpha = alpha;
    cd.beta = beta;
    cd.v_alpha_1 = eval_map(f1, ExtComplex(alpha, 0.0)).re;
    cd.v_beta_1 = eval_map(f1, ExtComplex(beta, 0.0)).re;
    return cd;
}

ExtComplex conjugate_param(const ExtComplex& t, int d) {
    if (t.at_infinity || (t.re == 0.0 && t.im == 0.0))
        throw std::invalid_argument("conjugate_param requires finite nonzero t");
    const std::complex<double> r = 1.0 / t.value();
    return ExtComplex(d % 2 != 0 ? r : -r);
}

double trap_growth(int m, int n, double r) {
    return std::pow(r, m - 1) * std::pow((1.0 + r) / (1.0 - r), n);
}

TrapDisc trap_disc(int m, int n, double safety) {
    validate_exponents(m, n);
    if (!(safety > 0.0 && safety < 1.0))
        throw std::invalid_argument("trap safety must lie in (0,1)");
    const CriticalData cd = critical_data(m, n);
    double lo = cd.v_alpha_1 + 1e-12;
    double hi = 1.0 - 1e-9;
    if (trap_growth(m, n, lo) > safety)
        throw std::domain_error(
            "trap_disc infeasible: g(r) > safety on the whole bracket [" +
            std::to_string(lo) + ", " + std::to_string(hi) + "]");
    // g is strictly increasing, so bisect g(r) = safety and keep the lower
    // endpoint, where g(lo) <= safety is certain.
    for (int i = 0; i < 200 && hi - lo > 1e-16; ++i) {
        const double mid = 0.5 * (lo + hi);
        if (trap_growth(m, n, mid) <= safety)
            lo = mid;
        else
            hi = mid;
    }
    return TrapDisc{lo, safety};
}

double escape_radius(const FamilyParams& p) {
    const double at = p.t.abs();
    return std::max(2.0, std::pow(2.0 * std::pow(3.0, p.n) / at, 1.0 / (p.m - 1)));
}

double zero_trap_radius(const FamilyParams& p, const TrapDisc& trap) {
    const double at = p.t.abs();
    if (at <= 1.0) return trap.radius_unit * at;
    // For |t| > 1 require |t| g(rho) <= safety; with rho <= 1/3 the Moebius
    // factor is at most 2^n, so this radius is certified.
    const double rho =
        std::pow(trap.safety / (at * std::pow(2.0, p.n)), 1.0 / (p.m - 1));
    return std::min({trap.radius_unit, 1.0 / 3.0, rho});
}

ExtComplex pc_eval(const ExtComplex& c, int m, int n, const ExtComplex& z) {
    validate_exponents(m, n);
    if (c.at_infinity || (c.re == 0.0 && c.im == 0.0))
        throw std::invalid_argument("pc_eval requires finite nonzero c");
    if (z.at_infinity) return ExtComplex::infinity();
    const std::complex<double> zv = z.value();
    return ExtComplex::from(c.value() * ipow(zv, m) * ipow(zv + 1.0, n));
}

ExtComplex pc_derivative(const ExtComplex& c, int m, int n, const ExtComplex& z) {
    validate_exponents(m, n);
    if (z.at_infinity)
        throw std::domain_error("derivative undefined at infinity in the finite chart");
    const std::complex<double> zv = z.value();
    const std::complex<double> d = c.value() * ipow(zv, m - 1) *
                                   ipow(zv + 1.0, n - 1) *
                                   (double(m + n) * zv + double(m));
    return ExtComplex::from(d);
}

ExtComplex c_of_t(const ExtComplex& t, int m, int n) {
    if (m != 2 || n != 1)
        throw std::invalid_argument(
            "c_of_t: explicit correspondence is available for (m,n) = (2,1) only");
    if (t.at_infinity || (t.re == 0.0 && t.im == 0.0))
        throw std::invalid_argument("c_of_t requires finite nonzero t");
    const std::complex<double> tv = t.value();
    return ExtComplex::from(-(tv + 2.0 + 1.0 / tv) / 2.0);
}

}  // namespace twocrit
