#include "twocrit/boettcher.hpp"

#include <cmath>
#include <complex>

#include "twocrit/orbit.hpp"

namespace twocrit {

namespace {

constexpr double kPi = 3.14159265358979323846;

// Shared Green limit: G_K = m^{-K} log|z_K| - (1 - m^{-K}) log|t|/(m-1) has
// increments m^{-k} n log|(1 - z_{k-1})/(1 + z_{k-1})|, which avoid the
// under/overflow of |z_K| itself. `to_zero` selects the basin guard.
GreenValue green_limit(const FamilyParams& p, ExtComplex z, double tol,
                       int budget, bool to_zero) {
    if (!(tol > 0)) throw std::invalid_argument("green tolerance must be positive");
    if (to_zero && z.finite() && z.re == 0.0 && z.im == 0.0)
        throw std::invalid_argument("green_zero is -infinite at z = 0");
    if (!to_zero && z.at_infinity)
        return GreenValue{std::numeric_limits<double>::infinity(), 0, true};

    const double esc = escape_radius(p);
    const TrapDisc trap = trap_disc(p.m, p.n);
    const double zr = zero_trap_radius(p, trap);

    GreenValue g;
    g.value = std::log(z.abs());
    double mk = 1.0;
    bool settled = false;  // orbit has certified the requested basin
    int small_count = 0;
    for (int k = 1; k <= budget; ++k) {
        if (z.at_infinity || z.abs() >= esc) {
            if (to_zero)
                throw std::domain_error(
                    "green_zero: orbit escaped; seed not in the basin of 0");
            settled = true;
        }
        if (z.finite() && z.abs() < zr) {
            if (!to_zero)
                throw std::domain_error(
                    "green_infinity: orbit attracted to 0; seed not escaping");
            settled = true;
        }
        double log_ratio;
        if (z.at_infinity) {
            log_ratio = 0.0;  // (1-z)/(1+z) -> -1
        } else {
            const std::complex<double> zv = z.value();
            const double num = std::abs(1.0 - zv);
            const double den = std::abs(1.0 + zv);
            if (num == 0.0) {  // z = 1: preimage of 0, G = -infinity there
                if (to_zero)
                    return GreenValue{-std::numeric_limits<double>::infinity(), k, true};
                throw std::domain_error(
                    "green_infinity: orbit hit a preimage of 0");
            }
            if (den < 1e-300) {  // pole hit: preimage of infinity
                if (to_zero)
                    throw std::domain_error(
                        "green_zero: orbit hit the pole; seed not in the basin of 0");
                return GreenValue{std::numeric_limits<double>::infinity(), k, true};
            }
            log_ratio = std::log(num / den);
        }
        mk /= p.m;
        const double inc = mk * p.n * log_ratio;
        g.value += inc;
        g.iterations_used = k;
        if (settled) {
            small_count = std::abs(inc) < tol ? small_count + 1 : 0;
            if (small_count >= 2) {
                g.converged = true;
                return g;
            }
        }
        z = eval_map(p, z);
    }
    if (!settled)
        throw std::domain_error(
            to_zero ? "green_zero: orbit failed to enter the trap disc within budget"
                    : "green_infinity: orbit failed to escape within budget");
    return g;  // settled but tolerance not met within budget
}

}  // namespace

GreenValue green_zero(const FamilyParams& p, const ExtComplex& z, double tol,
                      int budget) {
    return green_limit(p, z, tol, budget, true);
}

GreenValue green_infinity(const FamilyParams& p, const ExtComplex& z, double tol,
                          int budget) {
    return green_limit(p, z, tol, budget, false);
}

BoettcherValue boettcher_coordinate(const FamilyParams& p, const ExtComplex& z,
                                    int kmax) {
    if (z.at_infinity)
        throw std::domain_error("boettcher_coordinate: seed at infinity");
    BoettcherValue out;
    if (z.re == 0.0 && z.im == 0.0) {
        out.value = ExtComplex(0.0, 0.0);
        return out;
    }
    const double esc = escape_radius(p);
    std::complex<double> log_phi = std::log(z.value());
    std::complex<double> zk = z.value();
    double expo = 1.0;  // 1/m^{k+1} accumulates below
    double last_tail = 0.0;
    for (int k = 0; k <= kmax; ++k) {
        const std::complex<double> one(1.0, 0.0);
        const std::complex<double> w = ipow((one - zk) / (one + zk), p.n);
        if (w == one) {  // factor exactly 1, tail vanishes
            last_tail = 0.0;
            break;
        }
        if (std::abs(w) == 0.0) {  // z_k = 1: preimage of 0
            out.value = ExtComplex(0.0, 0.0);
            return out;
        }
        if (std::abs(std::arg(w)) > kPi / 2) ++out.branch_warnings;
        expo /= p.m;
        const std::complex<double> contrib = expo * std::log(w);
        log_phi += contrib;
        last_tail = std::abs(contrib);
        if (std::abs(w - one) < 1e-14) {
            out.value = ExtComplex::from(std::exp(log_phi));
            return out;
        }
        const ExtComplex next = eval_map(p, ExtComplex(zk));
        if (next.at_infinity || next.abs() >= esc)
            throw std::domain_error(
                "boettcher_coordinate: orbit escaped; seed not in the basin of 0");
        zk = next.value();
    }
    out.value = ExtComplex::from(std::exp(log_phi));
    if (last_tail > 1e-12)
        throw BoettcherConvergenceError(
            "boettcher_coordinate: product not converged within kmax", out);
    return out;
}

ExtComplex e_value(int m, int n, const ExtComplex& t, EKind kind, int k,
                   int budget) {
    const FamilyParams p(m, n, t);
    const ParamClass pc = classify_parameter(m, n, t, budget);
    const CriticalData cd = critical_data(m, n);

    const auto require = [&](bool ok, const char* locus, const PointClass& orbit) {
        if (!ok)
            throw std::domain_error(std::string("e_value: t fails the ") + locus +
                                    " locus test (orbit outcome: " +
                                    to_string(orbit.kind) + ")");
    };

    switch (kind) {
        case EKind::E0: {
            require(pc.alpha_outcome.kind == PointKind::BasinZero,
                    "Omega^alpha (alpha orbit -> 0)", pc.alpha_outcome);
            const ExtComplex va = eval_map(p, ExtComplex(cd.alpha, 0.0));
            const BoettcherValue phi = boettcher_coordinate(p, va);
            return ExtComplex::from(t.value() * ipow(phi.value.value(), m - 1));
        }
        case EKind::Eres: {
            require(pc.kind == ParamKind::AlphaResidual, "Omega^alpha_res",
                    pc.beta_outcome);
            const ExtComplex vb = eval_map(p, ExtComplex(cd.beta, 0.0));
            const BoettcherValue phi = boettcher_coordinate(p, vb);
            return ExtComplex::from(t.value() * ipow(phi.value.value(), m - 1));
        }
        case EKind::Ek: {
            if (k < 1) throw std::invalid_argument("e_value: Ek requires k >= 1");
            require(pc.alpha_outcome.kind == PointKind::BasinZero,
                    "Omega^alpha (alpha orbit -> 0)", pc.alpha_outcome);
            ExtComplex w = eval_map(p, ExtComplex(cd.alpha, 0.0));
            for (int i = 0; i < k; ++i) w = eval_map(p, w);
            const BoettcherValue phi = boettcher_coordinate(p, w);
            const std::complex<double> troot =
                std::exp(std::log(t.value()) / double(m - 1));
            return ExtComplex::from(troot * phi.value.value());
        }
    }
    throw std::logic_error("e_value: unknown kind");
}

}  // namespace twocrit
