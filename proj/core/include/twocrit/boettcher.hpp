#pragma once

#include <stdexcept>

#include "twocrit/ext_complex.hpp"
#include "twocrit/family.hpp"

namespace twocrit {

// log-modulus of the Boettcher coordinate. converged means successive
// estimates differed by less than the requested tolerance.
struct GreenValue {
    double value = 0.0;
    int iterations_used = 0;
    bool converged = false;
};

// Boettcher coordinate value. branch_warnings counts product factors whose
// principal logarithm was taken close to the cut (|arg| > pi/2); branch
// ambiguity is surfaced, not resolved.
struct BoettcherValue {
    ExtComplex value{};
    int branch_warnings = 0;
};

struct BoettcherConvergenceError : std::runtime_error {
    BoettcherValue partial;
    BoettcherConvergenceError(const std::string& msg, BoettcherValue pv)
        : std::runtime_error(msg), partial(pv) {}
};

enum class EKind { E0, Ek, Eres };

// G(z) = log|Phi_t(z)| for z in the basin of 0, computed as
// lim m^{-k} log|f_t^k(z)| - log|t|/(m-1) via telescoped increments.
// Satisfies G(f_t(z)) = m G(z) + log|t|. Throws std::domain_error when the
// orbit fails to enter the trap disc within the budget.
GreenValue green_zero(const FamilyParams& p, const ExtComplex& z,
                      double tol = 1e-12, int budget = 100000);

// Mirror at the superattracting point infinity (local degree m): same limit
// and functional equation, for escaping seeds.
GreenValue green_infinity(const FamilyParams& p, const ExtComplex& z,
                          double tol = 1e-12, int budget = 100000);

// Phi_t(z) for z in the basin of 0 by the telescoping product
// Phi_t(z) = z prod_k (((1 - z_k)/(1 + z_k))^n)^{1/m^{k+1}}, principal branch
// per factor. Truncated when a factor is within 1e-14 of 1 or after kmax
// factors; throws BoettcherConvergenceError if the tail is still significant.
BoettcherValue boettcher_coordinate(const FamilyParams& p, const ExtComplex& z,
                                    int kmax = 60);

// E_0(t) = t Phi_t(v^alpha_t)^{m-1}, E_res(t) = t Phi_t(v^beta_t)^{m-1},
// E_k(t) = t^{1/(m-1)} Phi_t(f^k(v^alpha_t)) (principal root). The locus of t
// is checked first via classify_parameter; failures throw std::domain_error
// naming the failed test.
ExtComplex e_value(int m, int n, const ExtComplex& t, EKind kind, int k = 0,
                   int budget = 2000);

}  // namespace twocrit
