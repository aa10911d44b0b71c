#pragma once

#include <utility>
#include <vector>

#include "twocrit/intpoly.hpp"

namespace twocrit {

// Resultant with bookkeeping: raw = content * (prod removed_factors) *
// primitive, verified exactly. removed_factors collects factors free of the
// multiplier variable (common monomials and polynomial coefficient content);
// primitive is sign-normalized to a positive leading coefficient in the
// multiplier variable (graded-lex leading coefficient when none is present).
struct ResultantReport {
    IntPoly raw;
    IntPoly primitive;
    std::vector<IntPoly> removed_factors;
    mpz_class content = 0;  // signed integer content
};

// Exact product-identity check for a report.
bool report_identity_holds(const ResultantReport& r);

// Determinant of the Sylvester matrix of a and b with respect to var, a's
// coefficient rows first, computed by fraction-free Bareiss elimination over
// the polynomial coefficient ring. Sign convention: Res(z - a, z - b) = a - b.
// Both inputs must have positive degree in var.
ResultantReport sylvester_resultant(const IntPoly& a, const IntPoly& b, Var var);

// Polynomial system for the nontrivial fixed points of f_t and their
// multiplier:
//   p(z, t)       = t z^{m-1} (1 - z)^n - (1 + z)^n
//   q2(z, t, l)   = l (1 + z)^{n+1} - t z^{m-1} (1 - z)^{n-1} (m (1 - z^2) - 2 n z)
std::pair<IntPoly, IntPoly> fixed_point_system(int m, int n);

// Same for P_c(z) = c z^m (z + 1)^n:
//   p(z, c)     = c z^{m-1} (z + 1)^n - 1
//   q2(z, c, u) = u - c z^{m-1} (z + 1)^{n-1} ((m + n) z + m)
std::pair<IntPoly, IntPoly> pc_fixed_point_system(int m, int n);

// Multiplier curve R_f(t, lambda) = Res_z(p, q2). Guarded to m + n <= 8.
ResultantReport multiplier_curve(int m, int n);

// Multiplier curve R_P(c, mu) for the polynomial model.
ResultantReport pc_multiplier_curve(int m, int n);

// Res over the shared multiplier variable of the two curves; when one input
// uses lambda and the other mu, the second is renamed onto the first.
ResultantReport eliminate_multiplier(const IntPoly& rf, const IntPoly& rp);

}  // namespace twocrit
