#include "twocrit/resultant.hpp"

#include <optional>
#include <stdexcept>

namespace twocrit {

namespace {

// Fraction-free Bareiss elimination; every interior division is exact over
// the coefficient ring. Row swaps only flip the sign.
IntPoly bareiss_determinant(std::vector<std::vector<IntPoly>>& mat) {
    const int n = (int)mat.size();
    if (n == 0) return IntPoly::constant(1);
    int sign = 1;
    IntPoly prev = IntPoly::constant(1);
    for (int k = 0; k + 1 < n; ++k) {
        if (mat[k][k].is_zero()) {
            int pivot_row = -1;
            for (int r = k + 1; r < n; ++r)
                if (!mat[r][k].is_zero()) {
                    pivot_row = r;
                    break;
                }
            if (pivot_row < 0) return IntPoly();  // singular
            std::swap(mat[k], mat[pivot_row]);
            sign = -sign;
        }
        for (int i = k + 1; i < n; ++i) {
            for (int j = k + 1; j < n; ++j)
                mat[i][j] = (mat[i][j] * mat[k][k] - mat[i][k] * mat[k][j])
                                .divide_exact(prev);
            mat[i][k] = IntPoly();
        }
        prev = mat[k][k];
    }
    return sign < 0 ? -mat[n - 1][n - 1] : mat[n - 1][n - 1];
}

std::optional<Var> multiplier_var_of(const IntPoly& p) {
    if (p.uses(Var::lambda)) return Var::lambda;
    if (p.uses(Var::mu)) return Var::mu;
    return std::nullopt;
}

// Splits integer content, a common monomial and (when the coefficients in
// the multiplier variable live in a single other variable) their polynomial
// GCD off `raw`. Nothing is dropped: raw = content * prod(removed) * primitive.
ResultantReport make_report(IntPoly raw) {
    ResultantReport rep;
    rep.raw = raw;
    if (raw.is_zero()) {
        rep.primitive = IntPoly();
        rep.content = 0;
        return rep;
    }
    mpz_class content = raw.integer_content();
    IntPoly prim = raw.divide_exact(IntPoly::constant(content));

    const Monomial mono = prim.monomial_content();
    if (!mono.is_unit()) {
        const IntPoly factor = IntPoly::monomial(mono, 1);
        prim = prim.divide_exact(factor);
        rep.removed_factors.push_back(factor);
    }

    const std::optional<Var> mv = multiplier_var_of(prim);
    if (mv) {
        // Content of the coefficients of the multiplier variable, when they
        // are univariate in one shared symbol.
        std::vector<Var> other;
        for (Var v : prim.used_variables())
            if (v != *mv) other.push_back(v);
        if (other.size() <= 1) {
            IntPoly g;
            for (int k = 0; k <= prim.degree(*mv); ++k)
                g = gcd_univariate(g, prim.coefficient_of(*mv, k));
            if (!g.is_constant()) {
                prim = prim.divide_exact(g);
                rep.removed_factors.push_back(g);
            }
        }
    }

    const mpz_class lead = mv ? prim.leading_coefficient(*mv).leading_coeff_grlex()
                              : prim.leading_coeff_grlex();
    if (lead < 0) {
        prim = -prim;
        content = -content;
    }
    rep.primitive = prim;
    rep.content = content;
    return rep;
}

void validate_guard(int m, int n) {
    if (m < 2 || n < 1)
        throw std::invalid_argument("exponents must satisfy m >= 2, n >= 1");
    if (m + n > 8)
        throw std::length_error(
            "multiplier curves are guarded to m + n <= 8 for exact computation");
}

}  // namespace

bool report_identity_holds(const ResultantReport& r) {
    IntPoly prod = IntPoly::constant(r.content);
    for (const auto& f : r.removed_factors) prod *= f;
    prod *= r.primitive;
    return prod == r.raw;
}

ResultantReport sylvester_resultant(const IntPoly& a, const IntPoly& b, Var var) {
    if (a.is_zero() || b.is_zero())
        throw std::invalid_argument("sylvester_resultant: zero polynomial input");
    const int p = a.degree(var), q = b.degree(var);
    if (p < 1 || q < 1)
        throw std::invalid_argument(
            "sylvester_resultant: both inputs need positive degree in the variable");

    const int n = p + q;
    std::vector<std::vector<IntPoly>> mat(n, std::vector<IntPoly>(n));
    for (int row = 0; row < q; ++row)
        for (int k = 0; k <= p; ++k)
            mat[row][row + k] = a.coefficient_of(var, p - k);
    for (int row = 0; row < p; ++row)
        for (int k = 0; k <= q; ++k)
            mat[q + row][row + k] = b.coefficient_of(var, q - k);
    return make_report(bareiss_determinant(mat));
}

std::pair<IntPoly, IntPoly> fixed_point_system(int m, int n) {
    if (m < 2 || n < 1)
        throw std::invalid_argument("exponents must satisfy m >= 2, n >= 1");
    const IntPoly z = IntPoly::variable(Var::z);
    const IntPoly t = IntPoly::variable(Var::t);
    const IntPoly l = IntPoly::variable(Var::lambda);
    const IntPoly one = IntPoly::constant(1);
    const IntPoly zm1 = z.pow(m - 1);
    const IntPoly omz = one - z;
    const IntPoly opz = one + z;

    const IntPoly p = t * zm1 * omz.pow(n) - opz.pow(n);
    const IntPoly bracket = IntPoly::constant(m) * (one - z * z) -
                            IntPoly::constant(2L * n) * z;
    const IntPoly q2 = l * opz.pow(n + 1) - t * zm1 * omz.pow(n - 1) * bracket;
    return {p, q2};
}

std::pair<IntPoly, IntPoly> pc_fixed_point_system(int m, int n) {
    if (m < 2 || n < 1)
        throw std::invalid_argument("exponents must satisfy m >= 2, n >= 1");
    const IntPoly z = IntPoly::variable(Var::z);
    const IntPoly c = IntPoly::variable(Var::c);
    const IntPoly u = IntPoly::variable(Var::mu);
    const IntPoly one = IntPoly::constant(1);
    const IntPoly zp1 = z + one;

    const IntPoly p = c * z.pow(m - 1) * zp1.pow(n) - one;
    const IntPoly q2 =
        u - c * z.pow(m - 1) * zp1.pow(n - 1) *
                (IntPoly::constant(m + n) * z + IntPoly::constant(m));
    return {p, q2};
}

ResultantReport multiplier_curve(int m, int n) {
    validate_guard(m, n);
    auto [p, q2] = fixed_point_system(m, n);
    return sylvester_resultant(p, q2, Var::z);
}

ResultantReport pc_multiplier_curve(int m, int n) {
    validate_guard(m, n);
    auto [p, q2] = pc_fixed_point_system(m, n);
    return sylvester_resultant(p, q2, Var::z);
}

ResultantReport eliminate_multiplier(const IntPoly& rf, const IntPoly& rp) {
    const std::optional<Var> vf = multiplier_var_of(rf);
    std::optional<Var> vp = multiplier_var_of(rp);
    if (!vf || !vp)
        throw std::invalid_argument(
            "eliminate_multiplier: inputs lack a multiplier variable");
    IntPoly rp2 = rp;
    if (*vp != *vf) {
        rp2 = rp.rename(*vp, *vf);
        vp = vf;
    }
    if (rf.degree(*vf) < 2 || rp2.degree(*vf) < 2)
        throw std::invalid_argument(
            "eliminate_multiplier: inputs must be at least quadratic in the "
            "multiplier variable");
    return sylvester_resultant(rf, rp2, *vf);
}

}  // namespace twocrit
