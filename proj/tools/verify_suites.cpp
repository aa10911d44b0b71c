#include "verify_suites.hpp"

#include <cmath>
#include <complex>
#include <functional>
#include <iomanip>
#include <map>
#include <sstream>

#include "twocrit/boettcher.hpp"
#include "twocrit/family.hpp"
#include "twocrit/orbit.hpp"
#include "twocrit/resultant.hpp"

namespace twocrit::verify {

namespace {

using std::complex;

std::string fmt(double v) {
    std::ostringstream os;
    os << std::setprecision(6) << v;
    return os.str();
}

Check bound_check(const std::string& name, double worst, double bound) {
    return Check{name, worst < bound,
                 "max error " + fmt(worst) + " (bound " + fmt(bound) + ")"};
}

// The multiplier curve of f_t for (m,n) = (2,1):
// 2 t lambda^2 + (1 - 10 t + t^2) lambda + (-2 + 14 t - 2 t^2).
IntPoly expected_rf_21() {
    const IntPoly t = IntPoly::variable(Var::t);
    const IntPoly l = IntPoly::variable(Var::lambda);
    const IntPoly one = IntPoly::constant(1);
    return IntPoly::constant(2) * t * l * l +
           (one - IntPoly::constant(10) * t + t * t) * l +
           (IntPoly::constant(-2) + IntPoly::constant(14) * t -
            IntPoly::constant(2) * t * t);
}

// mu^2 - (c + 6) mu + (9 + 2 c).
IntPoly expected_rp_21() {
    const IntPoly c = IntPoly::variable(Var::c);
    const IntPoly u = IntPoly::variable(Var::mu);
    return u * u - (c + IntPoly::constant(6)) * u +
           (IntPoly::constant(9) + IntPoly::constant(2) * c);
}

// (1 + 2 t + t^2 + 2 t c)^2.
IntPoly expected_elimination_21() {
    const IntPoly t = IntPoly::variable(Var::t);
    const IntPoly c = IntPoly::variable(Var::c);
    const IntPoly s = IntPoly::constant(1) + IntPoly::constant(2) * t + t * t +
                      IntPoly::constant(2) * t * c;
    return s * s;
}

std::vector<Check> resultants_suite() {
    std::vector<Check> out;
    const ResultantReport rf = multiplier_curve(2, 1);
    out.push_back({"R_f primitive matches the (2,1) multiplier curve",
                   rf.primitive == expected_rf_21(), rf.primitive.to_string()});
    out.push_back({"R_f product identity raw = content*removed*primitive",
                   report_identity_holds(rf),
                   "content " + rf.content.get_str() + ", removed " +
                       std::to_string(rf.removed_factors.size()) + " factor(s)"});

    const ResultantReport rp = pc_multiplier_curve(2, 1);
    out.push_back({"R_P primitive matches the (2,1) polynomial-model curve",
                   rp.primitive == expected_rp_21(), rp.primitive.to_string()});
    out.push_back({"R_P product identity", report_identity_holds(rp), ""});

    const ResultantReport el =
        eliminate_multiplier(rf.primitive, rp.primitive);
    out.push_back({"Res_lambda(R_f, R_P) = const * (1 + 2t + t^2 + 2tc)^2",
                   el.primitive == expected_elimination_21() && el.content != 0,
                   el.primitive.to_string() + "  [content " + el.content.get_str() +
                       "]"});
    out.push_back({"elimination product identity", report_identity_holds(el), ""});
    return out;
}

std::vector<Check> critical_suite() {
    double worst_prod = 0, worst_sum = 0, worst_da = 0, worst_db = 0, worst_v = 0;
    for (int m = 2; m <= 6; ++m)
        for (int n = 1; n <= 6; ++n) {
            const CriticalData cd = critical_data(m, n);
            const FamilyParams f1(m, n, complex<double>(1.0, 0.0));
            worst_prod = std::max(worst_prod, std::abs(cd.alpha * cd.beta + 1.0));
            worst_sum = std::max(
                worst_sum, std::abs(cd.alpha + cd.beta + 2.0 * n / double(m)));
            worst_da = std::max(
                worst_da,
                eval_derivative(f1, ExtComplex(cd.alpha, 0.0)).abs());
            worst_db = std::max(
                worst_db, eval_derivative(f1, ExtComplex(cd.beta, 0.0)).abs());
            worst_v = std::max(
                worst_v, std::abs(std::abs(cd.v_alpha_1 * cd.v_beta_1) - 1.0));
        }
    return {bound_check("alpha*beta = -1 over (m,n) in {2..6}x{1..6}", worst_prod, 1e-12),
            bound_check("alpha+beta = -2n/m", worst_sum, 1e-12),
            bound_check("f_1'(alpha) = 0", worst_da, 1e-10),
            bound_check("f_1'(beta) = 0", worst_db, 1e-10),
            bound_check("|v_alpha_1 * v_beta_1| = 1", worst_v, 1e-9)};
}

std::vector<Check> lemma1_suite() {
    const double r = 1.0 / 3.0;
    const CriticalData cd = critical_data(2, 1);
    double worst_margin = -1.0;  // max of |f_t(z)| / (r|t|), must stay < 1
    double worst_vb = 2.0;       // min of |v_beta_t| / (r|t|), must stay > 1
    constexpr double kGolden = 0.6180339887498949;
    for (int j = 1; j <= 50; ++j) {
        const double rho = j / 50.0;
        const double ang = 2.0 * M_PI * std::fmod(kGolden * j, 1.0);
        const complex<double> t = std::polar(rho, ang);
        const FamilyParams p(2, 1, t);
        const double rt = r * std::abs(t);
        for (int i = 0; i < 9000; ++i) {
            const double rr = rt * std::sqrt((i + 1) / 9000.0);
            const double aa = 2.0 * M_PI * std::fmod(kGolden * i, 1.0);
            const ExtComplex z(rr * std::cos(aa), rr * std::sin(aa));
            worst_margin = std::max(worst_margin, eval_map(p, z).abs() / rt);
        }
        for (int i = 0; i < 1000; ++i) {
            const ExtComplex z(i / 999.0, 0.0);
            worst_margin = std::max(worst_margin, eval_map(p, z).abs() / rt);
        }
        const double vb = eval_map(p, ExtComplex(cd.beta, 0.0)).abs();
        worst_vb = std::min(worst_vb, vb / rt);
    }
    return {Check{"f_t(closed trap disc and [0,1]) stays inside the trap disc",
                  worst_margin < 1.0,
                  "max |f_t(z)|/(r|t|) = " + fmt(worst_margin)},
            Check{"v_beta_t stays outside the trap disc", worst_vb > 1.0,
                  "min |v_beta_t|/(r|t|) = " + fmt(worst_vb)}};
}

std::vector<Check> symmetry_suite() {
    const int d = 3;  // (m,n) = (2,1)
    int pairs = 0, match = 0;
    for (int a = 0; a < 21; ++a)
        for (int b = 0; b < 21; ++b) {
            const complex<double> t(-0.9 + a * 0.09, -0.9 + b * 0.09);
            const double at = std::abs(t);
            if (at < 0.2 || at > 0.9) continue;
            const ParamClass inner = classify_parameter(2, 1, ExtComplex(t), 2000);
            const ExtComplex tm = conjugate_param(ExtComplex(t), d);
            const ParamClass outer = classify_parameter(2, 1, tm, 2000);
            if (inner.kind == ParamKind::Undecided ||
                outer.kind == ParamKind::Undecided)
                continue;
            ++pairs;
            static const std::map<ParamKind, ParamKind> mirror = {
                {ParamKind::AlphaEscape, ParamKind::BetaEscape},
                {ParamKind::BetaEscape, ParamKind::AlphaEscape},
                {ParamKind::AlphaResidual, ParamKind::BetaResidual},
                {ParamKind::BetaResidual, ParamKind::AlphaResidual},
                {ParamKind::AlphaCycle, ParamKind::BetaCycle},
                {ParamKind::BetaCycle, ParamKind::AlphaCycle},
                {ParamKind::BothEscape, ParamKind::BothEscape},
            };
            if (outer.kind == mirror.at(inner.kind)) ++match;
        }
    const double pct = pairs ? 100.0 * match / pairs : 0.0;
    return {Check{"alpha/beta roles mirror under t -> 1/t on the annulus grid",
                  pairs > 0 && pct >= 95.0,
                  fmt(pct) + "% of " + std::to_string(pairs) + " decided pairs"}};
}

std::vector<Check> greens_suite() {
    const complex<double> ts[4] = {{1.0, 0.0}, {0.8, 0.3}, {0.5, -0.4}, {1.2, 0.0}};
    double worst_green = 0, worst_boettcher = 0, worst_consist = 0, worst_bound = 0;
    int samples = 0;
    constexpr double kGolden = 0.6180339887498949;
    for (const auto& t : ts) {
        const FamilyParams p(2, 1, t);
        const double bound = std::pow(std::abs(t), -1.0);  // |t|^{-1/(m-1)}, m=2
        for (int i = 0; i < 25; ++i) {
            const double rr = 0.22 * std::sqrt((i + 1) / 25.0);
            const double aa = 2.0 * M_PI * std::fmod(kGolden * (i + 7), 1.0);
            const ExtComplex z(rr * std::cos(aa), rr * std::sin(aa));
            const ExtComplex fz = eval_map(p, z);
            const GreenValue g = green_zero(p, z);
            const GreenValue gf = green_zero(p, fz);
            worst_green = std::max(
                worst_green,
                std::abs(gf.value - p.m * g.value - std::log(std::abs(t))));
            const BoettcherValue phi = boettcher_coordinate(p, z);
            const BoettcherValue phif = boettcher_coordinate(p, fz);
            worst_boettcher = std::max(
                worst_boettcher,
                std::abs(phif.value.value() -
                         t * ipow(phi.value.value(), p.m)));
            worst_consist = std::max(
                worst_consist, std::abs(std::exp(g.value) - phi.value.abs()));
            worst_bound = std::max(worst_bound, phi.value.abs() - bound);
            ++samples;
        }
    }
    return {bound_check("Green functional equation G(f(z)) = m G(z) + log|t| (" +
                            std::to_string(samples) + " samples)",
                        worst_green, 1e-8),
            bound_check("Boettcher functional equation residual", worst_boettcher,
                        1e-8),
            bound_check("|Phi| agrees with exp(G)", worst_consist, 1e-8),
            Check{"|Phi_t| < |t|^{-1/(m-1)} on basin samples", worst_bound < 0.0,
                  "max |Phi| - bound = " + fmt(worst_bound)}};
}

std::vector<Check> easymptotic_suite() {
    std::vector<Check> out;
    for (const int m : {2, 3}) {
        const int n = 1;
        const CriticalData cd = critical_data(m, n);
        const complex<double> t(1e-4, 0.0);
        const ExtComplex e0 = e_value(m, n, ExtComplex(t), EKind::E0);
        const complex<double> predicted =
            ipow(complex<double>(cd.v_alpha_1, 0.0), m - 1) * ipow(t, m);
        const double err = std::abs(e0.value() / predicted - 1.0);
        out.push_back(bound_check("E_0(t) ~ f_1(alpha)^{m-1} t^m at |t|=1e-4, (m,n)=(" +
                                      std::to_string(m) + ",1)",
                                  err, 1e-3));
    }
    double worst = 0.0;
    constexpr double kGolden = 0.6180339887498949;
    for (int j = 1; j <= 50; ++j) {
        const double rho = 0.02 + 0.9 * (j - 1) / 49.0;
        const double ang = 2.0 * M_PI * std::fmod(kGolden * j, 1.0);
        const ExtComplex t(rho * std::cos(ang), rho * std::sin(ang));
        worst = std::max(worst, e_value(2, 1, t, EKind::E0).abs());
    }
    out.push_back(Check{"|E_0(t)| < 1 on 50 unit-disc samples", worst < 1.0,
                        "max |E_0| = " + fmt(worst)});
    return out;
}

std::vector<Check> qkorder_suite() {
    const double s0 = q_k_zero_order(2, 1, 0);
    const double s1 = q_k_zero_order(2, 1, 1);
    const double s2 = q_k_zero_order(3, 1, 1);
    return {bound_check("ord_0 Q_0 = 1 for (2,1)", std::abs(s0 - 1.0), 0.05),
            bound_check("ord_0 Q_1 = 3 for (2,1)", std::abs(s1 - 3.0), 0.05),
            bound_check("ord_0 Q_1 = 4 for (3,1)", std::abs(s2 - 4.0), 0.05)};
}

const std::map<std::string, std::function<std::vector<Check>()>>& suites() {
    static const std::map<std::string, std::function<std::vector<Check>()>> s = {
        {"resultants", resultants_suite}, {"critical", critical_suite},
        {"lemma1", lemma1_suite},         {"symmetry", symmetry_suite},
        {"greens", greens_suite},         {"easymptotic", easymptotic_suite},
        {"qkorder", qkorder_suite},
    };
    return s;
}

}  // namespace

std::vector<std::string> suite_names() {
    std::vector<std::string> out;
    for (const auto& [name, fn] : suites()) out.push_back(name);
    return out;
}

bool run_suite(const std::string& name, std::ostream& out) {
    const auto it = suites().find(name);
    if (it == suites().end()) {
        out << "unknown verify suite: " << name << "\n";
        return false;
    }
    bool all = true;
    out << "verify " << name << "\n";
    for (const Check& c : it->second()) {
        all = all && c.pass;
        out << (c.pass ? "  ok   " : "  FAIL ") << c.name;
        if (!c.detail.empty()) out << "  |  " << c.detail;
        out << "\n";
    }
    return all;
}

}  // namespace twocrit::verify
