#include <doctest.h>

#include <cmath>
#include <complex>

#include "oracles.hpp"
#include "twocrit/family.hpp"
#include "twocrit/orbit.hpp"

using namespace twocrit;
using std::complex;

namespace {

const TrapDisc kTrap21 = trap_disc(2, 1, 2.0 / 3.0);

DerivFn deriv_of(const FamilyParams& p) {
    return [p](const ExtComplex& z) { return eval_derivative(p, z); };
}

// Smaller root of 2 t^2 - 14 t + 2 = 0: the parameter with a superattracting
// beta fixed point.
double t_superattracting() {
    const auto [r1, r2] = oracles::quadratic_roots({2, 0}, {-14, 0}, {2, 0});
    return std::min(r1.real(), r2.real());
}

}  // namespace

TEST_CASE("iterate_orbit spec examples at t = 1") {
    const FamilyParams p(2, 1, complex<double>(1.0, 0.0));

    SUBCASE("z0 = 1 lands on 0 after one step") {
        const OrbitRecord rec = iterate_orbit(p, ExtComplex(1.0, 0.0), 100, kTrap21);
        CHECK(rec.outcome.kind == PointKind::BasinZero);
        CHECK(rec.outcome.index == 1);
        CHECK(rec.first_trap_entry == 1);
        CHECK(!rec.first_escape.has_value());
        CHECK(rec.points[0] == ExtComplex(1.0, 0.0));
        CHECK(rec.points[1] == ExtComplex(0.0, 0.0));
    }
    SUBCASE("z0 = beta escapes at step 1: |v_beta_1| = 1/v_alpha_1 >= R = 6") {
        const CriticalData cd = critical_data(2, 1);
        CHECK(std::abs(cd.v_beta_1) ==
              doctest::Approx(1.0 / cd.v_alpha_1).epsilon(1e-12));
        CHECK(std::abs(cd.v_beta_1) == doctest::Approx(11.0901699).epsilon(1e-7));
        const OrbitRecord rec =
            iterate_orbit(p, ExtComplex(cd.beta, 0.0), 100, kTrap21);
        CHECK(rec.outcome.kind == PointKind::BasinInfinity);
        CHECK(rec.outcome.index == 1);
        CHECK(rec.first_escape == 1);
    }
    SUBCASE("z0 = alpha enters the trap at step 1 (v_alpha_1 < 1/3)") {
        const CriticalData cd = critical_data(2, 1);
        const OrbitRecord rec =
            iterate_orbit(p, ExtComplex(cd.alpha, 0.0), 100, kTrap21);
        CHECK(rec.outcome.kind == PointKind::BasinZero);
        CHECK(rec.outcome.index == 1);
    }
}

TEST_CASE("orbit record invariants: stored points follow the map, trap traps, escapes double") {
    auto g = oracles::rng(321);
    for (int trial = 0; trial < 20; ++trial) {
        const complex<double> t = std::polar(0.05 + 0.9 * (trial / 19.0),
                                             2.0 * M_PI * trial / 7.0);
        const FamilyParams p(2, 1, t);
        const complex<double> z0 = oracles::sample_box(g, -3.0, 3.0);
        const OrbitRecord rec = iterate_orbit(p, ExtComplex(z0), 400, kTrap21);
        const double rt = kTrap21.radius_unit * std::abs(t);
        const double R = escape_radius(p);
        for (size_t i = 0; i + 1 < rec.points.size(); ++i) {
            CHECK(eval_map(p, rec.points[i]) == rec.points[i + 1]);
            if (rec.points[i].finite() && rec.points[i].abs() < rt)
                CHECK(rec.points[i + 1].abs() < rt);  // Lemma invariance, |t| <= 1
            if (rec.points[i].abs() >= R)
                CHECK(rec.points[i + 1].abs() >= 2.0 * rec.points[i].abs());
        }
    }
}

TEST_CASE("classify_point spec examples") {
    SUBCASE("pole escapes at step 1") {
        const FamilyParams p(2, 1, complex<double>(1.0, 0.0));
        const PointClass pc = classify_point(p, ExtComplex(-1.0, 0.0), 100);
        CHECK(pc.kind == PointKind::BasinInfinity);
        CHECK(pc.index == 1);
    }
    SUBCASE("z = 0.5 at t = 1: f(0.5) = 1/12 < 1/3") {
        const FamilyParams p(2, 1, complex<double>(1.0, 0.0));
        CHECK(eval_map(p, ExtComplex(0.5, 0.0)).re ==
              doctest::Approx(1.0 / 12.0).epsilon(1e-15));
        const PointClass pc = classify_point(p, ExtComplex(0.5, 0.0), 100);
        CHECK(pc.kind == PointKind::BasinZero);
    }
    SUBCASE("z = beta at t = 0.01 is attracted to 0 (residual regime)") {
        const FamilyParams p(2, 1, complex<double>(0.01, 0.0));
        const CriticalData cd = critical_data(2, 1);
        const PointClass pc = classify_point(p, ExtComplex(cd.beta, 0.0), 100);
        CHECK(pc.kind == PointKind::BasinZero);
    }
}

TEST_CASE("detect_cycle") {
    const double ts = t_superattracting();
    CHECK(ts == doctest::Approx((7.0 - 3.0 * std::sqrt(5.0)) / 2.0).epsilon(1e-14));

    SUBCASE("superattracting beta fixed point at t = (7 - 3 sqrt 5)/2") {
        const FamilyParams p(2, 1, complex<double>(ts, 0.0));
        const CriticalData cd = critical_data(2, 1);
        // t v_beta_1 = beta: the beta critical value is the fixed point itself.
        CHECK(std::abs(ts * cd.v_beta_1 - cd.beta) < 1e-12);
        std::vector<ExtComplex> tail;
        ExtComplex z = eval_map(p, ExtComplex(cd.beta, 0.0));
        for (int i = 0; i < 64; ++i) {
            tail.push_back(z);
            z = eval_map(p, z);
        }
        const auto hit = detect_cycle(tail, 1e-9, deriv_of(p));
        REQUIRE(hit.has_value());
        CHECK(hit->period == 1);
        CHECK(hit->multiplier.abs() < 1e-8);
        CHECK(std::abs(hit->representative.value() -
                       complex<double>(cd.beta, 0.0)) < 1e-8);
    }
    SUBCASE("orbit converging to 0 reports the superattracting fixed point") {
        const FamilyParams p(2, 1, complex<double>(1.0, 0.0));
        std::vector<ExtComplex> tail;
        ExtComplex z(0.05, 0.0);
        for (int i = 0; i < 40; ++i) {
            tail.push_back(z);
            z = eval_map(p, z);
        }
        const auto hit = detect_cycle(tail, 1e-9, deriv_of(p));
        REQUIRE(hit.has_value());
        CHECK(hit->period == 1);
        CHECK(hit->multiplier.abs() < 1e-8);
        CHECK(hit->representative.abs() < 1e-8);
    }
    SUBCASE("constant sequence at an attracting fixed point") {
        // w with f_t(w) = w, |f'(w)| < 1: use t slightly off the
        // superattracting center so the multiplier is small but nonzero.
        const FamilyParams p(2, 1, complex<double>(ts + 0.01, 0.0));
        // Fixed points solve -t z^2 + (t-1) z - 1 = 0.
        const complex<double> tv = p.tv();
        const auto [z1, z2] = oracles::quadratic_roots(-tv, tv - 1.0, {-1.0, 0.0});
        for (const auto& w : {z1, z2}) {
            const double mult = eval_derivative(p, ExtComplex(w)).abs();
            if (mult >= 1.0) continue;
            CHECK(std::abs(eval_map(p, ExtComplex(w)).value() - w) < 1e-12);
            std::vector<ExtComplex> tail(16, ExtComplex(w));
            const auto hit = detect_cycle(tail, 1e-9, deriv_of(p));
            REQUIRE(hit.has_value());
            CHECK(hit->period == 1);
            CHECK(hit->multiplier.abs() == doctest::Approx(mult).epsilon(1e-12));
        }
    }
    SUBCASE("no stable period on an escaping tail") {
        const FamilyParams p(2, 1, complex<double>(1.0, 0.0));
        std::vector<ExtComplex> tail;
        double x = 2.0;
        for (int i = 0; i < 32; ++i) {
            tail.push_back(ExtComplex(x, 0.0));
            x *= 2.1;
        }
        CHECK(!detect_cycle(tail, 1e-9, deriv_of(p)).has_value());
    }
    SUBCASE("tolerance must be positive") {
        std::vector<ExtComplex> tail(8, ExtComplex(0.1, 0.0));
        const FamilyParams p(2, 1, complex<double>(1.0, 0.0));
        CHECK_THROWS_AS(detect_cycle(tail, 0.0, deriv_of(p)), std::invalid_argument);
    }
}

TEST_CASE("classify_parameter spec examples") {
    SUBCASE("t = 1: quasi-circle regime") {
        const ParamClass pc = classify_parameter(2, 1, ExtComplex(1.0, 0.0), 2000);
        CHECK(pc.kind == ParamKind::BothEscape);
        CHECK(pc.alpha_outcome.kind == PointKind::BasinZero);
        CHECK(pc.beta_outcome.kind == PointKind::BasinInfinity);
        CHECK(pc.beta_level == 0);  // the critical value is already past R
    }
    SUBCASE("t = 0.01: residual (beta orbit attracted to 0)") {
        const ParamClass pc = classify_parameter(2, 1, ExtComplex(0.01, 0.0), 2000);
        CHECK(pc.kind == ParamKind::AlphaResidual);
        CHECK(pc.beta_outcome.kind == PointKind::BasinZero);
    }
    SUBCASE("t = 100 mirrors t = 0.01 under t -> 1/t (d odd)") {
        const ParamClass pc = classify_parameter(2, 1, ExtComplex(100.0, 0.0), 2000);
        CHECK(pc.kind == ParamKind::BetaResidual);
        CHECK(pc.alpha_outcome.kind == PointKind::BasinInfinity);
    }
    SUBCASE("superattracting center classifies as BetaCycle with alpha -> 0") {
        const ParamClass pc =
            classify_parameter(2, 1, ExtComplex(t_superattracting(), 0.0), 2000);
        CHECK(pc.kind == ParamKind::BetaCycle);
        CHECK(pc.period == 1);
        CHECK(pc.alpha_outcome.kind == PointKind::BasinZero);
    }
}

TEST_CASE("determinism: identical inputs give identical outcomes") {
    const ExtComplex t(0.37, 0.22);
    const ParamClass a = classify_parameter(2, 1, t, 500);
    const ParamClass b = classify_parameter(2, 1, t, 500);
    CHECK(a.kind == b.kind);
    CHECK(a.alpha_level == b.alpha_level);
    CHECK(a.beta_level == b.beta_level);
    CHECK(a.alpha_outcome.index == b.alpha_outcome.index);
    CHECK(a.beta_outcome.iterations == b.beta_outcome.iterations);

    const FamilyParams p(2, 1, complex<double>(0.9, 0.1));
    const OrbitRecord r1 = iterate_orbit(p, ExtComplex(0.4, 0.4), 300, kTrap21);
    const OrbitRecord r2 = iterate_orbit(p, ExtComplex(0.4, 0.4), 300, kTrap21);
    REQUIRE(r1.points.size() == r2.points.size());
    for (size_t i = 0; i < r1.points.size(); ++i) CHECK(r1.points[i] == r2.points[i]);
}

TEST_CASE("alpha is inactive on the closed unit disc") {
    constexpr double kGolden = 0.6180339887498949;
    for (int j = 1; j <= 20; ++j) {
        const complex<double> t =
            std::polar(j / 20.0, 2.0 * M_PI * std::fmod(kGolden * j, 1.0));
        const ParamClass pc = classify_parameter(2, 1, ExtComplex(t), 2000);
        CHECK(pc.kind != ParamKind::AlphaCycle);
        CHECK(pc.alpha_outcome.kind != PointKind::BasinInfinity);
        CHECK(pc.alpha_outcome.kind == PointKind::BasinZero);
    }
}

TEST_CASE("cycle sides respect the unit circle split") {
    // Coarse scan: BetaCycle only inside |t| < 1, AlphaCycle only outside.
    for (int a = 0; a < 24; ++a)
        for (int b = 0; b < 8; ++b) {
            const complex<double> t =
                std::polar(0.1 + 1.15 * a / 23.0, 2.0 * M_PI * b / 8.0);
            const ParamClass pc = classify_parameter(2, 1, ExtComplex(t), 1500);
            if (pc.kind == ParamKind::BetaCycle) CHECK(std::abs(t) < 1.0);
            if (pc.kind == ParamKind::AlphaCycle) CHECK(std::abs(t) > 1.0);
        }
}

TEST_CASE("alpha/beta mirror on a small grid (odd and even degree)") {
    for (const auto& [m, n] : {std::pair{2, 1}, std::pair{2, 2}}) {
        const int d = m + n;
        int pairs = 0, matched = 0;
        for (int a = 0; a < 7; ++a)
            for (int b = 0; b < 7; ++b) {
                const complex<double> t(-0.85 + a * 0.28, -0.85 + b * 0.28);
                if (std::abs(t) < 0.25 || std::abs(t) > 0.9) continue;
                const ParamClass in = classify_parameter(m, n, ExtComplex(t), 1500);
                const ParamClass out = classify_parameter(
                    m, n, conjugate_param(ExtComplex(t), d), 1500);
                if (in.kind == ParamKind::Undecided ||
                    out.kind == ParamKind::Undecided)
                    continue;
                ++pairs;
                const bool ok =
                    (in.kind == ParamKind::BothEscape &&
                     out.kind == ParamKind::BothEscape) ||
                    (in.kind == ParamKind::AlphaResidual &&
                     out.kind == ParamKind::BetaResidual) ||
                    (in.kind == ParamKind::BetaCycle &&
                     out.kind == ParamKind::AlphaCycle) ||
                    (in.kind == ParamKind::AlphaEscape &&
                     out.kind == ParamKind::BetaEscape) ||
                    (in.kind == ParamKind::BetaEscape &&
                     out.kind == ParamKind::AlphaEscape);
                if (ok) ++matched;
            }
        CHECK(pairs > 0);
        CHECK(matched >= (19 * pairs) / 20);  // >= 95%
    }
}

TEST_CASE("q_k_zero_order") {
    CHECK(q_k_zero_order(2, 1, 0) == doctest::Approx(1.0).epsilon(0.05));
    CHECK(std::abs(q_k_zero_order(2, 1, 1) - 3.0) < 0.05);
    CHECK(std::abs(q_k_zero_order(3, 1, 1) - 4.0) < 0.05);
    CHECK(std::abs(q_k_zero_order(2, 1, 2) - 7.0) < 0.05);
    CHECK_THROWS_AS(q_k_zero_order(2, 1, 4), std::invalid_argument);
    // (m,n) = (6,1), k = 3 underflows: order (6^4-1)/5 = 259
    CHECK_THROWS_AS(q_k_zero_order(6, 1, 3), std::domain_error);
}

TEST_CASE("classify_pc_point") {
    const ExtComplex seed(-2.0 / 3.0, 0.0);
    SUBCASE("superattracting fixed point at c = -9/2") {
        const PointClass pc = classify_pc_point(ExtComplex(-4.5, 0.0), 2, 1, seed, 2000);
        CHECK(pc.kind == PointKind::Cycle);
        CHECK(pc.period == 1);
        CHECK(pc.multiplier.abs() < 1e-8);
    }
    SUBCASE("huge |c| escapes") {
        const PointClass pc =
            classify_pc_point(ExtComplex(1e6, 0.0), 2, 1, seed, 2000);
        CHECK(pc.kind == PointKind::BasinInfinity);
    }
    SUBCASE("correspondence with the residual locus at t = 0.01") {
        const ExtComplex c = c_of_t(ExtComplex(0.01, 0.0));
        const PointClass pc = classify_pc_point(c, 2, 1, seed, 2000);
        CHECK(pc.kind == PointKind::BasinInfinity);
        CHECK(classify_parameter(2, 1, ExtComplex(0.01, 0.0), 2000).kind ==
              ParamKind::AlphaResidual);
    }
}

TEST_CASE("orbit budget validation and Undecided outcome") {
    const FamilyParams p(2, 1, complex<double>(1.0, 0.0));
    CHECK_THROWS_AS(iterate_orbit(p, ExtComplex(0.5, 0.0), 0, kTrap21),
                    std::invalid_argument);
    // A point on the Julia set boundary (repelling fixed point) never decides:
    // fixed points of f_1 solve -z^2 - 1 = z(1 - ...), use the repelling one.
    const auto [z1, z2] =
        oracles::quadratic_roots({-1.0, 0.0}, {0.0, 0.0}, {-1.0, 0.0});
    for (const auto& w : {z1, z2}) {
        if (eval_derivative(p, ExtComplex(w)).abs() <= 1.0) continue;
        const PointClass pc = classify_point(p, ExtComplex(w), 20);
        CHECK(pc.kind == PointKind::Undecided);
        CHECK(pc.iterations == 20);
    }
}
