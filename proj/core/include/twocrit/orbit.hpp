#pragma once

#include <functional>
#include <optional>
#include <span>
#include <vector>

#include "twocrit/ext_complex.hpp"
#include "twocrit/family.hpp"

namespace twocrit {

enum class PointKind { BasinZero, BasinInfinity, Cycle, Undecided };

// Outcome of one orbit. index is the first iteration inside the zero trap
// (BasinZero) or at/after the escape radius (BasinInfinity), counted from the
// seed at index 0. Cycle carries the minimal period and the multiplier
// (product of the derivative along one period, |multiplier| < 1).
struct PointClass {
    PointKind kind = PointKind::Undecided;
    int index = -1;
    int period = 0;
    ExtComplex multiplier{};
    int iterations = 0;       // map applications actually performed
    double decisive_abs = 0;  // |z| at the deciding iterate (escape/entry)
};

struct OrbitRecord {
    std::vector<ExtComplex> points;  // points[0] is the seed
    PointClass outcome;
    std::optional<int> first_trap_entry;
    std::optional<int> first_escape;
};

enum class ParamKind {
    AlphaEscape,    // alpha orbit reaches the zero trap, beta undecided
    BetaEscape,     // beta orbit escapes to infinity, alpha undecided
    AlphaResidual,  // both critical orbits attracted to 0 (|t| <= 1)
    BetaResidual,   // both critical orbits escape to infinity (|t| >= 1)
    AlphaCycle,
    BetaCycle,
    BothEscape,     // alpha -> 0 and beta -> infinity (quasi-circle regime)
    Undecided
};

struct ParamClass {
    ParamKind kind = ParamKind::Undecided;
    int alpha_level = -1;  // first trap entry of the alpha critical orbit
    int beta_level = -1;   // first escape of the beta critical orbit
    int period = 0;        // for the cycle kinds
    PointClass alpha_outcome;  // raw outcome, always populated
    PointClass beta_outcome;
};

struct CycleHit {
    int period;
    ExtComplex multiplier;
    ExtComplex representative;
};

// Derivative of the iterated map at a point; throws where undefined.
using DerivFn = std::function<ExtComplex(const ExtComplex&)>;

// Iterates z0 under f_t until the orbit enters the zero trap disc, passes the
// escape radius, settles on an attracting cycle, or exhausts the budget.
// All visited points are stored.
OrbitRecord iterate_orbit(const FamilyParams& p, const ExtComplex& z0,
                          int budget, const TrapDisc& trap);

// Scans an orbit tail for the minimal period p <= max_period whose point
// matches |z_{i+p} - z_i| < tol hold over three consecutive windows. Reports
// only attracting cycles (|multiplier| < 1).
std::optional<CycleHit> detect_cycle(std::span<const ExtComplex> orbit_tail,
                                     double tol, const DerivFn& derivative,
                                     int max_period = 64);

// iterate_orbit + cycle detection without storing the orbit.
PointClass classify_point(const FamilyParams& p, const ExtComplex& z, int budget);

// Hot-path variant with a precomputed trap disc (per-pixel rendering).
PointClass classify_point(const FamilyParams& p, const ExtComplex& z, int budget,
                          const TrapDisc& trap);

// Same classification machinery for the polynomial model P_c: attraction to
// 0, escape to infinity, attracting cycle, or undecided.
PointClass classify_pc_point(const ExtComplex& c, int m, int n,
                             const ExtComplex& z0, int budget);

// Runs both critical orbits (seeded at the critical values v^alpha_t and
// v^beta_t) and combines the outcomes into the parameter-plane classes.
ParamClass classify_parameter(int m, int n, const ExtComplex& t, int budget);

// Hot-path variant with precomputed trap disc and critical data.
ParamClass classify_parameter(const FamilyParams& p, int budget,
                              const TrapDisc& trap, const CriticalData& cd);

// Numerical order of vanishing of Q_k(t) = f_t^k(v^alpha_t) at t = 0,
// estimated as the slope of log|Q_k| against log|t| at t = 1e-5, 1e-6.
// Expected value (m^{k+1} - 1)/(m - 1); k <= 3.
double q_k_zero_order(int m, int n, int k);

const char* to_string(PointKind k);
const char* to_string(ParamKind k);

}  // namespace twocrit
