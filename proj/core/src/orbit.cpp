#include "twocrit/orbit.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace twocrit {

namespace {

constexpr int kMaxPeriod = 64;
constexpr double kCycleTol = 1e-9;

double dist(const ExtComplex& a, const ExtComplex& b) {
    if (a.at_infinity || b.at_infinity)
        return (a.at_infinity && b.at_infinity)
                   ? 0.0
                   : std::numeric_limits<double>::infinity();
    return std::hypot(a.re - b.re, a.im - b.im);
}

// Fixed-capacity window of the most recent orbit points.
class RecentPoints {
  public:
    explicit RecentPoints(int cap) : buf_(cap) {}
    void push(const ExtComplex& z) {
        buf_[head_] = z;
        head_ = (head_ + 1) % (int)buf_.size();
        count_ = std::min<int>(count_ + 1, (int)buf_.size());
    }
    int count() const { return count_; }
    // k = 0 is the most recent point.
    const ExtComplex& from_end(int k) const {
        const int n = (int)buf_.size();
        return buf_[(head_ - 1 - k % n + 2 * n) % n];
    }

  private:
    std::vector<ExtComplex> buf_;
    int head_ = 0;
    int count_ = 0;
};

// |z_{i+p} - z_i| < tol over three consecutive period windows at the end of
// the recorded tail.
bool window_stable(const RecentPoints& ring, int p, double tol) {
    if (ring.count() < 3 * p + 1) return false;
    for (int k = 0; k < 2 * p; ++k)
        if (!(dist(ring.from_end(k), ring.from_end(k + p)) < tol)) return false;
    return true;
}

template <class DerF>
bool cycle_multiplier(const RecentPoints& ring, int p, DerF&& deriv,
                      ExtComplex& out) {
    std::complex<double> acc(1.0, 0.0);
    for (int j = 0; j < p; ++j) {
        ExtComplex d;
        try {
            d = deriv(ring.from_end(j));
        } catch (const std::domain_error&) {
            return false;
        }
        if (d.at_infinity) return false;
        acc *= d.value();
    }
    if (!std::isfinite(acc.real()) || !std::isfinite(acc.imag())) return false;
    out = ExtComplex(acc);
    return true;
}

template <class DerF>
std::optional<CycleHit> confirm_cycle(const RecentPoints& ring, int candidate,
                                      double tol, DerF&& deriv) {
    if (!window_stable(ring, candidate, tol)) return std::nullopt;
    int p = candidate;
    for (int q = 1; q < candidate; ++q)
        if (candidate % q == 0 && window_stable(ring, q, tol)) {
            p = q;
            break;
        }
    ExtComplex mult;
    if (!cycle_multiplier(ring, p, deriv, mult)) return std::nullopt;
    if (!(mult.abs() < 1.0)) return std::nullopt;
    return CycleHit{p, mult, ring.from_end(p - 1)};
}

// Iterates z under `map` until a basin or attracting cycle is certified or
// the budget runs out. Cycle search starts after a transient of budget/2
// using a Brent anchor plus window confirmation.
template <class MapF, class DerF>
PointClass run_orbit(MapF&& map, DerF&& deriv, ExtComplex z, double zero_radius,
                     double esc_radius, int budget,
                     std::vector<ExtComplex>* sink) {
    if (budget < 1) throw std::invalid_argument("orbit budget must be >= 1");
    PointClass out;
    const int transient = budget / 2;
    RecentPoints ring(4 * kMaxPeriod + 2);
    ExtComplex anchor;
    bool anchor_set = false;
    int lam = 0, power = 1, cooldown_until = -1;

    for (int i = 0;; ++i) {
        if (sink) sink->push_back(z);
        if (z.at_infinity || z.abs() >= esc_radius) {
            out.kind = PointKind::BasinInfinity;
            out.index = i;
            out.iterations = i;
            out.decisive_abs = z.abs();
            return out;
        }
        if (z.abs() < zero_radius) {
            out.kind = PointKind::BasinZero;
            out.index = i;
            out.iterations = i;
            out.decisive_abs = z.abs();
            return out;
        }
        ring.push(z);
        if (i >= transient) {
            if (!anchor_set) {
                anchor = z;
                anchor_set = true;
                lam = 0;
                power = 1;
            } else {
                ++lam;
                if (lam <= kMaxPeriod && i >= cooldown_until &&
                    dist(z, anchor) < kCycleTol) {
                    if (auto hit = confirm_cycle(ring, lam, kCycleTol, deriv)) {
                        out.kind = PointKind::Cycle;
                        out.period = hit->period;
                        out.multiplier = hit->multiplier;
                        out.iterations = i;
                        return out;
                    }
                    cooldown_until = i + lam;  // confirmed unstable or repelling
                }
                if (lam == power) {
                    anchor = z;
                    lam = 0;
                    power = std::min(power * 2, 4 * kMaxPeriod);
                }
            }
        }
        if (i == budget) break;
        z = map(z);
    }
    out.kind = PointKind::Undecided;
    out.iterations = budget;
    return out;
}

PointClass classify_with(const FamilyParams& p, const TrapDisc& trap,
                         const ExtComplex& z, int budget,
                         std::vector<ExtComplex>* sink) {
    const double zr = zero_trap_radius(p, trap);
    const double er = escape_radius(p);
    auto map = [&p](const ExtComplex& w) { return eval_map(p, w); };
    auto der = [&p](const ExtComplex& w) { return eval_derivative(p, w); };
    return run_orbit(map, der, z, zr, er, budget, sink);
}

}  // namespace

OrbitRecord iterate_orbit(const FamilyParams& p, const ExtComplex& z0,
                          int budget, const TrapDisc& trap) {
    OrbitRecord rec;
    rec.outcome = classify_with(p, trap, z0, budget, &rec.points);
    if (rec.outcome.kind == PointKind::BasinZero)
        rec.first_trap_entry = rec.outcome.index;
    else if (rec.outcome.kind == PointKind::BasinInfinity)
        rec.first_escape = rec.outcome.index;
    return rec;
}

std::optional<CycleHit> detect_cycle(std::span<const ExtComplex> orbit_tail,
                                     double tol, const DerivFn& derivative,
                                     int max_period) {
    if (!(tol > 0)) throw std::invalid_argument("detect_cycle tolerance must be positive");
    const int L = (int)orbit_tail.size();
    RecentPoints ring(std::max(4, L));
    for (const auto& z : orbit_tail) ring.push(z);
    for (int p = 1; p <= max_period; ++p) {
        if (3 * p + 1 > L) break;
        if (!window_stable(ring, p, tol)) continue;
        ExtComplex mult;
        if (!cycle_multiplier(ring, p, derivative, mult)) return std::nullopt;
        if (!(mult.abs() < 1.0)) return std::nullopt;
        return CycleHit{p, mult, ring.from_end(p - 1)};
    }
    return std::nullopt;
}

PointClass classify_point(const FamilyParams& p, const ExtComplex& z, int budget) {
    return classify_with(p, trap_disc(p.m, p.n), z, budget, nullptr);
}

PointClass classify_point(const FamilyParams& p, const ExtComplex& z, int budget,
                          const TrapDisc& trap) {
    return classify_with(p, trap, z, budget, nullptr);
}

PointClass classify_pc_point(const ExtComplex& c, int m, int n,
                             const ExtComplex& z0, int budget) {
    if (c.at_infinity || (c.re == 0.0 && c.im == 0.0))
        throw std::invalid_argument("classify_pc_point requires finite nonzero c");
    const double ac = c.abs();
    const int d = m + n;
    // |P_c(z)| <= |c| rho^{m-1} (4/3)^n |z| for |z| <= rho <= 1/3: contraction.
    const double zero_r =
        std::min(1.0 / 3.0,
                 std::pow(0.9 / (ac * std::pow(4.0 / 3.0, n)), 1.0 / (m - 1)));
    // |z| >= R implies |P_c(z)| >= 2|z|, via |z+1| >= |z|/2 for |z| >= 2.
    const double esc_r =
        std::max(2.0, std::pow(std::pow(2.0, n + 1) / ac, 1.0 / (d - 1)));
    auto map = [&](const ExtComplex& w) { return pc_eval(c, m, n, w); };
    auto der = [&](const ExtComplex& w) { return pc_derivative(c, m, n, w); };
    return run_orbit(map, der, z0, zero_r, esc_r, budget, nullptr);
}

ParamClass classify_parameter(int m, int n, const ExtComplex& t, int budget) {
    const FamilyParams p(m, n, t);
    return classify_parameter(p, budget, trap_disc(m, n), critical_data(m, n));
}

ParamClass classify_parameter(const FamilyParams& p, int budget,
                              const TrapDisc& trap, const CriticalData& cd) {
    ParamClass out;
    out.alpha_outcome =
        classify_with(p, trap, eval_map(p, ExtComplex(cd.alpha, 0.0)), budget, nullptr);
    out.beta_outcome =
        classify_with(p, trap, eval_map(p, ExtComplex(cd.beta, 0.0)), budget, nullptr);

    const PointClass& a = out.alpha_outcome;
    const PointClass& b = out.beta_outcome;
    const bool a_zero = a.kind == PointKind::BasinZero;
    const bool a_inf = a.kind == PointKind::BasinInfinity;
    const bool b_zero = b.kind == PointKind::BasinZero;
    const bool b_inf = b.kind == PointKind::BasinInfinity;
    const double at = p.t.abs();

    if (a_zero && b_inf) {
        out.kind = ParamKind::BothEscape;
        out.alpha_level = a.index;
        out.beta_level = b.index;
    } else if (a_zero && b_zero && at <= 1.0) {
        // Attraction to 0 means membership in the immediate basin here: the
        // basin is completely invariant for |t| <= 1.
        out.kind = ParamKind::AlphaResidual;
        out.alpha_level = a.index;
    } else if (a_inf && b_inf && at >= 1.0) {
        out.kind = ParamKind::BetaResidual;
        out.beta_level = b.index;
    } else if (b.kind == PointKind::Cycle) {
        out.kind = ParamKind::BetaCycle;
        out.period = b.period;
        if (a_zero) out.alpha_level = a.index;
    } else if (a.kind == PointKind::Cycle) {
        out.kind = ParamKind::AlphaCycle;
        out.period = a.period;
        if (b_inf) out.beta_level = b.index;
    } else if (a_zero) {
        out.kind = ParamKind::AlphaEscape;
        out.alpha_level = a.index;
    } else if (b_inf) {
        out.kind = ParamKind::BetaEscape;
        out.beta_level = b.index;
    } else {
        out.kind = ParamKind::Undecided;
    }
    return out;
}

double q_k_zero_order(int m, int n, int k) {
    if (k < 0 || k > 3)
        throw std::invalid_argument("q_k_zero_order supports 0 <= k <= 3");
    const CriticalData cd = critical_data(m, n);
    auto log_qk = [&](double tval) {
        const FamilyParams p(m, n, ExtComplex(tval, 0.0));
        ExtComplex z = eval_map(p, ExtComplex(cd.alpha, 0.0));  // Q_0(t)
        for (int i = 0; i < k; ++i) z = eval_map(p, z);
        const double a = z.abs();
        if (!std::isfinite(a) || a < 1e-290)
            throw std::domain_error(
                "q_k_zero_order: |Q_k| underflowed near t = 0; use a smaller k");
        return std::log(a);
    };
    return (log_qk(1e-5) - log_qk(1e-6)) / (std::log(1e-5) - std::log(1e-6));
}

const char* to_string(PointKind k) {
    switch (k) {
        case PointKind::BasinZero: return "BasinZero";
        case PointKind::BasinInfinity: return "BasinInfinity";
        case PointKind::Cycle: return "Cycle";
        case PointKind::Undecided: return "Undecided";
    }
    return "?";
}

const char* to_string(ParamKind k) {
    switch (k) {
        case ParamKind::AlphaEscape: return "AlphaEscape";
        case ParamKind::BetaEscape: return "BetaEscape";
        case ParamKind::AlphaResidual: return "AlphaResidual";
        case ParamKind::BetaResidual: return "BetaResidual";
        case ParamKind::AlphaCycle: return "AlphaCycle";
        case ParamKind::BetaCycle: return "BetaCycle";
        case ParamKind::BothEscape: return "BothEscape";
        case ParamKind::Undecided: return "Undecided";
    }
    return "?";
}

}  // namespace twocrit
